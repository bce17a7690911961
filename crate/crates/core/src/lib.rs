//! Linear canonical Stockwell transform (LCST) toolkit.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
mod fftconv;
pub mod io;
pub mod lcst;
pub mod lct;
pub mod mra;
pub mod rkhs;
pub mod tfa;
pub mod threads;
pub mod types;
pub mod window;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use types::{CoefficientPlane, ParamMatrix, ScaleShiftGrid, Signal, TimeAxis};
