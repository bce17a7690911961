//! C ABI over `lcst_core`.
//!
//! Every fallible function returns an [`LcstStatus`]; on failure a message is
//! available from [`lcst_last_error_message`] on the same thread. Objects are
//! opaque handles created by `*_new`/constructor functions and released with
//! the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcst_core::lcst::{self, AdmissibilityVariant, ScaleRange};
use lcst_core::mra::{self, FilterSequence};
use lcst_core::window::WindowSpec;
use lcst_core::{lct, CoefficientPlane, Complex64, Error, ParamMatrix, ScaleShiftGrid, Signal};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcstStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidMatrix = 2,
    InvalidArgument = 3,
    InvalidGrid = 4,
    NumericalGuard = 5,
    Io = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcstMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcstComplex {
    pub re: f64,
    pub im: f64,
}

/// Admissibility modulation `e^{it/B1}`.
pub const LCST_VARIANT_B1: i32 = 0;
/// Admissibility modulation `e^{it/(B1 a)}`.
pub const LCST_VARIANT_B1A: i32 = 1;

pub struct LcstSignal(Signal);
pub struct LcstPlane(CoefficientPlane);
pub struct LcstWindow(WindowSpec);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LcstStatus {
    match e {
        Error::Determinant { .. } | Error::NonFiniteMatrix | Error::ZeroB | Error::DegenerateAngle { .. } => {
            LcstStatus::InvalidMatrix
        }
        Error::InvalidGrid(_)
        | Error::IncommensurateGrids(_)
        | Error::NonPowerOfTwo(_)
        | Error::NonUniformGrid { .. } => LcstStatus::InvalidGrid,
        Error::Io(_) | Error::Parse { .. } | Error::MetaMismatch(_) => LcstStatus::Io,
        e if e.is_numerical_guard() => LcstStatus::NumericalGuard,
        _ => LcstStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (LcstStatus, String)>) -> LcstStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcstStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LcstStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (LcstStatus, String)>;
}

impl<T> IntoFfi<T> for lcst_core::Result<T> {
    fn ffi(self) -> Result<T, (LcstStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(name: &str) -> (LcstStatus, String) {
    (LcstStatus::NullPointer, format!("{name} is null"))
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, (LcstStatus, String)> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn slice<'a, T>(p: *const T, n: usize, name: &str) -> Result<&'a [T], (LcstStatus, String)> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (LcstStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn copy_out(values: &[Complex64], out: *mut LcstComplex, cap: usize) -> Result<(), (LcstStatus, String)> {
    if cap < values.len() {
        return Err((LcstStatus::BufferTooSmall, format!("buffer holds {cap}, need {}", values.len())));
    }
    if values.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("out"));
    }
    for (k, z) in values.iter().enumerate() {
        *out.add(k) = LcstComplex { re: z.re, im: z.im };
    }
    Ok(())
}

fn matrix(m: LcstMatrix) -> Result<ParamMatrix, (LcstStatus, String)> {
    ParamMatrix::new(m.a, m.b, m.c, m.d).ffi()
}

fn complexes(v: &[LcstComplex]) -> Vec<Complex64> {
    v.iter().map(|z| Complex64::new(z.re, z.im)).collect()
}

/// Message of the last failed call on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn lcst_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `samples` must point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_signal_new(
    t0: f64,
    dt: f64,
    samples: *const LcstComplex,
    n: usize,
    out: *mut *mut LcstSignal,
) -> LcstStatus {
    guard(|| {
        let s = Signal::new(t0, dt, complexes(slice(samples, n, "samples")?)).ffi()?;
        put(out, LcstSignal(s))
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lcst_signal_free(s: *mut LcstSignal) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a valid handle or null.
#[no_mangle]
pub unsafe extern "C" fn lcst_signal_len(s: *const LcstSignal) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `s` must be a valid handle; `t0` and `dt` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_signal_axis(s: *const LcstSignal, t0: *mut f64, dt: *mut f64) -> LcstStatus {
    guard(|| {
        let s = deref(s, "signal")?;
        if t0.is_null() || dt.is_null() {
            return Err(null("t0/dt"));
        }
        *t0 = s.0.t0();
        *dt = s.0.dt();
        Ok(())
    })
}

/// # Safety
/// `out` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn lcst_signal_copy_samples(
    s: *const LcstSignal,
    out: *mut LcstComplex,
    cap: usize,
) -> LcstStatus {
    guard(|| copy_out(deref(s, "signal")?.0.samples(), out, cap))
}

/// LCT on the input grid. `fast` selects the chirp-FFT path (power-of-two length).
///
/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_lct_forward(
    f: *const LcstSignal,
    m: LcstMatrix,
    fast: bool,
    out: *mut *mut LcstSignal,
) -> LcstStatus {
    guard(|| {
        let f = &deref(f, "signal")?.0;
        let m = matrix(m)?;
        let r = if fast { lct::lct_forward_fast(f, &m) } else { lct::lct_forward(f, &m) }.ffi()?;
        put(out, LcstSignal(r))
    })
}

/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_lct_inverse(
    f: *const LcstSignal,
    m: LcstMatrix,
    fast: bool,
    out: *mut *mut LcstSignal,
) -> LcstStatus {
    guard(|| {
        let f = &deref(f, "signal")?.0;
        let m = matrix(m)?;
        let r = if fast { lct::lct_inverse_fast(f, &m) } else { lct::lct_inverse(f, &m) }.ffi()?;
        put(out, LcstSignal(r))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_window_gaussian(sigma: f64, out: *mut *mut LcstWindow) -> LcstStatus {
    guard(|| put(out, LcstWindow(WindowSpec::gaussian(sigma).ffi()?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_window_hann(support: f64, out: *mut *mut LcstWindow) -> LcstStatus {
    guard(|| put(out, LcstWindow(WindowSpec::hann(support).ffi()?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_window_haar(out: *mut *mut LcstWindow) -> LcstStatus {
    guard(|| put(out, LcstWindow(WindowSpec::Haar)))
}

/// # Safety
/// `w` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lcst_window_free(w: *mut LcstWindow) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Forward LCST on `scale_count` geometric scales in `[a_min, a_max]` and
/// shifts `shift_start + j*shift_step`. Uses the FFT path when the shifts lie
/// on the signal grid.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_forward(
    f: *const LcstSignal,
    psi: *const LcstWindow,
    m1: LcstMatrix,
    m2: LcstMatrix,
    a_min: f64,
    a_max: f64,
    scale_count: usize,
    shift_start: f64,
    shift_step: f64,
    shift_count: usize,
    out: *mut *mut LcstPlane,
) -> LcstStatus {
    guard(|| {
        let (f, psi) = (&deref(f, "signal")?.0, &deref(psi, "window")?.0);
        let (m1, m2) = (matrix(m1)?, matrix(m2)?);
        let grid = ScaleShiftGrid::new(a_min, a_max, scale_count, shift_start, shift_step, shift_count).ffi()?;
        put(out, LcstPlane(lcst::lcst_forward_auto(f, psi, &m1, &m2, &grid).ffi()?))
    })
}

/// Reconstruction onto the time grid of the analysed signal.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_inverse(
    plane: *const LcstPlane,
    psi: *const LcstWindow,
    m1: LcstMatrix,
    m2: LcstMatrix,
    c_value: f64,
    out: *mut *mut LcstSignal,
) -> LcstStatus {
    guard(|| {
        let (plane, psi) = (&deref(plane, "plane")?.0, &deref(psi, "window")?.0);
        let (m1, m2) = (matrix(m1)?, matrix(m2)?);
        put(out, LcstSignal(lcst::lcst_inverse(plane, psi, &m1, &m2, c_value).ffi()?))
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lcst_plane_free(p: *mut LcstPlane) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be valid; `rows` and `cols` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_plane_dims(p: *const LcstPlane, rows: *mut usize, cols: *mut usize) -> LcstStatus {
    guard(|| {
        let p = deref(p, "plane")?;
        if rows.is_null() || cols.is_null() {
            return Err(null("rows/cols"));
        }
        (*rows, *cols) = p.0.dims();
        Ok(())
    })
}

/// Row-major copy, scales outer.
///
/// # Safety
/// `out` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn lcst_plane_copy_values(p: *const LcstPlane, out: *mut LcstComplex, cap: usize) -> LcstStatus {
    guard(|| copy_out(deref(p, "plane")?.0.values(), out, cap))
}

/// Admissibility constant over `xi_count` probe frequencies and `steps`
/// log-spaced scales in `[a_min, a_max]`.
///
/// # Safety
/// `xi` must hold `xi_count` values; `c_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_admissibility(
    psi: *const LcstWindow,
    m1: LcstMatrix,
    m2: LcstMatrix,
    xi: *const f64,
    xi_count: usize,
    a_min: f64,
    a_max: f64,
    steps: usize,
    variant: i32,
    c_out: *mut f64,
) -> LcstStatus {
    guard(|| {
        let psi = &deref(psi, "window")?.0;
        let (m1, m2) = (matrix(m1)?, matrix(m2)?);
        let variant = match variant {
            LCST_VARIANT_B1 => AdmissibilityVariant::ModOverB1,
            LCST_VARIANT_B1A => AdmissibilityVariant::ModOverB1a,
            v => return Err((LcstStatus::InvalidArgument, format!("unknown variant {v}"))),
        };
        let range = ScaleRange::new(a_min, a_max, steps).ffi()?;
        let r = lcst::admissibility_constant(psi, &m1, &m2, slice(xi, xi_count, "xi")?, range, variant).ffi()?;
        if c_out.is_null() {
            return Err(null("c_out"));
        }
        *c_out = r.c_value;
        Ok(())
    })
}

unsafe fn filter(c: *const LcstComplex, n: usize, offset: i64) -> Result<FilterSequence, (LcstStatus, String)> {
    FilterSequence::new(offset, complexes(slice(c, n, "coefficients")?)).ffi()
}

/// Largest QMF deviation over `u_points` samples of one period.
///
/// # Safety
/// `c` must hold `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_mra_qmf_check(
    c: *const LcstComplex,
    n: usize,
    offset: i64,
    m1: LcstMatrix,
    m2: LcstMatrix,
    u_points: usize,
    out: *mut f64,
) -> LcstStatus {
    guard(|| {
        let c = filter(c, n, offset)?;
        let (m1, m2) = (matrix(m1)?, matrix(m2)?);
        let dev = mra::qmf_check(&c, &m1, &m2, &mra::period_grid(u_points.max(1), &m1));
        if out.is_null() {
            return Err(null("out"));
        }
        *out = dev;
        Ok(())
    })
}

/// Wavelet filter of a low-pass filter. The result has `n` coefficients
/// starting at `*d_offset`.
///
/// # Safety
/// `c` must hold `n` values, `d` must hold `cap` values, `d_offset` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcst_mra_derive_wavelet(
    c: *const LcstComplex,
    n: usize,
    offset: i64,
    m1: LcstMatrix,
    d: *mut LcstComplex,
    cap: usize,
    d_offset: *mut i64,
) -> LcstStatus {
    guard(|| {
        let c = filter(c, n, offset)?;
        let w = mra::derive_wavelet_coeffs(&c, &matrix(m1)?);
        copy_out(w.coeffs(), d, cap)?;
        if d_offset.is_null() {
            return Err(null("d_offset"));
        }
        *d_offset = w.offset();
        Ok(())
    })
}
