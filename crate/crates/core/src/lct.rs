//! Discrete linear canonical transform.
//!
//! `L^M f(ξ) = ∫ f(t) K_M(t, ξ) dt` with
//! `K_M(t, ξ) = (2πiB)^{-1/2} exp(i/2 (A t²/B − 2ξt/B + D ξ²/B))`,
//! evaluated by trapezoid quadrature on the signal grid.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fftconv::convolve;
use crate::types::{ParamMatrix, Signal, TimeAxis};

/// Kernel `K_M` with its prefactor precomputed.
#[derive(Debug, Clone, Copy)]
pub struct LctKernel {
    m: ParamMatrix,
    normalization: Complex64,
}

impl LctKernel {
    pub fn new(m: ParamMatrix) -> Result<Self> {
        m.require_kernel()?;
        let normalization = Complex64::new(0.0, 2.0 * PI * m.b()).sqrt().inv();
        Ok(Self { m, normalization })
    }

    pub fn matrix(&self) -> ParamMatrix {
        self.m
    }

    /// `1/√(2πiB)`, principal branch.
    pub fn normalization(&self) -> Complex64 {
        self.normalization
    }

    #[inline]
    pub fn eval(&self, t: f64, xi: f64) -> Complex64 {
        let (a, b, d) = (self.m.a(), self.m.b(), self.m.d());
        let phase = 0.5 * (a * t * t - 2.0 * xi * t + d * xi * xi) / b;
        self.normalization * Complex64::cis(phase)
    }
}

pub fn lct_kernel(m: &ParamMatrix, t: f64, xi: f64) -> Result<Complex64> {
    Ok(LctKernel::new(*m)?.eval(t, xi))
}

/// Errors when the input chirp `A t²/(2B)` advances by more than π between samples.
pub fn check_chirp_sampling(axis: &TimeAxis, m: &ParamMatrix) -> Result<()> {
    let tmax = axis.t0.abs().max(axis.end().abs());
    let advance = (m.a() / m.b()).abs() * (tmax + 0.5 * axis.dt) * axis.dt;
    if advance > PI {
        return Err(Error::GridTooCoarse { advance });
    }
    Ok(())
}

fn warn_on_poor_decay(f: &Signal) {
    let peak = f.peak();
    if peak == 0.0 {
        return;
    }
    let s = f.samples();
    let edge = s[0].norm().max(s[s.len() - 1].norm());
    if edge > 1e-8 * peak {
        log::warn!("signal does not decay at grid edges (edge/peak = {:.2e})", edge / peak);
    }
}

/// Direct quadrature onto the signal's own grid.
pub fn lct_forward(f: &Signal, m: &ParamMatrix) -> Result<Signal> {
    lct_forward_on(f, m, &f.axis())
}

/// Direct quadrature onto an arbitrary uniform ξ grid.
pub fn lct_forward_on(f: &Signal, m: &ParamMatrix, xi_axis: &TimeAxis) -> Result<Signal> {
    let kernel = LctKernel::new(*m)?;
    let axis = f.axis();
    check_chirp_sampling(&axis, m)?;
    warn_on_poor_decay(f);
    let weighted: Vec<(f64, Complex64)> =
        f.samples().iter().enumerate().map(|(k, &z)| (axis.at(k), z * axis.weight(k))).collect();
    let out: Vec<Complex64> = (0..xi_axis.n)
        .into_par_iter()
        .map(|l| {
            let xi = xi_axis.at(l);
            weighted.iter().map(|&(t, z)| z * kernel.eval(t, xi)).sum()
        })
        .collect();
    Signal::new(xi_axis.t0, xi_axis.dt, out)
}

/// Chirp multiply, chirp-z Fourier step, chirp multiply. Output on the input grid.
pub fn lct_forward_fast(f: &Signal, m: &ParamMatrix) -> Result<Signal> {
    let kernel = LctKernel::new(*m)?;
    let n = f.len();
    if !n.is_power_of_two() {
        return Err(Error::NonPowerOfTwo(n));
    }
    let axis = f.axis();
    check_chirp_sampling(&axis, m)?;
    warn_on_poor_decay(f);
    let (a, b, d) = (m.a(), m.b(), m.d());
    let (t0, dt) = (axis.t0, axis.dt);

    // ξ_l t_k = t0² + t0·dt·(k + l) + dt²·k·l, and k·l = (k² + l² − (l − k)²)/2.
    let alpha = dt * dt / b;
    let g: Vec<Complex64> = f
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &z)| {
            let t = axis.at(k);
            let kf = k as f64;
            let phase = 0.5 * a * t * t / b - t0 * dt * kf / b - 0.5 * alpha * kf * kf;
            z * axis.weight(k) * Complex64::cis(phase)
        })
        .collect();
    let chirp: Vec<Complex64> = (0..2 * n - 1)
        .map(|i| {
            let r = i as f64 - (n - 1) as f64;
            Complex64::cis(0.5 * alpha * r * r)
        })
        .collect();
    let conv = convolve(&g, &chirp);
    let out = (0..n)
        .map(|l| {
            let xi = axis.at(l);
            let lf = l as f64;
            let phase = 0.5 * d * xi * xi / b - t0 * t0 / b - t0 * dt * lf / b - 0.5 * alpha * lf * lf;
            kernel.normalization() * Complex64::cis(phase) * conv[l + n - 1]
        })
        .collect();
    Signal::new(t0, dt, out)
}

/// Inverse via `L^{M^{-1}}`, direct quadrature.
pub fn lct_inverse(big_f: &Signal, m: &ParamMatrix) -> Result<Signal> {
    m.require_kernel()?;
    lct_forward(big_f, &m.inverse())
}

/// Inverse via `L^{M^{-1}}`, fast path.
pub fn lct_inverse_fast(big_f: &Signal, m: &ParamMatrix) -> Result<Signal> {
    m.require_kernel()?;
    lct_forward_fast(big_f, &m.inverse())
}
