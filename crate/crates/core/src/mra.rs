//! Multiresolution analysis with chirp-modulated translates, two-scale symbols
//! and wavelet filter derivation.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::lcst::modulated_window_lct;
use crate::lct::lct_forward_on;
use crate::types::{ParamMatrix, Signal, TimeAxis};
use crate::window::WindowSpec;

/// Finitely supported sequence `x_n`, `n = offset .. offset + len`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterSequence {
    offset: i64,
    coeffs: Vec<Complex64>,
}

impl FilterSequence {
    pub fn new(offset: i64, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParams("filter has no coefficients".into()));
        }
        if coeffs.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::BadParams("non-finite filter coefficient".into()));
        }
        Ok(Self { offset, coeffs })
    }

    pub fn from_real(offset: i64, coeffs: &[f64]) -> Result<Self> {
        Self::new(offset, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `c_0 = c_1 = 1/√2`.
    pub fn haar() -> Self {
        let h = Complex64::new(1.0 / SQRT_2, 0.0);
        Self { offset: 0, coeffs: vec![h, h] }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Index range `lo..=hi`.
    pub fn support(&self) -> (i64, i64) {
        (self.offset, self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn get(&self, n: i64) -> Complex64 {
        let i = n - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, &z)| (self.offset + i as i64, z))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|z| z.norm() == 0.0)
    }
}

impl fmt::Display for FilterSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, z)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{n}: {:+.6e}{:+.6e}i", z.re, z.im)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ScalingFunction {
    pub base: WindowSpec,
    pub m1: ParamMatrix,
    pub m2: ParamMatrix,
}

impl ScalingFunction {
    pub fn new(base: WindowSpec, m1: ParamMatrix, m2: ParamMatrix) -> Result<Self> {
        m1.require_kernel()?;
        m2.require_kernel()?;
        Ok(Self { base, m1, m2 })
    }
}

/// `φ_{m,n}(t) = 2^{m/2} φ(2^m t − n) exp(−(i/2){(t² − (n/2^m)²)A₁/B₁ − (2^m t − n)²A₂/B₂ − 2(2^m t + n)/B₁})`.
pub fn phi_mn(sf: &ScalingFunction, m: i32, n: i64, t: f64) -> Complex64 {
    let s = 2f64.powi(m);
    let nf = n as f64;
    let x = s * t - nf;
    let (a1, b1) = (sf.m1.a(), sf.m1.b());
    let (a2, b2) = (sf.m2.a(), sf.m2.b());
    let inner = (t * t - (nf / s).powi(2)) * a1 / b1 - x * x * a2 / b2 - 2.0 * (s * t + nf) / b1;
    sf.base.eval(x) * Complex64::cis(-0.5 * inner) * s.sqrt()
}

/// Ratio of the window's magnitude at its support edges to its peak.
fn edge_ratio(psi: &WindowSpec) -> f64 {
    match psi {
        WindowSpec::Gaussian { .. } => (-32.0f64).exp(),
        WindowSpec::Hann { .. } | WindowSpec::Haar => 0.0,
        WindowSpec::Sampled(s) => {
            let peak = s.peak();
            if peak == 0.0 {
                0.0
            } else {
                let v = s.samples();
                v[0].norm().max(v[v.len() - 1].norm()) / peak
            }
        }
    }
}

fn level_axis(sf: &ScalingFunction, m: i32, n_lo: i64, n_hi: i64) -> Result<TimeAxis> {
    let s = 2f64.powi(m);
    let (lo, hi) = sf.base.support();
    let t_lo = (lo + n_lo as f64) / s;
    let t_hi = (hi + n_hi as f64) / s;
    let pad = 0.25 * (hi - lo) / s;
    // dyadic step so integer breakpoints of compact windows land on the grid
    let mut dt = 2f64.powi((sf.base.intrinsic_step() / s).log2().floor() as i32);
    let reach = t_lo.abs().max(t_hi.abs()) + pad;
    let omega =
        ((sf.m1.a() / sf.m1.b()).abs() + (sf.m2.a() / sf.m2.b()).abs() * s * s) * reach + 2.0 * s / sf.m1.b().abs();
    while omega * dt > PI / 4.0 {
        dt *= 0.5;
    }
    let start = ((t_lo - pad) / dt).floor() * dt;
    let n = ((t_hi + pad - start) / dt).ceil() as usize + 1;
    TimeAxis::new(start, dt, n)
}

/// `G[j][k] = ⟨φ_{m,n_j}, φ_{m,n_k}⟩` for `n_j, n_k ∈ n_lo..=n_hi`.
pub fn gram_matrix(sf: &ScalingFunction, m: i32, n_lo: i64, n_hi: i64) -> Result<DMatrix<Complex64>> {
    if n_hi < n_lo {
        return Err(Error::BadParams("empty translate range".into()));
    }
    let ratio = edge_ratio(&sf.base);
    if ratio > 1e-8 {
        return Err(Error::DecayViolation(ratio));
    }
    let axis = level_axis(sf, m, n_lo, n_hi)?;
    let translates: Vec<Signal> =
        (n_lo..=n_hi).map(|n| Signal::from_fn(axis, |t| phi_mn(sf, m, n, t))).collect::<Result<_>>()?;
    let size = translates.len();
    let mut g = DMatrix::from_element(size, size, Complex64::new(0.0, 0.0));
    for j in 0..size {
        for k in 0..size {
            g[(j, k)] = translates[j].inner(&translates[k])?;
        }
    }
    Ok(g)
}

/// `Φ(η) = L^{M₂}{e^{it/B₁}φ}(η)`.
pub fn scaling_spectrum(sf: &ScalingFunction, eta: f64) -> Result<Complex64> {
    modulated_window_lct(&sf.base, &sf.m2, 1.0 / sf.m1.b(), eta)
}

/// Argument `(B₂/B₁)(u + 2kπ|B₁|)` of the periodized sum.
fn periodized_arg(sf: &ScalingFunction, u: f64, k: i64) -> f64 {
    let b1 = sf.m1.b();
    sf.m2.b() / b1 * (u + 2.0 * k as f64 * PI * b1.abs())
}

/// Uniform grid over one period `[0, 2π|B₁|)`.
pub fn period_grid(n: usize, m1: &ParamMatrix) -> Vec<f64> {
    let p = 2.0 * PI * m1.b().abs();
    (0..n).map(|j| j as f64 * p / n as f64).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RieszReport {
    pub lower: f64,
    pub upper: f64,
    /// Largest ratio of an edge term of the truncated sum to the sum.
    pub edge_ratio: f64,
    pub sums: Vec<f64>,
    pub degenerate: bool,
}

/// Min and max over `u_grid` of `Σ_{k=k_lo}^{k_hi} |Φ((B₂/B₁)(u + 2kπ|B₁|))|²`.
pub fn riesz_bounds(sf: &ScalingFunction, u_grid: &[f64], k_lo: i64, k_hi: i64) -> Result<RieszReport> {
    if k_hi < k_lo || u_grid.is_empty() {
        return Err(Error::BadParams("empty periodization range".into()));
    }
    let rows: Vec<(f64, f64)> = u_grid
        .par_iter()
        .map(|&u| {
            let terms: Vec<f64> = (k_lo..=k_hi)
                .map(|k| scaling_spectrum(sf, periodized_arg(sf, u, k)).map(|z| z.norm_sqr()))
                .collect::<Result<_>>()?;
            let sum: f64 = terms.iter().sum();
            let edge = terms[0].max(terms[terms.len() - 1]);
            Ok((sum, if sum > 0.0 { edge / sum } else { 0.0 }))
        })
        .collect::<Result<_>>()?;
    let sums: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let edge_ratio = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let lower = sums.iter().cloned().fold(f64::INFINITY, f64::min);
    let upper = sums.iter().cloned().fold(0.0, f64::max);
    let degenerate = upper == 0.0;
    if !degenerate && edge_ratio > 1e-8 {
        return Err(Error::Truncation { ratio: edge_ratio });
    }
    Ok(RieszReport { lower, upper, edge_ratio, sums, degenerate })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthoProfile {
    pub u_grid: Vec<f64>,
    pub k_lo: i64,
    /// `values[j][k - k_lo]` at `(B₂/B₁)(u_j + 2kπ|B₁|)`.
    pub values: Vec<Vec<Complex64>>,
    /// Periodized sum of the normalized profile at each `u_j`.
    pub sums: Vec<f64>,
}

fn check_riesz(report: &RieszReport) -> Result<()> {
    if report.degenerate || !(report.lower > 1e-12 * report.upper) {
        return Err(Error::NotRiesz { lower: report.lower });
    }
    Ok(())
}

/// `Φ / √(2π|B₂| Σ_k |Φ(·)|²)` on the periodization lattice.
pub fn orthonormalize(sf: &ScalingFunction, u_grid: &[f64], k_lo: i64, k_hi: i64) -> Result<OrthoProfile> {
    let report = riesz_bounds(sf, u_grid, k_lo, k_hi)?;
    check_riesz(&report)?;
    let c = 2.0 * PI * sf.m2.b().abs();
    let values: Vec<Vec<Complex64>> = u_grid
        .par_iter()
        .zip(&report.sums)
        .map(|(&u, &sum)| {
            let scale = 1.0 / (c * sum).sqrt();
            (k_lo..=k_hi).map(|k| scaling_spectrum(sf, periodized_arg(sf, u, k)).map(|z| z * scale)).collect()
        })
        .collect::<Result<_>>()?;
    let sums = values.iter().map(|row| row.iter().map(|z| z.norm_sqr()).sum()).collect();
    Ok(OrthoProfile { u_grid: u_grid.to_vec(), k_lo, values, sums })
}

/// Time-domain scaling function whose modulated spectrum is the orthonormalized
/// profile, sampled on `t_axis`. The profile is formed on `eta_axis`.
pub fn orthonormal_window(
    sf: &ScalingFunction,
    eta_axis: &TimeAxis,
    k_lo: i64,
    k_hi: i64,
    t_axis: &TimeAxis,
) -> Result<WindowSpec> {
    let (b1, b2) = (sf.m1.b(), sf.m2.b());
    let shift = 2.0 * PI * b2 * b1.signum();
    let c = 2.0 * PI * b2.abs();
    let spec: Vec<Complex64> = (0..eta_axis.n)
        .into_par_iter()
        .map(|l| {
            let eta = eta_axis.at(l);
            let mut sum = 0.0;
            let mut center = Complex64::new(0.0, 0.0);
            for k in k_lo..=k_hi {
                let z = scaling_spectrum(sf, eta + k as f64 * shift)?;
                if k == 0 {
                    center = z;
                }
                sum += z.norm_sqr();
            }
            if !(sum > 0.0) {
                return Err(Error::NotRiesz { lower: sum });
            }
            Ok(center / (c * sum).sqrt())
        })
        .collect::<Result<_>>()?;
    let profile = Signal::new(eta_axis.t0, eta_axis.dt, spec)?;
    let modulated = lct_forward_on(&profile, &sf.m2.inverse(), t_axis)?;
    let inv_b1 = 1.0 / b1;
    Ok(WindowSpec::sampled(modulated.map(|t, z| z * Complex64::cis(-t * inv_b1))))
}

/// `Λ(v) = (√2/2) Σ c_n exp((i/2)(n²A₁/(4B₁) + 4n/B₁ − 2nv/B₂))`.
pub fn symbol_lambda(c: &FilterSequence, m1: &ParamMatrix, m2: &ParamMatrix, v: f64) -> Complex64 {
    let (a1, b1, b2) = (m1.a(), m1.b(), m2.b());
    let sum: Complex64 = c
        .iter()
        .map(|(n, z)| {
            let nf = n as f64;
            z * Complex64::cis(0.5 * (nf * nf * a1 / (4.0 * b1) + 4.0 * nf / b1 - 2.0 * nf * v / b2))
        })
        .sum();
    sum * (SQRT_2 / 2.0)
}

/// Same form as [`symbol_lambda`] with the wavelet filter.
pub fn symbol_gamma(d: &FilterSequence, m1: &ParamMatrix, m2: &ParamMatrix, v: f64) -> Complex64 {
    symbol_lambda(d, m1, m2, v)
}

/// Symbol at `v = B₂u/B₁`.
fn at_u(x: &FilterSequence, m1: &ParamMatrix, m2: &ParamMatrix, u: f64) -> Complex64 {
    symbol_lambda(x, m1, m2, m2.b() * u / m1.b())
}

fn half_shift(m1: &ParamMatrix, u: f64) -> f64 {
    u + PI * m1.b().abs()
}

/// `max_u | |Λ(v(u))|² + |Λ(v(u + π|B₁|))|² − 1 |`.
pub fn qmf_check(c: &FilterSequence, m1: &ParamMatrix, m2: &ParamMatrix, u_grid: &[f64]) -> f64 {
    u_grid
        .iter()
        .map(|&u| {
            let x = at_u(c, m1, m2, u).norm_sqr() + at_u(c, m1, m2, half_shift(m1, u)).norm_sqr();
            (x - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

/// `d_k = (−1)^{1−k} conj(c_{1−k}) exp(−(i/2){(1−k)²A₁/(4B₁) + k²A₁/(4B₁) + 4/B₁})`.
pub fn derive_wavelet_coeffs(c: &FilterSequence, m1: &ParamMatrix) -> FilterSequence {
    let (a1, b1) = (m1.a(), m1.b());
    let (lo, hi) = c.support();
    let offset = 1 - hi;
    let coeffs = (offset..=1 - lo)
        .map(|k| {
            let n = 1 - k;
            let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let (nf, kf) = (n as f64, k as f64);
            let phase = -0.5 * (nf * nf * a1 / (4.0 * b1) + kf * kf * a1 / (4.0 * b1) + 4.0 / b1);
            c.get(n).conj() * Complex64::cis(phase) * sign
        })
        .collect();
    FilterSequence { offset, coeffs }
}

/// Rows `(Λ, Λ_shift)` and `(Γ, Γ_shift)` at `u`.
fn u_matrix(c: &FilterSequence, d: &FilterSequence, m1: &ParamMatrix, m2: &ParamMatrix, u: f64) -> [[Complex64; 2]; 2] {
    let us = half_shift(m1, u);
    [[at_u(c, m1, m2, u), at_u(c, m1, m2, us)], [at_u(d, m1, m2, u), at_u(d, m1, m2, us)]]
}

/// `max_u ‖U U* − I‖_max`.
pub fn unitarity_check(
    c: &FilterSequence,
    d: &FilterSequence,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    u_grid: &[f64],
) -> f64 {
    u_grid
        .iter()
        .map(|&u| {
            let m = u_matrix(c, d, m1, m2, u);
            let mut dev: f64 = 0.0;
            for (i, row_i) in m.iter().enumerate() {
                for (j, row_j) in m.iter().enumerate() {
                    let e = row_i[0] * row_j[0].conj() + row_i[1] * row_j[1].conj();
                    let target = if i == j { 1.0 } else { 0.0 };
                    dev = dev.max((e - target).norm());
                }
            }
            dev
        })
        .fold(0.0, f64::max)
}

/// `max_u |Λ conj(Γ) + Λ_shift conj(Γ_shift)|`.
pub fn cross_orthogonality_check(
    c: &FilterSequence,
    d: &FilterSequence,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    u_grid: &[f64],
) -> f64 {
    u_grid
        .iter()
        .map(|&u| {
            let m = u_matrix(c, d, m1, m2, u);
            (m[0][0] * m[1][0].conj() + m[0][1] * m[1][1].conj()).norm()
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhoReport {
    pub rho: Vec<Complex64>,
    pub antiperiodicity_deviation: f64,
    /// Share of `Σ|ρ̂_k|²` carried by even harmonics.
    pub even_coefficient_mass: f64,
}

/// `ρ(u) = Γ(v(u)) / conj(Λ(v(u + π|B₁|)))`.
///
/// `u_grid` should be [`period_grid`] with an even number of points; the harmonic
/// split treats the samples as one period.
pub fn rho_decompose(
    c: &FilterSequence,
    d: &FilterSequence,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    u_grid: &[f64],
) -> Result<RhoReport> {
    const FLOOR: f64 = 1e-8;
    let rho_at = |u: f64| -> Option<Complex64> {
        let den = at_u(c, m1, m2, half_shift(m1, u)).conj();
        if den.norm() < FLOOR {
            None
        } else {
            Some(at_u(d, m1, m2, u) / den)
        }
    };
    let mut rho = Vec::with_capacity(u_grid.len());
    let mut dev: f64 = 0.0;
    let mut bad = 0usize;
    for &u in u_grid {
        match (rho_at(u), rho_at(half_shift(m1, u))) {
            (Some(r), Some(rs)) => {
                dev = dev.max((r + rs).norm());
                rho.push(r);
            }
            (Some(r), None) => rho.push(r),
            _ => {
                bad += 1;
                rho.push(Complex64::new(0.0, 0.0));
            }
        }
    }
    let fraction = 100.0 * bad as f64 / u_grid.len().max(1) as f64;
    if fraction > 10.0 {
        return Err(Error::IllConditioned { fraction });
    }
    let mut spectrum = rho.clone();
    if !spectrum.is_empty() {
        FftPlanner::<f64>::new().plan_fft_forward(spectrum.len()).process(&mut spectrum);
    }
    let total: f64 = spectrum.iter().map(|z| z.norm_sqr()).sum();
    let even: f64 = spectrum.iter().step_by(2).map(|z| z.norm_sqr()).sum();
    let even_coefficient_mass = if total > 0.0 { even / total } else { 0.0 };
    Ok(RhoReport { rho, antiperiodicity_deviation: dev, even_coefficient_mass })
}

/// `ψ_{0,0}(t) = Σ d_n φ_{1,n}(t)`.
pub fn wavelet_00(sf: &ScalingFunction, d: &FilterSequence, t: f64) -> Complex64 {
    d.iter().map(|(n, z)| z * phi_mn(sf, 1, n, t)).sum()
}

/// `⟨ψ_{0,0}, φ_{0,k}⟩` for `k ∈ k_lo..=k_hi` by trapezoid quadrature.
pub fn cross_level_inner(sf: &ScalingFunction, d: &FilterSequence, k_lo: i64, k_hi: i64) -> Result<Vec<Complex64>> {
    let ratio = edge_ratio(&sf.base);
    if ratio > 1e-8 {
        return Err(Error::DecayViolation(ratio));
    }
    let (dlo, dhi) = d.support();
    let lo = k_lo.min(dlo.div_euclid(2));
    let hi = k_hi.max(dhi.div_euclid(2) + 1);
    let axis = level_axis(sf, 1, 2 * lo, 2 * hi)?;
    let psi = Signal::from_fn(axis, |t| wavelet_00(sf, d, t))?;
    (k_lo..=k_hi)
        .map(|k| {
            let phi = Signal::from_fn(axis, |t| phi_mn(sf, 0, k, t))?;
            psi.inner(&phi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical() -> (ParamMatrix, ParamMatrix) {
        (ParamMatrix::fourier(), ParamMatrix::fourier())
    }

    #[test]
    fn lambda_examples() {
        let (m1, m2) = classical();
        let haar = FilterSequence::haar();
        for u in [0.0, 0.4, 2.0, 5.5] {
            let expected = (Complex64::new(1.0, 0.0) + Complex64::cis(2.0 - u)) * 0.5;
            assert!((symbol_lambda(&haar, &m1, &m2, u) - expected).norm() < 1e-15);
        }
        let one = FilterSequence::from_real(0, &[1.0]).unwrap();
        assert!((symbol_lambda(&one, &m1, &m2, 1.3) - SQRT_2 / 2.0).norm() < 1e-15);
        let zero = FilterSequence::from_real(0, &[0.0, 0.0]).unwrap();
        assert_eq!(symbol_lambda(&zero, &m1, &m2, 1.3), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn derived_haar_coefficients() {
        let (m1, _) = classical();
        let d = derive_wavelet_coeffs(&FilterSequence::haar(), &m1);
        let e = Complex64::cis(-2.0) / SQRT_2;
        assert_eq!(d.support(), (0, 1));
        assert!((d.get(0) + e).norm() < 1e-15);
        assert!((d.get(1) - e).norm() < 1e-15);

        let m = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let d = derive_wavelet_coeffs(&FilterSequence::from_real(0, &[1.0]).unwrap(), &m);
        assert_eq!(d.support(), (1, 1));
        // (1-k)² vanishes at k = 1, leaving A₁/(4B₁)
        let expected = Complex64::cis(-0.5 * (m.a() / (4.0 * m.b()) + 4.0 / m.b()));
        assert!((d.get(1) - expected).norm() < 1e-15);
    }

    #[test]
    fn qmf_examples() {
        let (m1, m2) = classical();
        let grid = period_grid(256, &m1);
        assert!(qmf_check(&FilterSequence::haar(), &m1, &m2, &grid) < 1e-12);
        assert!(qmf_check(&FilterSequence::from_real(0, &[1.0]).unwrap(), &m1, &m2, &grid) < 1e-15);
        let dev = qmf_check(&FilterSequence::from_real(0, &[1.0, 1.0]).unwrap(), &m1, &m2, &grid);
        assert!((dev - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unitarity_examples() {
        let (m1, m2) = classical();
        let grid = period_grid(256, &m1);
        let c = FilterSequence::haar();
        let d = derive_wavelet_coeffs(&c, &m1);
        assert!(unitarity_check(&c, &d, &m1, &m2, &grid) < 1e-12);
        assert!(cross_orthogonality_check(&c, &d, &m1, &m2, &grid) < 1e-12);
        assert!(unitarity_check(&c, &c, &m1, &m2, &grid) >= 1.0 - 1e-12);
        assert!((cross_orthogonality_check(&c, &c, &m1, &m2, &grid) - 1.0).abs() < 1e-12);
        let zero = FilterSequence::from_real(0, &[0.0]).unwrap();
        assert_eq!(cross_orthogonality_check(&c, &zero, &m1, &m2, &grid), 0.0);
    }

    #[test]
    fn rho_of_derived_filter() {
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let grid = period_grid(256, &m1);
        let c = FilterSequence::haar();
        let d = derive_wavelet_coeffs(&c, &m1);
        let r = rho_decompose(&c, &d, &m1, &m2, &grid).unwrap();
        assert!(r.antiperiodicity_deviation < 1e-10);
        assert!(r.even_coefficient_mass < 1e-10);
        for (z, &u) in r.rho.iter().zip(&grid) {
            assert!((z - Complex64::cis(-u / m1.b())).norm() < 1e-12);
        }
        let zero = FilterSequence::from_real(0, &[0.0]).unwrap();
        let r = rho_decompose(&c, &zero, &m1, &m2, &grid).unwrap();
        assert_eq!((r.antiperiodicity_deviation, r.even_coefficient_mass), (0.0, 0.0));
    }

    #[test]
    fn phi_mn_reductions() {
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let sf = ScalingFunction::new(WindowSpec::gaussian(1.0).unwrap(), m1, m2).unwrap();
        assert!((phi_mn(&sf, 0, 0, 0.0) - sf.base.eval(0.0)).norm() < 1e-15);
        for t in [-1.0, 0.5, 2.0] {
            let phase = -0.5 * ((m1.a() / m1.b() - m2.a() / m2.b()) * t * t - 2.0 * t / m1.b());
            let expected = sf.base.eval(t) * Complex64::cis(phase);
            assert!((phi_mn(&sf, 0, 0, t) - expected).norm() < 1e-14);
        }
    }

    #[test]
    fn haar_gram_is_identity() {
        let (m1, m2) = classical();
        let sf = ScalingFunction::new(WindowSpec::Haar, m1, m2).unwrap();
        let g = gram_matrix(&sf, 0, -1, 1).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let target = if j == k { 1.0 } else { 0.0 };
                assert!((g[(j, k)] - target).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn gaussian_gram_overlaps() {
        let (m1, m2) = classical();
        let sf = ScalingFunction::new(WindowSpec::gaussian(1.0).unwrap(), m1, m2).unwrap();
        let g = gram_matrix(&sf, 0, 0, 2).unwrap();
        assert!(g[(0, 1)].norm() > 0.1);
        assert!((&g - g.adjoint()).iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn non_decaying_window_is_refused() {
        let (m1, m2) = classical();
        let axis = TimeAxis::spanning(-1.0, 1.0, 33).unwrap();
        let flat = Signal::from_fn(axis, |_| Complex64::new(1.0, 0.0)).unwrap();
        let sf = ScalingFunction::new(WindowSpec::sampled(flat), m1, m2).unwrap();
        assert!(matches!(gram_matrix(&sf, 0, 0, 1), Err(Error::DecayViolation(_))));
    }

    #[test]
    fn cross_level_inner_product_of_haar() {
        // ⟨ψ_00, φ_00⟩ = e^{-2i}(1 − e^{i/2})(1 − e^{3i/2}) / i for Haar under classical matrices
        let (m1, m2) = classical();
        let sf = ScalingFunction::new(WindowSpec::Haar, m1, m2).unwrap();
        let d = derive_wavelet_coeffs(&FilterSequence::haar(), &m1);
        let v = cross_level_inner(&sf, &d, 0, 0).unwrap()[0];
        let one = Complex64::new(1.0, 0.0);
        let expected =
            Complex64::cis(-2.0) * (one - Complex64::cis(0.5)) * (one - Complex64::cis(1.5)) / Complex64::i();
        assert!((v - expected).norm() < 1e-3, "{v} vs {expected}");
        assert!((v.norm() - 4.0 * 0.25f64.sin() * 0.75f64.sin()).abs() < 1e-3);
    }
}
