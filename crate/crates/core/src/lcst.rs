//! Linear canonical Stockwell transform.
//!
//! Window:
//! `ψ_{a,b}(t) = e^{-iA₁(t²-b²)/(2B₁) + iA₂(a(t-b))²/(2B₂) + iat/B₁} · aψ(a(t-b))`,
//! coefficients `S(a,b) = ⟨f, ψ_{a,b}⟩`.

use std::f64::consts::{LN_10, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fftconv::convolve;
use crate::types::{CoefficientPlane, ParamMatrix, ScaleShiftGrid, Signal, TimeAxis};
use crate::window::WindowSpec;

/// Which modulation enters the admissibility integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdmissibilityVariant {
    /// `e^{it/B₁}`, the modulation of the LCST–LCT relation.
    ModOverB1,
    /// `e^{it/(B₁a)}`.
    #[default]
    ModOverB1a,
}

impl AdmissibilityVariant {
    pub fn name(&self) -> &'static str {
        match self {
            AdmissibilityVariant::ModOverB1 => "mod-1-over-B1",
            AdmissibilityVariant::ModOverB1a => "mod-1-over-B1a",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "mod-1-over-B1" | "b1" => Ok(AdmissibilityVariant::ModOverB1),
            "mod-1-over-B1a" | "b1a" => Ok(AdmissibilityVariant::ModOverB1a),
            _ => Err(Error::BadParams(format!("unknown admissibility variant '{text}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub c_value: f64,
    pub xi_probes: Vec<f64>,
    pub per_probe_values: Vec<f64>,
    pub relative_spread: f64,
    pub variant: AdmissibilityVariant,
}

/// Log-spaced scale range for the admissibility integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleRange {
    pub a_min: f64,
    pub a_max: f64,
    pub steps: usize,
}

impl ScaleRange {
    pub fn new(a_min: f64, a_max: f64, steps: usize) -> Result<Self> {
        if !(a_min > 0.0) || !(a_max > a_min) || !a_max.is_finite() || steps < 2 {
            return Err(Error::BadParams(format!(
                "scale range needs 0 < a_min < a_max and at least 2 steps, got ({a_min}, {a_max}, {steps})"
            )));
        }
        Ok(Self { a_min, a_max, steps })
    }

    fn log_step(&self) -> f64 {
        (self.a_max / self.a_min).ln() / (self.steps - 1) as f64
    }

    fn at(&self, k: usize) -> f64 {
        self.a_min * (k as f64 * self.log_step()).exp()
    }
}

/// Phase coefficients of `ψ_{a,b}` for fixed matrices.
#[derive(Debug, Clone, Copy)]
struct Chirps {
    a1_over_b1: f64,
    a2_over_b2: f64,
    inv_b1: f64,
}

impl Chirps {
    fn new(m1: &ParamMatrix, m2: &ParamMatrix) -> Result<Self> {
        m1.require_kernel()?;
        m2.require_kernel()?;
        Ok(Self { a1_over_b1: m1.a() / m1.b(), a2_over_b2: m2.a() / m2.b(), inv_b1: 1.0 / m1.b() })
    }

    #[inline]
    fn window(&self, psi: &WindowSpec, a: f64, b: f64, t: f64) -> Complex64 {
        let s = a * (t - b);
        let phase = -0.5 * self.a1_over_b1 * (t * t - b * b) + 0.5 * self.a2_over_b2 * s * s + a * t * self.inv_b1;
        Complex64::cis(phase) * psi.eval(s) * a
    }

    /// `q_a(s) = aψ(as) e^{iA₂(as)²/(2B₂)}`.
    #[inline]
    fn dilated(&self, psi: &WindowSpec, a: f64, s: f64) -> Complex64 {
        let x = a * s;
        Complex64::cis(0.5 * self.a2_over_b2 * x * x) * psi.eval(x) * a
    }
}

fn check_scale(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveScale(a))
    }
}

pub fn lcst_window(psi: &WindowSpec, m1: &ParamMatrix, m2: &ParamMatrix, a: f64, b: f64, t: f64) -> Result<Complex64> {
    check_scale(a)?;
    Ok(Chirps::new(m1, m2)?.window(psi, a, b, t))
}

/// `ψ_{a,b}` sampled on `axis`.
pub fn sample_lcst_window(
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    a: f64,
    b: f64,
    axis: TimeAxis,
) -> Result<Signal> {
    check_scale(a)?;
    let ch = Chirps::new(m1, m2)?;
    Signal::from_fn(axis, |t| ch.window(psi, a, b, t))
}

/// Direct quadrature `S(a_i, b_j) = Σ_k w_k f(t_k) conj(ψ_{a_i,b_j}(t_k))`.
pub fn lcst_forward(
    f: &Signal,
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    grid: &ScaleShiftGrid,
) -> Result<CoefficientPlane> {
    let ch = Chirps::new(m1, m2)?;
    let axis = f.axis();
    let weighted: Vec<(f64, Complex64)> =
        f.samples().iter().enumerate().map(|(k, &z)| (axis.at(k), z * axis.weight(k))).collect();
    let rows: Vec<Vec<Complex64>> = grid
        .scales()
        .par_iter()
        .map(|&a| {
            (0..grid.shift_count())
                .map(|j| {
                    let b = grid.shift(j);
                    weighted.iter().map(|&(t, z)| z * ch.window(psi, a, b, t).conj()).sum()
                })
                .collect()
        })
        .collect();
    CoefficientPlane::new(grid.clone(), axis, rows.concat())
}

/// Shift grid expressed on the signal lattice: `b_j = t0 + (m0 + j·stride)·dt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice {
    pub m0: i64,
    pub stride: usize,
}

pub fn shift_lattice(axis: &TimeAxis, grid: &ScaleShiftGrid) -> Result<Lattice> {
    let ratio = grid.shift_step() / axis.dt;
    let stride = ratio.round();
    if stride < 1.0 || (ratio - stride).abs() > 1e-9 * ratio.max(1.0) {
        return Err(Error::IncommensurateGrids(format!(
            "shift step {} is not an integer multiple of dt = {}",
            grid.shift_step(),
            axis.dt
        )));
    }
    let off = (grid.shift_start() - axis.t0) / axis.dt;
    let m0 = off.round();
    if (off - m0).abs() > 1e-6 {
        return Err(Error::IncommensurateGrids(format!(
            "first shift {} is not on the signal lattice",
            grid.shift_start()
        )));
    }
    Ok(Lattice { m0: m0 as i64, stride: stride as usize })
}

/// Per-scale FFT correlation. Needs a shift grid on the signal lattice.
pub fn lcst_forward_fast(
    f: &Signal,
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    grid: &ScaleShiftGrid,
) -> Result<CoefficientPlane> {
    let ch = Chirps::new(m1, m2)?;
    let axis = f.axis();
    let lat = shift_lattice(&axis, grid)?;
    let n = axis.n;
    let count = grid.shift_count();
    let span = (count - 1) * lat.stride;
    let m_max = lat.m0 + span as i64;

    let chirped: Vec<Complex64> = f
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &z)| {
            let t = axis.at(k);
            z * axis.weight(k) * Complex64::cis(0.5 * ch.a1_over_b1 * t * t)
        })
        .collect();
    let shift_phase: Vec<Complex64> =
        (0..count).map(|j| Complex64::cis(-0.5 * ch.a1_over_b1 * grid.shift(j).powi(2))).collect();

    let rows: Vec<Vec<Complex64>> = grid
        .scales()
        .par_iter()
        .map(|&a| {
            // g_k reversed, so that correlation becomes convolution
            let g_rev: Vec<Complex64> =
                (0..n).rev().map(|k| chirped[k] * Complex64::cis(-a * axis.at(k) * ch.inv_b1)).collect();
            // h[p] = conj(q_a((p - m_max)·dt)), p = 0..n + span
            let h: Vec<Complex64> =
                (0..n + span).map(|p| ch.dilated(psi, a, (p as i64 - m_max) as f64 * axis.dt).conj()).collect();
            let conv = convolve(&g_rev, &h);
            (0..count)
                .map(|j| {
                    let idx = n - 1 + span - j * lat.stride;
                    shift_phase[j] * conv[idx]
                })
                .collect()
        })
        .collect();
    CoefficientPlane::new(grid.clone(), axis, rows.concat())
}

/// Fast path when the shifts sit on the signal lattice, direct quadrature otherwise.
pub fn lcst_forward_auto(
    f: &Signal,
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    grid: &ScaleShiftGrid,
) -> Result<CoefficientPlane> {
    match shift_lattice(&f.axis(), grid) {
        Ok(_) => lcst_forward_fast(f, psi, m1, m2, grid),
        Err(_) => lcst_forward(f, psi, m1, m2, grid),
    }
}

/// `L^{M₂}{e^{iκt}ψ(t)}(η)` by trapezoid quadrature over the window support.
pub fn modulated_window_lct(psi: &WindowSpec, m2: &ParamMatrix, kappa: f64, eta: f64) -> Result<Complex64> {
    let kernel = crate::lct::LctKernel::new(*m2)?;
    let (lo, hi) = psi.support();
    let reach = lo.abs().max(hi.abs());
    let omega = kappa.abs() + (eta / m2.b()).abs() + (m2.a() / m2.b()).abs() * reach;
    let axis = psi.quadrature_axis(omega);
    Ok((0..axis.n)
        .map(|k| {
            let t = axis.at(k);
            psi.eval(t) * Complex64::cis(kappa * t) * kernel.eval(t, eta) * axis.weight(k)
        })
        .sum())
}

/// `C = ∫ |L^{M₂}{e^{iκt}ψ}(B₂ξ/(B₁a))|² da/a` per probe ξ, log-trapezoid in `a`.
pub fn admissibility_constant(
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    xi_probes: &[f64],
    range: ScaleRange,
    variant: AdmissibilityVariant,
) -> Result<AdmissibilityReport> {
    m1.require_kernel()?;
    m2.require_kernel()?;
    if xi_probes.len() < 3 || xi_probes.iter().any(|x| !x.is_finite()) {
        return Err(Error::BadParams("admissibility needs at least 3 finite probes".into()));
    }
    if psi.norm() == 0.0 {
        return Err(Error::NotAdmissible("window is zero".into()));
    }
    let (b1, b2) = (m1.b(), m2.b());
    let h = range.log_step();
    let mut per_probe = Vec::with_capacity(xi_probes.len());
    for &xi in xi_probes {
        let integrand: Vec<f64> = (0..range.steps)
            .into_par_iter()
            .map(|k| {
                let a = range.at(k);
                let kappa = match variant {
                    AdmissibilityVariant::ModOverB1 => 1.0 / b1,
                    AdmissibilityVariant::ModOverB1a => 1.0 / (b1 * a),
                };
                modulated_window_lct(psi, m2, kappa, b2 * xi / (b1 * a)).map(|z| z.norm_sqr())
            })
            .collect::<Result<_>>()?;
        let last = integrand.len() - 1;
        let c: f64 =
            integrand.iter().enumerate().map(|(k, v)| if k == 0 || k == last { 0.5 * h * v } else { h * v }).sum();
        if !(c > 1e-12) {
            return Err(Error::NotAdmissible(format!("C = {c:e} at probe xi = {xi}")));
        }
        let edge = integrand[0].max(integrand[last]) * LN_10 / c;
        if edge > 0.01 {
            return Err(Error::NotAdmissible(format!(
                "scale integral still growing at the range edge for xi = {xi} ({:.2}% per decade)",
                100.0 * edge
            )));
        }
        per_probe.push(c);
    }
    let mean = per_probe.iter().sum::<f64>() / per_probe.len() as f64;
    let max = per_probe.iter().cloned().fold(f64::MIN, f64::max);
    let min = per_probe.iter().cloned().fold(f64::MAX, f64::min);
    Ok(AdmissibilityReport {
        c_value: mean,
        xi_probes: xi_probes.to_vec(),
        per_probe_values: per_probe,
        relative_spread: (max - min) / mean,
        variant,
    })
}

/// `2π|B₂|·C`, the factor in the Plancherel and reconstruction identities.
pub fn normalization_constant(m2: &ParamMatrix, c_value: f64) -> f64 {
    2.0 * PI * m2.b().abs() * c_value
}

fn check_inverse_inputs(plane: &CoefficientPlane, c_value: f64) -> Result<()> {
    if !(c_value > 0.0 && c_value.is_finite()) {
        return Err(Error::NonPositiveC(c_value));
    }
    if plane.grid().scale_count() < 2 {
        return Err(Error::InvalidGrid("reconstruction needs at least 2 scales".into()));
    }
    Ok(())
}

/// Reconstruction `f(t) = (2π|B₂|C)^{-1} ∬ S(a,b) ψ_{a,b}(t) da db / a` onto the plane's time axis.
/// Uses lattice convolution when possible.
pub fn lcst_inverse(
    plane: &CoefficientPlane,
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    c_value: f64,
) -> Result<Signal> {
    check_inverse_inputs(plane, c_value)?;
    let axis = plane.axis();
    let grid = plane.grid();
    let lat = match shift_lattice(&axis, grid) {
        Ok(l) => l,
        Err(_) => return lcst_inverse_direct(plane, psi, m1, m2, c_value),
    };
    let ch = Chirps::new(m1, m2)?;
    let n = axis.n;
    let count = grid.shift_count();
    let span = (count - 1) * lat.stride;
    let p = span + 1;
    let db = grid.shift_step();
    let scale_phase: Vec<Complex64> =
        (0..count).map(|j| Complex64::cis(0.5 * ch.a1_over_b1 * grid.shift(j).powi(2)) * db).collect();

    let rows: Vec<Vec<Complex64>> = (0..grid.scale_count())
        .into_par_iter()
        .map(|i| {
            let a = grid.scales()[i];
            let mut w = vec![Complex64::new(0.0, 0.0); p];
            for (j, &s) in plane.row(i).iter().enumerate() {
                w[j * lat.stride] = s * scale_phase[j];
            }
            // q[p'] = q_a((p' - (P-1) - m0)·dt)
            let q: Vec<Complex64> = (0..n + p - 1)
                .map(|pp| ch.dilated(psi, a, (pp as i64 - (p as i64 - 1) - lat.m0) as f64 * axis.dt))
                .collect();
            let conv = convolve(&w, &q);
            let wa = grid.scale_weight(i);
            (0..n).map(|k| conv[k + p - 1] * Complex64::cis(a * axis.at(k) * ch.inv_b1) * wa).collect()
        })
        .collect();
    finish_inverse(&rows, axis, ch, normalization_constant(m2, c_value))
}

/// Direct double sum over the plane for every output sample.
pub fn lcst_inverse_direct(
    plane: &CoefficientPlane,
    psi: &WindowSpec,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    c_value: f64,
) -> Result<Signal> {
    check_inverse_inputs(plane, c_value)?;
    let ch = Chirps::new(m1, m2)?;
    let axis = plane.axis();
    let grid = plane.grid();
    let db = grid.shift_step();
    let rows: Vec<Vec<Complex64>> = (0..grid.scale_count())
        .into_par_iter()
        .map(|i| {
            let a = grid.scales()[i];
            let wa = grid.scale_weight(i) * db;
            let row = plane.row(i);
            (0..axis.n)
                .map(|k| {
                    let t = axis.at(k);
                    let acc: Complex64 =
                        row.iter().enumerate().map(|(j, s)| s * ch.window(psi, a, grid.shift(j), t)).sum();
                    // the outer chirp is reapplied in finish_inverse
                    acc * wa * Complex64::cis(0.5 * ch.a1_over_b1 * t * t)
                })
                .collect()
        })
        .collect();
    finish_inverse(&rows, axis, ch, normalization_constant(m2, c_value))
}

fn finish_inverse(rows: &[Vec<Complex64>], axis: TimeAxis, ch: Chirps, norm: f64) -> Result<Signal> {
    let out = (0..axis.n)
        .map(|k| {
            let t = axis.at(k);
            let acc: Complex64 = rows.iter().map(|r| r[k]).sum();
            acc * Complex64::cis(-0.5 * ch.a1_over_b1 * t * t) / norm
        })
        .collect();
    Signal::new(axis.t0, axis.dt, out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialCase {
    /// Fractional Stockwell transform: rotations by α and β.
    Frst {
        alpha: f64,
        beta: f64,
    },
    /// Fresnel Stockwell transform: `(1, B₁; 0, 1)` and `(1, B₂; 0, 1)`.
    Fresnel {
        b1: f64,
        b2: f64,
    },
    Classical,
}

impl SpecialCase {
    /// Parses `classical`, `frst:α,β` or `fresnel:B1,B2`.
    pub fn parse(text: &str) -> Result<Self> {
        let pair = |s: &str| -> Result<(f64, f64)> {
            let v: Vec<f64> = s
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::BadParams(format!("preset parameters: {e}")))?;
            match v[..] {
                [x, y] => Ok((x, y)),
                _ => Err(Error::BadParams(format!("preset needs two parameters, got '{s}'"))),
            }
        };
        match text.split_once(':') {
            None if text == "classical" => Ok(SpecialCase::Classical),
            Some(("frst", args)) => {
                let (alpha, beta) = pair(args)?;
                Ok(SpecialCase::Frst { alpha, beta })
            }
            Some(("fresnel", args)) => {
                let (b1, b2) = pair(args)?;
                Ok(SpecialCase::Fresnel { b1, b2 })
            }
            _ => Err(Error::BadParams(format!("unknown preset '{text}'"))),
        }
    }
}

pub fn special_case(kind: SpecialCase) -> Result<(ParamMatrix, ParamMatrix)> {
    match kind {
        SpecialCase::Frst { alpha, beta } => Ok((ParamMatrix::rotation(alpha)?, ParamMatrix::rotation(beta)?)),
        SpecialCase::Fresnel { b1, b2 } => Ok((ParamMatrix::fresnel(b1)?, ParamMatrix::fresnel(b2)?)),
        SpecialCase::Classical => Ok((ParamMatrix::fourier(), ParamMatrix::fourier())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss_signal(n: usize, dt: f64) -> Signal {
        let axis = TimeAxis::new(-(n as f64) / 2.0 * dt, dt, n).unwrap();
        Signal::from_fn(axis, |t| Complex64::new((-t * t / 2.0).exp(), 0.0) * Complex64::cis(2.0 * t)).unwrap()
    }

    #[test]
    fn window_examples() {
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let f = ParamMatrix::fourier();
        for t in [-1.0, 0.3, 2.0] {
            let v = lcst_window(&psi, &f, &f, 1.0, 0.0, t).unwrap();
            assert!((v - Complex64::cis(t) * psi.eval(t)).norm() < 1e-15);
        }
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let b = 0.7;
        let v = lcst_window(&psi, &m1, &m2, 1.0, b, b).unwrap();
        assert!((v - Complex64::cis(b / m1.b()) * psi.eval(0.0)).norm() < 1e-15);
        assert_eq!(lcst_window(&psi, &m1, &m2, 0.0, 0.0, 0.0), Err(Error::NonPositiveScale(0.0)));
    }

    #[test]
    fn window_reference_value() {
        // a=2, b=1, t=1.5, Gaussian σ=1, m1=(1,1,1,2), m2=(1,2,0.5,2):
        // phase = -(2.25-1)/2 + (1)^2/4 + 3 = 2.625, modulus = 2·e^{-1/2}/π^{1/4}
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let v = lcst_window(&psi, &m1, &m2, 2.0, 1.0, 1.5).unwrap();
        let expected = Complex64::from_polar(0.911_161_344_022_665, 2.625);
        assert!((v - expected).norm() < 1e-12, "{v}");
    }

    #[test]
    fn fast_matches_direct() {
        let f = gauss_signal(256, 1.0 / 16.0);
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let grid = ScaleShiftGrid::new(0.5, 4.0, 6, -4.0, 0.125, 64).unwrap();
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let slow = lcst_forward(&f, &psi, &m1, &m2, &grid).unwrap();
        let fast = lcst_forward_fast(&f, &psi, &m1, &m2, &grid).unwrap();
        assert!(fast.rel_frobenius(&slow) < 1e-10);
    }

    #[test]
    fn incommensurate_shift_grid() {
        let f = gauss_signal(256, 1.0 / 16.0);
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let grid = ScaleShiftGrid::new(0.5, 4.0, 4, -4.0, 0.1, 8).unwrap();
        let c = ParamMatrix::fourier();
        assert!(matches!(lcst_forward_fast(&f, &psi, &c, &c, &grid), Err(Error::IncommensurateGrids(_))));
    }

    #[test]
    fn inverse_paths_agree() {
        let f = gauss_signal(128, 1.0 / 8.0);
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let grid = ScaleShiftGrid::new(0.5, 4.0, 5, -6.0, 0.25, 48).unwrap();
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        let plane = lcst_forward_fast(&f, &psi, &m1, &m2, &grid).unwrap();
        let fast = lcst_inverse(&plane, &psi, &m1, &m2, 0.7).unwrap();
        let slow = lcst_inverse_direct(&plane, &psi, &m1, &m2, 0.7).unwrap();
        assert!(fast.rel_l2_error(&slow).unwrap() < 1e-10);
    }

    #[test]
    fn inverse_rejects_bad_constant() {
        let f = gauss_signal(64, 0.25);
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let grid = ScaleShiftGrid::new(0.5, 4.0, 4, -4.0, 0.25, 8).unwrap();
        let c = ParamMatrix::fourier();
        let plane = lcst_forward(&f, &psi, &c, &c, &grid).unwrap();
        assert_eq!(lcst_inverse(&plane, &psi, &c, &c, 0.0), Err(Error::NonPositiveC(0.0)));
    }

    #[test]
    fn zero_window_not_admissible() {
        let axis = TimeAxis::new(-1.0, 0.1, 21).unwrap();
        let psi = WindowSpec::sampled(Signal::zeros(axis));
        let c = ParamMatrix::fourier();
        let r = admissibility_constant(
            &psi,
            &c,
            &c,
            &[0.5, 1.0, 2.0],
            ScaleRange::new(0.01, 100.0, 64).unwrap(),
            AdmissibilityVariant::ModOverB1,
        );
        assert!(matches!(r, Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn special_cases() {
        let (m1, m2) = special_case(SpecialCase::Classical).unwrap();
        assert_eq!(m1.entries(), [0.0, 1.0, -1.0, 0.0]);
        assert_eq!(m2.entries(), [0.0, 1.0, -1.0, 0.0]);
        let (r1, r2) = special_case(SpecialCase::Frst { alpha: PI / 2.0, beta: PI / 2.0 }).unwrap();
        for (x, y) in r1.entries().iter().chain(&r2.entries()).zip(m1.entries().iter().chain(&m2.entries())) {
            assert!((x - y).abs() < 1e-15);
        }
        let (f1, f2) = special_case(SpecialCase::Fresnel { b1: 1.0, b2: 2.0 }).unwrap();
        assert_eq!(f1.entries(), [1.0, 1.0, 0.0, 1.0]);
        assert_eq!(f2.entries(), [1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(
            special_case(SpecialCase::Frst { alpha: 0.0, beta: 1.0 }),
            Err(Error::DegenerateAngle { .. })
        ));
        assert_eq!(special_case(SpecialCase::Fresnel { b1: 0.0, b2: 1.0 }), Err(Error::ZeroB));
        assert_eq!(SpecialCase::parse("fresnel:1,2").unwrap(), SpecialCase::Fresnel { b1: 1.0, b2: 2.0 });
    }
}
