//! Reproducing kernel of the LCST range and the range-membership check.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lcst::{lcst_inverse, normalization_constant, sample_lcst_window};
use crate::types::{CoefficientPlane, ParamMatrix, Signal, TimeAxis};
use crate::window::WindowSpec;

#[derive(Debug, Clone)]
pub struct KernelContext {
    pub psi: WindowSpec,
    pub m1: ParamMatrix,
    pub m2: ParamMatrix,
    pub c_value: f64,
    /// Quadrature grid for window inner products.
    pub axis: TimeAxis,
}

impl KernelContext {
    pub fn new(psi: WindowSpec, m1: ParamMatrix, m2: ParamMatrix, c_value: f64, axis: TimeAxis) -> Result<Self> {
        m1.require_kernel()?;
        m2.require_kernel()?;
        if !(c_value > 0.0 && c_value.is_finite()) {
            return Err(Error::NonPositiveC(c_value));
        }
        Ok(Self { psi, m1, m2, c_value, axis })
    }

    fn window(&self, a: f64, b: f64) -> Result<Signal> {
        sample_lcst_window(&self.psi, &self.m1, &self.m2, a, b, self.axis)
    }

    fn norm(&self) -> f64 {
        normalization_constant(&self.m2, self.c_value)
    }
}

/// `K(p; q) = ⟨ψ_p, ψ_q⟩ / (2π|B₂|C)` with `p = (a, b)`, `q = (c, d)`.
pub fn reproducing_kernel(ctx: &KernelContext, p: (f64, f64), q: (f64, f64)) -> Result<Complex64> {
    let wp = ctx.window(p.0, p.1)?;
    let wq = ctx.window(q.0, q.1)?;
    Ok(wp.inner(&wq)? / ctx.norm())
}

/// Kernel matrix on a set of points.
pub fn kernel_gram(ctx: &KernelContext, points: &[(f64, f64)]) -> Result<DMatrix<Complex64>> {
    let windows: Vec<Signal> = points.iter().map(|&(a, b)| ctx.window(a, b)).collect::<Result<_>>()?;
    let n = points.len();
    let mut g = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = windows[i].inner(&windows[j])? / ctx.norm();
        }
    }
    Ok(g)
}

/// Smallest and largest eigenvalue of a Hermitian matrix.
pub fn eigen_extremes(g: &DMatrix<Complex64>) -> (f64, f64) {
    let eig = g.clone().symmetric_eigen();
    let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = eig.eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeResidual {
    pub row: usize,
    pub col: usize,
    pub value: Complex64,
    pub reproduced: Complex64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RangeReport {
    pub probes: Vec<ProbeResidual>,
    pub max_residual: f64,
    pub mean_residual: f64,
}

/// Uniform-in-index probe positions `(k + 1/2)·n/count`.
pub fn probe_indices(n: usize, count: usize) -> Vec<usize> {
    let count = count.min(n).max(1);
    (0..count).map(|k| (((k as f64 + 0.5) * n as f64 / count as f64) as usize).min(n - 1)).collect()
}

/// Compares `F(c,d)` with `(2π|B₂|C)^{-1} ∬ F(a,b) ⟨ψ_{a,b}, ψ_{c,d}⟩ da db/a` on a
/// `per_axis × per_axis` probe subsample. Residuals are relative to the plane RMS.
///
/// The double integral is evaluated as `⟨g, ψ_{c,d}⟩` with `g` the plane's
/// reconstruction on its time axis, which is the same discrete sum reordered.
pub fn range_check(plane: &CoefficientPlane, ctx: &KernelContext, per_axis: usize) -> Result<RangeReport> {
    let rec = lcst_inverse(plane, &ctx.psi, &ctx.m1, &ctx.m2, ctx.c_value)?;
    let grid = plane.grid();
    let rows = probe_indices(grid.scale_count(), per_axis);
    let cols = probe_indices(grid.shift_count(), per_axis);
    let rms = plane.rms();
    let axis = plane.axis();
    let pairs: Vec<(usize, usize)> = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).collect();
    let probes: Vec<ProbeResidual> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let w = sample_lcst_window(&ctx.psi, &ctx.m1, &ctx.m2, grid.scales()[i], grid.shift(j), axis)?;
            let reproduced = rec.inner(&w)?;
            let value = plane.get(i, j);
            let diff = (reproduced - value).norm();
            let residual = if rms > 0.0 { diff / rms } else { diff };
            Ok(ProbeResidual { row: i, col: j, value, reproduced, residual })
        })
        .collect::<Result<_>>()?;
    let max_residual = probes.iter().map(|p| p.residual).fold(0.0, f64::max);
    let mean_residual = probes.iter().map(|p| p.residual).sum::<f64>() / probes.len() as f64;
    Ok(RangeReport { probes, max_residual, mean_residual })
}

/// Kernel-sum form of the reproducing integral at one probe, evaluating every
/// kernel entry on `ctx.axis`. Cost grows with the full plane size.
pub fn reproduce_at(plane: &CoefficientPlane, ctx: &KernelContext, c: f64, d: f64) -> Result<Complex64> {
    let grid = plane.grid();
    let target = ctx.window(c, d)?;
    let db = grid.shift_step();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &a) in grid.scales().iter().enumerate() {
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..grid.shift_count() {
            let w = ctx.window(a, grid.shift(j))?;
            row += plane.get(i, j) * w.inner(&target)?;
        }
        acc += row * grid.scale_weight(i) * db;
    }
    Ok(acc / ctx.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> KernelContext {
        let f = ParamMatrix::fourier();
        let axis = TimeAxis::spanning(-20.0, 20.0, 4001).unwrap();
        KernelContext::new(WindowSpec::gaussian(1.0).unwrap(), f, f, 0.5, axis).unwrap()
    }

    #[test]
    fn kernel_diagonal_and_symmetry() {
        let c = ctx();
        let kpp = reproducing_kernel(&c, (1.0, 0.0), (1.0, 0.0)).unwrap();
        assert!(kpp.im.abs() < 1e-15 && kpp.re > 0.0);
        let kpq = reproducing_kernel(&c, (1.0, 0.0), (2.0, 1.0)).unwrap();
        let kqp = reproducing_kernel(&c, (2.0, 1.0), (1.0, 0.0)).unwrap();
        assert!((kpq - kqp.conj()).norm() < 1e-12);
    }

    #[test]
    fn gram_is_psd() {
        let c = ctx();
        let pts = [(0.5, 0.0), (1.0, 0.2), (1.0, 1.0), (2.0, -1.0), (4.0, 0.0), (0.7, 3.0)];
        let g = kernel_gram(&c, &pts).unwrap();
        let (min, max) = eigen_extremes(&g);
        assert!(min >= -1e-8 * max);
    }

    #[test]
    fn probe_layout() {
        assert_eq!(probe_indices(16, 4), vec![2, 6, 10, 14]);
        assert_eq!(probe_indices(3, 4), vec![0, 1, 2]);
    }
}
