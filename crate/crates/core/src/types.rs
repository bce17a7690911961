//! Shared value types: LCT parameter matrices, sampled signals and scale-shift grids.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Determinant tolerance applied to user-supplied matrices.
pub const DET_INPUT_TOL: f64 = 1e-9;
/// Threshold below which `b` (or a sine) is treated as zero.
pub const ZERO_TOL: f64 = 1e-12;

/// A real 2x2 matrix `(a, b; c, d)` with `ad - bc = 1`, parameterizing an LCT.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl ParamMatrix {
    /// Validating constructor. `b == 0` is accepted but flagged by [`ParamMatrix::has_zero_b`];
    /// the kernel-based transforms refuse such matrices.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|x| x.is_finite()) {
            return Err(Error::NonFiniteMatrix);
        }
        let det = a * d - b * c;
        if (det - 1.0).abs() > DET_INPUT_TOL {
            return Err(Error::Determinant { det });
        }
        Ok(Self { a, b, c, d })
    }

    pub const fn identity() -> Self {
        Self { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// The Fourier-type matrix `(0, 1; -1, 0)`.
    pub const fn fourier() -> Self {
        Self { a: 0.0, b: 1.0, c: -1.0, d: 0.0 }
    }

    /// Rotation `(cos α, sin α; -sin α, cos α)`, the fractional Fourier case.
    pub fn rotation(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::NonFiniteMatrix);
        }
        let (s, c) = alpha.sin_cos();
        if s.abs() < ZERO_TOL {
            return Err(Error::DegenerateAngle { angle: alpha });
        }
        Ok(Self { a: c, b: s, c: -s, d: c })
    }

    /// Fresnel matrix `(1, b; 0, 1)`.
    pub fn fresnel(b: f64) -> Result<Self> {
        if !b.is_finite() {
            return Err(Error::NonFiniteMatrix);
        }
        if b.abs() < ZERO_TOL {
            return Err(Error::ZeroB);
        }
        Ok(Self { a: 1.0, b, c: 0.0, d: 1.0 })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn has_zero_b(&self) -> bool {
        self.b.abs() < ZERO_TOL
    }

    /// Errors with [`Error::ZeroB`] when the kernel path is unavailable.
    pub fn require_kernel(&self) -> Result<()> {
        if self.has_zero_b() {
            Err(Error::ZeroB)
        } else {
            Ok(())
        }
    }

    /// Matrix product `self * other`; `L^self L^other = L^(self*other)`.
    pub fn compose(&self, other: &ParamMatrix) -> ParamMatrix {
        ParamMatrix {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// Closed-form inverse `(d, -b; -c, a)`.
    pub fn inverse(&self) -> ParamMatrix {
        ParamMatrix { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }
}

/// Uniform sample positions `t0 + k*dt`, `k = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeAxis {
    pub t0: f64,
    pub dt: f64,
    pub n: usize,
}

impl TimeAxis {
    pub fn new(t0: f64, dt: f64, n: usize) -> Result<Self> {
        if !(t0.is_finite() && dt.is_finite()) {
            return Err(Error::InvalidGrid("non-finite axis parameters".into()));
        }
        if dt <= 0.0 {
            return Err(Error::InvalidGrid(format!("step must be positive, got {dt}")));
        }
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 samples, got {n}")));
        }
        Ok(Self { t0, dt, n })
    }

    /// Axis spanning `[lo, hi]` inclusive with `n` samples.
    pub fn spanning(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if n < 2 || !(hi > lo) {
            return Err(Error::InvalidGrid(format!("bad span [{lo}, {hi}] with {n} samples")));
        }
        Self::new(lo, (hi - lo) / (n - 1) as f64, n)
    }

    #[inline]
    pub fn at(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    pub fn end(&self) -> f64 {
        self.at(self.n - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.at(k))
    }

    /// Composite trapezoid weight of sample `k`.
    #[inline]
    pub fn weight(&self, k: usize) -> f64 {
        if k == 0 || k + 1 == self.n {
            0.5 * self.dt
        } else {
            self.dt
        }
    }
}

/// A uniformly sampled complex function of time.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    t0: f64,
    dt: f64,
    samples: Vec<Complex64>,
}

impl Signal {
    pub fn new(t0: f64, dt: f64, samples: Vec<Complex64>) -> Result<Self> {
        TimeAxis::new(t0, dt, samples.len()).map_err(|e| Error::InvalidSignal(e.to_string()))?;
        if samples.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidSignal("non-finite sample".into()));
        }
        Ok(Self { t0, dt, samples })
    }

    /// Samples `f(t_k)` on the given axis.
    pub fn from_fn(axis: TimeAxis, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let samples = axis.points().map(f).collect();
        Self::new(axis.t0, axis.dt, samples)
    }

    pub fn zeros(axis: TimeAxis) -> Self {
        Self { t0: axis.t0, dt: axis.dt, samples: vec![Complex64::new(0.0, 0.0); axis.n] }
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }
    pub fn dt(&self) -> f64 {
        self.dt
    }
    pub fn len(&self) -> usize {
        self.samples.len()
    }
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }
    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    pub fn axis(&self) -> TimeAxis {
        TimeAxis { t0: self.t0, dt: self.dt, n: self.samples.len() }
    }

    pub fn time(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    /// Trapezoid inner product `<self, other> = ∫ self · conj(other)`.
    /// Both signals must share the same axis.
    pub fn inner(&self, other: &Signal) -> Result<Complex64> {
        if !same_axis(&self.axis(), &other.axis()) {
            return Err(Error::InvalidSignal("inner product of signals on different axes".into()));
        }
        let axis = self.axis();
        Ok(self.samples.iter().zip(&other.samples).enumerate().map(|(k, (x, y))| x * y.conj() * axis.weight(k)).sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        let axis = self.axis();
        self.samples.iter().enumerate().map(|(k, z)| z.norm_sqr() * axis.weight(k)).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn peak(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Relative L² distance `‖self - other‖ / ‖other‖`.
    pub fn rel_l2_error(&self, reference: &Signal) -> Result<f64> {
        if !same_axis(&self.axis(), &reference.axis()) {
            return Err(Error::InvalidSignal("comparison of signals on different axes".into()));
        }
        let axis = self.axis();
        let num: f64 = self
            .samples
            .iter()
            .zip(&reference.samples)
            .enumerate()
            .map(|(k, (x, y))| (x - y).norm_sqr() * axis.weight(k))
            .sum();
        let den = reference.norm_sqr();
        if den == 0.0 {
            return Ok(num.sqrt());
        }
        Ok((num / den).sqrt())
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Signal {
        let samples = self.samples.iter().enumerate().map(|(k, &z)| f(self.time(k), z)).collect();
        Signal { t0: self.t0, dt: self.dt, samples }
    }
}

pub(crate) fn same_axis(x: &TimeAxis, y: &TimeAxis) -> bool {
    x.n == y.n && (x.t0 - y.t0).abs() <= 1e-12 * (1.0 + x.t0.abs()) && (x.dt - y.dt).abs() <= 1e-12 * x.dt
}

/// Geometric scales × uniform shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleShiftGrid {
    scales: Vec<f64>,
    shift_start: f64,
    shift_step: f64,
    shift_count: usize,
}

impl ScaleShiftGrid {
    /// `scale_count` scales from `a_min` to `a_max` inclusive (geometric) and
    /// `shift_count` shifts `shift_start + j * shift_step`.
    pub fn new(
        a_min: f64,
        a_max: f64,
        scale_count: usize,
        shift_start: f64,
        shift_step: f64,
        shift_count: usize,
    ) -> Result<Self> {
        if !(a_min.is_finite() && a_max.is_finite()) || a_min <= 0.0 {
            return Err(Error::InvalidGrid(format!("scales must be positive, got a_min = {a_min}")));
        }
        if scale_count == 0 || shift_count == 0 {
            return Err(Error::InvalidGrid("empty grid".into()));
        }
        if scale_count > 1 && !(a_max > a_min) {
            return Err(Error::InvalidGrid("a_max must exceed a_min".into()));
        }
        if !(shift_start.is_finite() && shift_step.is_finite()) || shift_step <= 0.0 {
            return Err(Error::InvalidGrid(format!("shift step must be positive, got {shift_step}")));
        }
        let scales =
            if scale_count == 1 {
                vec![a_min]
            } else {
                let ratio = a_max / a_min;
                (0..scale_count)
                    .map(|i| {
                        if i + 1 == scale_count {
                            a_max
                        } else {
                            a_min * ratio.powf(i as f64 / (scale_count - 1) as f64)
                        }
                    })
                    .collect()
            };
        Ok(Self { scales, shift_start, shift_step, shift_count })
    }

    /// Builds a grid from explicit scale values, which must be geometric.
    pub fn from_scales(scales: Vec<f64>, shift_start: f64, shift_step: f64, shift_count: usize) -> Result<Self> {
        if scales.is_empty() || scales.iter().any(|&a| !(a > 0.0) || !a.is_finite()) {
            return Err(Error::InvalidGrid("scales must be positive and finite".into()));
        }
        if scales.len() > 2 {
            let r0 = (scales[1] / scales[0]).ln();
            for w in scales.windows(2) {
                let r = (w[1] / w[0]).ln();
                if (r - r0).abs() > 1e-12 * (1.0 + r0.abs()) {
                    return Err(Error::InvalidGrid("scales are not geometrically spaced".into()));
                }
            }
        }
        if scales.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid("scales must be strictly increasing".into()));
        }
        if !(shift_start.is_finite() && shift_step.is_finite()) || shift_step <= 0.0 || shift_count == 0 {
            return Err(Error::InvalidGrid("bad shift axis".into()));
        }
        Ok(Self { scales, shift_start, shift_step, shift_count })
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }
    pub fn scale_count(&self) -> usize {
        self.scales.len()
    }
    pub fn shift_count(&self) -> usize {
        self.shift_count
    }
    pub fn shift_start(&self) -> f64 {
        self.shift_start
    }
    pub fn shift_step(&self) -> f64 {
        self.shift_step
    }

    #[inline]
    pub fn shift(&self, j: usize) -> f64 {
        self.shift_start + j as f64 * self.shift_step
    }

    pub fn shifts(&self) -> Vec<f64> {
        (0..self.shift_count).map(|j| self.shift(j)).collect()
    }

    /// Uniform step in `ln a`; zero for a single-scale grid.
    pub fn log_step(&self) -> f64 {
        if self.scales.len() < 2 {
            0.0
        } else {
            (self.scales[1] / self.scales[0]).ln()
        }
    }

    /// Trapezoid weight in `ln a` of scale `i` (the `da/a` measure).
    pub fn scale_weight(&self, i: usize) -> f64 {
        let h = self.log_step();
        if i == 0 || i + 1 == self.scales.len() {
            0.5 * h
        } else {
            h
        }
    }
}

/// LCST values on a scale-shift grid, rows = scales, columns = shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientPlane {
    grid: ScaleShiftGrid,
    axis: TimeAxis,
    values: Vec<Complex64>,
}

impl CoefficientPlane {
    /// `axis` is the time axis of the signal the plane was computed from;
    /// inverse transforms reconstruct onto it.
    pub fn new(grid: ScaleShiftGrid, axis: TimeAxis, values: Vec<Complex64>) -> Result<Self> {
        let expected = grid.scale_count() * grid.shift_count();
        if values.len() != expected {
            return Err(Error::InvalidGrid(format!("plane has {} values, grid needs {expected}", values.len())));
        }
        Ok(Self { grid, axis, values })
    }

    pub fn zeros(grid: ScaleShiftGrid, axis: TimeAxis) -> Self {
        let n = grid.scale_count() * grid.shift_count();
        Self { grid, axis, values: vec![Complex64::new(0.0, 0.0); n] }
    }

    pub fn grid(&self) -> &ScaleShiftGrid {
        &self.grid
    }
    pub fn axis(&self) -> TimeAxis {
        self.axis
    }
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }
    pub fn dims(&self) -> (usize, usize) {
        (self.grid.scale_count(), self.grid.shift_count())
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.grid.shift_count() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        let n = self.grid.shift_count();
        self.values[i * n + j] = z;
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        let n = self.grid.shift_count();
        &self.values[i * n..(i + 1) * n]
    }

    /// `Σ |S|² db da/a` with trapezoid weights in `ln a`.
    pub fn energy(&self) -> f64 {
        self.inner(self).re
    }

    /// Plane-domain inner product `Σ S1 conj(S2) db da/a`.
    pub fn inner(&self, other: &CoefficientPlane) -> Complex64 {
        let db = self.grid.shift_step();
        (0..self.grid.scale_count())
            .map(|i| {
                let w = self.grid.scale_weight(i) * db;
                let row: Complex64 = self.row(i).iter().zip(other.row(i)).map(|(x, y)| x * y.conj()).sum();
                row * w
            })
            .sum()
    }

    /// Root-mean-square modulus over all entries.
    pub fn rms(&self) -> f64 {
        let n = self.values.len() as f64;
        (self.values.iter().map(|z| z.norm_sqr()).sum::<f64>() / n).sqrt()
    }

    /// Largest entry-wise modulus difference relative to the largest modulus of `reference`.
    pub fn rel_max_diff(&self, reference: &CoefficientPlane) -> f64 {
        let scale = reference.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let diff = self.values.iter().zip(&reference.values).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }

    /// Relative Frobenius distance `‖self - reference‖_F / ‖reference‖_F`.
    pub fn rel_frobenius(&self, reference: &CoefficientPlane) -> f64 {
        let num: f64 = self.values.iter().zip(&reference.values).map(|(x, y)| (x - y).norm_sqr()).sum();
        let den: f64 = reference.values.iter().map(|z| z.norm_sqr()).sum();
        if den == 0.0 {
            num.sqrt()
        } else {
            (num / den).sqrt()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn assert_matrix(m: &ParamMatrix, e: [f64; 4], tol: f64) {
        for (x, y) in m.entries().iter().zip(e) {
            assert!((x - y).abs() <= tol, "{:?} vs {:?}", m.entries(), e);
        }
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn constructor_examples() {
        let f = ParamMatrix::new(0.0, 1.0, -1.0, 0.0).unwrap();
        assert!(!f.has_zero_b());
        let id = ParamMatrix::new(1.0, 0.0, 0.0, 1.0).unwrap();
        assert!(id.has_zero_b());
        assert_eq!(id.require_kernel(), Err(Error::ZeroB));
        assert!(matches!(ParamMatrix::new(1.0, 1.0, 1.0, 1.0), Err(Error::Determinant { .. })));
        assert!(matches!(ParamMatrix::new(f64::NAN, 1.0, 1.0, 1.0), Err(Error::NonFiniteMatrix)));
        // decimal input noise below the input tolerance is accepted
        assert!(ParamMatrix::new(0.7071067812, 0.7071067812, -0.7071067812, 0.7071067812).is_ok());
    }

    #[test]
    fn compose_examples() {
        let f = ParamMatrix::fourier();
        assert_matrix(&f.compose(&f), [-1.0, 0.0, 0.0, -1.0], 0.0);
        let m = ParamMatrix::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(ParamMatrix::identity().compose(&m), m);
        let r = ParamMatrix::rotation(PI / 4.0).unwrap();
        let r2 = ParamMatrix::rotation(PI / 2.0).unwrap();
        assert_matrix(&r.compose(&r), r2.entries(), 1e-12);
    }

    #[test]
    fn inverse_examples() {
        assert_matrix(&ParamMatrix::fourier().inverse(), [0.0, -1.0, 1.0, 0.0], 0.0);
        assert_eq!(ParamMatrix::identity().inverse(), ParamMatrix::identity());
        let m = ParamMatrix::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert_matrix(&m.inverse(), [1.0, -1.0, -1.0, 2.0], 0.0);
        assert_matrix(&m.compose(&m.inverse()), [1.0, 0.0, 0.0, 1.0], 1e-12);
    }

    #[test]
    fn rotation_examples() {
        assert_matrix(&ParamMatrix::rotation(PI / 2.0).unwrap(), [0.0, 1.0, -1.0, 0.0], 1e-15);
        let h = 2f64.sqrt() / 2.0;
        assert_matrix(&ParamMatrix::rotation(PI / 4.0).unwrap(), [h, h, -h, h], 1e-15);
        assert!(matches!(ParamMatrix::rotation(0.0), Err(Error::DegenerateAngle { .. })));
    }

    #[test]
    fn signal_validation() {
        let z = Complex64::new(0.0, 0.0);
        assert!(Signal::new(0.0, 0.1, vec![z]).is_err());
        assert!(Signal::new(0.0, 0.0, vec![z, z]).is_err());
        assert!(Signal::new(0.0, 0.1, vec![z, Complex64::new(f64::INFINITY, 0.0)]).is_err());
        let s = Signal::new(0.0, 0.5, vec![Complex64::new(1.0, 0.0); 3]).unwrap();
        // trapezoid: 0.25 + 0.5 + 0.25
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn grid_is_geometric() {
        let g = ScaleShiftGrid::new(0.25, 4.0, 32, -8.0, 0.5, 32).unwrap();
        let r0 = g.scales()[1] / g.scales()[0];
        for w in g.scales().windows(2) {
            assert!((w[1] / w[0] - r0).abs() < 1e-12);
        }
        assert_eq!(g.scales()[31], 4.0);
        assert!(ScaleShiftGrid::new(0.0, 4.0, 32, -8.0, 0.5, 32).is_err());
        assert!(ScaleShiftGrid::from_scales(vec![1.0, 2.0, 5.0], 0.0, 1.0, 4).is_err());
    }
}
