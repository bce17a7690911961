//! Time and LCT-frequency window geometry.
//!
//! Center and radius are the `|w|²`-weighted first moment and the square root
//! of the central second moment.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lct::lct_forward_on;
use crate::types::{ParamMatrix, Signal, TimeAxis};
use crate::window::WindowSpec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowGeometry {
    pub center: f64,
    pub radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TFRectangle {
    pub time_interval: (f64, f64),
    pub spectral_interval: (f64, f64),
    pub area: f64,
}

/// Edge contribution to the second moment above which the moment is reported as divergent.
const EDGE_MASS_TOL: f64 = 1e-6;

pub fn window_geometry(w: &Signal) -> Result<WindowGeometry> {
    let axis = w.axis();
    let dens: Vec<f64> = w.samples().iter().map(|z| z.norm_sqr()).collect();
    let mass: f64 = dens.iter().enumerate().map(|(k, d)| d * axis.weight(k)).sum();
    if !(mass > 0.0) {
        return Err(Error::ZeroWindow);
    }
    let center = dens.iter().enumerate().map(|(k, d)| axis.at(k) * d * axis.weight(k)).sum::<f64>() / mass;
    let second: f64 = dens.iter().enumerate().map(|(k, d)| (axis.at(k) - center).powi(2) * d * axis.weight(k)).sum();
    let last = axis.n - 1;
    let edge = ((axis.at(0) - center).powi(2) * dens[0] + (axis.at(last) - center).powi(2) * dens[last]) * axis.dt;
    if second == 0.0 || edge > EDGE_MASS_TOL * second {
        return Err(Error::DivergentMoment(if second > 0.0 { edge / second } else { f64::INFINITY }));
    }
    Ok(WindowGeometry { center, radius: (second / mass).sqrt() })
}

/// Geometry of an analyzing window, sampled over its support with a 10% margin.
pub fn window_spec_geometry(psi: &WindowSpec) -> Result<WindowGeometry> {
    let (lo, hi) = psi.support();
    let pad = 0.1 * (hi - lo);
    let dt = psi.intrinsic_step().min((hi - lo) / 4096.0);
    let n = ((hi - lo + 2.0 * pad) / dt).ceil() as usize + 1;
    let axis = TimeAxis::new(lo - pad, dt, n)?;
    window_geometry(&psi.sample(axis)?)
}

pub fn scaled_window_geometry(g: WindowGeometry, a: f64, b: f64) -> Result<WindowGeometry> {
    if !(a > 0.0) {
        return Err(Error::NonPositiveScale(a));
    }
    Ok(WindowGeometry { center: g.center / a + b, radius: g.radius / a })
}

fn check_signs(m1: &ParamMatrix, m2: &ParamMatrix) -> Result<()> {
    m1.require_kernel()?;
    m2.require_kernel()?;
    if m1.b() * m2.b() <= 0.0 {
        return Err(Error::SignMismatch);
    }
    Ok(())
}

/// `Ψ = L^{M₂}{e^{it/B₁}ψ}` sampled on `xi_axis`.
pub fn spectral_profile(psi: &WindowSpec, m1: &ParamMatrix, m2: &ParamMatrix, xi_axis: &TimeAxis) -> Result<Signal> {
    m1.require_kernel()?;
    m2.require_kernel()?;
    let (lo, hi) = psi.support();
    let reach = lo.abs().max(hi.abs());
    let xi_reach = xi_axis.t0.abs().max(xi_axis.end().abs());
    let omega = 1.0 / m1.b().abs() + xi_reach / m2.b().abs() + (m2.a() / m2.b()).abs() * reach;
    let axis = psi.quadrature_axis(omega);
    let inv_b1 = 1.0 / m1.b();
    let modulated = Signal::from_fn(axis, |t| psi.eval(t) * Complex64::cis(t * inv_b1))?;
    lct_forward_on(&modulated, m2, xi_axis)
}

pub fn spectral_window_geometry(
    g: WindowGeometry,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    a: f64,
) -> Result<WindowGeometry> {
    if !(a > 0.0) {
        return Err(Error::NonPositiveScale(a));
    }
    check_signs(m1, m2)?;
    let k = m1.b() * a / m2.b();
    Ok(WindowGeometry { center: k * g.center, radius: k * g.radius })
}

/// `Δ_Ψ / E_Ψ`.
pub fn q_factor(g: WindowGeometry) -> Result<f64> {
    if g.center == 0.0 || g.center.abs() <= 1e-12 * g.radius.abs() {
        return Err(Error::ZeroCenter);
    }
    Ok(g.radius / g.center)
}

pub fn tf_rectangle(
    psi_geom: WindowGeometry,
    spectral_geom: WindowGeometry,
    m1: &ParamMatrix,
    m2: &ParamMatrix,
    a: f64,
    b: f64,
) -> Result<TFRectangle> {
    let t = scaled_window_geometry(psi_geom, a, b)?;
    let s = spectral_window_geometry(spectral_geom, m1, m2, a)?;
    let time_interval = (t.center - t.radius, t.center + t.radius);
    let spectral_interval = (s.center - s.radius, s.center + s.radius);
    let area = (time_interval.1 - time_interval.0) * (spectral_interval.1 - spectral_interval.0);
    Ok(TFRectangle { time_interval, spectral_interval, area })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcst::sample_lcst_window;

    fn gaussian_at(c: f64) -> Signal {
        let axis = TimeAxis::spanning(c - 12.0, c + 12.0, 4097).unwrap();
        Signal::from_fn(axis, |t| Complex64::new((-(t - c).powi(2) / 2.0).exp(), 0.0)).unwrap()
    }

    #[test]
    fn gaussian_moments() {
        let g = window_geometry(&gaussian_at(0.0)).unwrap();
        assert!(g.center.abs() < 1e-12);
        assert!((g.radius - 0.5f64.sqrt()).abs() < 1e-10);
        let g = window_geometry(&gaussian_at(3.0)).unwrap();
        assert!((g.center - 3.0).abs() < 1e-10);
        assert!((g.radius - 0.5f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn zero_and_truncated_windows() {
        let axis = TimeAxis::spanning(-1.0, 1.0, 64).unwrap();
        assert_eq!(window_geometry(&Signal::zeros(axis)), Err(Error::ZeroWindow));
        let flat = Signal::from_fn(axis, |_| Complex64::new(1.0, 0.0)).unwrap();
        assert!(matches!(window_geometry(&flat), Err(Error::DivergentMoment(_))));
    }

    #[test]
    fn scaled_examples() {
        let g = scaled_window_geometry(WindowGeometry { center: 0.0, radius: 1.0 }, 2.0, 3.0).unwrap();
        assert_eq!((g.center, g.radius), (3.0, 0.5));
        let g0 = WindowGeometry { center: 1.0, radius: 2.0 };
        assert_eq!(scaled_window_geometry(g0, 1.0, 0.0).unwrap(), g0);
        let g = scaled_window_geometry(WindowGeometry { center: 1.0, radius: 1.0 }, 4.0, -1.0).unwrap();
        assert_eq!((g.center, g.radius), (-0.75, 0.25));
        assert!(scaled_window_geometry(g0, 0.0, 0.0).is_err());
    }

    #[test]
    fn spectral_examples() {
        let f = ParamMatrix::fourier();
        let g = spectral_window_geometry(WindowGeometry { center: 1.0, radius: 0.5 }, &f, &f, 1.0).unwrap();
        assert_eq!((g.center, g.radius), (1.0, 0.5));
        let m1 = ParamMatrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.0, 1.0).unwrap();
        let g = spectral_window_geometry(WindowGeometry { center: 2.0, radius: 1.0 }, &m1, &m2, 4.0).unwrap();
        assert_eq!((g.center, g.radius), (4.0, 2.0));
        let neg = ParamMatrix::new(1.0, -1.0, 0.0, 1.0).unwrap();
        assert_eq!(spectral_window_geometry(g, &m1, &neg, 1.0), Err(Error::SignMismatch));
    }

    #[test]
    fn q_factor_examples() {
        assert_eq!(q_factor(WindowGeometry { center: 2.0, radius: 1.0 }).unwrap(), 0.5);
        assert_eq!(q_factor(WindowGeometry { center: 0.0, radius: 1.0 }), Err(Error::ZeroCenter));
    }

    #[test]
    fn rectangle_examples() {
        let f = ParamMatrix::fourier();
        let unit = WindowGeometry { center: 0.5, radius: 1.0 };
        for (a, b) in [(0.5, 0.0), (1.0, 2.0), (8.0, -3.0)] {
            assert!((tf_rectangle(unit, unit, &f, &f, a, b).unwrap().area - 4.0).abs() < 1e-12);
        }
        let m1 = ParamMatrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.0, 1.0).unwrap();
        let r = tf_rectangle(
            WindowGeometry { center: 0.0, radius: 0.5 },
            WindowGeometry { center: 1.0, radius: 2.0 },
            &m1,
            &m2,
            3.0,
            1.0,
        )
        .unwrap();
        assert!((r.area - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sampled_lcst_window_matches_scaled_geometry() {
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let base = window_spec_geometry(&psi).unwrap();
        let m1 = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let m2 = ParamMatrix::new(1.0, 2.0, 0.5, 2.0).unwrap();
        for (a, b) in [(1.0, 0.5), (2.0, -1.0)] {
            let axis = TimeAxis::spanning(b - 12.0, b + 12.0, 8193).unwrap();
            let w = sample_lcst_window(&psi, &m1, &m2, a, b, axis).unwrap();
            let g = window_geometry(&w).unwrap();
            let expected = scaled_window_geometry(base, a, b).unwrap();
            assert!((g.center - expected.center).abs() < 1e-4);
            assert!((g.radius - expected.radius).abs() < 1e-4);
        }
    }
}
