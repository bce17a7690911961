use std::f64::consts::PI;

use lcst_core::lcst::{
    admissibility_constant, lcst_forward, lcst_forward_auto, lcst_inverse, normalization_constant,
    AdmissibilityVariant, ScaleRange,
};
use lcst_core::rkhs::{range_check, reproduce_at, KernelContext};
use lcst_core::window::WindowSpec;
use lcst_core::{Complex64, Error, ParamMatrix, ScaleShiftGrid, Signal, TimeAxis};

fn chirped_pulse(axis: TimeAxis, m1: &ParamMatrix, carrier: f64, width: f64) -> Signal {
    let k = m1.a() / m1.b();
    Signal::from_fn(axis, |t| Complex64::from_polar((-0.5 * (t / width).powi(2)).exp(), carrier * t - 0.5 * k * t * t))
        .unwrap()
}

#[test]
fn plancherel_constant_uses_second_matrix() {
    let m1 = ParamMatrix::fourier();
    let m2 = ParamMatrix::new(0.0, 2.0, -0.5, 0.0).unwrap();
    let psi = WindowSpec::gaussian(15.0).unwrap();
    let axis = TimeAxis::new(-16.0, 1.0 / 64.0, 2048).unwrap();
    let f = chirped_pulse(axis, &m1, 16.0, 0.5);
    let range = ScaleRange::new(0.01, 1000.0, 2048).unwrap();
    let c = admissibility_constant(&psi, &m1, &m2, &[0.5, 1.0, 2.0], range, AdmissibilityVariant::ModOverB1)
        .unwrap()
        .c_value;
    let grid = ScaleShiftGrid::new(1.0, 100.0, 64, -12.0, 3.0 / 64.0, 512).unwrap();
    let plane = lcst_forward_auto(&f, &psi, &m1, &m2, &grid).unwrap();
    let ratio = plane.energy() / (normalization_constant(&m2, c) * f.norm_sqr());
    assert!((ratio - 1.0).abs() < 0.02, "ratio {ratio}");
    assert_eq!(normalization_constant(&m2, c), 2.0 * PI * 2.0 * c);
}

#[test]
fn default_variant_diverges() {
    let f = ParamMatrix::fourier();
    let psi = WindowSpec::gaussian(1.0).unwrap();
    let range = ScaleRange::new(0.01, 1000.0, 1024).unwrap();
    let r = admissibility_constant(&psi, &f, &f, &[0.5, 1.0, 2.0], range, AdmissibilityVariant::default());
    assert!(matches!(r, Err(Error::NotAdmissible(_))));
}

#[test]
fn range_check_matches_kernel_sum() {
    let (m1, m2) = (ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap(), ParamMatrix::fourier());
    let psi = WindowSpec::gaussian(2.0).unwrap();
    let axis = TimeAxis::new(-4.0, 1.0 / 32.0, 256).unwrap();
    let f = chirped_pulse(axis, &m1, 6.0, 0.5);
    let grid = ScaleShiftGrid::new(1.0, 16.0, 8, -2.0, 0.25, 16).unwrap();
    let plane = lcst_forward(&f, &psi, &m1, &m2, &grid).unwrap();
    let ctx = KernelContext::new(psi, m1, m2, 0.7, axis).unwrap();
    let report = range_check(&plane, &ctx, 2).unwrap();
    for p in &report.probes {
        let direct = reproduce_at(&plane, &ctx, grid.scales()[p.row], grid.shift(p.col)).unwrap();
        assert!((direct - p.reproduced).norm() < 1e-10 * (1.0 + direct.norm()));
    }
}

#[test]
fn inverse_rejects_bad_constant() {
    let f = ParamMatrix::fourier();
    let psi = WindowSpec::gaussian(1.0).unwrap();
    let axis = TimeAxis::new(-4.0, 1.0 / 32.0, 256).unwrap();
    let s = chirped_pulse(axis, &f, 4.0, 0.5);
    let grid = ScaleShiftGrid::new(1.0, 8.0, 4, -2.0, 0.25, 16).unwrap();
    let plane = lcst_forward(&s, &psi, &f, &f, &grid).unwrap();
    assert_eq!(lcst_inverse(&plane, &psi, &f, &f, 0.0).unwrap_err(), Error::NonPositiveC(0.0));
}
