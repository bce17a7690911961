use lcst_core::lcst::lcst_window;
use lcst_core::lct::lct_forward;
use lcst_core::mra::{derive_wavelet_coeffs, period_grid, qmf_check, unitarity_check, FilterSequence};
use lcst_core::window::WindowSpec;
use lcst_core::{Complex64, ParamMatrix, Signal, TimeAxis};
use proptest::prelude::*;

/// Unimodular matrix with `|b|` bounded away from zero.
fn matrix() -> impl Strategy<Value = ParamMatrix> {
    (-1.0f64..1.0, 0.5f64..2.0, any::<bool>(), -1.0f64..1.0).prop_map(|(a, b, neg, d)| {
        let b = if neg { -b } else { b };
        ParamMatrix::new(a, b, (a * d - 1.0) / b, d).unwrap()
    })
}

fn close(x: &ParamMatrix, y: &ParamMatrix, tol: f64) -> bool {
    x.entries().iter().zip(y.entries()).all(|(p, q)| (p - q).abs() <= tol * (1.0 + q.abs()))
}

fn gaussian(axis: TimeAxis, center: f64, carrier: f64) -> Signal {
    Signal::from_fn(axis, |t| Complex64::from_polar((-0.5 * (t - center).powi(2)).exp(), carrier * t)).unwrap()
}

proptest! {
    #[test]
    fn compose_is_associative(m in matrix(), n in matrix(), p in matrix()) {
        let left = m.compose(&n).compose(&p);
        let right = m.compose(&n.compose(&p));
        prop_assert!(close(&left, &right, 1e-10));
    }

    #[test]
    fn compose_preserves_determinant(m in matrix(), n in matrix()) {
        prop_assert!((m.compose(&n).det() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn inverse_is_involutive(m in matrix()) {
        prop_assert_eq!(m.inverse().inverse(), m);
        prop_assert!(close(&m.compose(&m.inverse()), &ParamMatrix::identity(), 1e-10));
    }

    #[test]
    fn lct_is_linear(m in matrix(), alpha in -2.0f64..2.0, beta in -2.0f64..2.0, shift in -2.0f64..2.0) {
        let axis = TimeAxis::new(-8.0, 1.0 / 16.0, 256).unwrap();
        let f = gaussian(axis, 0.0, 1.0);
        let g = gaussian(axis, shift, -1.5);
        let combo = Signal::from_fn(axis, |t| {
            let k = ((t - axis.t0) / axis.dt).round() as usize;
            f.samples()[k] * alpha + g.samples()[k] * beta
        }).unwrap();
        let lhs = lct_forward(&combo, &m).unwrap();
        let (ff, gg) = (lct_forward(&f, &m).unwrap(), lct_forward(&g, &m).unwrap());
        let scale = lhs.peak().max(1.0);
        for k in 0..lhs.len() {
            let rhs = ff.samples()[k] * alpha + gg.samples()[k] * beta;
            prop_assert!((lhs.samples()[k] - rhs).norm() < 1e-12 * scale);
        }
    }

    #[test]
    fn window_modulus_is_dilated_window(
        m1 in matrix(), m2 in matrix(), a in 0.1f64..10.0, b in -5.0f64..5.0, t in -5.0f64..5.0,
    ) {
        let psi = WindowSpec::gaussian(1.0).unwrap();
        let w = lcst_window(&psi, &m1, &m2, a, b, t).unwrap();
        let expected = a * psi.eval(a * (t - b)).norm();
        prop_assert!((w.norm() - expected).abs() <= 1e-12 * (1.0 + expected));
    }

    #[test]
    fn haar_filter_identities_hold_for_any_matrices(m1 in matrix(), m2 in matrix()) {
        let grid = period_grid(128, &m1);
        let c = FilterSequence::haar();
        let d = derive_wavelet_coeffs(&c, &m1);
        prop_assert!(qmf_check(&c, &m1, &m2, &grid) < 1e-12);
        prop_assert!(unitarity_check(&c, &d, &m1, &m2, &grid) < 1e-12);
    }

    #[test]
    fn rotation_inverse_matches_negated_angle(alpha in 0.1f64..3.0) {
        let r = ParamMatrix::rotation(alpha).unwrap();
        let back = ParamMatrix::rotation(-alpha).unwrap();
        prop_assert!(close(&r.inverse(), &back, 1e-12));
    }
}
