use std::fs;

use lcst_core::io::{
    gen_signal, meta_path, read_filter, read_plane, read_signal, write_filter, write_plane, write_signal, PlaneMeta,
    SignalKind,
};
use lcst_core::lcst::lcst_forward;
use lcst_core::mra::FilterSequence;
use lcst_core::window::WindowSpec;
use lcst_core::{Complex64, Error, ParamMatrix, ScaleShiftGrid, Signal};
use proptest::prelude::*;

fn small_plane() -> (lcst_core::CoefficientPlane, PlaneMeta) {
    let f = gen_signal(SignalKind::Gaussian { center: 0.0, width: 0.5, carrier: 8.0 }, -4.0, 1.0 / 32.0, 256).unwrap();
    let (m1, m2) = (ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap(), ParamMatrix::fourier());
    let psi = WindowSpec::gaussian(2.0).unwrap();
    let grid = ScaleShiftGrid::new(1.0, 16.0, 8, -2.0, 0.25, 16).unwrap();
    let plane = lcst_forward(&f, &psi, &m1, &m2, &grid).unwrap();
    let meta = PlaneMeta::new(&plane, m1, m2, psi.to_string());
    (plane, meta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn signal_round_trip_is_bit_exact(
        t0 in -100.0f64..100.0,
        dt in 1e-3f64..1.0,
        values in prop::collection::vec((-1e6f64..1e6, -1e-6f64..1e-6), 2..64),
    ) {
        let samples: Vec<Complex64> = values.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        let s = Signal::new(t0, dt, samples).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.csv");
        write_signal(&s, &path).unwrap();
        let back = read_signal(&path).unwrap();
        prop_assert_eq!(back.samples(), s.samples());
        prop_assert_eq!(back.t0(), s.t0());
        prop_assert!((back.dt() - s.dt()).abs() <= 1e-12 * s.dt());
    }
}

#[test]
fn plane_round_trip_is_bit_exact() {
    let (plane, meta) = small_plane();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    write_plane(&plane, &meta, &path).unwrap();
    let (back, back_meta) = read_plane(&path).unwrap();
    assert_eq!(back.values(), plane.values());
    assert_eq!(back.grid().scales(), plane.grid().scales());
    assert_eq!(back_meta, meta);
}

#[test]
fn plane_metadata_mismatch() {
    let (plane, meta) = small_plane();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    write_plane(&plane, &meta, &path).unwrap();
    let text = fs::read_to_string(meta_path(&path)).unwrap().replace("scale_count = 8", "scale_count = 4");
    fs::write(meta_path(&path), text).unwrap();
    assert!(matches!(read_plane(&path), Err(Error::MetaMismatch(_))));
}

#[test]
fn truncated_plane_is_a_parse_error() {
    let (plane, meta) = small_plane();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    write_plane(&plane, &meta, &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert!(matches!(read_plane(&path), Err(Error::Parse { .. })));
}

#[test]
fn shuffled_signal_rows_are_rejected() {
    let s = gen_signal(SignalKind::LinearChirp { rate: 1.0, carrier: 2.0 }, 0.0, 0.1, 16).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    write_signal(&s, &path).unwrap();
    let mut lines: Vec<String> = fs::read_to_string(&path).unwrap().lines().map(String::from).collect();
    lines.swap(3, 7);
    fs::write(&path, lines.join("\n")).unwrap();
    assert!(matches!(read_signal(&path), Err(Error::NonUniformGrid { .. })));
}

#[test]
fn filter_round_trip() {
    let f =
        FilterSequence::new(-1, vec![Complex64::new(0.25, -0.5), Complex64::new(1.0, 0.0), Complex64::new(0.0, 3.0)])
            .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    write_filter(&f, &path).unwrap();
    assert_eq!(read_filter(&path).unwrap(), f);
}

#[test]
fn missing_file_is_io_error() {
    assert!(matches!(read_signal(std::path::Path::new("/nonexistent/x.csv")), Err(Error::Io(_))));
}
