//! Signal generation and CSV file formats.
//!
//! Signals: header `t,re,im`. Planes: header `a,b,re,im`, scales outer, shifts inner,
//! with a `<path>.meta` sidecar of `key = value` lines. Floats are written with 17
//! significant digits so that values survive a write/read round trip exactly.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mra::FilterSequence;
use crate::types::{CoefficientPlane, ParamMatrix, ScaleShiftGrid, Signal, TimeAxis};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignalKind {
    /// `e^{-(t-center)²/(2 width²)} e^{i carrier t}`.
    Gaussian { center: f64, width: f64, carrier: f64 },
    /// `e^{i(carrier t + rate t²/2)}`.
    LinearChirp { rate: f64, carrier: f64 },
    /// `e^{-iAt²/(2B)}`.
    LcChirp(ParamMatrix),
}

pub fn gen_signal(kind: SignalKind, t0: f64, dt: f64, n: usize) -> Result<Signal> {
    let axis = TimeAxis::new(t0, dt, n).map_err(|e| Error::BadParams(e.to_string()))?;
    match kind {
        SignalKind::Gaussian { center, width, carrier } => {
            if !(width > 0.0 && width.is_finite()) || !center.is_finite() || !carrier.is_finite() {
                return Err(Error::BadParams(format!(
                    "gaussian needs finite center and positive width, got width {width}"
                )));
            }
            Signal::from_fn(axis, |t| {
                let u = (t - center) / width;
                Complex64::from_polar((-0.5 * u * u).exp(), carrier * t)
            })
        }
        SignalKind::LinearChirp { rate, carrier } => {
            if !(rate.is_finite() && carrier.is_finite()) {
                return Err(Error::BadParams("chirp parameters must be finite".into()));
            }
            Signal::from_fn(axis, |t| Complex64::cis(carrier * t + 0.5 * rate * t * t))
        }
        SignalKind::LcChirp(m) => {
            if m.has_zero_b() {
                return Err(Error::BadParams("lc_chirp needs a matrix with b != 0".into()));
            }
            let k = m.a() / m.b();
            Signal::from_fn(axis, |t| Complex64::cis(-0.5 * k * t * t))
        }
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_f64(field: &str, line: usize) -> Result<f64> {
    field.trim().parse::<f64>().map_err(|e| Error::Parse { line, msg: format!("bad number '{}': {e}", field.trim()) })
}

fn fields(text: &str, line: usize, n: usize) -> Result<Vec<&str>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != n {
        return Err(Error::Parse { line, msg: format!("expected {n} fields, found {}", parts.len()) });
    }
    Ok(parts)
}

fn expect_header(lines: &mut std::iter::Enumerate<std::str::Lines<'_>>, header: &str) -> Result<()> {
    match lines.next() {
        Some((_, h)) if h.trim() == header => Ok(()),
        _ => Err(Error::Parse { line: 1, msg: format!("missing header '{header}'") }),
    }
}

pub fn write_signal(s: &Signal, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "t,re,im")?;
    for (k, z) in s.samples().iter().enumerate() {
        writeln!(w, "{},{},{}", fmt_f64(s.time(k)), fmt_f64(z.re), fmt_f64(z.im))?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_signal(text: &str) -> Result<Signal> {
    let mut lines = text.lines().enumerate();
    expect_header(&mut lines, "t,re,im")?;
    let mut ts = Vec::new();
    let mut samples = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let f = fields(raw, line, 3)?;
        ts.push((parse_f64(f[0], line)?, line));
        samples.push(Complex64::new(parse_f64(f[1], line)?, parse_f64(f[2], line)?));
    }
    if ts.len() < 2 {
        return Err(Error::Parse { line: ts.len() + 2, msg: "need at least two samples".into() });
    }
    let t0 = ts[0].0;
    let dt = (ts[ts.len() - 1].0 - t0) / (ts.len() - 1) as f64;
    for w in ts.windows(2) {
        let step = w[1].0 - w[0].0;
        if !(dt > 0.0) || (step - dt).abs() > 1e-9 * dt {
            return Err(Error::NonUniformGrid { line: w[1].1 });
        }
    }
    Signal::new(t0, dt, samples)
}

pub fn read_signal(path: &Path) -> Result<Signal> {
    parse_signal(&fs::read_to_string(path)?)
}

/// Sidecar metadata for a coefficient plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneMeta {
    pub m1: ParamMatrix,
    pub m2: ParamMatrix,
    pub window: String,
    pub axis: TimeAxis,
    pub scale_count: usize,
    pub shift_start: f64,
    pub shift_step: f64,
    pub shift_count: usize,
}

impl PlaneMeta {
    pub fn new(plane: &CoefficientPlane, m1: ParamMatrix, m2: ParamMatrix, window: String) -> Self {
        let g = plane.grid();
        Self {
            m1,
            m2,
            window,
            axis: plane.axis(),
            scale_count: g.scale_count(),
            shift_start: g.shift_start(),
            shift_step: g.shift_step(),
            shift_count: g.shift_count(),
        }
    }

    fn render(&self) -> String {
        let m = |x: &ParamMatrix| x.entries().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let mut s = String::new();
        s += &format!("m1 = {}\n", m(&self.m1));
        s += &format!("m2 = {}\n", m(&self.m2));
        s += &format!("window = {}\n", self.window);
        s += &format!("t0 = {}\n", self.axis.t0);
        s += &format!("dt = {}\n", self.axis.dt);
        s += &format!("n = {}\n", self.axis.n);
        s += &format!("scale_count = {}\n", self.scale_count);
        s += &format!("shift_start = {}\n", self.shift_start);
        s += &format!("shift_step = {}\n", self.shift_step);
        s += &format!("shift_count = {}\n", self.shift_count);
        s
    }

    fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let (k, v) = raw
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: i + 1, msg: "expected 'key = value'".into() })?;
            map.insert(k.trim().to_string(), (v.trim().to_string(), i + 1));
        }
        let get = |key: &str| -> Result<&(String, usize)> {
            map.get(key).ok_or_else(|| Error::MetaMismatch(format!("missing key '{key}'")))
        };
        let num = |key: &str| -> Result<f64> {
            let (v, line) = get(key)?;
            parse_f64(v, *line)
        };
        let count = |key: &str| -> Result<usize> {
            let (v, line) = get(key)?;
            v.parse::<usize>().map_err(|e| Error::Parse { line: *line, msg: format!("{key}: {e}") })
        };
        let matrix = |key: &str| -> Result<ParamMatrix> {
            let (v, _) = get(key)?;
            parse_matrix(v)
        };
        Ok(Self {
            m1: matrix("m1")?,
            m2: matrix("m2")?,
            window: get("window")?.0.clone(),
            axis: TimeAxis::new(num("t0")?, num("dt")?, count("n")?)?,
            scale_count: count("scale_count")?,
            shift_start: num("shift_start")?,
            shift_step: num("shift_step")?,
            shift_count: count("shift_count")?,
        })
    }
}

/// Parses `A,B,C,D`.
pub fn parse_matrix(text: &str) -> Result<ParamMatrix> {
    let v: Vec<f64> = text
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::BadParams(format!("matrix '{text}': {e}")))?;
    match v[..] {
        [a, b, c, d] => ParamMatrix::new(a, b, c, d),
        _ => Err(Error::BadParams(format!("matrix needs 4 entries, got '{text}'"))),
    }
}

pub fn meta_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}

pub fn write_plane(plane: &CoefficientPlane, meta: &PlaneMeta, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "a,b,re,im")?;
    let g = plane.grid();
    for (i, &a) in g.scales().iter().enumerate() {
        for j in 0..g.shift_count() {
            let z = plane.get(i, j);
            writeln!(w, "{},{},{},{}", fmt_f64(a), fmt_f64(g.shift(j)), fmt_f64(z.re), fmt_f64(z.im))?;
        }
    }
    w.flush()?;
    fs::write(meta_path(path), meta.render())?;
    Ok(())
}

pub fn read_plane(path: &Path) -> Result<(CoefficientPlane, PlaneMeta)> {
    let meta = PlaneMeta::parse(&fs::read_to_string(meta_path(path))?)?;
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    expect_header(&mut lines, "a,b,re,im")?;
    let expected = meta.scale_count * meta.shift_count;
    let mut scales: Vec<f64> = Vec::new();
    let mut values = Vec::with_capacity(expected);
    let mut last_line = 1;
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let f = fields(raw, line, 4)?;
        let a = parse_f64(f[0], line)?;
        let b = parse_f64(f[1], line)?;
        if values.len() % meta.shift_count.max(1) == 0 {
            scales.push(a);
        }
        let j = values.len() % meta.shift_count.max(1);
        let b_expected = meta.shift_start + j as f64 * meta.shift_step;
        if (b - b_expected).abs() > 1e-9 * (1.0 + b_expected.abs()) {
            return Err(Error::MetaMismatch(format!("line {line}: shift {b} does not match metadata")));
        }
        values.push(Complex64::new(parse_f64(f[2], line)?, parse_f64(f[3], line)?));
        last_line = line;
    }
    if values.len() > expected || scales.len() != meta.scale_count && values.len() == expected {
        return Err(Error::MetaMismatch(format!(
            "file has {} rows, metadata describes {} scales x {} shifts",
            values.len(),
            meta.scale_count,
            meta.shift_count
        )));
    }
    if values.len() < expected {
        return Err(Error::Parse { line: last_line + 1, msg: "unexpected end of plane file".into() });
    }
    let grid = ScaleShiftGrid::from_scales(scales, meta.shift_start, meta.shift_step, meta.shift_count)?;
    let plane = CoefficientPlane::new(grid, meta.axis, values)?;
    Ok((plane, meta))
}

pub fn write_filter(f: &FilterSequence, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "n,re,im")?;
    for (n, z) in f.iter() {
        writeln!(w, "{n},{},{}", fmt_f64(z.re), fmt_f64(z.im))?;
    }
    w.flush()?;
    Ok(())
}

/// Filter file: header `n,re,im`, consecutive indices.
pub fn read_filter(path: &Path) -> Result<FilterSequence> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    expect_header(&mut lines, "n,re,im")?;
    let mut offset = None;
    let mut coeffs = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let f = fields(raw, line, 3)?;
        let n: i64 = f[0].trim().parse().map_err(|e| Error::Parse { line, msg: format!("bad index: {e}") })?;
        let start = *offset.get_or_insert(n);
        if n != start + coeffs.len() as i64 {
            return Err(Error::Parse { line, msg: "filter indices must be consecutive".into() });
        }
        coeffs.push(Complex64::new(parse_f64(f[1], line)?, parse_f64(f[2], line)?));
    }
    FilterSequence::new(offset.unwrap_or(0), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_examples() {
        let g =
            gen_signal(SignalKind::Gaussian { center: 0.0, width: 1.0, carrier: 0.0 }, -8.0, 1.0 / 64.0, 1024).unwrap();
        assert_eq!(g.samples()[512], Complex64::new(1.0, 0.0));
        let c = gen_signal(SignalKind::LinearChirp { rate: 0.0, carrier: 0.0 }, 0.0, 0.1, 8).unwrap();
        assert!(c.samples().iter().all(|z| *z == Complex64::new(1.0, 0.0)));
        let m = ParamMatrix::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let l = gen_signal(SignalKind::LcChirp(m), 0.0, 1.0, 3).unwrap();
        assert!((l.samples()[2] - Complex64::cis(-2.0)).norm() < 1e-15);
        assert!(gen_signal(SignalKind::LcChirp(ParamMatrix::identity()), 0.0, 1.0, 3).is_err());
        assert!(gen_signal(SignalKind::LinearChirp { rate: 0.0, carrier: 0.0 }, 0.0, 0.1, 1).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_signal("0,1,0\n1,1,0\n"), Err(Error::Parse { line: 1, .. })));
        let shuffled = "t,re,im\n0,1,0\n2,1,0\n1,1,0\n3,1,0\n";
        assert!(matches!(parse_signal(shuffled), Err(Error::NonUniformGrid { .. })));
        assert!(matches!(parse_signal("t,re,im\n0,1\n1,1,0\n"), Err(Error::Parse { line: 2, .. })));
    }
}
