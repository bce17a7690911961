use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lcst_core::io::{self, PlaneMeta, SignalKind};
use lcst_core::lcst::{self, AdmissibilityVariant, ScaleRange, SpecialCase};
use lcst_core::mra::{self, FilterSequence, ScalingFunction};
use lcst_core::rkhs::{self, KernelContext};
use lcst_core::tfa;
use lcst_core::threads::with_env_pool;
use lcst_core::window::WindowSpec;
use lcst_core::{lct, Error, ParamMatrix, Result, ScaleShiftGrid, TimeAxis};

#[derive(Parser)]
#[command(name = "lcst", version, about = "Linear canonical Stockwell transform toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a test signal.
    Gen(GenArgs),
    /// Linear canonical transform of a signal.
    Lct(LctArgs),
    /// Forward LCST of a signal into a coefficient plane.
    Lcst(LcstArgs),
    /// Reconstruct a signal from a coefficient plane.
    Ilcst(IlcstArgs),
    /// Admissibility constant of a window.
    Admissibility(AdmissibilityArgs),
    /// Time and spectral window geometry.
    Tfwindow(TfwindowArgs),
    /// Reproducing kernel values and range checks.
    RkhsKernel(RkhsArgs),
    /// Multiresolution analysis tools.
    #[command(subcommand)]
    Mra(MraCommand),
}

#[derive(Args, Clone)]
struct MatrixArgs {
    /// classical | frst:ALPHA,BETA | fresnel:B1,B2
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["m1", "m2"])]
    preset: Option<String>,
    /// First matrix as A,B,C,D.
    #[arg(long, allow_hyphen_values = true, requires = "m2")]
    m1: Option<String>,
    /// Second matrix as A,B,C,D.
    #[arg(long, allow_hyphen_values = true, requires = "m1")]
    m2: Option<String>,
}

impl MatrixArgs {
    fn resolve(&self) -> Result<(ParamMatrix, ParamMatrix)> {
        match (&self.preset, &self.m1, &self.m2) {
            (Some(p), _, _) => lcst::special_case(SpecialCase::parse(p)?),
            (None, Some(a), Some(b)) => Ok((io::parse_matrix(a)?, io::parse_matrix(b)?)),
            _ => lcst::special_case(SpecialCase::Classical),
        }
    }
}

#[derive(Args, Clone)]
struct ConstantArgs {
    /// Admissibility constant; computed from the window when omitted.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value = "mod-1-over-B1a")]
    variant: String,
    /// Comma-separated probe frequencies.
    #[arg(long, default_value = "0.5,1,2", allow_hyphen_values = true)]
    xi: String,
    /// Integration range MIN:MAX:STEPS over the scale.
    #[arg(long, default_value = "0.01:1000:2048")]
    a_range: String,
}

impl ConstantArgs {
    fn report(&self, psi: &WindowSpec, m1: &ParamMatrix, m2: &ParamMatrix) -> Result<lcst::AdmissibilityReport> {
        let probes = parse_list(&self.xi)?;
        let (lo, hi, n) = parse_triple(&self.a_range)?;
        let variant = AdmissibilityVariant::parse(&self.variant)?;
        lcst::admissibility_constant(psi, m1, m2, &probes, ScaleRange::new(lo, hi, n)?, variant)
    }

    fn value(&self, psi: &WindowSpec, m1: &ParamMatrix, m2: &ParamMatrix) -> Result<f64> {
        match self.c {
            Some(c) => Ok(c),
            None => Ok(self.report(psi, m1, m2)?.c_value),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gaussian,
    LinearChirp,
    LcChirp,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    center: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    width: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    carrier: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    rate: f64,
    /// Matrix for lc-chirp as A,B,C,D.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t0: f64,
    #[arg(long, allow_hyphen_values = true)]
    dt: f64,
    #[arg(long)]
    n: usize,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Direct,
    Fast,
}

#[derive(Args)]
struct LctArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    #[arg(long)]
    inverse: bool,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct LcstArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    matrices: MatrixArgs,
    /// gaussian:SIGMA | hann:SUPPORT | haar
    #[arg(long, default_value = "gaussian:1")]
    window: String,
    /// Geometric scales MIN:MAX:COUNT, both ends included.
    #[arg(long)]
    scales: String,
    /// Shifts MIN:MAX:COUNT with step (MAX-MIN)/COUNT.
    #[arg(long, allow_hyphen_values = true)]
    shifts: String,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct IlcstArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    constant: ConstantArgs,
    #[arg(long)]
    direct: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct AdmissibilityArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    #[arg(long, default_value = "gaussian:1")]
    window: String,
    #[command(flatten)]
    constant: ConstantArgs,
}

#[derive(Args)]
struct TfwindowArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    #[arg(long, default_value = "gaussian:1")]
    window: String,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    b: f64,
    /// Spectral sampling LO:HI:COUNT; chosen from the window when omitted.
    #[arg(long, allow_hyphen_values = true)]
    xi_range: Option<String>,
}

#[derive(Args)]
struct RkhsArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    #[arg(long, default_value = "gaussian:1")]
    window: String,
    #[command(flatten)]
    constant: ConstantArgs,
    /// First point as A,B.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Second point as A,B.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Check that this plane lies in the LCST range; matrices and window come from its metadata.
    #[arg(long)]
    plane: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    probes: usize,
}

#[derive(Subcommand)]
enum MraCommand {
    /// Riesz bounds of the integer translates.
    Riesz(RieszArgs),
    /// Orthonormalize the scaling function spectrum.
    Orthonormalize(RieszArgs),
    /// Quadrature-mirror condition of a low-pass filter.
    Qmf(FilterArgs),
    /// Wavelet filter from a low-pass filter.
    DeriveWavelet(DeriveArgs),
    /// Unitarity and cross-orthogonality of a filter pair.
    Unitarity(UnitarityArgs),
    /// Gram matrix of scaling translates at one level.
    Gram(GramArgs),
}

#[derive(Args)]
struct RieszArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    #[arg(long, default_value = "gaussian:0.5")]
    window: String,
    #[arg(long, default_value_t = 256)]
    u_points: usize,
    /// Periodization range LO:HI.
    #[arg(long, default_value = "-16:16", allow_hyphen_values = true)]
    k_range: String,
}

#[derive(Args)]
struct FilterArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    /// `haar` or a filter file with header n,re,im.
    #[arg(long, default_value = "haar")]
    filter: String,
    #[arg(long, default_value_t = 256)]
    u_points: usize,
}

#[derive(Args)]
struct DeriveArgs {
    #[command(flatten)]
    filter: FilterArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct UnitarityArgs {
    #[command(flatten)]
    filter: FilterArgs,
    /// Wavelet filter file; derived from the low-pass filter when omitted.
    #[arg(long)]
    wavelet: Option<PathBuf>,
}

#[derive(Args)]
struct GramArgs {
    #[command(flatten)]
    matrices: MatrixArgs,
    #[arg(long, default_value = "haar")]
    window: String,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    level: i32,
    /// Translate range LO:HI.
    #[arg(long, default_value = "0:3", allow_hyphen_values = true)]
    n_range: String,
}

fn parse_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::BadParams(format!("number list '{text}': {e}")))
}

fn parse_triple(text: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = |e: String| Error::BadParams(format!("range '{text}': {e}"));
    match parts[..] {
        [lo, hi, n] => Ok((
            lo.trim().parse().map_err(|e| bad(format!("{e}")))?,
            hi.trim().parse().map_err(|e| bad(format!("{e}")))?,
            n.trim().parse().map_err(|e| bad(format!("{e}")))?,
        )),
        _ => Err(bad("expected MIN:MAX:COUNT".into())),
    }
}

fn parse_int_pair(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::BadParams(format!("range '{text}': expected LO:HI integers"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn parse_point(text: &str) -> Result<(f64, f64)> {
    match parse_list(text)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::BadParams(format!("point '{text}': expected A,B"))),
    }
}

fn shift_grid(scales: &str, shifts: &str) -> Result<ScaleShiftGrid> {
    let (a_lo, a_hi, na) = parse_triple(scales)?;
    let (b_lo, b_hi, nb) = parse_triple(shifts)?;
    if nb == 0 || b_hi.partial_cmp(&b_lo) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidGrid(format!("bad shift range '{shifts}'")));
    }
    ScaleShiftGrid::new(a_lo, a_hi, na, b_lo, (b_hi - b_lo) / nb as f64, nb)
}

fn matrix_json(m: &ParamMatrix) -> Value {
    json!(m.entries())
}

fn load_filter(spec: &str) -> Result<FilterSequence> {
    if spec == "haar" {
        Ok(FilterSequence::haar())
    } else {
        io::read_filter(&PathBuf::from(spec))
    }
}

fn filter_json(f: &FilterSequence) -> Value {
    Value::Array(f.iter().map(|(n, z)| json!([n, z.re, z.im])).collect())
}

/// Quadrature axis covering `ψ_p` and `ψ_q`.
fn kernel_axis(psi: &WindowSpec, m1: &ParamMatrix, m2: &ParamMatrix, pts: &[(f64, f64)]) -> Result<TimeAxis> {
    let (lo, hi) = psi.support();
    let t_lo = pts.iter().map(|&(a, b)| b + lo / a).fold(f64::INFINITY, f64::min);
    let t_hi = pts.iter().map(|&(a, b)| b + hi / a).fold(f64::NEG_INFINITY, f64::max);
    let a_max = pts.iter().map(|p| p.0).fold(0.0, f64::max);
    let reach = t_lo.abs().max(t_hi.abs());
    let omega = (m1.a() / m1.b()).abs() * reach + (m2.a() / m2.b()).abs() * a_max * (hi - lo) + a_max / m1.b().abs();
    let mut dt = psi.intrinsic_step() / a_max;
    if omega > 0.0 {
        dt = dt.min(PI / (4.0 * omega));
    }
    let n = ((t_hi - t_lo) / dt).ceil() as usize + 1;
    TimeAxis::new(t_lo, dt, n)
}

fn run(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Gen(g) => {
            let kind = match g.kind {
                Kind::Gaussian => SignalKind::Gaussian { center: g.center, width: g.width, carrier: g.carrier },
                Kind::LinearChirp => SignalKind::LinearChirp { rate: g.rate, carrier: g.carrier },
                Kind::LcChirp => {
                    let m = g.m.as_deref().ok_or_else(|| Error::BadParams("lc-chirp needs --m".into()))?;
                    SignalKind::LcChirp(io::parse_matrix(m)?)
                }
            };
            let s = io::gen_signal(kind, g.t0, g.dt, g.n)?;
            io::write_signal(&s, &g.output)?;
            Ok(json!({"command": "gen", "n": s.len(), "t0": s.t0(), "dt": s.dt(), "norm": s.norm()}))
        }
        Command::Lct(l) => {
            let f = io::read_signal(&l.input)?;
            let m = io::parse_matrix(&l.m)?;
            let fast = match l.method {
                Method::Fast => true,
                Method::Direct => false,
                Method::Auto => f.len().is_power_of_two(),
            };
            let out = match (l.inverse, fast) {
                (false, false) => lct::lct_forward(&f, &m)?,
                (false, true) => lct::lct_forward_fast(&f, &m)?,
                (true, false) => lct::lct_inverse(&f, &m)?,
                (true, true) => lct::lct_inverse_fast(&f, &m)?,
            };
            io::write_signal(&out, &l.output)?;
            Ok(json!({
                "command": "lct", "inverse": l.inverse, "fast": fast,
                "n": out.len(), "input_norm": f.norm(), "output_norm": out.norm(),
            }))
        }
        Command::Lcst(l) => {
            let f = io::read_signal(&l.input)?;
            let (m1, m2) = l.matrices.resolve()?;
            let psi = WindowSpec::parse(&l.window)?;
            let grid = shift_grid(&l.scales, &l.shifts)?;
            let plane = match l.method {
                Method::Auto => lcst::lcst_forward_auto(&f, &psi, &m1, &m2, &grid)?,
                Method::Direct => lcst::lcst_forward(&f, &psi, &m1, &m2, &grid)?,
                Method::Fast => lcst::lcst_forward_fast(&f, &psi, &m1, &m2, &grid)?,
            };
            let meta = PlaneMeta::new(&plane, m1, m2, psi.to_string());
            io::write_plane(&plane, &meta, &l.output)?;
            let (rows, cols) = plane.dims();
            Ok(json!({
                "command": "lcst", "scales": rows, "shifts": cols,
                "m1": matrix_json(&m1), "m2": matrix_json(&m2), "window": psi.to_string(),
                "energy": plane.energy(),
            }))
        }
        Command::Ilcst(l) => {
            let (plane, meta) = io::read_plane(&l.input)?;
            let psi = WindowSpec::parse(&meta.window)?;
            let c = l.constant.value(&psi, &meta.m1, &meta.m2)?;
            let f = if l.direct {
                lcst::lcst_inverse_direct(&plane, &psi, &meta.m1, &meta.m2, c)?
            } else {
                lcst::lcst_inverse(&plane, &psi, &meta.m1, &meta.m2, c)?
            };
            io::write_signal(&f, &l.output)?;
            Ok(json!({"command": "ilcst", "c": c, "n": f.len(), "norm": f.norm()}))
        }
        Command::Admissibility(a) => {
            let (m1, m2) = a.matrices.resolve()?;
            let psi = WindowSpec::parse(&a.window)?;
            let r = a.constant.report(&psi, &m1, &m2)?;
            Ok(json!({
                "command": "admissibility", "variant": r.variant.name(), "c": r.c_value,
                "xi": r.xi_probes, "values": r.per_probe_values, "relative_spread": r.relative_spread,
                "normalization": lcst::normalization_constant(&m2, r.c_value),
            }))
        }
        Command::Tfwindow(t) => {
            let (m1, m2) = t.matrices.resolve()?;
            let psi = WindowSpec::parse(&t.window)?;
            let g = tfa::window_spec_geometry(&psi)?;
            let xi_axis = match &t.xi_range {
                Some(r) => {
                    let (lo, hi, n) = parse_triple(r)?;
                    TimeAxis::spanning(lo, hi, n)?
                }
                None => {
                    let center = m2.b() / m1.b();
                    let half = 8.0 * m2.b().abs() / g.radius;
                    TimeAxis::spanning(center - half, center + half, 4097)?
                }
            };
            let spectrum = tfa::spectral_profile(&psi, &m1, &m2, &xi_axis)?;
            let sg = tfa::window_geometry(&spectrum)?;
            let scaled = tfa::scaled_window_geometry(g, t.a, t.b)?;
            let spectral = tfa::spectral_window_geometry(sg, &m1, &m2, t.a)?;
            let rect = tfa::tf_rectangle(g, sg, &m1, &m2, t.a, t.b)?;
            let q = tfa::q_factor(spectral).ok();
            Ok(json!({
                "command": "tfwindow",
                "window": {"center": g.center, "radius": g.radius},
                "spectrum": {"center": sg.center, "radius": sg.radius},
                "scaled": {"center": scaled.center, "radius": scaled.radius},
                "scaled_spectrum": {"center": spectral.center, "radius": spectral.radius},
                "q_factor": q,
                "time_interval": [rect.time_interval.0, rect.time_interval.1],
                "spectral_interval": [rect.spectral_interval.0, rect.spectral_interval.1],
                "area": rect.area,
            }))
        }
        Command::RkhsKernel(r) => {
            if let Some(path) = &r.plane {
                let (plane, meta) = io::read_plane(path)?;
                let psi = WindowSpec::parse(&meta.window)?;
                let c = r.constant.value(&psi, &meta.m1, &meta.m2)?;
                let ctx = KernelContext::new(psi, meta.m1, meta.m2, c, meta.axis)?;
                let rep = rkhs::range_check(&plane, &ctx, r.probes)?;
                return Ok(json!({
                    "command": "rkhs-kernel", "mode": "range", "c": c, "probes": rep.probes.len(),
                    "max_residual": rep.max_residual, "mean_residual": rep.mean_residual,
                }));
            }
            let need = |x: &Option<String>, name: &str| -> Result<(f64, f64)> {
                parse_point(x.as_deref().ok_or_else(|| Error::BadParams(format!("missing --{name}")))?)
            };
            let (p, q) = (need(&r.p, "p")?, need(&r.q, "q")?);
            if let Some(a) = [p.0, q.0].into_iter().find(|a| a.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)) {
                return Err(Error::NonPositiveScale(a));
            }
            let (m1, m2) = r.matrices.resolve()?;
            let psi = WindowSpec::parse(&r.window)?;
            let c = r.constant.value(&psi, &m1, &m2)?;
            let axis = kernel_axis(&psi, &m1, &m2, &[p, q])?;
            let ctx = KernelContext::new(psi, m1, m2, c, axis)?;
            let k = rkhs::reproducing_kernel(&ctx, p, q)?;
            Ok(json!({"command": "rkhs-kernel", "mode": "kernel", "c": c, "re": k.re, "im": k.im, "abs": k.norm()}))
        }
        Command::Mra(m) => run_mra(m),
    }
}

fn run_mra(cmd: MraCommand) -> Result<Value> {
    match cmd {
        MraCommand::Riesz(r) => {
            let (m1, m2) = r.matrices.resolve()?;
            let sf = ScalingFunction::new(WindowSpec::parse(&r.window)?, m1, m2)?;
            let (k_lo, k_hi) = parse_int_pair(&r.k_range)?;
            let rep = mra::riesz_bounds(&sf, &mra::period_grid(r.u_points, &m1), k_lo, k_hi)?;
            Ok(json!({
                "command": "mra riesz", "lower": rep.lower, "upper": rep.upper,
                "edge_ratio": rep.edge_ratio, "degenerate": rep.degenerate,
            }))
        }
        MraCommand::Orthonormalize(r) => {
            let (m1, m2) = r.matrices.resolve()?;
            let sf = ScalingFunction::new(WindowSpec::parse(&r.window)?, m1, m2)?;
            let (k_lo, k_hi) = parse_int_pair(&r.k_range)?;
            let prof = mra::orthonormalize(&sf, &mra::period_grid(r.u_points, &m1), k_lo, k_hi)?;
            let min = prof.sums.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = prof.sums.iter().cloned().fold(0.0, f64::max);
            Ok(json!({
                "command": "mra orthonormalize", "sum_min": min, "sum_max": max,
                "expected": 1.0 / (2.0 * PI * m2.b().abs()),
            }))
        }
        MraCommand::Qmf(f) => {
            let (m1, m2) = f.matrices.resolve()?;
            let c = load_filter(&f.filter)?;
            let dev = mra::qmf_check(&c, &m1, &m2, &mra::period_grid(f.u_points, &m1));
            Ok(json!({"command": "mra qmf", "deviation": dev}))
        }
        MraCommand::DeriveWavelet(d) => {
            let (m1, _) = d.filter.matrices.resolve()?;
            let c = load_filter(&d.filter.filter)?;
            let w = mra::derive_wavelet_coeffs(&c, &m1);
            if let Some(path) = &d.output {
                io::write_filter(&w, path)?;
            }
            Ok(json!({"command": "mra derive-wavelet", "coefficients": filter_json(&w)}))
        }
        MraCommand::Unitarity(u) => {
            let (m1, m2) = u.filter.matrices.resolve()?;
            let c = load_filter(&u.filter.filter)?;
            let d = match &u.wavelet {
                Some(p) => io::read_filter(p)?,
                None => mra::derive_wavelet_coeffs(&c, &m1),
            };
            let grid = mra::period_grid(u.filter.u_points, &m1);
            let rho = mra::rho_decompose(&c, &d, &m1, &m2, &grid)?;
            Ok(json!({
                "command": "mra unitarity",
                "unitarity": mra::unitarity_check(&c, &d, &m1, &m2, &grid),
                "cross_orthogonality": mra::cross_orthogonality_check(&c, &d, &m1, &m2, &grid),
                "rho_antiperiodicity": rho.antiperiodicity_deviation,
                "rho_even_mass": rho.even_coefficient_mass,
            }))
        }
        MraCommand::Gram(g) => {
            let (m1, m2) = g.matrices.resolve()?;
            let sf = ScalingFunction::new(WindowSpec::parse(&g.window)?, m1, m2)?;
            let (lo, hi) = parse_int_pair(&g.n_range)?;
            let gram = mra::gram_matrix(&sf, g.level, lo, hi)?;
            let mut dev: f64 = 0.0;
            for i in 0..gram.nrows() {
                for j in 0..gram.ncols() {
                    let target = if i == j { 1.0 } else { 0.0 };
                    dev = dev.max((gram[(i, j)] - target).norm());
                }
            }
            Ok(json!({"command": "mra gram", "size": gram.nrows(), "identity_deviation": dev}))
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match with_env_pool(|| run(cli.command)).and_then(|r| r) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical_guard() { 2 } else { 1 })
        }
    }
}
