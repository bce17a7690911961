use thiserror::Error;

/// Every failure the library can report.
///
/// Variants fall into two classes: validation errors (bad parameters, bad files)
/// and numerical guards (the inputs are well-formed but the requested computation
/// cannot be carried out reliably). [`Error::is_numerical_guard`] tells them apart.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not unimodular: ad - bc = {det}")]
    Determinant { det: f64 },
    #[error("non-finite matrix entry")]
    NonFiniteMatrix,
    #[error("matrix b-entry is zero; the kernel path requires b != 0")]
    ZeroB,
    #[error("degenerate rotation angle {angle} (sin is zero)")]
    DegenerateAngle { angle: f64 },
    #[error("invalid signal: {0}")]
    InvalidSignal(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("scale must be strictly positive, got {0}")]
    NonPositiveScale(f64),
    #[error("admissibility constant must be strictly positive, got {0}")]
    NonPositiveC(f64),
    #[error("signal length {0} is not a power of two")]
    NonPowerOfTwo(usize),
    #[error("shift grid is not commensurate with the signal grid: {0}")]
    IncommensurateGrids(String),
    #[error("sampling grid too coarse: chirp phase advances {advance:.3} rad per sample (> pi)")]
    GridTooCoarse { advance: f64 },
    #[error("window is not admissible: {0}")]
    NotAdmissible(String),
    #[error("scaling function does not generate a Riesz basis: lower bound {lower:e}")]
    NotRiesz { lower: f64 },
    #[error("periodized sum truncated too early: edge term ratio {ratio:e}")]
    Truncation { ratio: f64 },
    #[error("window has zero norm")]
    ZeroWindow,
    #[error("second moment still growing at grid edge (relative edge mass {0:e})")]
    DivergentMoment(f64),
    #[error("window center is zero; Q-factor undefined")]
    ZeroCenter,
    #[error("b1 * b2 must be positive for the spectral window formulas")]
    SignMismatch,
    #[error("function does not decay at quadrature edges (edge/peak = {0:e})")]
    DecayViolation(f64),
    #[error("symbol too small on {fraction:.1}% of the grid")]
    IllConditioned { fraction: f64 },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("time column is not uniformly spaced at line {line}")]
    NonUniformGrid { line: usize },
    #[error("plane does not match its metadata: {0}")]
    MetaMismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Guards that fire on well-formed inputs the numerics cannot handle.
    pub fn is_numerical_guard(&self) -> bool {
        matches!(
            self,
            Error::GridTooCoarse { .. }
                | Error::NotAdmissible(_)
                | Error::NotRiesz { .. }
                | Error::Truncation { .. }
                | Error::DecayViolation(_)
                | Error::DivergentMoment(_)
                | Error::IllConditioned { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
