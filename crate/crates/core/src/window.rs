//! Analyzing windows ψ.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{Signal, TimeAxis};

/// Gaussian tails are cut at this many standard deviations.
const GAUSS_CUTOFF: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
pub enum WindowSpec {
    /// Unit-norm Gaussian `e^{-x²/(2σ²)} / (π^{1/4} √σ)`.
    Gaussian { sigma: f64 },
    /// Unit-norm Hann bump `cos²(πx/L)` on `[-L/2, L/2]`.
    Hann { support: f64 },
    /// Indicator of `[0, 1)`.
    Haar,
    /// Samples, linearly interpolated, zero outside the sampled range.
    Sampled(Signal),
}

impl WindowSpec {
    pub fn gaussian(sigma: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::BadParams(format!("gaussian width must be positive, got {sigma}")));
        }
        Ok(WindowSpec::Gaussian { sigma })
    }

    pub fn hann(support: f64) -> Result<Self> {
        if !(support.is_finite() && support > 0.0) {
            return Err(Error::BadParams(format!("hann support must be positive, got {support}")));
        }
        Ok(WindowSpec::Hann { support })
    }

    pub fn sampled(s: Signal) -> Self {
        WindowSpec::Sampled(s)
    }

    /// Parses `gaussian:<sigma>`, `hann:<support>` or `haar`.
    pub fn parse(text: &str) -> Result<Self> {
        let (kind, arg) = match text.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (text.trim(), None),
        };
        let num = |a: Option<&str>| -> Result<f64> {
            a.ok_or_else(|| Error::BadParams(format!("window '{kind}' needs a parameter")))?
                .parse::<f64>()
                .map_err(|e| Error::BadParams(format!("window parameter: {e}")))
        };
        match kind {
            "gaussian" => Self::gaussian(num(arg)?),
            "hann" => Self::hann(num(arg)?),
            "haar" if arg.is_none() => Ok(WindowSpec::Haar),
            _ => Err(Error::BadParams(format!("unknown window '{text}'"))),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> Complex64 {
        match self {
            WindowSpec::Gaussian { sigma } => {
                let u = x / sigma;
                Complex64::new((-0.5 * u * u).exp() / (PI.powf(0.25) * sigma.sqrt()), 0.0)
            }
            WindowSpec::Hann { support } => {
                if x.abs() >= 0.5 * support {
                    Complex64::new(0.0, 0.0)
                } else {
                    let c = (PI * x / support).cos();
                    Complex64::new(c * c * (8.0 / (3.0 * support)).sqrt(), 0.0)
                }
            }
            WindowSpec::Haar => {
                if (0.0..1.0).contains(&x) {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            WindowSpec::Sampled(s) => interpolate(s, x),
        }
    }

    /// Interval outside of which the window is treated as zero.
    pub fn support(&self) -> (f64, f64) {
        match self {
            WindowSpec::Gaussian { sigma } => (-GAUSS_CUTOFF * sigma, GAUSS_CUTOFF * sigma),
            WindowSpec::Hann { support } => (-0.5 * support, 0.5 * support),
            WindowSpec::Haar => (0.0, 1.0),
            WindowSpec::Sampled(s) => (s.t0(), s.axis().end()),
        }
    }

    /// Step that resolves the window's own shape.
    pub fn intrinsic_step(&self) -> f64 {
        match self {
            WindowSpec::Gaussian { sigma } => sigma / 16.0,
            WindowSpec::Hann { support } => support / 256.0,
            WindowSpec::Haar => 1.0 / 1024.0,
            WindowSpec::Sampled(s) => s.dt(),
        }
    }

    /// Quadrature grid over the support, fine enough for an integrand
    /// `ψ(t)·e^{iθ(t)}` with `|θ'| ≤ omega_max`.
    pub fn quadrature_axis(&self, omega_max: f64) -> TimeAxis {
        let (lo, hi) = self.support();
        let mut step = self.intrinsic_step();
        if omega_max > 0.0 {
            step = step.min(PI / (4.0 * omega_max));
        }
        let n = (((hi - lo) / step).ceil() as usize + 1).max(2);
        TimeAxis { t0: lo, dt: (hi - lo) / (n - 1) as f64, n }
    }

    pub fn sample(&self, axis: TimeAxis) -> Result<Signal> {
        Signal::from_fn(axis, |t| self.eval(t))
    }

    pub fn norm(&self) -> f64 {
        match self {
            WindowSpec::Gaussian { .. } | WindowSpec::Hann { .. } | WindowSpec::Haar => 1.0,
            WindowSpec::Sampled(s) => s.norm(),
        }
    }

    pub fn ensure_nonzero(&self) -> Result<()> {
        if self.norm() > 0.0 {
            Ok(())
        } else {
            Err(Error::ZeroWindow)
        }
    }
}

impl fmt::Display for WindowSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowSpec::Gaussian { sigma } => write!(f, "gaussian:{sigma}"),
            WindowSpec::Hann { support } => write!(f, "hann:{support}"),
            WindowSpec::Haar => write!(f, "haar"),
            WindowSpec::Sampled(s) => write!(f, "sampled:{}", s.len()),
        }
    }
}

fn interpolate(s: &Signal, x: f64) -> Complex64 {
    let pos = (x - s.t0()) / s.dt();
    let last = (s.len() - 1) as f64;
    if !(0.0..=last).contains(&pos) {
        return Complex64::new(0.0, 0.0);
    }
    let k = (pos.floor() as usize).min(s.len() - 2);
    let frac = pos - k as f64;
    let v = s.samples();
    v[k] * (1.0 - frac) + v[k + 1] * frac
}
