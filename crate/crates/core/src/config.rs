//! Acceptance thresholds, overridable through a `key = value` file named by
//! the `CONCEPT_INTERFERENCE_CONFIG` environment variable.

use std::path::Path;

use crate::error::{Error, Result};

pub const CONFIG_ENV: &str = "CONCEPT_INTERFERENCE_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// Max |<A|B>|.
    pub orthogonality: f64,
    /// Max | ||v|| - 1 | for either concept vector.
    pub norm: f64,
    /// Max error reconstructing the combined column from the superposition.
    pub reconstruction: f64,
    /// Max |lambda_k - published| against the bundled reference values.
    pub lambda_regression: f64,
    /// Max |phi_k - published| in degrees, plane exemplar excluded.
    pub phi_regression: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            orthogonality: 1e-9,
            norm: 1e-9,
            reconstruction: 1e-9,
            lambda_regression: 5e-4,
            phi_regression: 0.5,
        }
    }
}

impl Thresholds {
    /// Applies `key = value` lines on top of the defaults. Blank lines and `#`
    /// comments are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Thresholds::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key = value, found {line:?}")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("{:?} is not a number", value.trim())))?;
            if !(value > 0.0) || !value.is_finite() {
                return Err(bad(format!("threshold must be positive, got {value}")));
            }
            let slot = match key.trim() {
                "orthogonality" => &mut out.orthogonality,
                "norm" => &mut out.norm,
                "reconstruction" => &mut out.reconstruction,
                "lambda_regression" => &mut out.lambda_regression,
                "phi_regression" => &mut out.phi_regression,
                other => return Err(bad(format!("unknown threshold {other:?}"))),
            };
            *slot = value;
        }
        Ok(out)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Defaults, or the file named by [`CONFIG_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::load(path),
            _ => Ok(Self::default()),
        }
    }
}
