use thiserror::Error;

/// Residual pair recorded at one Newton iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualPair {
    pub eta1: f64,
    pub eta2: f64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("temperature {temperature} °C is outside the WLF validity range (C2 + T - T0 = {denominator})")]
    WlfDomain { temperature: f64, denominator: f64 },

    #[error("invalid argument `{name}`: {reason}")]
    Argument { name: &'static str, reason: String },

    #[error("configuration error in `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error("singular KKT matrix: pivot {pivot} is {value:e}")]
    Singular { pivot: usize, value: f64 },

    #[error(
        "Newton iteration did not converge at step {step} after {} iterations (last eta1 = {:e}, eta2 = {:e})",
        history.len().saturating_sub(1),
        history.last().map_or(f64::NAN, |r| r.eta1),
        history.last().map_or(f64::NAN, |r| r.eta2)
    )]
    NonConvergence {
        step: usize,
        history: Vec<ResidualPair>,
    },

    #[error("unknown table `{0}` (expected one of: formulations, validation, temperature)")]
    UnknownTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn argument(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Argument {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
