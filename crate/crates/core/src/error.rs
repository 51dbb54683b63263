use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("z0 = {z0} m lies outside the Rindler wedge (must be < c^2/a = {horizon} m)")]
    WedgeViolation { z0: f64, horizon: f64 },

    #[error("{name} must be positive and finite, got {value}")]
    NonPositiveInput { name: &'static str, value: f64 },

    #[error("{name} must be non-negative and finite, got {value}")]
    NegativeInput { name: &'static str, value: f64 },

    #[error("gamma function pole at z = {re} + {im}i")]
    PoleError { re: f64, im: f64 },

    #[error("argument outside the domain of {function}: {detail}")]
    DomainError { function: &'static str, detail: String },

    #[error("hypergeometric lower parameter b{index} = {value} is a non-positive integer")]
    ParameterPole { index: usize, value: f64 },

    #[error("{what} did not converge: {detail}")]
    NoConvergence { what: &'static str, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for failures caused by the numerics rather than by the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
