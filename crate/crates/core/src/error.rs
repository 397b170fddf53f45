use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient {index} requested from a series of order {order}")]
    OutOfOrder { index: usize, order: usize },

    #[error("exp() needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("equation coefficient {index} depends on unknown coefficients ({detail})")]
    DependencyViolation { index: usize, detail: String },

    #[error("{what}: coefficient {index} is not an integer ({value})")]
    NonIntegral {
        what: &'static str,
        index: usize,
        value: String,
    },

    #[error("{what}: coefficient {index} is negative ({value})")]
    Negative {
        what: &'static str,
        index: usize,
        value: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} and {other} disagree at index {index}")]
    Disagreement {
        what: &'static str,
        other: &'static str,
        index: usize,
    },

    #[error("evaluation point {0} is outside the unit disc")]
    Divergence(f64),

    #[error("fixed point iteration did not converge after {iterations} steps (last {last}, step {step:e})")]
    NonConvergence {
        iterations: usize,
        last: f64,
        step: f64,
    },

    #[error("cache: {0}")]
    Cache(String),

    #[error("b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },
}
