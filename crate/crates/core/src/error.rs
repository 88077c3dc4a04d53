use thiserror::Error;

/// Errors raised by parameter validation and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular at x = {x}: {what}")]
    Singularity { x: f64, what: &'static str },

    #[error("near-singular kernel denominator {denominator:e} (threshold {threshold:e}); use the primed-sum form")]
    NearSingular { denominator: f64, threshold: f64 },

    #[error("nodes {i} and {j} coincide (|x_i - x_j| = {gap:e})")]
    DegenerateNodes { i: usize, j: usize, gap: f64 },

    #[error("interpolant has no ordinates")]
    MissingValues,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
