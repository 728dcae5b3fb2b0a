use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact integer arithmetic left the representable range.
    #[error("integer overflow: {0}")]
    Overflow(String),

    /// A materialization cap or similar resource limit was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Adaptive quadrature stopped above its tolerance.
    #[error("quadrature failed to converge: {context} (error estimate {error_estimate:.3e} > tolerance {tolerance:.3e} after {panels} panels)")]
    QuadratureFailure {
        context: String,
        error_estimate: f64,
        tolerance: f64,
        panels: usize,
    },

    /// Series acceleration stopped above its target accuracy.
    #[error("acceleration failed to converge: {context} (error estimate {error_estimate:.3e})")]
    AccelerationFailure { context: String, error_estimate: f64 },

    /// Division by a conversion factor too close to zero.
    #[error("singular factor: {0}")]
    SingularFactor(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
