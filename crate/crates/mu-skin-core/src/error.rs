//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A physical or numerical parameter lies outside its admissible domain.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// A special function was evaluated at a singular argument (e.g. Y at z = 0).
    #[error("singular argument: {0}")]
    SingularArgument(String),

    /// Requested order exceeds the supported cap.
    #[error("order {order} exceeds supported cap {cap}")]
    OrderOutOfRange { order: i32, cap: i32 },

    /// Point lies outside the validity region of the normal-coordinate chart.
    #[error("point outside chart validity: {0}")]
    ChartDomain(String),

    /// A modal linear system is too ill-conditioned to trust.
    #[error("ill-conditioned modal system ({mode}): condition estimate {cond:.3e}")]
    IllConditioned { mode: String, cond: f64 },

    /// A quadrature or iterative scheme failed to reach its accuracy target.
    #[error("accuracy target {target:.3e} not reached (achieved {achieved:.3e})")]
    Accuracy { achieved: f64, target: f64 },

    /// A compatibility condition on the data is violated (e.g. nonzero mean).
    #[error("compatibility condition violated: {0}")]
    Compatibility(String),
}

pub type Result<T> = std::result::Result<T, Error>;
