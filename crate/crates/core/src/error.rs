use thiserror::Error;

/// Errors raised by state/instrument construction and the trajectory and
/// dark-space machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not Hermitian: deviation {deviation:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("not positive semidefinite: minimum eigenvalue {min_eig:.3e}")]
    NotPositive { min_eig: f64 },

    #[error("trace is {trace} but must be 1 within {tol:.1e}")]
    TraceNotOne { trace: f64, tol: f64 },

    #[error("not a projection: residual {residual:.3e}")]
    NotProjection { residual: f64 },

    #[error("Kraus completeness violated: residual {residual:.3e}")]
    Completeness { residual: f64 },

    #[error("outcome {outcome} out of range 1..={k}")]
    OutcomeOutOfRange { outcome: usize, k: usize },

    #[error("outcome probabilities sum to {sum}, outside 1 ± {tol:.1e}")]
    ProbabilityAnomaly { sum: f64, tol: f64 },

    #[error("every outcome probability is below the probability floor; the state is corrupted")]
    NoViableOutcome,

    #[error("dark-structure violation: {0}")]
    DarkViolation(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
