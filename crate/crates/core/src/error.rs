use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("not distinguished: {0}")]
    NotDistinguished(String),
    #[error("no candidate found within radius {0}")]
    RadiusExhausted(i64),
    #[error("gamma function pole at {0}")]
    GammaPole(String),
    #[error("quadrature did not converge (error estimate {estimate:e} after {levels} refinements)")]
    NoConvergence { estimate: f64, levels: usize },
    #[error("empty monomial representation")]
    EmptyMonomial,
}

impl Error {
    /// Whether the error is a violated hypothesis rather than malformed input
    /// or a numerical failure.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Precondition(_)
                | Error::OutOfRange(_)
                | Error::NotDistinguished(_)
                | Error::RadiusExhausted(_)
                | Error::GammaPole(_)
                | Error::EmptyMonomial
                | Error::DivisionByZero
                | Error::Singular
                | Error::DimensionMismatch(_)
        )
    }
}
