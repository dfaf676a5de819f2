use crate::geomcore::Interval;

/// Errors raised by the curve library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("frame violates orthonormality (defect {defect:e})")]
    InvalidFrame { defect: f64 },

    #[error("s = {s} lies outside the domain {domain}")]
    OutsideDomain { s: f64, domain: Interval },

    #[error("profile domains do not overlap")]
    DomainMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sampled data needs at least {needed} nodes, got {got}")]
    TooFewNodes { needed: usize, got: usize },

    #[error("grid is not strictly increasing")]
    NonIncreasingGrid,

    #[error("grid is not uniform")]
    NonUniformGrid,

    #[error("step {step} exceeds the integration range length {length}")]
    StepTooLarge { step: f64, length: f64 },

    #[error("quadrature did not converge on [{a}, {b}]")]
    Quadrature { a: f64, b: f64 },

    #[error("curvature vanishes at s = {s}")]
    VanishingCurvature { s: f64 },

    #[error("restricted domain is empty")]
    EmptyDomain,

    #[error("check not applicable: {0}")]
    NotApplicable(&'static str),
}

impl Error {
    /// Whether the error comes from evaluating a numerical quantity
    /// (singularity, domain violation, quadrature failure) rather than
    /// from malformed input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::OutsideDomain { .. }
                | Error::Quadrature { .. }
                | Error::VanishingCurvature { .. }
                | Error::EmptyDomain
                | Error::InvalidFrame { .. }
                | Error::NonFinite(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
