use thiserror::Error;

/// Rejected-input errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error("classes live on different bases ({left} vs {right})")]
    BaseMismatch { left: String, right: String },
    #[error("monomial {0} is not a canonical basis monomial of this base")]
    NonCanonicalMonomial(String),
    #[error("expected a class homogeneous of degree {expected}")]
    WrongDegree { expected: usize },
    #[error("expected a line bundle, found rank {0}")]
    NotLineBundle(u32),
    #[error("operation needs rank {expected}, found rank {found}")]
    RankMismatch { expected: u32, found: u32 },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("bundle of rank {rank} carries {given} Chern classes, at most {allowed} allowed")]
    TooManyChernClasses {
        rank: u32,
        given: usize,
        allowed: usize,
    },
    #[error("kernel bundle needs at least {required} sections, {given} given")]
    TooFewSections { required: u64, given: u64 },
    #[error("divisor has non-integral coefficients")]
    NonIntegralDivisor,
    #[error("{operation} is not supported on {base}")]
    Unsupported {
        operation: &'static str,
        base: String,
    },
    #[error("Riemann-Roch gives a non-integral Euler characteristic {0}")]
    NonIntegralEuler(String),
    #[error("numerical dimension is only defined here for globally generated bundles")]
    NotGloballyGenerated,
}

pub type Result<T> = std::result::Result<T, Error>;
