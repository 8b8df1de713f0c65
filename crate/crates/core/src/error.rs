use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial is reducible over the prime field")]
    ReducibleModulus,
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    InvalidModulus { expected: u32 },
    #[error("field order p^m exceeds the configured bound {bound}")]
    FieldTooLarge { bound: u64 },
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("element is not a quadratic residue")]
    NonResidue,
    #[error("element repr {repr} is out of range for a field of order {q}")]
    InvalidElement { repr: u64, q: u64 },
    #[error("search space of {needed} exceeds the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("eta = {eta} is not coprime to the characteristic {p}")]
    EtaNotCoprime { eta: u64, p: u64 },
    #[error("exponent {value} is outside [0, {max}]")]
    ExponentOutOfRange { value: u64, max: u64 },
    #[error("lambda0 is not a quadratic residue")]
    NonResidueLambda,
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("degenerate code: dimension {k} of length {n} admits no locality")]
    DegenerateCode { n: usize, k: usize },
    #[error("the code is the zero code")]
    ZeroCode,
    #[error("factor list does not multiply to x^eta - lambda0")]
    IncompleteFactorization,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("expected at most one erasure, found {0}")]
    TooManyErasures(usize),
    #[error("repaired word is not a codeword")]
    InconsistentWord,
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
