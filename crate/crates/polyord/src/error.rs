use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not monic of degree {expected} over F_{p}: {reason}")]
    InvalidModulus {
        p: u64,
        expected: usize,
        reason: String,
    },
    #[error("supplied modulus is reducible over F_{p}")]
    ModulusReducible { p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("coefficient {value} out of range for characteristic {p}")]
    CoefficientOutOfRange { value: u64, p: u64 },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("no identity power found within cap {cap}")]
    CapExceeded { cap: u64 },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("factor is not a monic irreducible with nonzero constant term")]
    NotIrreducibleFactor,
    #[error("polynomial is not a primitive irreducible")]
    NotPrimitive,
    #[error("{dprime} does not divide {d}")]
    NotADivisor { dprime: usize, d: usize },
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
}
