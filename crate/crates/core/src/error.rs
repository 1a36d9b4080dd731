use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not below 2^31")]
    CharacteristicTooLarge(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operands live in different rings")]
    MixedRings,
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfCharacteristic { q: u64, p: u32 },
    #[error("Frobenius exponent must be at least 1")]
    ZeroFrobeniusExponent,
    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),
    #[error("not a square-free monomial ideal: {0}")]
    NotSquareFreeMonomial(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("enumeration over {n} variables exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("no stabilization after {0} iterations")]
    IterationCap(usize),
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
