use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("even characteristic unsupported (p = {0})")]
    EvenCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{e} does not fit in 32 bits")]
    FieldTooLarge { p: u64, e: u32 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("supplied modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("element {value} out of range for F_{q}")]
    ElementOutOfRange { value: i64, q: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("word is empty")]
    EmptyWord,
    #[error("generator index {index} out of range for {len} generators")]
    InvalidIndex { index: usize, len: usize },
    #[error("semigroup consists of irreducible polynomials; no witness exists")]
    NoWitness,
    #[error("{value} is not {expected}")]
    ResidueClass { value: u64, expected: &'static str },
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
