use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of size {p}^{e} is outside the supported range (at most 2^16 elements)")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("modulus must have exactly {expected} lower coefficients, got {got}")]
    ModulusLength { expected: usize, got: usize },
    #[error("modulus coefficient {0} is not a residue mod p")]
    ModulusCoefficient(u32),
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("residue class of X is not primitive (order {order}, expected {expected})")]
    NotPrimitive { order: u32, expected: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("operation requires a field of even extension degree (F_{{q^2}}), got degree {0}")]
    OddDegree(u32),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("size budget exceeded: {required} required, budget {budget}")]
    Budget { required: u128, budget: u128 },
    #[error("construction rejected: {0}")]
    Construction(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}
