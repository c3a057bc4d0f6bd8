use thiserror::Error;

/// Errors raised by the library.
///
/// Decoding failures on corrupted words are *not* errors; they are reported
/// through [`crate::decoder::DecodeOutcome::Failure`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("reduction polynomial is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("field of size {p}^{m} exceeds the supported limit of 2^16 elements")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("value {value} is not an element of a field with {q} elements")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("operands belong to different fields or codes")]
    SpecMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantInput,

    #[error("modulus {0} is not monic")]
    NonMonicModulus(usize),
    #[error("modulus {0} is constant")]
    ConstantModulus(usize),
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(usize, usize),
    #[error("k = {k} must satisfy 1 <= k <= n = {n}")]
    BadK { k: usize, n: usize },
    #[error("the code needs at least one modulus")]
    NoModuli,
    #[error("message degree {degree} is not below K = {k_deg}")]
    MessageTooLarge { degree: usize, k_deg: usize },
    #[error("word has {got} symbols, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("symbol {0} has degree not below the degree of its modulus")]
    ResidueDegreeViolation(usize),
    #[error("moduli do not satisfy the ordered-degree condition")]
    UnorderedDegrees,

    #[error("known symbols have degree weight {support} < K = {k_deg}")]
    InsufficientSupport { support: usize, k_deg: usize },
    #[error("known residues do not come from a single codeword")]
    InconsistentResidues,
    #[error("erased degree weight {erased} exceeds N - K = {budget}")]
    ErasureBudgetExceeded { erased: usize, budget: usize },
    #[error("index {index} out of range for a code of length {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exact division failed: nonzero remainder")]
    NonDivisible,
    #[error("recovered message has degree >= K")]
    MessageDegreeOverflow,
    #[error("degree precondition violated: {0}")]
    DegreePreconditionViolated(&'static str),
    #[error("error-factor candidate must be nonzero")]
    ZeroG,
    #[error("invalid decoder options: {0}")]
    InvalidOptions(&'static str),
    #[error("candidate list exceeds cap of {cap}")]
    CandidateExplosion { cap: usize },
    #[error("search space of {size} messages exceeds cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("requested error weight is infeasible: {0}")]
    InfeasibleWeight(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
