use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
///
/// Variants are grouped by the layer that raises them; the CLI maps them
/// onto its exit-code taxonomy (see [`Error::is_data_unavailable`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exact algebra
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} in Z[q, q^-1]")]
    NotDivisible { dividend: String, divisor: String },
    #[error("evaluation at z = 0 of a polynomial with negative exponents")]
    ZeroPoint,
    #[error("negative argument {0} where a non-negative integer is required")]
    NegativeArgument(i64),
    #[error("invalid coefficient query: {0}")]
    InvalidQuery(String),
    #[error("precision must be at least 53 bits, got {0}")]
    PrecisionTooLow(usize),

    // catalog
    #[error("knot {knot}: no H_k data for rank n = {n}, depth k = {k}")]
    OutOfTable { knot: String, n: u32, k: u32 },
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
    #[error("malformed catalog: {0}")]
    Catalog(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    // solver
    #[error("invariant sequence must start with J_0 = 1, found {0}")]
    BadNormalization(String),
    #[error("precondition violated: {0}")]
    Precondition(String),

    // numerics
    #[error("degenerate root schedule: N + a = 0")]
    DegenerateSchedule,
    #[error("sin(l*s*pi/{denominator}) vanishes for l = {index}; need gcd(s, N + a) = 1")]
    CoprimalityViolation { denominator: i64, index: i64 },
    #[error("invariant vanishes at the evaluation point; logarithm undefined")]
    ZeroInvariant,
    #[error("no reference volume stored for {0:?}")]
    UnknownReference(String),
    #[error("arbitrary-precision arithmetic failed: {0}")]
    Numeric(String),
}

impl Error {
    /// True for errors meaning "the bundled data does not reach this far".
    pub fn is_data_unavailable(&self) -> bool {
        matches!(self, Error::OutOfTable { .. } | Error::UnknownKnot(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
