use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("unrecognised field `{0}` (expected GF(p) or QQ)")]
    BadField(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("division is not allowed (position {pos})")]
    DivisionRejected { pos: usize },
    #[error("duplicate or invalid variable name `{0}`")]
    BadVariable(String),
    #[error("operands live in different polynomial rings or fields")]
    Mismatch,
    #[error("monomial arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("ring is not zero-dimensional (variable `{0}` has no pure power among leading terms); positive dimension is out of scope")]
    NotZeroDimensional(String),
    #[error("ring is not local: variable `{0}` is not nilpotent")]
    NotLocal(String),
    #[error("the ideal is the whole polynomial ring")]
    UnitIdeal,
    #[error("inverse-system form must be nonzero and homogeneous")]
    BadForm,
    #[error("the ideal is the whole ring; quotient is zero")]
    WholeRing,
    #[error("sequence of length {len} exceeds the limit {max}")]
    TooLong { len: usize, max: usize },
    #[error("search pool too large: {0}")]
    PoolTooLarge(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("ring is not graded (some ideal generator is inhomogeneous)")]
    NotGraded,
    #[error("ideal is not contained in the square of the maximal ideal")]
    NotEmbeddedMinimally,
    #[error("elements do not minimally generate the maximal ideal")]
    NotMinimalGenerators,
    #[error("index {0} out of range")]
    OutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
