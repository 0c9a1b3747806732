use thiserror::Error;

/// Errors shared across the whole library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("bad coefficient: {0}")]
    BadCoefficient(String),
    #[error("zero polynomial has no order")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("substitution map does not cover every variable")]
    ArityMismatch,
    #[error("reduction step budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("the unit ideal has no dimension")]
    UnitIdeal,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("monomial order does not eliminate the requested variables")]
    OrderMismatch,
    #[error("U is not contained in I")]
    NotSubideal,
    #[error("ideal is not m-primary")]
    NotMPrimary,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("pivot drops the order of the transform; choose another pivot")]
    OrderDrop,
    #[error("base point is not rational over the coefficient field: factor {0}")]
    NonRationalBasePoint(String),
    #[error("independent random specializations disagree; genericity failure")]
    GenericityFailure,
    #[error("ideal has height smaller than 2")]
    HeightTooSmall,
    #[error("module is not torsionfree of the declared rank")]
    NotTorsionfree,
    #[error("module is not contracted; the Fitting shortcut requires that")]
    NotContracted,
    #[error("schema error at {pointer}: {msg}")]
    Schema { pointer: String, msg: String },
    #[error("rings of the operands do not match")]
    RingMismatch,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
