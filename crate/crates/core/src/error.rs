use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("all coefficients are zero")]
    DegenerateEquation,

    #[error("polynomial is not integer-valued: {0}")]
    NotIntegerValued(String),

    #[error("discriminant is zero")]
    ZeroDiscriminant,

    #[error("discriminant is nonzero")]
    NonzeroDiscriminant,

    #[error("direction ({r}, {s}) is degenerate: A r^2 + 2 B r s + C s^2 = 0")]
    DegenerateDirection { r: i64, s: i64 },

    #[error("({r}, {s}) is not a primitive direction")]
    NotCoprime { r: i64, s: i64 },

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("degenerate cone: {0}")]
    DegenerateCone(String),

    #[error("sublevel region is unbounded: {0}")]
    UnboundedRegion(String),

    #[error("integral diverges: A + 2Bt + Ct^2 vanishes on [0, alpha]")]
    DivergentIntegral,

    #[error("every anchor within budget was degenerate")]
    DegenerateAnchor,

    #[error("search budget of {budget} points exhausted: {diagnostic}")]
    BudgetExhausted { budget: u64, diagnostic: String },

    #[error("coordinate overflow: {0}")]
    Overflow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
