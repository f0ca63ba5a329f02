use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field elements belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("permutations act on different domains")]
    DomainMismatch,
    #[error("construction integrity violated: {0}")]
    ConstructionIntegrity(String),
    #[error(
        "resource guard exceeded: ~{points} points (limit {max_points}), \
         ~{order_bits}-bit group order (limit {max_order_bits})"
    )]
    Guard {
        points: String,
        max_points: u64,
        order_bits: u64,
        max_order_bits: u64,
    },
    #[error("interval {{{a}..{b}}} cannot be realized: {reason}")]
    UnsupportedInterval { a: usize, b: usize, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::ConstructionIntegrity(msg.into())
    }
}
