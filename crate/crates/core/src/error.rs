use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the closure cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup of order {order} is not a {p}-group")]
    NotPGroup { p: u64, order: usize },
    #[error("group order {order} exceeds the subgroup-lattice bound {bound}")]
    LatticeBoundExceeded { order: usize, bound: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error(
        "oracle bound exceeded: index {index} > {index_bound} and order {order} > {order_bound}"
    )]
    OracleBoundExceeded {
        index: usize,
        order: usize,
        index_bound: usize,
        order_bound: usize,
    },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {q} exceeds the bound {bound}")]
    FieldBoundExceeded { q: u64, bound: u64 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("constructed group has order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
