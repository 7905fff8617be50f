use thiserror::Error;

/// Errors raised by the toricrep library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row space of rank {rank} exceeds the enumeration limit of {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generator {generator} is not a simplicial automorphism: facet {facet:?} maps outside the complex")]
    NotAnAutomorphism { generator: usize, facet: Vec<u32> },

    #[error("characteristic matrix is singular on face {face:?}")]
    SingularCharacteristic { face: Vec<u32> },

    #[error("group of order {order} exceeds the limit of {limit}")]
    GroupTooLarge { order: u128, limit: u128 },

    #[error("vertex image {coords:?} not found in the orbit closure")]
    VertexNotFound { coords: Vec<i64> },

    #[error("skew shape {outer:?}/{inner:?} is not a skew hook")]
    NotASkewHook { outer: Vec<u32>, inner: Vec<u32> },

    #[error("building set is missing the singleton {{{0}}}")]
    MissingSingleton(u32),

    #[error("building set is not closed under union of intersecting members {0:?} and {1:?}")]
    NotUnionClosed(Vec<u32>, Vec<u32>),

    #[error("building set is not connected: the ground set is not a member")]
    NotConnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
