use thiserror::Error;

use crate::convex::CrossingPair;
use crate::independence::CrossingWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed set-system JSON: {0}")]
    Json(String),

    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),

    #[error("duplicate member name {0:?}")]
    DuplicateMember(String),

    #[error("member {member:?} references unknown element {element:?}")]
    UnknownElement { member: String, element: String },

    #[error("unknown element name {0:?}")]
    UnknownElementName(String),

    #[error("unknown member name {0:?}")]
    UnknownMember(String),

    #[error("{what} limit exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("member index {index} out of range for a family of {len}")]
    InvalidIndex { index: usize, len: usize },

    #[error("member index {0} listed twice")]
    DuplicateIndex(usize),

    #[error("invalid linear order: {0}")]
    InvalidOrder(String),

    #[error("family is not laminar: {0}")]
    NotLaminar(CrossingPair),

    #[error("family has independence dimension > 1: {0}")]
    IdExceedsOne(CrossingWitness),

    #[error("member {member:?} has {components} convex components under the order, more than {k}")]
    ComponentBound {
        member: String,
        components: usize,
        k: usize,
    },

    #[error("malformed expression: {0}")]
    Expr(String),

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("density fit needs at least {min} points, got {got}")]
    TooFewPoints { min: usize, got: usize },

    #[error("density point ({size}, {count}) must have positive size and count")]
    NonPositivePoint { size: usize, count: usize },

    #[error("density sizes must be strictly increasing")]
    NonIncreasingSizes,

    #[error("operation requires a non-empty family")]
    EmptyFamily,

    #[error("ray index must be at least 1")]
    ZeroRayIndex,
}
