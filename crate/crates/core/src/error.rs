use serde::Serialize;
use thiserror::Error;

/// Everything that can go wrong while ingesting groups or building regular sets.
///
/// The serialized form (`{"error": "<Variant>", ...fields}`) is what the CLI
/// writes to standard error.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error")]
pub enum Error {
    #[error("not a group: {reason}")]
    NotAGroup {
        reason: String,
        /// First offending `(i, j, k)` triple, when the failure is tied to one.
        triple: Option<[usize; 3]>,
    },
    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },
    #[error("generated group exceeds the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("element id {id} out of range for a group of order {order}")]
    IdOutOfRange { id: usize, order: usize },
    #[error("unknown catalog name `{name}`")]
    UnknownCatalogName { name: String },
    #[error("members do not form a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("element {x} lies in the subgroup")]
    XInSubgroup { x: usize },
    #[error("subgroup is the whole group")]
    SubgroupNotProper,
    #[error("subgroup is trivial")]
    SubgroupTrivial,
    #[error("double coset of {x} is not self-paired")]
    NotSelfPaired { x: usize },
    #[error("oracle cap {cap} exceeded by group of order {order}")]
    OracleCapExceeded { cap: usize, order: usize },
    #[error("exhaustive search cap {cap} exceeded by group of order {order}")]
    CapExceeded { cap: usize, order: usize },
    #[error("vertex index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("edge between cosets {a} and {b} in layer {layer} not found")]
    EdgeNotFound { a: usize, b: usize, layer: usize },
    #[error("b = {b} outside [0, {max}]")]
    BOutOfRange { b: usize, max: usize },
    #[error("a = {a} outside [0, {max}]")]
    AOutOfRange { a: usize, max: usize },
    #[error("a = {a} must be even when |H| = {order} is odd")]
    ParityViolation { a: usize, order: usize },
    #[error("block at {rep} has odd t but was routed to the even builder")]
    TOddInternal { rep: usize },
    #[error("odd b = {b} needs an involution in the coset of {rep}, which has none")]
    OddBNeedsInvolution { rep: usize, b: usize },
    #[error(
        "odd b = {b} requires a perfect code; block at {rep} (m = {m}, t = {t}) has no involution"
    )]
    PerfectCodeRequired { rep: usize, m: usize, t: usize, b: usize },
    #[error("connection set is not inverse-closed ({element} has inverse {inverse} missing)")]
    NotInverseClosed { element: usize, inverse: usize },
    #[error("connection set contains the identity")]
    IdentityInS,
    #[error("invalid input: {reason}")]
    InvalidInput { reason: String },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAGroup { .. } => "NotAGroup",
            Error::InvalidPermutation { .. } => "InvalidPermutation",
            Error::OrderCapExceeded { .. } => "OrderCapExceeded",
            Error::EmptyGeneratorSet => "EmptyGeneratorSet",
            Error::IdOutOfRange { .. } => "IdOutOfRange",
            Error::UnknownCatalogName { .. } => "UnknownCatalogName",
            Error::NotASubgroup { .. } => "NotASubgroup",
            Error::XInSubgroup { .. } => "XInSubgroup",
            Error::SubgroupNotProper => "SubgroupNotProper",
            Error::SubgroupTrivial => "SubgroupTrivial",
            Error::NotSelfPaired { .. } => "NotSelfPaired",
            Error::OracleCapExceeded { .. } => "OracleCapExceeded",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::EdgeNotFound { .. } => "EdgeNotFound",
            Error::BOutOfRange { .. } => "BOutOfRange",
            Error::AOutOfRange { .. } => "AOutOfRange",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::TOddInternal { .. } => "TOddInternal",
            Error::OddBNeedsInvolution { .. } => "OddBNeedsInvolution",
            Error::PerfectCodeRequired { .. } => "PerfectCodeRequired",
            Error::NotInverseClosed { .. } => "NotInverseClosed",
            Error::IdentityInS => "IdentityInS",
            Error::InvalidInput { .. } => "InvalidInput",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
