use thiserror::Error;

use crate::weyl::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type {family}{rank}: {reason}")]
    InvalidType { family: char, rank: usize, reason: &'static str },
    #[error("cannot parse type '{0}'")]
    TypeParse(String),
    #[error("cannot parse subset '{0}'")]
    SubsetParse(String),
    #[error("cartan data: {0}")]
    CartanData(String),
    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("subset {0} is not stable under the diagram duality")]
    NotSymmetric(SubsetMask),
    #[error("subset {0} is not connected")]
    Disconnected(SubsetMask),
    #[error("node {0} does not lie in the subset")]
    NodeNotInSubset(usize),
    #[error("weight is not dominant for {0}")]
    NotDominant(SubsetMask),
    #[error("element is not invariant under the Weyl group of {0}")]
    NotInvariant(SubsetMask),
    #[error("element is not an involution")]
    NotInvolution,
    #[error("conjugacy search exceeded its budget of {0} elements")]
    BudgetExceeded(usize),
    #[error("product of {0} terms exceeds the size cap")]
    ProductTooLarge(usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("table line {0}: {1}")]
    TableParse(usize, String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
