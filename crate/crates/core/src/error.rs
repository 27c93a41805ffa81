use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("algebra has no weight functional")]
    NoWeight,
    #[error("polynomial has a nonzero constant term; the algebra has no unity")]
    NonzeroConstantTerm,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("family is not linearly independent")]
    NotIndependent,
    #[error("element is not in the required subspace: {0}")]
    NotInSubspace(String),
    #[error("element is not an idempotent of weight 1")]
    NotIdempotent,
    #[error("not a Bernstein Peirce decomposition: {0}")]
    NotBernsteinPeirce(String),
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("weight is not defined on the quotient: ideal is not contained in the barideal")]
    NotBaric,
    #[error("invalid algebra table: {0}")]
    InvalidTable(String),
    #[error("partition violates the adjoin-idempotent conditions: {0}")]
    PartitionViolated(String),
    #[error("associativity fails within truncation: {0}")]
    NotAssociative(String),
    #[error("identity (x^2)^2 = 0 fails on the carrier")]
    SquareSquareNonzero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
