//! Degree-truncated noncommutative Groebner bases.
//!
//! Words are ordered degree-lexicographically with the first generator the
//! largest letter. Completeness is tracked as a degree bound and every query
//! checks it.

pub mod groebner;
pub mod nil;
pub mod word;

pub use groebner::{buchberger_truncated, GroebnerState, Presentation};
pub use nil::{kurosh_presentation, nil_presentation, nil_span_check, truncated_algebra_table, NilSpanReport, TruncatedAlgebra};
pub use word::{NcPoly, Word};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("completeness bound insufficient: need complete_below >= {needed}, have {available}")]
    CompletenessInsufficient { needed: usize, available: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] bernstein_core::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
