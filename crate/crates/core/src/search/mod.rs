//! Type arithmetic, constrained exhaustive search and the `(4^4)`
//! classification.

mod classify;
mod engine;
mod types;

pub use classify::{classify_4_4, ClassificationReport, ClassifiedGem, OrderSummary};
pub use engine::{
    find_first, find_gems, BipartiteFilter, FaceConstraint, SearchHit, SearchReport, SearchSpec,
};
pub use types::{enumerate_embedding_types, TypeOrder, TypeSolution};

/// Default order bound for [`classify_4_4`].
pub const CLASSIFY_BUDGET: usize = 16;
