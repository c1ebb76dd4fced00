//! Exact tools for extremal problems on independent sets in small graphs.
//!
//! Graphs have at most 64 vertices and are stored as bit masks. The crate builds the
//! extremal families, computes exact invariants and independent-set counts, evaluates the
//! closed-form bounds, and checks them by exhaustive search over all labeled graphs.

pub mod bounds;
pub mod canon;
pub mod construct;
pub mod count;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod search;

pub use canon::{canonical_form, CanonicalForm};
pub use count::{count_size, count_total, independence_polynomial, ExactCount, IndependencePolynomial};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
