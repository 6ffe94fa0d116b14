//! Exact algorithms for matching extendability and edge-connectivity of
//! vertex-transitive graphs, together with constructors for the circulant,
//! Cayley, generalized Petersen, double-ladder and quadrangle-ring families
//! and a classification predicate cross-validated against brute-force
//! oracles.
//!
//! Everything is exact and deterministic; the exponential checks (subset
//! enumeration, cut enumeration) are gated behind explicit caps and sized for
//! desk-scale instances.

#![forbid(unsafe_code)]

pub mod brute;
pub mod classify;
pub mod connectivity;
pub mod families;
pub mod graph;
pub mod groups;
pub mod json;
pub mod matching;
pub mod symmetry;

pub use classify::{Certificate, FamilyId, Prediction, Verdict};
pub use connectivity::{Caps, ConnectivityReport};
pub use families::FamilySpec;
pub use graph::{Bipartition, Cut, Graph, GraphError, VertexSet};
pub use groups::GroupTable;
pub use matching::Matching;
pub use symmetry::IsoOutcome;
