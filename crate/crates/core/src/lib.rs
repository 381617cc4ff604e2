//! Efficient domination (perfect codes) in small graphs.
//!
//! The crate decides whether a graph has an efficient dominating set by
//! squaring it and solving a maximum weight independent set problem with
//! degree-plus-one weights. Independent deciders (an exact-cover search and a
//! minimum weight dominating set search) cross-check the reduction, and the
//! [`harness`] module sweeps graph corpora to confirm that squares of
//! (P6, banner)-free graphs with a perfect code stay (P6, banner)-free.
//!
//! Graphs hold at most [`MAX_VERTICES`] vertices so that every vertex set is a
//! single machine word.

pub mod eds;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod io;
pub mod mwis;
pub mod patterns;
pub mod weight;

pub use eds::{check_lemma1, eds_brute_force, eds_via_square, verify_eds, EdsOutcome, EdsResult, Lemma1Report, Method};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Distance, Graph, VertexSet, Weights, MAX_VERTICES};
pub use patterns::{catalog, class_report, find_induced, is_f_free, ClassReport, Embedding, Pattern};
pub use weight::Weight;

/// Vertex weights as used by the reduction: unsigned 64-bit integers.
pub type WeightVector = Weights<u64>;

/// Solver output over [`WeightVector`] weights.
pub type SolveResult = mwis::Solution<u64>;

/// 32-bit weights, enough for any graph within [`MAX_VERTICES`].
pub type WeightVector32 = Weights<u32>;

/// Signed weights, handy when callers compute weight differences.
pub type SignedWeightVector = Weights<i64>;
