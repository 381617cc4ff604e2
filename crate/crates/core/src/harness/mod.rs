//! Graph corpora and machine checks of the square-closure theorems.
//!
//! Two claims are checked graph by graph: if `G` is (P6, banner)-free and has
//! an efficient dominating set, then `G^2` is P6-free ([`Theorem::T1`]) and
//! banner-free ([`Theorem::T2`]). Corpora come from exhaustive enumeration of
//! small graphs or from seeded random sampling followed by repair into the
//! class.

mod enumerate;
mod sampling;
mod search;
mod theorem;

pub use enumerate::{
    adjacency_mask, canonical_form, canonical_form_exhaustive, enumerate_graphs, enumerate_labeled,
    enumerate_nonisomorphic, labeled_graph, ENUMERATION_LIMIT,
};
pub use sampling::{make_f_free, random_graph, sample_graph, sample_graphs, GraphModel, SampleSpec};
pub use search::{search_counterexamples, search_counterexamples_with, verify_exhaustive, SearchReport, ViolationRecord};
pub use theorem::{evaluate, verify_theorem, Evaluation, Inapplicable, Status, Theorem, TheoremVerdict};
