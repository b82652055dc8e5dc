//! Source finding and its equivalence with Clique vs. Independent Set.

pub mod cis;
pub mod graph;
pub mod orient;
pub mod reduction;

pub use cis::{cis_cost_bound, cis_protocol, CisInstance, CisOutcome};
pub use graph::UndirectedGraph;
pub use orient::{orient_from_independent_set, orient_indeg_positive, Orientation};
pub use reduction::{
    cis_to_src, cis_via_src, src_decision, src_protocol, src_to_cis, CisReduction, SrcOutcome,
};
