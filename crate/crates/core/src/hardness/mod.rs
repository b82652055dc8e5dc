//! Lower-bound gadgets: permutation maximum finding, the Set-Disjointness
//! reduction, the three-king tournament and the maximum out-degree fooling
//! set.

pub mod fooling;
pub mod gssigma;
pub mod pmf;

pub use fooling::{fooling_cross, fooling_input, greedy_fooling_set, pair_is_fooling, FoolingInput};
pub use gssigma::GSSigma;
pub use pmf::{disj_to_pmf, disj_via_king, pmf_eval, pmf_to_tindex, tindex_to_pmf, PmfInstance};
