//! Communication protocols, reductions, lower-bound gadgets and query games
//! for finding kings, sources and maximum out-degree vertices in tournaments.
//!
//! Every protocol runs on the [`protocol`] engine, which charges each
//! delivered bit to its sender, so reported costs are exact. Every answer can
//! be checked against the brute-force oracles on [`Tournament`].

pub mod error;
pub mod hardness;
pub mod king;
pub mod maxsum;
pub mod partition;
pub mod permutation;
pub mod protocol;
pub mod query;
pub mod source;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use king::{king_protocol, KingOutcome};
pub use partition::{EdgePartition, Player};
pub use permutation::Permutation;
pub use protocol::{Bits, Transcript};
pub use tournament::{Tournament, VertexSet};
