//! Query-model king finding and the Prover–Delayer rank game.

pub mod game;
pub mod oracle;

pub use game::{
    exact_game_value, play_alg3, play_game, Alg3Prover, AlwaysDefer, DeferFirst, Delayer,
    DelayerMove, GameResult, LexProver, PartialOrientation, Prover, RandomDelayer, RandomProver,
    TowardPivot,
};
pub use oracle::{randomized_king_query, CountingOracle};
