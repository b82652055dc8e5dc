//! Seeded workloads shared by the benchmarks.

use tourney_core::verify::plant_source;
use tourney_core::{EdgePartition, Tournament};

/// Uniform tournament with a uniform edge split.
pub fn split_instance(n: usize, seed: u64) -> (Tournament, EdgePartition) {
    let t = Tournament::random(n, seed).expect("n ≥ 1");
    (t, EdgePartition::random(n, seed.rotate_left(17) ^ 1))
}

/// Same, with vertex `n / 2 + 1` made a source.
pub fn source_instance(n: usize, seed: u64) -> (Tournament, EdgePartition) {
    let (t, p) = split_instance(n, seed);
    (plant_source(&t, n / 2 + 1), p)
}
