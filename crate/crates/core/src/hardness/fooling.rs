//! Fooling set for deterministic maximum out-degree.
//!
//! For even `n ≥ 8` with `h = n/2`, vertices `1..=h` form `L` and
//! `h+1..=n` form `R`; vertex `e' = e + h` is the mirror of `e`. A
//! permutation `σ` of `h − 1` elements acts on `{2, …, h}` through
//! `s(e) = σ(e − 1) + 1`.
//!
//! Alice (edges inside `L` and inside `R`, from `σ_A`): `1` and `1'` beat
//! their halves; `e → f` and `e' → f'` iff `s_A(e) < s_A(f)`.
//! Bob (cross edges, from `σ_B`): `1 → 1'`; `1 → f'` iff `s_B(f) = 2`,
//! otherwise `f' → 1`; `e → 1'`; `e → f'` iff `s_B(e) ≥ s_B(f)`.
//!
//! On a matched pair vertex `1` is the unique maximum with out-degree
//! `h + 1`; vertex `e` has `h + s_B(e) − s_A(e)` in general.

use crate::error::{Error, Result};
use crate::partition::{EdgePartition, Player};
use crate::permutation::Permutation;
use crate::tournament::{Tournament, VertexSet};

fn check_n(n: usize) -> Result<usize> {
    if n < 8 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "fooling inputs need an even n ≥ 8, got {n}"
        )));
    }
    Ok(n / 2)
}

fn check_sigma(h: usize, sigma: &Permutation) -> Result<()> {
    if sigma.len() != h - 1 {
        return Err(Error::LengthMismatch { left: sigma.len(), right: h - 1 });
    }
    Ok(())
}

/// Tournament from Alice's edges under `sigma_a` and Bob's under `sigma_b`.
pub fn fooling_cross(n: usize, sigma_a: &Permutation, sigma_b: &Permutation) -> Result<Tournament> {
    let h = check_n(n)?;
    check_sigma(h, sigma_a)?;
    check_sigma(h, sigma_b)?;
    // 1-based element of its half (1..=h) and side
    let side = |v: usize| if v < h { (v + 1, false) } else { (v - h + 1, true) };
    let sa = |e: usize| sigma_a.rank(e - 1) + 1;
    let sb = |e: usize| sigma_b.rank(e - 1) + 1;
    Tournament::from_fn(n, |u, v| {
        let ((e, ur), (f, vr)) = (side(u), side(v));
        if ur == vr {
            return match (e, f) {
                (1, _) => true,
                (_, 1) => false,
                _ => sa(e) < sa(f),
            };
        }
        // u ∈ L, v ∈ R since u < v
        match (e, f) {
            (1, 1) => true,
            (1, f) => sb(f) == 2,
            (_, 1) => true,
            (e, f) => sb(e) >= sb(f),
        }
    })
}

/// Alice owns pairs inside a half, Bob the cross pairs.
pub fn fooling_partition(n: usize) -> Result<EdgePartition> {
    let h = check_n(n)?;
    Ok(EdgePartition::from_fn(n, |u, v| {
        if (u < h) == (v < h) {
            Player::Alice
        } else {
            Player::Bob
        }
    }))
}

#[derive(Clone, Debug)]
pub struct FoolingInput {
    pub n: usize,
    pub sigma: Permutation,
    pub tournament: Tournament,
    pub partition: EdgePartition,
}

/// The matched input `(A_σ, B_σ)`.
pub fn fooling_input(n: usize, sigma: &Permutation) -> Result<FoolingInput> {
    Ok(FoolingInput {
        n,
        sigma: sigma.clone(),
        tournament: fooling_cross(n, sigma, sigma)?,
        partition: fooling_partition(n)?,
    })
}

/// Greedy set of permutations of `n/2 − 1` elements, pairwise at `ℓ∞`
/// distance at least 2, scanning candidates in lexicographic order.
pub fn greedy_fooling_set(n: usize) -> Result<Vec<Permutation>> {
    let h = check_n(n)?;
    let mut candidates: Vec<Permutation> = Permutation::all(h - 1).collect();
    let mut chosen = Vec::new();
    while !candidates.is_empty() {
        let pick = candidates.remove(0);
        candidates.retain(|c| c.max_displacement(&pick) >= 2);
        chosen.push(pick);
    }
    Ok(chosen)
}

/// `max(1, ⌊(n/2 − 1)! / 3ⁿ⌋)`, the size the greedy argument guarantees.
pub fn fooling_size_floor(n: usize) -> u128 {
    let fact: u128 = (1..=(n / 2).saturating_sub(1) as u128).product();
    let pow = 3u128.checked_pow(n as u32).unwrap_or(u128::MAX);
    (fact / pow).max(1)
}

/// No vertex is a maximum out-degree answer on all four combinations of
/// `(σ, τ)` inputs.
pub fn pair_is_fooling(n: usize, sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    let mut common: Option<VertexSet> = None;
    for (a, b) in [(sigma, sigma), (tau, tau), (sigma, tau), (tau, sigma)] {
        let m = fooling_cross(n, a, b)?.max_out_degree_set();
        common = Some(match common {
            None => m,
            Some(c) => c.intersection(&m).copied().collect(),
        });
    }
    Ok(common.is_some_and(|c| c.is_empty()))
}
