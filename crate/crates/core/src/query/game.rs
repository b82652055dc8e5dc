//! Prover–Delayer game for king finding.
//!
//! The Prover queries pairs; the Delayer either fixes the direction or
//! defers, scoring a point and letting the Prover choose. The game ends
//! when the Prover names a vertex that is a king in every completion.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tournament::{pair_index, pairs, Tournament, VertexSet};

/// Each pair is unset or directed; `Some(true)` means `i → j` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialOrientation {
    n: usize,
    dirs: Vec<Option<bool>>,
}

impl PartialOrientation {
    pub fn new(n: usize) -> Self {
        PartialOrientation {
            n,
            dirs: vec![None; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Is `u → v` known? `None` while unset. 1-based.
    pub fn beats(&self, u: usize, v: usize) -> Option<bool> {
        let (i, j) = (u.min(v) - 1, u.max(v) - 1);
        self.dirs[pair_index(self.n, i, j)].map(|fwd| fwd == (u < v))
    }

    pub fn set(&mut self, from: usize, to: usize) {
        let (i, j) = (from.min(to) - 1, from.max(to) - 1);
        self.dirs[pair_index(self.n, i, j)] = Some(from < to);
    }

    pub fn is_set(&self, u: usize, v: usize) -> bool {
        self.beats(u, v).is_some()
    }

    pub fn unset_pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.n)
            .filter(|&(i, j)| self.dirs[pair_index(self.n, i, j)].is_none())
            .map(|(i, j)| (i + 1, j + 1))
            .collect()
    }

    /// `v` is a king in every completion: each `w` is beaten by `v`, or by
    /// some `u` that `v` beats, through fixed edges only. Unfixed edges can
    /// always be turned against `v`, so this is exact.
    pub fn certified_king(&self, v: usize) -> bool {
        let out: Vec<usize> = (1..=self.n).filter(|&u| u != v && self.beats(v, u) == Some(true)).collect();
        (1..=self.n).all(|w| {
            w == v
                || self.beats(v, w) == Some(true)
                || out.iter().any(|&u| self.beats(u, w) == Some(true))
        })
    }

    pub fn certified_kings(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.certified_king(v)).collect()
    }

    /// Same question by enumerating every completion (small `n` only).
    pub fn king_in_all_completions(&self, v: usize) -> bool {
        let unset = self.unset_pairs();
        assert!(unset.len() <= 20, "too many completions to enumerate");
        (0u32..1 << unset.len()).all(|mask| {
            let mut full = self.clone();
            for (k, &(i, j)) in unset.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    full.set(i, j);
                } else {
                    full.set(j, i);
                }
            }
            let t = Tournament::from_fn(self.n, |a, b| full.beats(a + 1, b + 1) == Some(true))
                .expect("n ≥ 1");
            t.is_king(v)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DelayerMove {
    Defer,
    /// The first named vertex (the Prover's focus) wins.
    FirstWins,
    SecondWins,
}

pub trait Delayer {
    /// `first` is the Prover's focus vertex for this query.
    fn respond(&mut self, first: usize, second: usize, rho: &PartialOrientation) -> DelayerMove;
}

pub trait Prover {
    /// Next pair to query, or `None` to stop and answer.
    fn next_query(&mut self, rho: &PartialOrientation) -> Option<(usize, usize)>;
    /// Direction when the Delayer defers: `true` makes `first` win.
    fn choose(&mut self, first: usize, second: usize) -> bool;
    fn output(&self, rho: &PartialOrientation) -> usize;
}

pub struct AlwaysDefer;

impl Delayer for AlwaysDefer {
    fn respond(&mut self, _: usize, _: usize, _: &PartialOrientation) -> DelayerMove {
        DelayerMove::Defer
    }
}

/// Defers the first `k` queries, then always turns the edge toward the
/// Prover's focus vertex.
pub struct DeferFirst {
    pub k: usize,
    asked: usize,
}

impl DeferFirst {
    pub fn new(k: usize) -> Self {
        DeferFirst { k, asked: 0 }
    }
}

impl Delayer for DeferFirst {
    fn respond(&mut self, _: usize, _: usize, _: &PartialOrientation) -> DelayerMove {
        self.asked += 1;
        if self.asked <= self.k {
            DelayerMove::Defer
        } else {
            DelayerMove::SecondWins
        }
    }
}

/// Never defers; every edge points at the Prover's focus vertex.
pub struct TowardPivot;

impl Delayer for TowardPivot {
    fn respond(&mut self, _: usize, _: usize, _: &PartialOrientation) -> DelayerMove {
        DelayerMove::SecondWins
    }
}

/// Defers with probability `p_defer`, otherwise picks a uniform direction.
pub struct RandomDelayer {
    rng: ChaCha8Rng,
    p_defer: f64,
}

impl RandomDelayer {
    pub fn new(seed: u64, p_defer: f64) -> Self {
        RandomDelayer {
            rng: ChaCha8Rng::seed_from_u64(seed),
            p_defer,
        }
    }
}

impl Delayer for RandomDelayer {
    fn respond(&mut self, _: usize, _: usize, _: &PartialOrientation) -> DelayerMove {
        if self.rng.gen_bool(self.p_defer) {
            DelayerMove::Defer
        } else if self.rng.gen() {
            DelayerMove::FirstWins
        } else {
            DelayerMove::SecondWins
        }
    }
}

/// Fix the lowest-label vertex `v` of `V`, query all its pairs inside `V`
/// (directing deferred ones out of `v`), move to `N⁻(v) ∩ V`; the last
/// pivot is the answer.
pub struct Alg3Prover {
    v_set: Vec<usize>,
    pivot: Option<usize>,
    pending: Vec<usize>,
    last: usize,
}

impl Alg3Prover {
    pub fn new(n: usize) -> Self {
        Alg3Prover {
            v_set: (1..=n).collect(),
            pivot: None,
            pending: Vec::new(),
            last: 1,
        }
    }
}

impl Prover for Alg3Prover {
    fn next_query(&mut self, rho: &PartialOrientation) -> Option<(usize, usize)> {
        loop {
            if let Some(v) = self.pivot {
                while let Some(u) = self.pending.pop() {
                    if !rho.is_set(v, u) {
                        return Some((v, u));
                    }
                }
                self.v_set.retain(|&u| u != v && rho.beats(u, v) == Some(true));
                self.pivot = None;
            }
            let &v = self.v_set.first()?;
            self.pivot = Some(v);
            self.last = v;
            self.pending = self.v_set.iter().rev().copied().filter(|&u| u != v).collect();
        }
    }

    fn choose(&mut self, _: usize, _: usize) -> bool {
        true
    }

    fn output(&self, _: &PartialOrientation) -> usize {
        self.last
    }
}

/// Queries unset pairs in lexicographic order and stops as soon as some
/// vertex is certified; deferred edges go to the lower label.
pub struct LexProver;

impl Prover for LexProver {
    fn next_query(&mut self, rho: &PartialOrientation) -> Option<(usize, usize)> {
        if !rho.certified_kings().is_empty() {
            return None;
        }
        rho.unset_pairs().first().copied()
    }

    fn choose(&mut self, first: usize, second: usize) -> bool {
        first < second
    }

    fn output(&self, rho: &PartialOrientation) -> usize {
        rho.certified_kings().first().copied().unwrap_or(1)
    }
}

/// Queries uniformly random unset pairs until some vertex is certified.
pub struct RandomProver {
    rng: ChaCha8Rng,
}

impl RandomProver {
    pub fn new(seed: u64) -> Self {
        RandomProver {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Prover for RandomProver {
    fn next_query(&mut self, rho: &PartialOrientation) -> Option<(usize, usize)> {
        if !rho.certified_kings().is_empty() {
            return None;
        }
        let unset = rho.unset_pairs();
        let (i, j) = unset[self.rng.gen_range(0..unset.len())];
        Some(if self.rng.gen() { (i, j) } else { (j, i) })
    }

    fn choose(&mut self, _: usize, _: usize) -> bool {
        self.rng.gen()
    }

    fn output(&self, rho: &PartialOrientation) -> usize {
        rho.certified_kings().first().copied().unwrap_or(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameResult {
    pub delayer_score: usize,
    pub queries: usize,
    pub prover_output: usize,
    /// The output is a king in every completion of the final orientation.
    pub valid: bool,
    /// Queries made when some vertex first became certified.
    pub first_certified_after: Option<usize>,
}

pub fn play_game(n: usize, prover: &mut dyn Prover, delayer: &mut dyn Delayer) -> GameResult {
    let mut rho = PartialOrientation::new(n);
    let (mut score, mut queries) = (0, 0);
    let mut first_certified_after = None;
    loop {
        if first_certified_after.is_none() && !rho.certified_kings().is_empty() {
            first_certified_after = Some(queries);
        }
        let Some((a, b)) = prover.next_query(&rho) else {
            break;
        };
        if rho.is_set(a, b) {
            continue;
        }
        queries += 1;
        let a_wins = match delayer.respond(a, b, &rho) {
            DelayerMove::Defer => {
                score += 1;
                prover.choose(a, b)
            }
            DelayerMove::FirstWins => true,
            DelayerMove::SecondWins => false,
        };
        if a_wins {
            rho.set(a, b);
        } else {
            rho.set(b, a);
        }
    }
    let out = prover.output(&rho);
    GameResult {
        delayer_score: score,
        queries,
        prover_output: out,
        valid: rho.certified_king(out),
        first_certified_after,
    }
}

pub fn play_alg3(n: usize, delayer: &mut dyn Delayer) -> GameResult {
    play_game(n, &mut Alg3Prover::new(n), delayer)
}

/// Minimax value of the game (equivalently the decision-tree rank of king
/// finding) for `n ≤ 4`.
pub fn exact_game_value(n: usize) -> Result<usize> {
    if n == 0 || n > 4 {
        return Err(Error::UnsupportedSize(format!(
            "exact game value is computed for 1 ≤ n ≤ 4, got {n}"
        )));
    }
    fn value(rho: &PartialOrientation, memo: &mut HashMap<PartialOrientation, usize>) -> usize {
        if let Some(&v) = memo.get(rho) {
            return v;
        }
        let best = if !rho.certified_kings().is_empty() {
            0
        } else {
            rho.unset_pairs()
                .into_iter()
                .map(|(i, j)| {
                    let mut fwd = rho.clone();
                    fwd.set(i, j);
                    let mut back = rho.clone();
                    back.set(j, i);
                    let (a, b) = (value(&fwd, memo), value(&back, memo));
                    if a == b {
                        a + 1
                    } else {
                        a.max(b)
                    }
                })
                .min()
                .expect("an uncertified orientation has an unset pair")
        };
        memo.insert(rho.clone(), best);
        best
    }
    Ok(value(&PartialOrientation::new(n), &mut HashMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certification_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=5 {
            for _ in 0..300 {
                let mut rho = PartialOrientation::new(n);
                for (i, j) in pairs(n) {
                    match rng.gen_range(0..3) {
                        0 => rho.set(i + 1, j + 1),
                        1 => rho.set(j + 1, i + 1),
                        _ => {}
                    }
                }
                for v in 1..=n {
                    assert_eq!(rho.certified_king(v), rho.king_in_all_completions(v));
                }
            }
        }
    }

    #[test]
    fn game_values() {
        assert_eq!(exact_game_value(1).unwrap(), 0);
        assert_eq!(exact_game_value(2).unwrap(), 1);
        assert_eq!(exact_game_value(3).unwrap(), 2);
        assert_eq!(exact_game_value(4).unwrap(), 3);
        assert!(matches!(exact_game_value(5), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn alg3_against_always_defer() {
        for n in 1..=16 {
            let r = play_alg3(n, &mut AlwaysDefer);
            assert_eq!(r.delayer_score, n - 1);
            assert_eq!(r.prover_output, 1);
            assert!(r.valid);
        }
    }

    #[test]
    fn alg3_against_toward_pivot() {
        for n in 1..=16 {
            let r = play_alg3(n, &mut TowardPivot);
            assert_eq!(r.delayer_score, 0);
            assert!(r.valid);
        }
    }

    #[test]
    fn defer_first_scores_and_blocks_early_stops() {
        for n in 2..=10 {
            let r = play_alg3(n, &mut DeferFirst::new(n - 1));
            assert_eq!(r.delayer_score, n - 1);
            assert!(r.valid);
            assert_eq!(play_alg3(n, &mut DeferFirst::new(0)).delayer_score, 0);
            for r in [
                play_game(n, &mut LexProver, &mut DeferFirst::new(n - 1)),
                play_game(n, &mut RandomProver::new(n as u64), &mut DeferFirst::new(n - 1)),
            ] {
                assert!(r.valid);
                assert!(r.first_certified_after.unwrap() >= n - 1);
                assert!(r.delayer_score >= n - 1);
            }
        }
    }

    #[test]
    fn random_delayers_capped() {
        for n in [6, 10, 16] {
            for seed in 0..100 {
                let r = play_alg3(n, &mut RandomDelayer::new(seed, 0.5));
                assert!(r.delayer_score < n);
                assert!(r.valid);
            }
        }
    }
}
