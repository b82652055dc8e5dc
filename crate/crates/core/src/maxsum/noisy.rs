//! Maximum finding with a noisy comparison oracle: a single-elimination
//! bracket where a match at height `h` is the majority of up to
//! `12(h + 1) + 1` oracle answers (stopping once the majority is settled).

use crate::error::{Error, Result};

/// Upper bound on oracle calls per element: `Σ_h (12(h+1)+1) / 2^(h+1) = 25`.
pub const CALLS_PER_ITEM: usize = 25;

pub fn votes_at_height(h: usize) -> usize {
    12 * (h + 1) + 1
}

/// Resumable bracket: ask [`NoisyMax::next_query`], feed the answer to
/// [`NoisyMax::record`]. Queries `(i, j)` ask whether `s_i ≥ s_j`.
#[derive(Clone, Debug)]
pub struct NoisyMax {
    /// Survivors of the current height, ascending 0-based index.
    alive: Vec<usize>,
    winners: Vec<usize>,
    height: usize,
    /// Index into `alive` of the current match's first player.
    pos: usize,
    yes: usize,
    no: usize,
    calls: usize,
}

impl NoisyMax {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("noisy max over an empty list".into()));
        }
        let mut d = NoisyMax {
            alive: (0..n).collect(),
            winners: Vec::new(),
            height: 0,
            pos: 0,
            yes: 0,
            no: 0,
            calls: 0,
        };
        d.settle();
        Ok(d)
    }

    /// Handles byes and finished heights until a real match is pending.
    fn settle(&mut self) {
        loop {
            if self.alive.len() == 1 {
                return;
            }
            if self.pos + 1 < self.alive.len() {
                return;
            }
            if self.pos < self.alive.len() {
                self.winners.push(self.alive[self.pos]);
            }
            self.alive = std::mem::take(&mut self.winners);
            self.pos = 0;
            self.height += 1;
        }
    }

    /// 0-based pair to compare next, or `None` once the winner is known.
    pub fn next_query(&self) -> Option<(usize, usize)> {
        (self.alive.len() > 1).then(|| (self.alive[self.pos], self.alive[self.pos + 1]))
    }

    pub fn record(&mut self, first_at_least_second: bool) {
        assert!(self.alive.len() > 1, "bracket already decided");
        self.calls += 1;
        if first_at_least_second {
            self.yes += 1;
        } else {
            self.no += 1;
        }
        let half = votes_at_height(self.height) / 2;
        if self.yes > half || self.no > half {
            let w = if self.yes > half { self.pos } else { self.pos + 1 };
            self.winners.push(self.alive[w]);
            self.pos += 2;
            self.yes = 0;
            self.no = 0;
            self.settle();
        }
    }

    /// 0-based winner once decided.
    pub fn winner(&self) -> Option<usize> {
        (self.alive.len() == 1).then(|| self.alive[0])
    }

    pub fn calls(&self) -> usize {
        self.calls
    }
}

/// Runs the bracket over `cmp` (0-based indices, answers `s_i ≥ s_j`).
/// Returns the 1-based winner and the number of oracle calls.
pub fn noisy_max(n: usize, mut cmp: impl FnMut(usize, usize) -> bool) -> Result<(usize, usize)> {
    let mut d = NoisyMax::new(n)?;
    while let Some((i, j)) = d.next_query() {
        d.record(cmp(i, j));
    }
    Ok((d.winner().expect("loop ends when decided") + 1, d.calls()))
}
