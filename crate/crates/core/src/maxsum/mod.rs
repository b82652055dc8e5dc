//! MAXSUM and maximum out-degree: `argmax_j (a_j + b_j)` with `a` held by
//! Alice and `b` by Bob.
//!
//! Vectors are plain `Vec<usize>` with a public entry bound; for degree
//! vectors of an `n`-vertex tournament the bound is `n − 1`.

pub mod gt;
pub mod noisy;

pub use gt::{gt_cost_bound, gt_protocol};
pub use noisy::{noisy_max, NoisyMax, CALLS_PER_ITEM};

use crate::error::{Error, Result};
use crate::partition::{EdgePartition, Player};
use crate::protocol::{
    decode_label, encode_label, run_protocol, Bits, Cursor, Move, Party, RunConfig, Transcript,
    View,
};
use crate::tournament::{ceil_log2, pairs, Tournament};
use gt::{gt_message_bound, GtParty};

/// Out-degree vector restricted to one player's edges.
pub type DegreeVector = Vec<usize>;

/// Lowest index attaining the maximum of `a + b` (1-based).
pub fn argmax_sum(a: &[usize], b: &[usize]) -> usize {
    let mut best = 0;
    for j in 1..a.len() {
        if a[j] + b[j] > a[best] + b[best] {
            best = j;
        }
    }
    best + 1
}

fn check_inputs(a: &[usize], b: &[usize], bound: usize) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty vectors".into()));
    }
    if let Some(&x) = a.iter().chain(b).find(|&&x| x > bound) {
        return Err(Error::InvalidArgument(format!("entry {x} exceeds the bound {bound}")));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct MaxsumOutcome {
    pub index: usize,
    pub transcript: Transcript<usize>,
    /// Greater-Than calls made (randomized mode only).
    pub comparisons: usize,
}

// --------------------------------------------------------------------------
// deterministic

struct DetParty<'a> {
    me: Player,
    values: &'a [usize],
    width: usize,
    cursor: Cursor,
    done: Option<usize>,
    sent: bool,
}

impl Party for DetParty<'_> {
    type Output = usize;

    fn act(&mut self, view: &View<'_>) -> Result<Move<usize>> {
        let n = self.values.len();
        if let Some(k) = self.done {
            return Ok(Move::Output(k));
        }
        match self.me {
            Player::Alice => {
                if !self.sent {
                    self.sent = true;
                    let mut msg = Bits::new();
                    for &x in self.values {
                        msg.push_uint(x as u64, self.width);
                    }
                    if !msg.is_empty() {
                        return Ok(Move::Send(msg));
                    }
                }
                if ceil_log2(n) == 0 {
                    self.done = Some(1);
                    return Ok(Move::Output(1));
                }
                let Some(m) = self.cursor.next_from_other(view) else {
                    return Ok(Move::Wait);
                };
                let k = decode_label(&m.bits, n)?;
                self.done = Some(k);
                Ok(Move::Output(k))
            }
            Player::Bob => {
                let theirs: Vec<usize> = if self.width == 0 {
                    vec![0; n]
                } else {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let mut rd = m.bits.reader();
                    (0..n).map(|_| rd.uint(self.width).map(|x| x as usize)).collect::<Result<_>>()?
                };
                let k = argmax_sum(&theirs, self.values);
                self.done = Some(k);
                Ok(if ceil_log2(n) == 0 { Move::Output(k) } else { Move::Send(encode_label(k, n)?) })
            }
        }
    }
}

/// Alice ships her vector, Bob echoes the argmax. Entries must lie in
/// `[0, bound]`.
pub fn maxsum_det(a: &[usize], b: &[usize], bound: usize) -> Result<MaxsumOutcome> {
    check_inputs(a, b, bound)?;
    let width = ceil_log2(bound + 1);
    let mk = |me, values| DetParty {
        me,
        values,
        width,
        cursor: Cursor::default(),
        done: None,
        sent: false,
    };
    let (mut alice, mut bob) = (mk(Player::Alice, a), mk(Player::Bob, b));
    let transcript = run_protocol(&mut alice, &mut bob, &RunConfig::for_size(a.len(), 0))?;
    Ok(MaxsumOutcome {
        index: transcript.output_alice,
        transcript,
        comparisons: 0,
    })
}

// --------------------------------------------------------------------------
// randomized

/// Drives the noisy bracket; each comparison `s_i ≥ s_j` is a Greater-Than
/// run on `a_i − a_j + bound + 1` versus `b_j − b_i + bound + 1`.
struct RandParty<'a> {
    me: Player,
    values: &'a [usize],
    bound: usize,
    bracket: NoisyMax,
    current: Option<(GtParty, usize)>,
    comparisons: u64,
}

impl RandParty<'_> {
    fn universe(&self) -> usize {
        2 * self.bound + 1
    }

    fn operand(&self, i: usize, j: usize) -> usize {
        let shift = self.bound + 1;
        match self.me {
            Player::Alice => self.values[i] + shift - self.values[j],
            Player::Bob => self.values[j] + shift - self.values[i],
        }
    }
}

impl Party for RandParty<'_> {
    type Output = usize;

    fn act(&mut self, view: &View<'_>) -> Result<Move<usize>> {
        loop {
            if self.current.is_none() {
                let Some((i, j)) = self.bracket.next_query() else {
                    return Ok(Move::Output(self.bracket.winner().expect("decided") + 1));
                };
                let gt = GtParty::new(self.me, self.operand(i, j), self.universe(), self.comparisons)?;
                self.comparisons += 1;
                self.current = Some((gt, view.messages.len()));
            }
            let (gt, start) = self.current.as_mut().expect("set above");
            match gt.act(&view.suffix(*start))? {
                Move::Output(bit) => {
                    self.current = None;
                    self.bracket.record(bit);
                }
                other @ (Move::Send(_) | Move::Wait) => {
                    return Ok(match other {
                        Move::Send(b) => Move::Send(b),
                        _ => Move::Wait,
                    })
                }
            }
        }
    }
}

/// Noisy bracket over Greater-Than comparisons; `seed` drives the public
/// coins.
pub fn maxsum_rand(a: &[usize], b: &[usize], bound: usize, seed: u64) -> Result<MaxsumOutcome> {
    check_inputs(a, b, bound)?;
    let n = a.len();
    let mk = |me, values| -> Result<RandParty<'_>> {
        Ok(RandParty {
            me,
            values,
            bound,
            bracket: NoisyMax::new(n)?,
            current: None,
            comparisons: 0,
        })
    };
    let (mut alice, mut bob) = (mk(Player::Alice, a)?, mk(Player::Bob, b)?);
    let config = RunConfig {
        max_messages: CALLS_PER_ITEM * n * gt_message_bound(2 * bound + 1) + 1,
        seed,
    };
    let transcript = run_protocol(&mut alice, &mut bob, &config)?;
    Ok(MaxsumOutcome {
        index: transcript.output_alice,
        comparisons: alice.comparisons as usize,
        transcript,
    })
}

// --------------------------------------------------------------------------
// maximum out-degree

/// Each player's out-degrees counted on its own edges.
pub fn mod_degree_vectors(t: &Tournament, p: &EdgePartition) -> Result<(DegreeVector, DegreeVector)> {
    if t.n() != p.n() {
        return Err(Error::LengthMismatch { left: t.n(), right: p.n() });
    }
    let n = t.n();
    let (mut a, mut b) = (vec![0; n], vec![0; n]);
    for (i, j) in pairs(n) {
        let winner = if t.beats0(i, j) { i } else { j };
        match p.owner0(i, j) {
            Player::Alice => a[winner] += 1,
            Player::Bob => b[winner] += 1,
        }
    }
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModMode {
    Det,
    Rand { seed: u64 },
}

/// A maximum out-degree vertex (always in `Det` mode, with probability at
/// least 2/3 in `Rand` mode).
pub fn mod_protocol(t: &Tournament, p: &EdgePartition, mode: ModMode) -> Result<MaxsumOutcome> {
    let (a, b) = mod_degree_vectors(t, p)?;
    let bound = t.n() - 1;
    match mode {
        ModMode::Det => maxsum_det(&a, &b, bound),
        ModMode::Rand { seed } => maxsum_rand(&a, &b, bound, seed),
    }
}
