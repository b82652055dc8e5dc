//! Randomized Greater-Than by binary search on the longest common prefix.
//!
//! Operands are `x − 1` and `y − 1` written with `m = ⌈log₂ N⌉` bits, most
//! significant first. Each probe compares prefixes of one length through a
//! public-coin inner-product fingerprint: Alice sends the parities, Bob says
//! whether his match. Once the first differing position is located, Alice
//! sends her bit there and Bob answers with the result.

use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::Player;
use crate::protocol::{run_protocol, Bits, Cursor, Move, Party, RunConfig, Transcript, View};
use crate::tournament::ceil_log2;

/// Fingerprint length per probe: `2⌈log₂ m⌉ + 4`.
pub fn fingerprint_bits(universe: usize) -> usize {
    2 * ceil_log2(ceil_log2(universe)) + 4
}

/// Most probes the binary search can take.
pub fn max_probes(universe: usize) -> usize {
    ceil_log2(ceil_log2(universe) + 1)
}

/// Worst-case bits of one comparison over `[1, universe]`.
pub fn gt_cost_bound(universe: usize) -> usize {
    if universe <= 1 {
        return 0;
    }
    max_probes(universe) * (fingerprint_bits(universe) + 1) + 2
}

/// Worst-case messages of one comparison.
pub(crate) fn gt_message_bound(universe: usize) -> usize {
    2 * max_probes(universe) + 2
}

#[derive(Clone, Copy, Debug)]
enum Phase {
    Probe,
    AwaitFingerprint { mid: usize },
    AwaitEquality { mid: usize },
    /// Alice: her bit went out, waiting for the answer.
    AwaitAnswer,
    /// Bob: waiting for Alice's bit at the differing position.
    AwaitBit,
    Done(bool),
}

/// One side of a comparison; `coin_base` separates the public random rows
/// of independent comparisons sharing one run.
pub(crate) struct GtParty {
    me: Player,
    /// `value − 1`, MSB first.
    bits: Vec<bool>,
    universe: usize,
    coin_base: u64,
    lo: usize,
    hi: usize,
    probe: u64,
    phase: Phase,
    cursor: Cursor,
}

impl GtParty {
    pub(crate) fn new(me: Player, value: usize, universe: usize, coin_base: u64) -> Result<Self> {
        if value == 0 || value > universe {
            return Err(Error::InvalidArgument(format!(
                "operand {value} outside [1, {universe}]"
            )));
        }
        let m = ceil_log2(universe);
        let bits = (0..m).rev().map(|k| (value - 1) >> k & 1 == 1).collect();
        Ok(GtParty {
            me,
            bits,
            universe,
            coin_base,
            lo: 0,
            hi: m,
            probe: 0,
            phase: Phase::Probe,
            cursor: Cursor::default(),
        })
    }

    fn fingerprint(&self, len: usize, coins: &crate::protocol::PublicCoins) -> Vec<bool> {
        let mut rng = coins.stream(self.coin_base << 8 | self.probe);
        (0..fingerprint_bits(self.universe))
            .map(|_| {
                let mut parity = false;
                for &b in &self.bits[..len] {
                    parity ^= b & rng.gen::<bool>();
                }
                parity
            })
            .collect()
    }

    /// Applies the outcome of a probe at length `mid`.
    fn narrow(&mut self, mid: usize, equal: bool) {
        if equal {
            self.lo = mid;
        } else {
            self.hi = mid - 1;
        }
        self.probe += 1;
        self.phase = Phase::Probe;
    }
}

impl Party for GtParty {
    type Output = bool;

    fn act(&mut self, view: &View<'_>) -> Result<Move<bool>> {
        loop {
            match self.phase {
                Phase::Done(b) => return Ok(Move::Output(b)),
                Phase::Probe if self.lo < self.hi => {
                    let mid = (self.lo + self.hi).div_ceil(2);
                    match self.me {
                        Player::Alice => {
                            self.phase = Phase::AwaitEquality { mid };
                            return Ok(Move::Send(Bits::from(self.fingerprint(mid, view.coins))));
                        }
                        Player::Bob => self.phase = Phase::AwaitFingerprint { mid },
                    }
                }
                Phase::Probe => {
                    // lo == hi: prefixes of length lo agree
                    if self.lo == self.bits.len() {
                        self.phase = Phase::Done(true);
                        continue;
                    }
                    match self.me {
                        Player::Alice => {
                            self.phase = Phase::AwaitAnswer;
                            return Ok(Move::Send(Bits::from(vec![self.bits[self.lo]])));
                        }
                        Player::Bob => self.phase = Phase::AwaitBit,
                    }
                }
                Phase::AwaitFingerprint { mid } => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let equal = m.bits.as_slice() == self.fingerprint(mid, view.coins).as_slice();
                    self.narrow(mid, equal);
                    return Ok(Move::Send(Bits::from(vec![equal])));
                }
                Phase::AwaitEquality { mid } => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let equal = m.bits.reader().bit()?;
                    self.narrow(mid, equal);
                }
                Phase::AwaitBit => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let theirs = m.bits.reader().bit()?;
                    // x ≥ y iff Alice has the 1; a fingerprint slip (equal
                    // bits) resolves to 1.
                    let answer = theirs || !self.bits[self.lo];
                    self.phase = Phase::Done(answer);
                    return Ok(Move::Send(Bits::from(vec![answer])));
                }
                Phase::AwaitAnswer => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    self.phase = Phase::Done(m.bits.reader().bit()?);
                }
            }
        }
    }
}

/// `GT(x, y) = 1` iff `x ≥ y`, for `x, y ∈ [1, universe]`. `seed` drives the
/// public coins.
pub fn gt_protocol(x: usize, y: usize, universe: usize, seed: u64) -> Result<(bool, Transcript<bool>)> {
    let mut alice = GtParty::new(Player::Alice, x, universe, 0)?;
    let mut bob = GtParty::new(Player::Bob, y, universe, 0)?;
    let config = RunConfig {
        max_messages: gt_message_bound(universe),
        seed,
    };
    let tr = run_protocol(&mut alice, &mut bob, &config)?;
    Ok((tr.output_alice, tr))
}
