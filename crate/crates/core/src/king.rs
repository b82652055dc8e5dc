//! Deterministic `O(n)`-bit protocol for finding a king under an arbitrary
//! edge partition.
//!
//! Both players track a common candidate set `S` (initially every vertex).
//! While each player still owns more than `n` edges inside `S`, the player
//! owning more of them announces its maximum out-degree vertex `v` (counted
//! on its own edges) together with an indicator of `v`'s in-neighbours among
//! its edges; the other player answers with the indicator for its edges, and
//! `S` shrinks to `N⁻(v) ∩ S`. A king of the final `G|_S` is a king of `G`.
//! Once one side owns at most `n` live edges it ships their directions, the
//! receiver computes a king of `G|_S` and echoes it.

use crate::error::Result;
use crate::partition::{EdgePartition, Player, PrivateEdges};
use crate::protocol::{
    decode_label, encode_label, run_protocol, Bits, Cursor, Move, Party, RunConfig, Transcript,
    View,
};
use crate::tournament::{ceil_log2, Tournament};

/// One iteration of the candidate-shrinking loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrace {
    pub speaker: Player,
    /// 1-based label of the announced vertex.
    pub pivot: usize,
    pub size_before: usize,
    pub size_after: usize,
    /// Live edges owned by the speaker / by both players at round start.
    pub speaker_edges: usize,
    pub live_edges: usize,
}

#[derive(Clone, Debug)]
pub struct KingOutcome {
    pub king: usize,
    pub transcript: Transcript<usize>,
    pub rounds: Vec<RoundTrace>,
    /// Who shipped their remaining edges in the terminal step.
    pub shipper: Player,
}

enum Phase {
    Decide,
    /// Announced `pivot`; waiting for the other side's indicator.
    AwaitReply { pivot: usize, mine: Vec<bool> },
    AwaitPivot,
    AwaitShipment { expected: usize },
    AwaitEcho,
    Done(usize),
}

struct KingParty {
    me: Player,
    n: usize,
    partition: EdgePartition,
    known: PrivateEdges,
    /// Sorted 0-based candidate set.
    s: Vec<usize>,
    last_pivot: Option<usize>,
    phase: Phase,
    cursor: Cursor,
    rounds: Vec<RoundTrace>,
    shipper: Option<Player>,
}

impl KingParty {
    fn new(t: &Tournament, p: &EdgePartition, me: Player) -> Result<Self> {
        Ok(KingParty {
            me,
            n: t.n(),
            partition: p.clone(),
            known: PrivateEdges::of(t, p, me)?,
            s: (0..t.n()).collect(),
            last_pivot: None,
            phase: Phase::Decide,
            cursor: Cursor::default(),
            rounds: Vec::new(),
            shipper: None,
        })
    }

    /// Live pairs in `S` owned by each player.
    fn live_counts(&self) -> (usize, usize) {
        let (mut a, mut b) = (0, 0);
        for (x, &i) in self.s.iter().enumerate() {
            for &j in &self.s[x + 1..] {
                match self.partition.owner0(i, j) {
                    Player::Alice => a += 1,
                    Player::Bob => b += 1,
                }
            }
        }
        (a, b)
    }

    /// Max out-degree vertex of `S` over this player's own edges; lowest label on ties.
    fn own_pivot(&self) -> usize {
        let mut best = (0usize, self.s[0]);
        for &u in &self.s {
            let d = self
                .s
                .iter()
                .filter(|&&w| {
                    w != u && self.partition.owner0(u, w) == self.me && self.known.beats0(u, w) == Some(true)
                })
                .count();
            if d > best.0 {
                best = (d, u);
            }
        }
        best.1
    }

    /// Indicator over `S` of in-neighbours of `pivot` via this player's edges.
    fn in_indicator(&self, pivot: usize) -> Vec<bool> {
        self.s
            .iter()
            .map(|&w| {
                w != pivot
                    && self.partition.owner0(w, pivot) == self.me
                    && self.known.beats0(w, pivot) == Some(true)
            })
            .collect()
    }

    fn shrink(&mut self, pivot: usize, mine: &[bool], theirs: &[bool], speaker: Player, live: (usize, usize)) {
        let before = self.s.len();
        self.s = self
            .s
            .iter()
            .zip(mine.iter().zip(theirs))
            .filter(|(_, (a, b))| **a || **b)
            .map(|(&w, _)| w)
            .collect();
        self.last_pivot = Some(pivot);
        let speaker_edges = match speaker {
            Player::Alice => live.0,
            Player::Bob => live.1,
        };
        self.rounds.push(RoundTrace {
            speaker,
            pivot: pivot + 1,
            size_before: before,
            size_after: self.s.len(),
            speaker_edges,
            live_edges: live.0 + live.1,
        });
        self.phase = Phase::Decide;
    }

    /// Direction bits of this player's live edges, canonical pair order.
    fn live_bits(&self) -> Bits {
        let mut bits = Bits::new();
        for (x, &i) in self.s.iter().enumerate() {
            for &j in &self.s[x + 1..] {
                if self.partition.owner0(i, j) == self.me {
                    bits.push(self.known.beats0(i, j) == Some(true));
                }
            }
        }
        bits
    }

    fn absorb_shipment(&mut self, bits: &Bits) {
        let mut it = bits.as_slice().iter();
        let other = self.me.other();
        let pairs: Vec<(usize, usize)> = self
            .s
            .iter()
            .enumerate()
            .flat_map(|(x, &i)| self.s[x + 1..].iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| self.partition.owner0(i, j) == other)
            .collect();
        for (i, j) in pairs {
            let forward = *it.next().expect("shipment length checked");
            if forward {
                self.known.learn0(i, j);
            } else {
                self.known.learn0(j, i);
            }
        }
    }

    /// King of `G|_S` via maximum out-degree; falls back to the last pivot
    /// when `S` is empty (the pivot then dominated the previous `S`).
    fn local_king(&self) -> usize {
        if self.s.is_empty() {
            return self.last_pivot.expect("S only empties after a pivot round") + 1;
        }
        let degree = |u: usize| {
            self.s
                .iter()
                .filter(|&&w| w != u && self.known.beats0(u, w) == Some(true))
                .count()
        };
        let mut best = self.s[0];
        let mut best_d = degree(best);
        for &u in &self.s[1..] {
            let d = degree(u);
            if d > best_d {
                best = u;
                best_d = d;
            }
        }
        best + 1
    }

    fn finish(&mut self) -> Result<Move<usize>> {
        let king = self.local_king();
        self.phase = Phase::Done(king);
        if ceil_log2(self.n) == 0 {
            return Ok(Move::Output(king));
        }
        Ok(Move::Send(encode_label(king, self.n)?))
    }
}

impl Party for KingParty {
    type Output = usize;

    fn act(&mut self, view: &View<'_>) -> Result<Move<usize>> {
        loop {
            match &self.phase {
                Phase::Done(k) => return Ok(Move::Output(*k)),
                Phase::Decide => {
                    let live = self.live_counts();
                    if live.0 > self.n && live.1 > self.n {
                        let speaker = if live.1 > live.0 { Player::Bob } else { Player::Alice };
                        if speaker == self.me {
                            let pivot = self.own_pivot();
                            let mine = self.in_indicator(pivot);
                            let pos = self.s.binary_search(&pivot).expect("pivot in S");
                            let mut msg = encode_label(pos + 1, self.s.len())?;
                            msg.extend_from(&Bits::from(mine.clone()));
                            self.phase = Phase::AwaitReply { pivot, mine };
                            return Ok(Move::Send(msg));
                        }
                        self.phase = Phase::AwaitPivot;
                    } else {
                        let shipper = if live.0 <= self.n { Player::Alice } else { Player::Bob };
                        self.shipper = Some(shipper);
                        let expected = match shipper {
                            Player::Alice => live.0,
                            Player::Bob => live.1,
                        };
                        if shipper == self.me {
                            self.phase = Phase::AwaitEcho;
                            if expected > 0 {
                                return Ok(Move::Send(self.live_bits()));
                            }
                        } else if expected == 0 {
                            return self.finish();
                        } else {
                            self.phase = Phase::AwaitShipment { expected };
                        }
                    }
                }
                Phase::AwaitPivot => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let live = self.live_counts();
                    let k = self.s.len();
                    let width = ceil_log2(k);
                    let body = m.bits.as_slice();
                    if body.len() != width + k {
                        return Err(crate::Error::ProtocolContract(format!(
                            "pivot message has {} bits, expected {}",
                            body.len(),
                            width + k
                        )));
                    }
                    let pos = decode_label(&Bits::from(body[..width].to_vec()), k)?;
                    let pivot = self.s[pos - 1];
                    let theirs = body[width..].to_vec();
                    let mine = self.in_indicator(pivot);
                    self.shrink(pivot, &mine, &theirs, self.me.other(), live);
                    return Ok(Move::Send(Bits::from(mine)));
                }
                Phase::AwaitReply { pivot, mine } => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let (pivot, mine) = (*pivot, mine.clone());
                    if m.bits.len() != self.s.len() {
                        return Err(crate::Error::ProtocolContract(
                            "in-neighbour indicator has the wrong length".into(),
                        ));
                    }
                    let live = self.live_counts();
                    let theirs = m.bits.as_slice().to_vec();
                    self.shrink(pivot, &mine, &theirs, self.me, live);
                }
                Phase::AwaitShipment { expected } => {
                    let expected = *expected;
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    if m.bits.len() != expected {
                        return Err(crate::Error::ProtocolContract(format!(
                            "shipment has {} bits, expected {expected}",
                            m.bits.len()
                        )));
                    }
                    let bits = m.bits.clone();
                    self.absorb_shipment(&bits);
                    return self.finish();
                }
                Phase::AwaitEcho => {
                    if ceil_log2(self.n) == 0 {
                        self.phase = Phase::Done(1);
                        continue;
                    }
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let king = decode_label(&m.bits, self.n)?;
                    self.phase = Phase::Done(king);
                }
            }
        }
    }
}

/// Runs the protocol on `t` with the edges split by `p`.
pub fn king_protocol(t: &Tournament, p: &EdgePartition) -> Result<KingOutcome> {
    let mut alice = KingParty::new(t, p, Player::Alice)?;
    let mut bob = KingParty::new(t, p, Player::Bob)?;
    let transcript = run_protocol(&mut alice, &mut bob, &RunConfig::for_size(t.n(), 0))?;
    Ok(KingOutcome {
        king: transcript.output_alice,
        shipper: alice.shipper.expect("terminal branch reached"),
        rounds: alice.rounds,
        transcript,
    })
}

/// The cost envelope `12n + 20⌈log₂ n⌉²` the protocol is held to.
pub fn cost_envelope(n: usize) -> usize {
    let l = ceil_log2(n);
    12 * n + 20 * l * l
}
