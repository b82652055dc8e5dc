//! Two-party protocol engine.
//!
//! Each party is a state machine asked for its next [`Move`] given the
//! transcript so far. Exactly one party may speak per step; the run ends when
//! both parties have produced an output, and the engine rejects runs whose
//! outputs disagree. Every delivered bit is charged to its sender.
//!
//! Public randomness is free: both parties read identical streams from
//! [`PublicCoins`], keyed by a tag they agree on through the transcript.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
pub use crate::partition::Player;
use crate::tournament::ceil_log2;

/// A message body.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bits(Vec<bool>);

impl Bits {
    pub fn new() -> Self {
        Bits(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn extend_from(&mut self, other: &Bits) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    /// Appends `value` as a big-endian unsigned integer of `width` bits.
    pub fn push_uint(&mut self, value: u64, width: usize) {
        debug_assert!(width >= 64 || value >> width == 0);
        for k in (0..width).rev() {
            self.0.push(value >> k & 1 == 1);
        }
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader { bits: &self.0, pos: 0 }
    }
}

impl From<Vec<bool>> for Bits {
    fn from(v: Vec<bool>) -> Self {
        Bits(v)
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({self})")
    }
}

impl FromStr for Bits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(k, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(1, k + 1, format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Bits)
    }
}

/// Sequential decoder over a message body.
pub struct BitReader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl BitReader<'_> {
    pub fn bit(&mut self) -> Result<bool> {
        let b = *self.bits.get(self.pos).ok_or_else(|| {
            Error::ProtocolContract(format!("message ended after {} bits", self.pos))
        })?;
        self.pos += 1;
        Ok(b)
    }

    pub fn uint(&mut self, width: usize) -> Result<u64> {
        (0..width).try_fold(0u64, |acc, _| Ok(acc << 1 | self.bit()? as u64))
    }

    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }
}

/// Fixed-width code for a label `v ∈ 1..=m`: `v − 1` in `⌈log₂ m⌉` bits.
pub fn encode_label(v: usize, m: usize) -> Result<Bits> {
    if v == 0 || v > m {
        return Err(Error::InvalidVertex { vertex: v, n: m });
    }
    let mut bits = Bits::new();
    bits.push_uint((v - 1) as u64, ceil_log2(m));
    Ok(bits)
}

pub fn decode_label(bits: &Bits, m: usize) -> Result<usize> {
    if bits.len() != ceil_log2(m) {
        return Err(Error::LengthMismatch {
            left: bits.len(),
            right: ceil_log2(m),
        });
    }
    let v = bits.reader().uint(bits.len())? as usize + 1;
    if v > m {
        return Err(Error::InvalidVertex { vertex: v, n: m });
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Message {
    pub sender: Player,
    pub bits: Bits,
}

/// Full record of a completed run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript<O> {
    pub messages: Vec<Message>,
    pub bits_alice: usize,
    pub bits_bob: usize,
    /// Maximal runs of consecutive messages from one sender.
    pub rounds: usize,
    pub output_alice: O,
    pub output_bob: O,
}

impl<O> Transcript<O> {
    pub fn total_bits(&self) -> usize {
        self.bits_alice + self.bits_bob
    }

    pub fn output(&self) -> &O {
        &self.output_alice
    }

    pub fn map_output<P>(self, mut f: impl FnMut(O) -> P) -> Transcript<P> {
        Transcript {
            messages: self.messages,
            bits_alice: self.bits_alice,
            bits_bob: self.bits_bob,
            rounds: self.rounds,
            output_alice: f(self.output_alice),
            output_bob: f(self.output_bob),
        }
    }

    /// `sender,length,bits` per message, then a totals footer.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for m in &self.messages {
            out.push_str(&format!("{},{},{}\n", m.sender, m.bits.len(), m.bits));
        }
        out.push_str(&format!(
            "total,bits_alice={},bits_bob={},bits={},rounds={}\n",
            self.bits_alice,
            self.bits_bob,
            self.total_bits(),
            self.rounds
        ));
        out
    }
}

/// Counts rounds in a message sequence.
pub fn count_rounds(messages: &[Message]) -> usize {
    messages
        .iter()
        .enumerate()
        .filter(|(k, m)| *k == 0 || messages[k - 1].sender != m.sender)
        .count()
}

/// Shared random tape, visible to both parties at no cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PublicCoins {
    seed: u64,
}

impl PublicCoins {
    pub fn new(seed: u64) -> Self {
        PublicCoins { seed }
    }

    /// Independent stream for `tag`; equal tags give equal streams.
    pub fn stream(&self, tag: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(tag);
        rng
    }
}

/// What a party sees when asked to move.
pub struct View<'a> {
    pub me: Player,
    pub messages: &'a [Message],
    pub coins: &'a PublicCoins,
}

impl<'a> View<'a> {
    /// The same view restricted to messages from `start` on; used to run a
    /// sub-protocol inside a larger one.
    pub fn suffix(&self, start: usize) -> View<'a> {
        View {
            me: self.me,
            messages: &self.messages[start..],
            coins: self.coins,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move<O> {
    Send(Bits),
    Wait,
    Output(O),
}

pub trait Party {
    type Output;

    fn act(&mut self, view: &View<'_>) -> Result<Move<Self::Output>>;
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub max_messages: usize,
    pub seed: u64,
}

impl RunConfig {
    /// Default message budget of `10·n²`.
    pub fn for_size(n: usize, seed: u64) -> Self {
        RunConfig {
            max_messages: 10 * n.max(1) * n.max(1),
            seed,
        }
    }
}

pub fn run_protocol<O, A, B>(alice: &mut A, bob: &mut B, config: &RunConfig) -> Result<Transcript<O>>
where
    O: Clone + PartialEq + fmt::Debug,
    A: Party<Output = O> + ?Sized,
    B: Party<Output = O> + ?Sized,
{
    let coins = PublicCoins::new(config.seed);
    let mut messages: Vec<Message> = Vec::new();
    let (mut bits_alice, mut bits_bob) = (0usize, 0usize);
    let mut out_alice: Option<O> = None;
    let mut out_bob: Option<O> = None;

    loop {
        let ma = match &out_alice {
            Some(_) => None,
            None => Some(alice.act(&View {
                me: Player::Alice,
                messages: &messages,
                coins: &coins,
            })?),
        };
        let mb = match &out_bob {
            Some(_) => None,
            None => Some(bob.act(&View {
                me: Player::Bob,
                messages: &messages,
                coins: &coins,
            })?),
        };

        let mut sent: Option<Message> = None;
        for (player, mv) in [(Player::Alice, ma), (Player::Bob, mb)] {
            match mv {
                None | Some(Move::Wait) => {}
                Some(Move::Output(o)) => match player {
                    Player::Alice => out_alice = Some(o),
                    Player::Bob => out_bob = Some(o),
                },
                Some(Move::Send(bits)) => {
                    if sent.is_some() {
                        return Err(Error::ProtocolContract(
                            "both parties spoke in the same step".into(),
                        ));
                    }
                    sent = Some(Message { sender: player, bits });
                }
            }
        }

        match sent {
            Some(m) => {
                match m.sender {
                    Player::Alice => bits_alice += m.bits.len(),
                    Player::Bob => bits_bob += m.bits.len(),
                }
                messages.push(m);
                if messages.len() > config.max_messages {
                    return Err(Error::Nontermination {
                        limit: config.max_messages,
                    });
                }
            }
            None => match (&out_alice, &out_bob) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return Err(Error::ProtocolContract(format!(
                            "outputs differ: Alice {a:?}, Bob {b:?}"
                        )));
                    }
                    break;
                }
                _ => {
                    return Err(Error::ProtocolContract(
                        "no party spoke and the run is not finished".into(),
                    ))
                }
            },
        }
    }

    let total: usize = messages.iter().map(|m| m.bits.len()).sum();
    assert_eq!(total, bits_alice + bits_bob, "bit accounting drifted");
    Ok(Transcript {
        rounds: count_rounds(&messages),
        messages,
        bits_alice,
        bits_bob,
        output_alice: out_alice.expect("finished"),
        output_bob: out_bob.expect("finished"),
    })
}

/// Tracks how much of the transcript a party has already consumed.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cursor {
    seen: usize,
}

impl Cursor {
    pub fn at(seen: usize) -> Self {
        Cursor { seen }
    }

    /// Next unread message from the other party, skipping own messages.
    pub fn next_from_other<'a>(&mut self, view: &View<'a>) -> Option<&'a Message> {
        while self.seen < view.messages.len() {
            let m = &view.messages[self.seen];
            self.seen += 1;
            if m.sender != view.me {
                return Some(m);
            }
        }
        None
    }
}
