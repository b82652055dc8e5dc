use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tournament::{pair_count, pair_index, pairs, parse_header_and_body, Tournament};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Player::Alice => 'A',
            Player::Bob => 'B',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Public assignment of every unordered pair to the player who knows its direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgePartition {
    n: usize,
    owners: Vec<Player>,
}

impl EdgePartition {
    pub fn new(n: usize, owners: Vec<Player>) -> Result<Self> {
        if owners.len() != pair_count(n) {
            return Err(Error::LengthMismatch {
                left: owners.len(),
                right: pair_count(n),
            });
        }
        Ok(EdgePartition { n, owners })
    }

    /// Owner chosen per 0-based pair `(i, j)`, `i < j`.
    pub fn from_fn(n: usize, mut owner: impl FnMut(usize, usize) -> Player) -> Self {
        EdgePartition {
            n,
            owners: pairs(n).map(|(i, j)| owner(i, j)).collect(),
        }
    }

    pub fn all(n: usize, player: Player) -> Self {
        EdgePartition {
            n,
            owners: vec![player; pair_count(n)],
        }
    }

    /// Alice owns the first half of the pairs in canonical order, Bob the rest.
    pub fn split_halves(n: usize) -> Self {
        let half = pair_count(n) / 2;
        EdgePartition {
            n,
            owners: (0..pair_count(n))
                .map(|k| if k < half { Player::Alice } else { Player::Bob })
                .collect(),
        }
    }

    /// Each pair goes to a fair coin's choice of owner.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        EdgePartition::from_fn(n, |_, _| {
            if rng.gen::<bool>() {
                Player::Alice
            } else {
                Player::Bob
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn owners(&self) -> &[Player] {
        &self.owners
    }

    /// Owner of the 0-based pair `{i, j}` (either order).
    #[inline]
    pub fn owner0(&self, i: usize, j: usize) -> Player {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.owners[pair_index(self.n, a, b)]
    }

    pub fn owner(&self, i: usize, j: usize) -> Player {
        self.owner0(i - 1, j - 1)
    }

    pub fn count(&self, player: Player) -> usize {
        self.owners.iter().filter(|&&p| p == player).count()
    }

    pub fn to_text(&self) -> String {
        let body: String = self.owners.iter().map(|p| p.symbol()).collect();
        format!("{}\n{}\n", self.n, body)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let (n, owners) = parse_header_and_body(text, |c| match c {
            'A' => Some(Player::Alice),
            'B' => Some(Player::Bob),
            _ => None,
        })?;
        EdgePartition::new(n, owners)
    }
}

/// A player's private share of a tournament: the directions of owned pairs.
#[derive(Clone, Debug)]
pub struct PrivateEdges {
    n: usize,
    bits: Vec<Option<bool>>,
}

impl PrivateEdges {
    pub fn of(t: &Tournament, partition: &EdgePartition, player: Player) -> Result<Self> {
        if t.n() != partition.n() {
            return Err(Error::LengthMismatch {
                left: t.n(),
                right: partition.n(),
            });
        }
        let bits = pairs(t.n())
            .zip(partition.owners())
            .map(|((i, j), &o)| (o == player).then(|| t.beats0(i, j)))
            .collect();
        Ok(PrivateEdges { n: t.n(), bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Some(u → v)` when the 0-based pair is known to this player.
    #[inline]
    pub fn beats0(&self, u: usize, v: usize) -> Option<bool> {
        if u < v {
            self.bits[pair_index(self.n, u, v)]
        } else {
            self.bits[pair_index(self.n, v, u)].map(|b| !b)
        }
    }

    /// Records that `u → v` (0-based).
    pub fn learn0(&mut self, u: usize, v: usize) {
        if u < v {
            self.bits[pair_index(self.n, u, v)] = Some(true);
        } else {
            self.bits[pair_index(self.n, v, u)] = Some(false);
        }
    }
}
