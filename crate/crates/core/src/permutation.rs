use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A bijection on `1..=n`; `rank(i)` is the position assigned to element `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    ranks: Vec<usize>,
}

impl Permutation {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r > n {
                return Err(Error::InvalidArgument(format!(
                    "rank {r} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[r - 1], true) {
                return Err(Error::InvalidArgument(format!("rank {r} repeated")));
            }
        }
        Ok(Permutation { ranks })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            ranks: (1..=n).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut ranks: Vec<usize> = (1..=n).collect();
        ranks.shuffle(rng);
        Permutation { ranks }
    }

    /// Every permutation of `1..=n`, lexicographic in the rank sequence.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|ranks| Permutation { ranks })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// σ(i) for a 1-based element `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i - 1]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.ranks.len()];
        for (i, &r) in self.ranks.iter().enumerate() {
            inv[r - 1] = i + 1;
        }
        Permutation { ranks: inv }
    }

    /// Largest coordinate-wise rank displacement between two permutations.
    pub fn max_displacement(&self, other: &Permutation) -> usize {
        self.ranks
            .iter()
            .zip(&other.ranks)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ranks.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ranks = crate::tournament::parse_label_list(s)?;
        Permutation::new(ranks)
    }
}
