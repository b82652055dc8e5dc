//! Tournaments stored as out-neighbour bitsets, plus the brute-force oracles
//! (kings, source, maximum out-degree) every protocol is checked against.
//!
//! Vertices are labelled `1..=n`. The canonical bit encoding lists unordered
//! pairs lexicographically, `(1,2), (1,3), …, (1,n), (2,3), …`; a `1` for the
//! pair `(i,j)` with `i < j` means `i → j`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A set of 1-based vertex labels.
pub type VertexSet = BTreeSet<usize>;

/// Number of unordered pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the 0-based pair `(i, j)`, `i < j`, in canonical order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Iterates 0-based pairs `(i, j)`, `i < j`, in canonical order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// `⌈log₂ m⌉`, with `0` for `m ≤ 1`.
pub fn ceil_log2(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        (usize::BITS - (m - 1).leading_zeros()) as usize
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    out: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhoods {
    pub in_set: VertexSet,
    pub out_set: VertexSet,
    pub in_degree: usize,
    pub out_degree: usize,
}

impl Tournament {
    /// Builds a tournament from a predicate on 0-based pairs `i < j`
    /// answering "is the edge directed `i → j`?".
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a tournament needs at least one vertex".into(),
            ));
        }
        let words = n.div_ceil(64);
        let mut t = Tournament {
            n,
            words,
            out: vec![0; n * words],
        };
        for (i, j) in pairs(n) {
            if forward(i, j) {
                t.set_bit(i, j);
            } else {
                t.set_bit(j, i);
            }
        }
        Ok(t)
    }

    /// Builds a tournament from canonical pair bits.
    pub fn from_pair_bits(n: usize, bits: &[bool]) -> Result<Self> {
        if bits.len() != pair_count(n) {
            return Err(Error::LengthMismatch {
                left: bits.len(),
                right: pair_count(n),
            });
        }
        Tournament::from_fn(n, |i, j| bits[pair_index(n, i, j)])
    }

    /// Uniform random tournament; each pair bit is an independent fair coin.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Tournament::random_with(n, &mut rng)
    }

    pub fn random_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        Tournament::from_fn(n, |_, _| rng.gen::<bool>())
    }

    /// Transitive tournament with `i → j` iff `σ(i) > σ(j)`.
    pub fn transitive(sigma: &Permutation) -> Result<Self> {
        Tournament::from_fn(sigma.len(), |i, j| sigma.rank(i + 1) > sigma.rank(j + 1))
    }

    /// The 3-cycle `1 → 2 → 3 → 1`.
    pub fn three_cycle() -> Self {
        Tournament::from_pair_bits(3, &[true, false, true]).expect("valid")
    }

    #[inline]
    fn set_bit(&mut self, from: usize, to: usize) {
        self.out[from * self.words + to / 64] |= 1 << (to % 64);
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.out[v * self.words..(v + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based edge test: does `u → v`?
    #[inline]
    pub fn beats0(&self, u: usize, v: usize) -> bool {
        self.out[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Does `u → v` for 1-based labels? Panics on invalid labels.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.beats0(u - 1, v - 1)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// The oriented edge `(source, target)` between `i` and `j`.
    pub fn direction(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SelfPair(i));
        }
        Ok(if self.beats(i, j) { (i, j) } else { (j, i) })
    }

    pub fn neighborhoods(&self, v: usize) -> Result<Neighborhoods> {
        self.check_vertex(v)?;
        let (out_set, in_set): (VertexSet, VertexSet) = (1..=self.n)
            .filter(|&w| w != v)
            .partition(|&w| self.beats(v, w));
        Ok(Neighborhoods {
            in_degree: in_set.len(),
            out_degree: out_set.len(),
            in_set,
            out_set,
        })
    }

    pub fn out_degree0(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Out-degrees indexed by 0-based vertex.
    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree0(v)).collect()
    }

    /// Every tournament on `n` vertices, in order of the pair bits read as a
    /// little-endian counter. Only sensible for small `n`.
    pub fn all(n: usize) -> impl Iterator<Item = Tournament> {
        let m = pair_count(n);
        assert!(m < 32, "too many tournaments to enumerate");
        (0u32..1 << m).map(move |code| {
            let bits: Vec<bool> = (0..m).map(|k| code >> k & 1 == 1).collect();
            Tournament::from_pair_bits(n, &bits).expect("length matches")
        })
    }

    /// Canonical pair bits.
    pub fn pair_bits(&self) -> Vec<bool> {
        pairs(self.n).map(|(i, j)| self.beats0(i, j)).collect()
    }

    /// Fast king test via bitset unions: `v` is a king iff `{v} ∪ N⁺(v) ∪
    /// N⁺(N⁺(v))` covers every vertex.
    pub fn is_king(&self, v: usize) -> bool {
        let v0 = v - 1;
        let mut reach = self.row(v0).to_vec();
        reach[v0 / 64] |= 1 << (v0 % 64);
        for u in 0..self.n {
            if self.beats0(v0, u) {
                for (r, w) in reach.iter_mut().zip(self.row(u)) {
                    *r |= w;
                }
            }
        }
        let full = self.n / 64;
        reach[..full].iter().all(|&w| w == u64::MAX)
            && (self.n % 64 == 0 || reach[full] == (1u64 << (self.n % 64)) - 1)
    }

    /// All kings by direct 1-/2-step domination, `O(n³)`.
    pub fn all_kings(&self) -> VertexSet {
        let n = self.n;
        (0..n)
            .filter(|&v| {
                (0..n).all(|w| {
                    w == v
                        || self.beats0(v, w)
                        || (0..n).any(|u| self.beats0(v, u) && self.beats0(u, w))
                })
            })
            .map(|v| v + 1)
            .collect()
    }

    /// The unique vertex of in-degree 0, if any.
    pub fn source_of(&self) -> Option<usize> {
        (1..=self.n).find(|&v| self.out_degree0(v - 1) == self.n - 1)
    }

    pub fn max_out_degree_set(&self) -> VertexSet {
        let degrees = self.out_degrees();
        let best = degrees.iter().copied().max().unwrap_or(0);
        degrees
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == best)
            .map(|(v, _)| v + 1)
            .collect()
    }

    /// Sub-tournament on `set`; the returned labels map new vertex `k` to
    /// original label `labels[k - 1]`.
    pub fn induced(&self, set: &VertexSet) -> Result<(Tournament, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "cannot induce a tournament on an empty set".into(),
            ));
        }
        for &v in set {
            self.check_vertex(v)?;
        }
        let labels: Vec<usize> = set.iter().copied().collect();
        let sub = Tournament::from_fn(labels.len(), |i, j| self.beats(labels[i], labels[j]))?;
        Ok((sub, labels))
    }

    /// Topological order `v₁, …, vₙ` (source first) if the tournament is acyclic.
    pub fn transitive_order(&self) -> Option<Vec<usize>> {
        let degrees = self.out_degrees();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));
        let acyclic = order
            .iter()
            .enumerate()
            .all(|(a, &u)| order[a + 1..].iter().all(|&w| self.beats0(u, w)));
        acyclic.then(|| order.into_iter().map(|v| v + 1).collect())
    }

    /// Text form: `n` on the first line, the canonical bitstring on the second.
    pub fn to_text(&self) -> String {
        let bits: String = self
            .pair_bits()
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        format!("{}\n{}\n", self.n, bits)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let (n, bits) = parse_header_and_body(text, |c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })?;
        Tournament::from_pair_bits(n, &bits)
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, ", self.n)?;
        for b in self.pair_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl FromStr for Tournament {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tournament::parse_text(s)
    }
}

/// Parses the shared two-line layout (`n`, then one symbol per pair).
pub(crate) fn parse_header_and_body<T>(
    text: &str,
    symbol: impl Fn(char) -> Option<T>,
) -> Result<(usize, Vec<T>)> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::parse(1, 1, "missing vertex count"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::parse(1, 1, format!("invalid vertex count {:?}", header.trim())))?;
    if n == 0 {
        return Err(Error::parse(1, 1, "vertex count must be positive"));
    }
    let body = lines.next().unwrap_or("").trim_end();
    let expected = pair_count(n);
    let mut out = Vec::with_capacity(expected);
    for (col, c) in body.chars().enumerate() {
        match symbol(c) {
            Some(s) => out.push(s),
            None => return Err(Error::parse(2, col + 1, format!("unexpected character {c:?}"))),
        }
    }
    if out.len() != expected {
        return Err(Error::parse(
            2,
            out.len().min(expected) + 1,
            format!("expected {expected} symbols for n = {n}, found {}", out.len()),
        ));
    }
    if let Some((k, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::parse(k + 3, 1, format!("trailing content {:?}", extra.trim())));
    }
    Ok((n, out))
}

/// Comma-separated labels, e.g. `1,3,4`. The empty string is the empty list.
pub fn parse_label_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(k, part)| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(1, k + 1, format!("invalid label {:?}", part.trim())))
        })
        .collect()
}

pub fn parse_vertex_set(s: &str) -> Result<VertexSet> {
    Ok(parse_label_list(s)?.into_iter().collect())
}

pub fn format_vertex_set(set: &VertexSet) -> String {
    set.iter().join(",")
}
