//! Query access to a tournament and the randomized `O(n)`-query king finder.

use rand::Rng;

use crate::tournament::{pair_index, Tournament};

/// Wraps a tournament; counts distinct pair queries (repeats are free
/// unless caching is turned off).
#[derive(Clone, Debug)]
pub struct CountingOracle<'a> {
    t: &'a Tournament,
    seen: Vec<bool>,
    caching: bool,
    queries: usize,
    log: Vec<(usize, usize)>,
}

impl<'a> CountingOracle<'a> {
    pub fn new(t: &'a Tournament) -> Self {
        let n = t.n();
        CountingOracle {
            t,
            seen: vec![false; n * (n - 1) / 2],
            caching: true,
            queries: 0,
            log: Vec::new(),
        }
    }

    pub fn without_cache(t: &'a Tournament) -> Self {
        CountingOracle {
            caching: false,
            ..CountingOracle::new(t)
        }
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    /// Does `u` beat `v`? (1-based, `u ≠ v`.)
    pub fn query(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "query on a self pair");
        let (i, j) = if u < v { (u - 1, v - 1) } else { (v - 1, u - 1) };
        let k = pair_index(self.t.n(), i, j);
        if !(self.caching && self.seen[k]) {
            self.queries += 1;
            self.log.push((i + 1, j + 1));
        }
        self.seen[k] = true;
        self.t.beats(u, v)
    }

    pub fn queries(&self) -> usize {
        self.queries
    }

    /// Pairs in the order first charged, as `(i, j)` with `i < j`.
    pub fn log(&self) -> &[(usize, usize)] {
        &self.log
    }
}

/// Samples a pivot from `T`, keeps only its in-neighbours, and brute-forces
/// a king once `|T| ≤ √n`. Always correct; randomness affects only cost.
pub fn randomized_king_query<R: Rng + ?Sized>(o: &mut CountingOracle<'_>, rng: &mut R) -> usize {
    let n = o.n();
    let mut t: Vec<usize> = (1..=n).collect();
    while t.len() * t.len() > n {
        let v = t[rng.gen_range(0..t.len())];
        let ins: Vec<usize> = t.iter().copied().filter(|&u| u != v && o.query(u, v)).collect();
        if ins.is_empty() {
            return v;
        }
        t = ins;
    }
    // maximum out-degree vertex of G|_T, lowest label on ties
    let mut best = (0, t[0]);
    for &u in &t {
        let d = t.iter().filter(|&&w| w != u && o.query(u, w)).count();
        if d > best.0 {
            best = (d, u);
        }
    }
    best.1
}
