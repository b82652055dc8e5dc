use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::tournament::{pair_count, pairs, parse_header_and_body, VertexSet};

/// Simple undirected graph on `1..=n`, stored as a dense adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Edge present for 0-based pairs `i < j` where `edge(i, j)` holds.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = UndirectedGraph::empty(n);
        for (i, j) in pairs(n) {
            if edge(i, j) {
                g.add_edge0(i, j);
            }
        }
        g
    }

    pub fn from_pair_bits(n: usize, bits: &[bool]) -> Result<Self> {
        if bits.len() != pair_count(n) {
            return Err(Error::LengthMismatch {
                left: bits.len(),
                right: pair_count(n),
            });
        }
        let mut it = bits.iter();
        Ok(UndirectedGraph::from_fn(n, |_, _| *it.next().expect("length checked")))
    }

    /// Builds from 1-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = UndirectedGraph::empty(n);
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::SelfPair(u));
            }
            g.add_edge0(u - 1, v - 1);
        }
        Ok(g)
    }

    /// The cycle `1 – 2 – … – n – 1`.
    pub fn cycle(n: usize) -> Self {
        UndirectedGraph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge0(&mut self, i: usize, j: usize) {
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent0(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent0(u - 1, v - 1)
    }

    pub fn neighbors0(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adjacent0(v, w))
    }

    pub fn edge_count(&self) -> usize {
        pairs(self.n).filter(|&(i, j)| self.adjacent0(i, j)).count()
    }

    /// 0-based edges `(i, j)`, `i < j`, in canonical order.
    pub fn edges0(&self) -> Vec<(usize, usize)> {
        pairs(self.n).filter(|&(i, j)| self.adjacent0(i, j)).collect()
    }

    pub fn complement(&self) -> UndirectedGraph {
        UndirectedGraph::from_fn(self.n, |i, j| !self.adjacent0(i, j))
    }

    /// Subgraph induced on the 0-based `vertices` (in the given order).
    pub fn induced0(&self, vertices: &[usize]) -> UndirectedGraph {
        UndirectedGraph::from_fn(vertices.len(), |a, b| self.adjacent0(vertices[a], vertices[b]))
    }

    /// Connected components as sorted 0-based vertex lists, ordered by their
    /// smallest vertex.
    pub fn components0(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors0(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components0().len() == 1
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let v: Vec<_> = set.iter().collect();
        v.iter()
            .enumerate()
            .all(|(a, &&x)| v[a + 1..].iter().all(|&&y| self.adjacent(x, y)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let v: Vec<_> = set.iter().collect();
        v.iter()
            .enumerate()
            .all(|(a, &&x)| v[a + 1..].iter().all(|&&y| !self.adjacent(x, y)))
    }

    /// Same layout as the tournament file, with `1` meaning "edge present".
    pub fn to_text(&self) -> String {
        let bits: String = pairs(self.n)
            .map(|(i, j)| if self.adjacent0(i, j) { '1' } else { '0' })
            .collect();
        format!("{}\n{}\n", self.n, bits)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let (n, bits) = parse_header_and_body(text, |c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })?;
        UndirectedGraph::from_pair_bits(n, &bits)
    }
}
