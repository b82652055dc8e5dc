//! Orientations of connected graphs with prescribed in-degree-zero sets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::source::graph::UndirectedGraph;
use crate::tournament::VertexSet;

/// A directed version of some undirected graph: one arc per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    /// 0-based arcs `(from, to)`.
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs0(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// 1-based arcs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    /// Vertices (1-based) with in-degree 0.
    pub fn unreached(&self) -> VertexSet {
        self.in_degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v + 1)
            .collect()
    }
}

/// Multi-source BFS distances; unreachable vertices keep `usize::MAX`.
fn layers(g: &UndirectedGraph, roots: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &r in roots {
        dist[r] = 0;
        queue.push_back(r);
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors0(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Orients every edge from the layer nearer the roots outward; edges inside a
/// layer point to the larger label. Edges in `fixed` keep their given arc.
fn orient_by_layers(g: &UndirectedGraph, dist: &[usize], fixed: &[(usize, usize)]) -> Orientation {
    let arcs = g
        .edges0()
        .into_iter()
        .map(|(i, j)| {
            if let Some(&arc) = fixed
                .iter()
                .find(|&&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
            {
                arc
            } else if dist[j] < dist[i] {
                (j, i)
            } else {
                (i, j)
            }
        })
        .collect();
    Orientation { n: g.n(), arcs }
}

/// Orients a connected graph so that exactly the vertices of the independent
/// set `indep` have in-degree 0.
pub fn orient_from_independent_set(g: &UndirectedGraph, indep: &VertexSet) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if indep.is_empty() {
        return Err(Error::Precondition("independent set must be nonempty".into()));
    }
    if indep.iter().any(|&v| v == 0 || v > g.n()) {
        return Err(Error::Precondition("independent set has an invalid label".into()));
    }
    if !g.is_independent(indep) {
        return Err(Error::Precondition("set is not independent in the graph".into()));
    }
    let roots: Vec<usize> = indep.iter().map(|v| v - 1).collect();
    Ok(orient_by_layers(g, &layers(g, &roots), &[]))
}

/// Orients a connected graph containing a cycle so that every vertex has
/// in-degree at least 1: one cycle is oriented cyclically, the rest outward
/// from it.
pub fn orient_indeg_positive(g: &UndirectedGraph) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let cycle = find_cycle(g)
        .ok_or_else(|| Error::Precondition("graph is a tree; it has no cycle".into()))?;
    let fixed: Vec<(usize, usize)> = (0..cycle.len())
        .map(|k| (cycle[k], cycle[(k + 1) % cycle.len()]))
        .collect();
    Ok(orient_by_layers(g, &layers(g, &cycle), &fixed))
}

/// A cycle as a vertex sequence, found by growing a spanning forest until
/// an edge closes a loop.
fn find_cycle(g: &UndirectedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for (i, j) in g.edges0() {
        let (ri, rj) = (find(&mut root, i), find(&mut root, j));
        if ri != rj {
            root[ri] = rj;
            tree[i].push(j);
            tree[j].push(i);
            continue;
        }
        // Path j → i in the forest, then the edge i – j closes it.
        let mut parent = vec![usize::MAX; n];
        parent[j] = j;
        let mut queue = VecDeque::from([j]);
        while let Some(u) = queue.pop_front() {
            if u == i {
                break;
            }
            for &w in &tree[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![i];
        let mut cur = i;
        while cur != j {
            cur = parent[cur];
            path.push(cur);
        }
        return Some(path);
    }
    None
}
