//! Permutation Maximum Finding, its equivalence with king finding on
//! transitive tournaments, and the Set-Disjointness reduction into it.

use crate::error::{Error, Result};
use crate::hardness::gssigma::GSSigma;
use crate::king::king_protocol;
use crate::permutation::Permutation;
use crate::tournament::{Tournament, VertexSet};

/// Alice holds `set`, Bob holds `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmfInstance {
    pub set: VertexSet,
    pub sigma: Permutation,
}

impl PmfInstance {
    pub fn new(set: VertexSet, sigma: Permutation) -> Result<Self> {
        let n = sigma.len();
        if let Some(&v) = set.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        Ok(PmfInstance { set, sigma })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }
}

/// `argmax_{j ∈ S} σ(j)`, or `None` (⊥) for the empty set.
pub fn pmf_eval(inst: &PmfInstance) -> Option<usize> {
    inst.set.iter().copied().max_by_key(|&j| inst.sigma.rank(j))
}

/// `(S, σ) ↦ (S, G)` with `G` transitive and `i → j` iff `σ(i) > σ(j)`.
pub fn pmf_to_tindex(inst: &PmfInstance) -> Result<(VertexSet, Tournament)> {
    Ok((inst.set.clone(), Tournament::transitive(&inst.sigma)?))
}

/// Inverse map; fails on a tournament with a cycle.
pub fn tindex_to_pmf(set: &VertexSet, g: &Tournament) -> Result<PmfInstance> {
    let order = g.transitive_order().ok_or(Error::NotTransitive)?;
    let n = g.n();
    let mut ranks = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        ranks[v - 1] = n - k;
    }
    PmfInstance::new(set.clone(), Permutation::new(ranks)?)
}

/// King of `G|_S` (the answer to t-IndexKING), or `None` for empty `S`.
pub fn tindex_king(set: &VertexSet, g: &Tournament) -> Result<Option<usize>> {
    if set.is_empty() {
        return Ok(None);
    }
    let (sub, labels) = g.induced(set)?;
    let kings = sub.all_kings();
    Ok(kings.first().map(|k| labels[k - 1]))
}

/// Bob's permutation for Set-Disjointness: elements of `t` ranked above the
/// rest, ascending index within each block.
pub fn disj_sigma(n: usize, t: &VertexSet) -> Permutation {
    let order = (1..=n).filter(|v| !t.contains(v)).chain((1..=n).filter(|v| t.contains(v)));
    let mut ranks = vec![0; n];
    for (r, v) in order.enumerate() {
        ranks[v - 1] = r + 1;
    }
    Permutation::new(ranks).expect("a reordering of 1..=n")
}

/// `(S_a, T) ↦ (S_a, σ_T)`. The PMF answer decodes as "intersecting" iff it
/// lies in `T`.
pub fn disj_to_pmf(n: usize, sa: &VertexSet, t: &VertexSet) -> Result<PmfInstance> {
    if let Some(&v) = t.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::InvalidVertex { vertex: v, n });
    }
    PmfInstance::new(sa.clone(), disj_sigma(n, t))
}

pub fn disj_decode(answer: Option<usize>, t: &VertexSet) -> bool {
    answer.is_some_and(|k| t.contains(&k))
}

/// `true` iff `sa ∩ t ≠ ∅`, decided by running the king protocol on
/// `G_{S,σ}`. Returns the answer and the bits spent.
pub fn disj_via_king(n: usize, sa: &VertexSet, t: &VertexSet) -> Result<(bool, usize)> {
    let inst = disj_to_pmf(n, sa, t)?;
    if inst.set.is_empty() {
        return Ok((false, 0));
    }
    let g = GSSigma::build(&inst.set, &inst.sigma)?;
    let out = king_protocol(&g.tournament, &g.partition)?;
    let element = (out.king - 1) % n + 1;
    Ok((disj_decode(Some(element), t), out.transcript.total_bits()))
}
