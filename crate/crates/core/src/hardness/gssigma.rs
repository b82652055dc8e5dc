//! The three-copy tournament `G_{S,σ}` on `3n` vertices whose kings are
//! exactly the three copies of `argmax_{j∈S} σ(j)`.
//!
//! Copy `b ∈ {0,1,2}` of element `i` has label `i + b·n`. Inside a copy,
//! `i_b → j_b` iff `σ(i) > σ(j)` (Bob's edges). Across copies, elements of
//! `S` beat elements outside `S`; pairs on the same side of `S`, and two
//! copies of one element, point from copy `b` to copy `b + 1 mod 3`
//! (Alice's edges).

use crate::error::{Error, Result};
use crate::hardness::pmf::{pmf_eval, PmfInstance};
use crate::partition::{EdgePartition, Player};
use crate::permutation::Permutation;
use crate::tournament::{Tournament, VertexSet};

#[derive(Clone, Debug)]
pub struct GSSigma {
    pub n: usize,
    pub set: VertexSet,
    pub sigma: Permutation,
    pub tournament: Tournament,
    pub partition: EdgePartition,
}

impl GSSigma {
    pub fn build(set: &VertexSet, sigma: &Permutation) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidArgument("G_{S,σ} needs a nonempty S".into()));
        }
        let inst = PmfInstance::new(set.clone(), sigma.clone())?;
        let n = inst.n();
        let split = |g: usize| (g % n + 1, g / n);
        let in_s = |i: usize| set.contains(&i);
        let tournament = Tournament::from_fn(3 * n, |u, v| {
            let ((i, b), (j, c)) = (split(u), split(v));
            if b == c {
                sigma.rank(i) > sigma.rank(j)
            } else if in_s(i) != in_s(j) {
                in_s(i)
            } else {
                c == (b + 1) % 3
            }
        })?;
        let partition = EdgePartition::from_fn(3 * n, |u, v| {
            if u / n == v / n {
                Player::Bob
            } else {
                Player::Alice
            }
        });
        Ok(GSSigma {
            n,
            set: inst.set,
            sigma: inst.sigma,
            tournament,
            partition,
        })
    }

    /// The labels `k_0, k_1, k_2` for `k = argmax_{j∈S} σ(j)`.
    pub fn predicted_kings(&self) -> VertexSet {
        let inst = PmfInstance {
            set: self.set.clone(),
            sigma: self.sigma.clone(),
        };
        let k = pmf_eval(&inst).expect("S is nonempty");
        (0..3).map(|b| k + b * self.n).collect()
    }

    /// Element of `[n]` behind a global label.
    pub fn element(&self, label: usize) -> usize {
        (label - 1) % self.n + 1
    }
}
