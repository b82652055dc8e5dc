//! Clique vs. Independent Set: `O(log² n)` halving protocol.
//!
//! Alice holds an independent set `I`, Bob a clique `C` of a public graph.
//! Each round starts with Bob: if some `v ∈ C ∩ R` has at most `|R|/2`
//! neighbours in `R` he names it, Alice says whether `v ∈ I`, and on "no"
//! `R` becomes `N(v) ∩ R`. Otherwise Alice names some `u ∈ I ∩ R` with at
//! most `|R|/2` non-neighbours in `R ∖ {u}`; on "no" `R` becomes those
//! non-neighbours. If neither can move the intersection is empty.

use crate::error::{Error, Result};
use crate::partition::Player;
use crate::protocol::{decode_label, encode_label, run_protocol, Bits, Cursor, Move, Party, RunConfig, Transcript, View};
use crate::source::graph::UndirectedGraph;
use crate::tournament::{ceil_log2, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CisInstance {
    pub graph: UndirectedGraph,
    /// Bob's input.
    pub clique: VertexSet,
    /// Alice's input.
    pub indep: VertexSet,
}

impl CisInstance {
    pub fn new(graph: UndirectedGraph, clique: VertexSet, indep: VertexSet) -> Result<Self> {
        let inst = CisInstance { graph, clique, indep };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        for &v in self.clique.iter().chain(&self.indep) {
            if v == 0 || v > n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
        }
        if !self.graph.is_clique(&self.clique) {
            return Err(Error::Precondition("clique side is not a clique".into()));
        }
        if !self.graph.is_independent(&self.indep) {
            return Err(Error::Precondition("independent side is not independent".into()));
        }
        Ok(())
    }

    /// Brute-force answer: the common vertex, if any.
    pub fn intersection(&self) -> Option<usize> {
        self.clique.intersection(&self.indep).next().copied()
    }
}

#[derive(Clone, Debug)]
pub struct CisOutcome {
    pub answer: Option<usize>,
    pub transcript: Transcript<Option<usize>>,
    /// `|R|` at the start of every round, plus the final size.
    pub candidate_sizes: Vec<usize>,
}

/// Cost ceiling used in tests and sweeps.
pub fn cis_cost_bound(n: usize) -> usize {
    (ceil_log2(n) + 4).pow(2)
}

#[derive(Clone, Copy)]
enum Phase {
    Announce(Player),
    AwaitVerdict { v: usize, speaker: Player },
    Done(Option<usize>),
}

pub(crate) struct CisParty {
    me: Player,
    graph: UndirectedGraph,
    member: Vec<bool>,
    r: Vec<usize>,
    phase: Phase,
    cursor: Cursor,
    sizes: Vec<usize>,
}

impl CisParty {
    pub(crate) fn new(graph: UndirectedGraph, me: Player, set: &VertexSet) -> Self {
        let mut member = vec![false; graph.n()];
        for &v in set {
            member[v - 1] = true;
        }
        let r: Vec<usize> = (0..graph.n()).collect();
        CisParty {
            me,
            sizes: vec![r.len()],
            graph,
            member,
            r,
            phase: Phase::Announce(Player::Bob),
            cursor: Cursor::default(),
        }
    }

    /// Neighbours of `v` in `R` (Bob's move) or non-neighbours other than
    /// `v` (Alice's move).
    fn next_r(&self, v: usize, speaker: Player) -> Vec<usize> {
        self.r
            .iter()
            .copied()
            .filter(|&w| {
                w != v
                    && match speaker {
                        Player::Bob => self.graph.adjacent0(v, w),
                        Player::Alice => !self.graph.adjacent0(v, w),
                    }
            })
            .collect()
    }

    fn candidate(&self) -> Option<usize> {
        let k = self.r.len();
        self.r
            .iter()
            .copied()
            .find(|&v| self.member[v] && 2 * self.next_r(v, self.me).len() <= k)
    }

    fn reject(&mut self, v: usize, speaker: Player) {
        self.r = self.next_r(v, speaker);
        self.sizes.push(self.r.len());
        self.phase = Phase::Announce(Player::Bob);
    }

    /// What happens after `speaker` passes.
    fn after_pass(&mut self, speaker: Player) {
        self.phase = match speaker {
            Player::Bob => Phase::Announce(Player::Alice),
            Player::Alice => Phase::Done(None),
        };
    }

    pub(crate) fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

impl Party for CisParty {
    type Output = Option<usize>;

    fn act(&mut self, view: &View<'_>) -> Result<Move<Option<usize>>> {
        loop {
            match self.phase {
                Phase::Done(a) => return Ok(Move::Output(a)),
                Phase::Announce(_) if self.r.is_empty() => self.phase = Phase::Done(None),
                Phase::Announce(speaker) if speaker == self.me => {
                    let mut msg = Bits::new();
                    match self.candidate() {
                        Some(v) => {
                            msg.push(true);
                            let pos = self.r.binary_search(&v).expect("candidate in R");
                            msg.extend_from(&encode_label(pos + 1, self.r.len())?);
                            self.phase = Phase::AwaitVerdict { v, speaker };
                        }
                        None => {
                            msg.push(false);
                            self.after_pass(speaker);
                        }
                    }
                    return Ok(Move::Send(msg));
                }
                Phase::Announce(speaker) => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let body = m.bits.as_slice();
                    let width = ceil_log2(self.r.len());
                    match body.first() {
                        Some(false) if body.len() == 1 => {
                            self.after_pass(speaker);
                        }
                        Some(true) if body.len() == 1 + width => {
                            let pos = decode_label(&Bits::from(body[1..].to_vec()), self.r.len())?;
                            let v = self.r[pos - 1];
                            let hit = self.member[v];
                            if hit {
                                self.phase = Phase::Done(Some(v + 1));
                            } else {
                                self.reject(v, speaker);
                            }
                            return Ok(Move::Send(Bits::from(vec![hit])));
                        }
                        _ => {
                            return Err(Error::ProtocolContract(
                                "malformed announcement in CIS round".into(),
                            ))
                        }
                    }
                }
                Phase::AwaitVerdict { v, speaker } => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    match m.bits.as_slice() {
                        [true] => self.phase = Phase::Done(Some(v + 1)),
                        [false] => self.reject(v, speaker),
                        _ => return Err(Error::ProtocolContract("verdict must be one bit".into())),
                    }
                }
            }
        }
    }
}

pub fn cis_protocol(inst: &CisInstance) -> Result<CisOutcome> {
    inst.validate()?;
    let mut alice = CisParty::new(inst.graph.clone(), Player::Alice, &inst.indep);
    let mut bob = CisParty::new(inst.graph.clone(), Player::Bob, &inst.clique);
    let transcript = run_protocol(&mut alice, &mut bob, &RunConfig::for_size(inst.graph.n(), 0))?;
    debug_assert_eq!(alice.sizes(), bob.sizes());
    Ok(CisOutcome {
        answer: transcript.output_alice,
        candidate_sizes: alice.sizes().to_vec(),
        transcript,
    })
}

/// Every clique and every independent set of `g` (1-based).
pub fn cliques_and_independent_sets(g: &UndirectedGraph) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let n = g.n();
    let (mut cliques, mut indeps) = (Vec::new(), Vec::new());
    for mask in 0u32..(1 << n) {
        let set: VertexSet = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if g.is_clique(&set) {
            cliques.push(set.clone());
        }
        if g.is_independent(&set) {
            indeps.push(set);
        }
    }
    (cliques, indeps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_intersection() {
        for n in 1..=6 {
            let g = UndirectedGraph::cycle(n);
            let inst = CisInstance::new(g, VertexSet::from([1]), VertexSet::from([1])).unwrap();
            assert_eq!(cis_protocol(&inst).unwrap().answer, Some(1));
        }
    }

    #[test]
    fn disjoint_on_five_cycle() {
        let g = UndirectedGraph::cycle(5);
        let inst = CisInstance::new(g, VertexSet::from([4, 5]), VertexSet::from([1, 3])).unwrap();
        assert_eq!(inst.intersection(), None);
        assert_eq!(cis_protocol(&inst).unwrap().answer, None);
    }

    #[test]
    fn rejects_bad_instances() {
        let g = UndirectedGraph::cycle(5);
        assert!(CisInstance::new(g.clone(), VertexSet::from([1, 3]), VertexSet::new()).is_err());
        assert!(CisInstance::new(g.clone(), VertexSet::new(), VertexSet::from([1, 2])).is_err());
        assert!(CisInstance::new(g, VertexSet::from([9]), VertexSet::new()).is_err());
    }

    #[test]
    fn exhaustive_small_graphs() {
        for n in 1..=4usize {
            let pairs = n * (n - 1) / 2;
            for code in 0u32..(1 << pairs) {
                let g = UndirectedGraph::from_pair_bits(
                    n,
                    &(0..pairs).map(|k| code >> k & 1 == 1).collect::<Vec<_>>(),
                )
                .unwrap();
                let (cliques, indeps) = cliques_and_independent_sets(&g);
                for c in &cliques {
                    for i in &indeps {
                        let inst = CisInstance::new(g.clone(), c.clone(), i.clone()).unwrap();
                        let out = cis_protocol(&inst).unwrap();
                        assert_eq!(out.answer, inst.intersection(), "{g:?} C={c:?} I={i:?}");
                        assert!(out.transcript.total_bits() <= cis_cost_bound(n));
                    }
                }
            }
        }
    }

    #[test]
    fn candidate_set_halves() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(2..=40);
            let g = UndirectedGraph::from_fn(n, |_, _| rng.gen_bool(0.5));
            // greedy clique and independent set through a shared vertex
            let w = rng.gen_range(0..n);
            let mut c = vec![w];
            let mut i = vec![w];
            for v in 0..n {
                if v != w && c.iter().all(|&x| g.adjacent0(x, v)) && rng.gen_bool(0.7) {
                    c.push(v);
                }
                if v != w && i.iter().all(|&x| !g.adjacent0(x, v)) && rng.gen_bool(0.7) {
                    i.push(v);
                }
            }
            let to_set = |v: &[usize]| v.iter().map(|x| x + 1).collect::<VertexSet>();
            let inst = CisInstance::new(g, to_set(&c), to_set(&i)).unwrap();
            let out = cis_protocol(&inst).unwrap();
            assert_eq!(out.answer, Some(w + 1));
            for win in out.candidate_sizes.windows(2) {
                assert!(2 * win[1] <= win[0]);
            }
            assert!(out.candidate_sizes.len() <= ceil_log2(n) + 2);
            assert!(out.transcript.total_bits() <= cis_cost_bound(n));
        }
    }
}
