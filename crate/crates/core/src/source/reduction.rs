//! Both directions between Clique vs. Independent Set and source finding.

use crate::error::{Error, Result};
use crate::partition::{EdgePartition, Player, PrivateEdges};
use crate::protocol::{run_protocol, Bits, Cursor, Move, Party, RunConfig, Transcript, View};
use crate::source::cis::{CisInstance, CisParty};
use crate::source::graph::UndirectedGraph;
use crate::source::orient::{orient_from_independent_set, orient_indeg_positive, Orientation};
use crate::tournament::{ceil_log2, Tournament, VertexSet};

// ---------------------------------------------------------------------------
// SRC → CIS

/// Alice's half: the graph `(V, E_A)` and her in-degree-0 vertices.
pub fn alice_cis_half(p: &EdgePartition, mine: &PrivateEdges) -> (UndirectedGraph, VertexSet) {
    let n = p.n();
    let graph = UndirectedGraph::from_fn(n, |i, j| p.owner0(i, j) == Player::Alice);
    (graph, unbeaten(p, mine, Player::Alice))
}

/// Bob's half: his in-degree-0 vertices.
pub fn bob_cis_half(p: &EdgePartition, mine: &PrivateEdges) -> VertexSet {
    unbeaten(p, mine, Player::Bob)
}

fn unbeaten(p: &EdgePartition, mine: &PrivateEdges, who: Player) -> VertexSet {
    let n = p.n();
    (0..n)
        .filter(|&v| {
            (0..n).all(|u| u == v || p.owner0(u, v) != who || mine.beats0(u, v) != Some(true))
        })
        .map(|v| v + 1)
        .collect()
}

/// Zero-communication map from a partitioned tournament to a CIS instance
/// whose intersection is the source, if there is one.
pub fn src_to_cis(t: &Tournament, p: &EdgePartition) -> Result<CisInstance> {
    let (graph, indep) = alice_cis_half(p, &PrivateEdges::of(t, p, Player::Alice)?);
    let clique = bob_cis_half(p, &PrivateEdges::of(t, p, Player::Bob)?);
    CisInstance::new(graph, clique, indep)
}

#[derive(Clone, Debug)]
pub struct SrcOutcome {
    /// Source label, or 0 when there is none.
    pub source: usize,
    pub transcript: Transcript<usize>,
    /// Bits exchanged before the CIS stage started.
    pub bits_before_cis: usize,
}

/// Each party derives its CIS input locally, then runs the CIS protocol.
struct SrcParty {
    half: Option<(UndirectedGraph, VertexSet, Player)>,
    inner: Option<CisParty>,
    cis_start: Option<usize>,
}

impl Party for SrcParty {
    type Output = usize;

    fn act(&mut self, view: &View<'_>) -> Result<Move<usize>> {
        if self.inner.is_none() {
            let (g, set, me) = self.half.take().expect("half computed at construction");
            self.cis_start = Some(view.messages.len());
            self.inner = Some(CisParty::new(g, me, &set));
        }
        let start = self.cis_start.expect("set above");
        let inner = self.inner.as_mut().expect("set above");
        Ok(match inner.act(&view.suffix(start))? {
            Move::Output(a) => Move::Output(a.unwrap_or(0)),
            Move::Send(b) => Move::Send(b),
            Move::Wait => Move::Wait,
        })
    }
}

pub fn src_protocol(t: &Tournament, p: &EdgePartition) -> Result<SrcOutcome> {
    if p.n() != t.n() {
        return Err(Error::LengthMismatch { left: p.n(), right: t.n() });
    }
    let (graph, indep) = alice_cis_half(p, &PrivateEdges::of(t, p, Player::Alice)?);
    let clique = bob_cis_half(p, &PrivateEdges::of(t, p, Player::Bob)?);
    let mut alice = SrcParty {
        half: Some((graph.clone(), indep, Player::Alice)),
        inner: None,
        cis_start: None,
    };
    let mut bob = SrcParty {
        half: Some((graph, clique, Player::Bob)),
        inner: None,
        cis_start: None,
    };
    let transcript = run_protocol(&mut alice, &mut bob, &RunConfig::for_size(t.n(), 0))?;
    let start = alice.cis_start.unwrap_or(0);
    let bits_before_cis = transcript.messages[..start].iter().map(|m| m.bits.len()).sum();
    Ok(SrcOutcome {
        source: transcript.output_alice,
        bits_before_cis,
        transcript,
    })
}

/// Decision version: does `t` have a source?
pub fn src_decision(t: &Tournament, p: &EdgePartition) -> Result<(bool, Transcript<usize>)> {
    let out = src_protocol(t, p)?;
    Ok((out.source != 0, out.transcript))
}

// ---------------------------------------------------------------------------
// CIS → SRC

#[derive(Clone, Debug, PartialEq, Eq)]
enum Pre {
    Resolved(Option<usize>),
    Reduce,
}

/// Result of the preprocessing exchange.
#[derive(Clone, Debug)]
pub enum CisReduction {
    /// Preprocessing already settled the answer.
    Resolved {
        answer: Option<usize>,
        transcript: Transcript<()>,
    },
    /// A source-finding instance on the clique's component. `labels[k]` is
    /// the original label of local vertex `k + 1`.
    Reduced {
        tournament: Tournament,
        partition: EdgePartition,
        labels: Vec<usize>,
        transcript: Transcript<()>,
    },
}

impl CisReduction {
    pub fn transcript(&self) -> &Transcript<()> {
        match self {
            CisReduction::Resolved { transcript, .. } | CisReduction::Reduced { transcript, .. } => transcript,
        }
    }
}

enum PrePhase {
    Start,
    AwaitComponent,
    AwaitSizeBit,
    AwaitPick { labels: Vec<usize> },
    Done(Pre),
}

/// Bob names his clique's component (0 = empty clique); Alice trims her set
/// to it and says whether at least three vertices remain. If not, she lists
/// them and Bob names the common one.
struct PreParty<'a> {
    me: Player,
    inst: &'a CisInstance,
    comps: Vec<Vec<usize>>,
    phase: PrePhase,
    cursor: Cursor,
}

impl PreParty<'_> {
    fn comp_width(&self) -> usize {
        ceil_log2(self.comps.len() + 1)
    }

    fn trimmed_indep(&self, component: usize) -> Vec<usize> {
        let comp = &self.comps[component - 1];
        self.inst
            .indep
            .iter()
            .copied()
            .filter(|v| comp.binary_search(&(v - 1)).is_ok())
            .collect()
    }
}

impl Party for PreParty<'_> {
    type Output = Pre;

    fn act(&mut self, view: &View<'_>) -> Result<Move<Pre>> {
        let n = self.inst.graph.n();
        let lw = ceil_log2(n);
        loop {
            match &self.phase {
                PrePhase::Done(o) => return Ok(Move::Output(o.clone())),
                PrePhase::Start => match self.me {
                    Player::Bob => {
                        let component = match self.inst.clique.first() {
                            None => 0,
                            Some(&v) => 1 + self.comps.iter().position(|c| c.contains(&(v - 1))).expect("every vertex has a component"),
                        };
                        let mut msg = Bits::new();
                        msg.push_uint(component as u64, self.comp_width());
                        self.phase = if component == 0 {
                            PrePhase::Done(Pre::Resolved(None))
                        } else {
                            PrePhase::AwaitSizeBit
                        };
                        return Ok(Move::Send(msg));
                    }
                    Player::Alice => self.phase = PrePhase::AwaitComponent,
                },
                PrePhase::AwaitComponent => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let component = m.bits.reader().uint(self.comp_width())? as usize;
                    if component > self.comps.len() {
                        return Err(Error::ProtocolContract("component index out of range".into()));
                    }
                    if component == 0 {
                        self.phase = PrePhase::Done(Pre::Resolved(None));
                        continue;
                    }
                    let kept = self.trimmed_indep(component);
                    let mut msg = Bits::from(vec![kept.len() >= 3]);
                    if kept.len() >= 3 {
                        self.phase = PrePhase::Done(Pre::Reduce);
                    } else {
                        msg.push_uint(kept.len() as u64, 2);
                        for &v in &kept {
                            msg.push_uint(v as u64 - 1, lw);
                        }
                        self.phase = PrePhase::AwaitPick { labels: kept };
                    }
                    return Ok(Move::Send(msg));
                }
                PrePhase::AwaitSizeBit => {
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let mut rd = m.bits.reader();
                    if rd.bit()? {
                        self.phase = PrePhase::Done(Pre::Reduce);
                        continue;
                    }
                    let count = rd.uint(2)? as usize;
                    if rd.remaining() != count * lw {
                        return Err(Error::ProtocolContract("label list has the wrong length".into()));
                    }
                    let labels: Vec<usize> = (0..count)
                        .map(|_| rd.uint(lw).map(|x| x as usize + 1))
                        .collect::<Result<_>>()?;
                    let pick = labels.iter().position(|v| self.inst.clique.contains(v));
                    let mut msg = Bits::new();
                    msg.push_uint(pick.map_or(0, |k| k as u64 + 1), ceil_log2(labels.len() + 1));
                    self.phase = PrePhase::Done(Pre::Resolved(pick.map(|k| labels[k])));
                    return Ok(if msg.is_empty() { Move::Output(Pre::Resolved(None)) } else { Move::Send(msg) });
                }
                PrePhase::AwaitPick { labels } => {
                    if labels.is_empty() {
                        self.phase = PrePhase::Done(Pre::Resolved(None));
                        continue;
                    }
                    let Some(m) = self.cursor.next_from_other(view) else {
                        return Ok(Move::Wait);
                    };
                    let pick = m.bits.reader().uint(ceil_log2(labels.len() + 1))? as usize;
                    if pick > labels.len() {
                        return Err(Error::ProtocolContract("pick out of range".into()));
                    }
                    let answer = if pick == 0 { None } else { Some(labels[pick - 1]) };
                    self.phase = PrePhase::Done(Pre::Resolved(answer));
                }
            }
        }
    }
}

/// Orients the complement of `h` component by component for the clique side.
fn orient_complement(h: &UndirectedGraph, clique_local: &VertexSet) -> Result<Vec<(usize, usize)>> {
    let hbar = h.complement();
    let mut arcs = Vec::new();
    for comp in hbar.components0() {
        if comp.len() < 2 {
            continue;
        }
        let sub = hbar.induced0(&comp);
        let c_here: VertexSet = comp
            .iter()
            .enumerate()
            .filter(|(_, &v)| clique_local.contains(&(v + 1)))
            .map(|(k, _)| k + 1)
            .collect();
        let o: Orientation = if !c_here.is_empty() {
            orient_from_independent_set(&sub, &c_here)?
        } else if sub.edge_count() >= comp.len() {
            orient_indeg_positive(&sub)?
        } else {
            // tree: away from its lowest label
            orient_from_independent_set(&sub, &VertexSet::from([1]))?
        };
        arcs.extend(o.arcs0().iter().map(|&(a, b)| (comp[a], comp[b])));
    }
    Ok(arcs)
}

/// Preprocessing exchange plus the tournament whose source, if any, is the
/// intersection vertex.
pub fn cis_to_src(inst: &CisInstance) -> Result<CisReduction> {
    inst.validate()?;
    let comps = inst.graph.components0();
    let mk = |me| PreParty {
        me,
        inst,
        comps: comps.clone(),
        phase: PrePhase::Start,
        cursor: Cursor::default(),
    };
    let (mut alice, mut bob) = (mk(Player::Alice), mk(Player::Bob));
    let tr = run_protocol(&mut alice, &mut bob, &RunConfig::for_size(inst.graph.n(), 0))?;
    let pre = tr.output_alice.clone();
    let transcript = tr.map_output(|_| ());
    match pre {
        Pre::Resolved(answer) => Ok(CisReduction::Resolved { answer, transcript }),
        Pre::Reduce => {
            let first = *inst.clique.first().expect("reduce needs a nonempty clique");
            let comp = comps
                .iter()
                .find(|c| c.contains(&(first - 1)))
                .expect("component exists")
                .clone();
            let local = |set: &VertexSet| -> VertexSet {
                comp.iter()
                    .enumerate()
                    .filter(|(_, &v)| set.contains(&(v + 1)))
                    .map(|(k, _)| k + 1)
                    .collect()
            };
            let h = inst.graph.induced0(&comp);
            let m = comp.len();
            let mut forward = vec![vec![false; m]; m];
            let alice_arcs = orient_from_independent_set(&h, &local(&inst.indep))?;
            for &(a, b) in alice_arcs.arcs0() {
                forward[a][b] = true;
            }
            for (a, b) in orient_complement(&h, &local(&inst.clique))? {
                forward[a][b] = true;
            }
            let tournament = Tournament::from_fn(m, |i, j| forward[i][j])?;
            let partition = EdgePartition::from_fn(m, |i, j| {
                if h.adjacent0(i, j) {
                    Player::Alice
                } else {
                    Player::Bob
                }
            });
            Ok(CisReduction::Reduced {
                tournament,
                partition,
                labels: comp.iter().map(|v| v + 1).collect(),
                transcript,
            })
        }
    }
}

/// Solves CIS through the source protocol; returns the answer and the total
/// bits spent (preprocessing plus source finding).
pub fn cis_via_src(inst: &CisInstance) -> Result<(Option<usize>, usize)> {
    match cis_to_src(inst)? {
        CisReduction::Resolved { answer, transcript } => Ok((answer, transcript.total_bits())),
        CisReduction::Reduced {
            tournament,
            partition,
            labels,
            transcript,
        } => {
            let out = src_protocol(&tournament, &partition)?;
            let answer = (out.source != 0).then(|| labels[out.source - 1]);
            Ok((answer, transcript.total_bits() + out.transcript.total_bits()))
        }
    }
}
