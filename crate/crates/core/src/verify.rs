//! Invariant suites that check each module against the brute-force oracles.
//!
//! A suite enumerates every instance up to `min(max_n, cap)` for a
//! suite-specific cap, then runs `trials` seeded random instances at each
//! doubling size from 8 up to `max_n`. Random trials run on the rayon pool.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hardness::fooling::{fooling_input, fooling_size_floor, greedy_fooling_set, pair_is_fooling};
use crate::hardness::gssigma::GSSigma;
use crate::hardness::pmf::{disj_via_king, pmf_eval, pmf_to_tindex, tindex_king, tindex_to_pmf, PmfInstance};
use crate::king::{cost_envelope, king_protocol};
use crate::maxsum::{argmax_sum, gt_protocol, maxsum_det, maxsum_rand, mod_protocol, ModMode};
use crate::partition::EdgePartition;
use crate::permutation::Permutation;
use crate::query::{
    exact_game_value, play_alg3, randomized_king_query, AlwaysDefer, CountingOracle, DeferFirst, Delayer,
    RandomDelayer, TowardPivot,
};
use crate::source::cis::cliques_and_independent_sets;
use crate::source::{cis_cost_bound, cis_protocol, cis_via_src, src_protocol, CisInstance, UndirectedGraph};
use crate::tournament::{ceil_log2, Tournament, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Kings,
    KingProtocol,
    SourceCis,
    GSSigma,
    Fooling,
    Pmf,
    Rank,
    Query,
    Maxsum,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Kings,
        Suite::KingProtocol,
        Suite::SourceCis,
        Suite::GSSigma,
        Suite::Fooling,
        Suite::Pmf,
        Suite::Rank,
        Suite::Query,
        Suite::Maxsum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kings => "kings",
            Suite::KingProtocol => "king-protocol",
            Suite::SourceCis => "source-cis",
            Suite::GSSigma => "gssigma",
            Suite::Fooling => "fooling",
            Suite::Pmf => "pmf",
            Suite::Rank => "rank",
            Suite::Query => "query",
            Suite::Maxsum => "maxsum",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub max_n: usize,
    /// Random instances per size.
    pub trials: usize,
    pub seed: u64,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            max_n: 5,
            trials: 100,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report {
            suite,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, results: Vec<Option<String>>) {
        self.checked += results.len();
        self.failures.extend(results.into_iter().flatten());
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {}: {}/{} checks passed",
            self.suite,
            self.checked - self.failures.len(),
            self.checked
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for fail in self.failures.iter().take(10) {
            writeln!(f, "  failed: {fail}")?;
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

/// Seed for trial `k` at size `n`, distinct across suites sharing a base.
pub fn trial_seed(base: u64, n: usize, k: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(((n as u64) << 32) | k as u64);
    rng.gen()
}

/// Doubling sizes `8, 16, …` not above `max_n`.
fn random_sizes(max_n: usize) -> Vec<usize> {
    std::iter::successors(Some(8usize), |n| Some(n * 2)).take_while(|&n| n <= max_n).collect()
}

fn par_trials(trials: usize, f: impl Fn(usize) -> Option<String> + Sync + Send) -> Vec<Option<String>> {
    (0..trials).into_par_iter().map(f).collect()
}

pub fn run(suite: Suite, scope: &Scope) -> Result<Report> {
    match suite {
        Suite::Kings => kings_suite(scope),
        Suite::KingProtocol => king_protocol_suite(scope),
        Suite::SourceCis => source_cis_suite(scope),
        Suite::GSSigma => gssigma_suite(scope),
        Suite::Fooling => fooling_suite(scope),
        Suite::Pmf => pmf_suite(scope),
        Suite::Rank => rank_suite(scope),
        Suite::Query => query_suite(scope),
        Suite::Maxsum => maxsum_suite(scope),
    }
}

// ---------------------------------------------------------------------------
// kings

/// Vertices with `5·d⁻(v) ≤ 4(n − 1)`.
pub fn low_indegree_count(t: &Tournament) -> usize {
    let n = t.n();
    t.out_degrees().iter().filter(|&&d| 5 * (n - 1 - d) <= 4 * (n - 1)).count()
}

/// Least `low_indegree_count` over all tournaments on `n` vertices: with
/// `a = ⌊4(n−1)/5⌋ + 1`, any `k` vertices of in-degree `≥ a` satisfy
/// `(k−1)/2 + n − k ≥ a`, and a regular `k`-tournament beaten by everyone
/// else attains it. Below `⌈3n/5⌉` at `n = 2` and `n = 7`.
pub fn low_indegree_floor(n: usize) -> usize {
    if n <= 1 {
        return n;
    }
    let a = 4 * (n - 1) / 5 + 1;
    (2 * a + 1).saturating_sub(n).clamp(1, n)
}

/// Names of the king facts that fail on `t`. The in-neighbourhood fact is
/// checked at every vertex when `n ≤ 16`, at three vertices otherwise.
pub fn king_violations(t: &Tournament) -> Vec<String> {
    let n = t.n();
    let kings = t.all_kings();
    let mut bad = Vec::new();
    if kings.is_empty() {
        bad.push("no king".to_string());
    }
    if !t.max_out_degree_set().is_subset(&kings) {
        bad.push("a maximum out-degree vertex is not a king".into());
    }
    if let Some(s) = t.source_of() {
        if kings != VertexSet::from([s]) {
            bad.push(format!("source {s} is not the only king"));
        }
    }
    if kings.len() == 2 {
        bad.push("exactly two kings".into());
    }
    let probes: Vec<usize> = if n <= 16 { (1..=n).collect() } else { vec![1, n / 2, n] };
    for v in probes {
        let ins: VertexSet = (1..=n).filter(|&u| u != v && t.beats(u, v)).collect();
        if ins.is_empty() {
            continue;
        }
        let (sub, labels) = t.induced(&ins).expect("labels in range");
        for k in sub.all_kings() {
            if !kings.contains(&labels[k - 1]) {
                bad.push(format!("king {} of N⁻({v}) is not a king", labels[k - 1]));
            }
        }
    }
    if low_indegree_count(t) < low_indegree_floor(n) {
        bad.push("too few vertices with d⁻ ≤ 4(n−1)/5".into());
    }
    bad
}

fn kings_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Kings);
    for n in 1..=scope.max_n.min(5) {
        let mut below = 0;
        for t in Tournament::all(n) {
            below += usize::from(5 * low_indegree_count(&t) < 3 * n);
            let bad = king_violations(&t);
            r.check(bad.is_empty(), || format!("n={n} {}: {}", t.to_text().trim(), bad.join("; ")));
        }
        if below > 0 {
            r.notes.push(format!("n={n}: {below} tournaments with fewer than ⌈3n/5⌉ low in-degree vertices"));
        }
    }
    for n in random_sizes(scope.max_n) {
        r.absorb(par_trials(scope.trials, |k| {
            let seed = trial_seed(scope.seed, n, k);
            let t = Tournament::random(n, seed).expect("n ≥ 1");
            let mut bad = king_violations(&t);
            if 5 * low_indegree_count(&t) < 3 * n {
                bad.push("fewer than ⌈3n/5⌉ low in-degree vertices".into());
            }
            (!bad.is_empty()).then(|| format!("n={n} seed={seed}: {}", bad.join("; ")))
        }));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// king protocol

/// `None` when the protocol returns a king within the cost envelope.
pub fn king_protocol_failure(t: &Tournament, p: &EdgePartition) -> Option<String> {
    match king_protocol(t, p) {
        Err(e) => Some(e.to_string()),
        Ok(out) => {
            let bits = out.transcript.total_bits();
            if !t.is_king(out.king) {
                Some(format!("output {} is not a king", out.king))
            } else if bits > cost_envelope(t.n()) {
                Some(format!("{bits} bits exceeds {}", cost_envelope(t.n())))
            } else {
                None
            }
        }
    }
}

fn king_protocol_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::KingProtocol);
    for n in 1..=scope.max_n.min(5) {
        let parts: Vec<EdgePartition> = (0..8).map(|k| EdgePartition::random(n, trial_seed(scope.seed, n, k))).collect();
        for t in Tournament::all(n) {
            for p in &parts {
                let fail = king_protocol_failure(&t, p);
                r.check(fail.is_none(), || format!("n={n} {}: {}", t.to_text().trim(), fail.unwrap_or_default()));
            }
        }
    }
    for n in random_sizes(scope.max_n) {
        let bits: Vec<usize> = (0..scope.trials.min(8))
            .map(|k| {
                let seed = trial_seed(scope.seed, n, k);
                let t = Tournament::random(n, seed).expect("n ≥ 1");
                king_protocol(&t, &EdgePartition::random(n, seed ^ 1)).map_or(0, |o| o.transcript.total_bits())
            })
            .collect();
        let mean = bits.iter().sum::<usize>() as f64 / bits.len().max(1) as f64;
        r.notes.push(format!("n={n}: mean {mean:.1} bits, {:.2} bits per vertex", mean / n as f64));
        r.absorb(par_trials(scope.trials, |k| {
            let seed = trial_seed(scope.seed, n, k);
            let t = Tournament::random(n, seed).expect("n ≥ 1");
            king_protocol_failure(&t, &EdgePartition::random(n, seed ^ 1)).map(|e| format!("n={n} seed={seed}: {e}"))
        }));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// source and CIS

/// `src_protocol` against `source_of`, the zero-cost local stage, and the
/// polylog cost bound `(⌈log₂ n⌉ + 5)²`.
pub fn src_failure(t: &Tournament, p: &EdgePartition) -> Option<String> {
    let out = match src_protocol(t, p) {
        Ok(o) => o,
        Err(e) => return Some(e.to_string()),
    };
    let want = t.source_of().unwrap_or(0);
    let bits = out.transcript.total_bits();
    let cap = (ceil_log2(t.n()) + 5).pow(2);
    if out.source != want {
        Some(format!("answered {} instead of {want}", out.source))
    } else if out.bits_before_cis != 0 {
        Some(format!("{} bits before the CIS stage", out.bits_before_cis))
    } else if bits > cap {
        Some(format!("{bits} bits exceeds {cap}"))
    } else {
        None
    }
}

/// `t` with `v` made a source.
pub fn plant_source(t: &Tournament, v: usize) -> Tournament {
    Tournament::from_fn(t.n(), |i, j| {
        if i + 1 == v {
            true
        } else if j + 1 == v {
            false
        } else {
            t.beats0(i, j)
        }
    })
    .expect("same size")
}

/// Both directions of the CIS–SRC correspondence on one instance.
pub fn cis_failure(inst: &CisInstance) -> Option<String> {
    let want = inst.intersection();
    let n = inst.graph.n();
    match cis_protocol(inst) {
        Err(e) => return Some(e.to_string()),
        Ok(out) if out.answer != want => return Some(format!("cis answered {:?} instead of {want:?}", out.answer)),
        Ok(out) if out.transcript.total_bits() > cis_cost_bound(n) => {
            return Some(format!("cis spent {} bits", out.transcript.total_bits()))
        }
        Ok(_) => {}
    }
    match cis_via_src(inst) {
        Err(e) => Some(e.to_string()),
        Ok((got, _)) if got != want => Some(format!("via src answered {got:?} instead of {want:?}")),
        Ok(_) => None,
    }
}

/// Every connected graph on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = UndirectedGraph> {
    let m = n * n.saturating_sub(1) / 2;
    (0u32..1 << m)
        .map(move |code| {
            let bits: Vec<bool> = (0..m).map(|k| code >> k & 1 == 1).collect();
            UndirectedGraph::from_pair_bits(n, &bits).expect("length matches")
        })
        .filter(UndirectedGraph::is_connected)
}

fn source_cis_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::SourceCis);
    for n in 1..=scope.max_n.min(5) {
        let parts: Vec<EdgePartition> = (0..8).map(|k| EdgePartition::random(n, trial_seed(scope.seed, n, k))).collect();
        for t in Tournament::all(n) {
            for p in &parts {
                let fail = src_failure(&t, p);
                r.check(fail.is_none(), || format!("src n={n} {}: {}", t.to_text().trim(), fail.unwrap_or_default()));
            }
        }
        let mut instances = 0;
        for g in connected_graphs(n) {
            let (cliques, indeps) = cliques_and_independent_sets(&g);
            for c in &cliques {
                for i in &indeps {
                    let inst = CisInstance::new(g.clone(), c.clone(), i.clone())?;
                    let fail = cis_failure(&inst);
                    instances += 1;
                    r.check(fail.is_none(), || {
                        format!("cis n={n} C={c:?} I={i:?}: {}", fail.unwrap_or_default())
                    });
                }
            }
        }
        r.notes.push(format!("n={n}: {instances} CIS instances on connected graphs"));
    }
    for n in random_sizes(scope.max_n) {
        r.absorb(par_trials(scope.trials, |k| {
            let seed = trial_seed(scope.seed, n, k);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut t = Tournament::random_with(n, &mut rng).expect("n ≥ 1");
            if k % 2 == 0 {
                t = plant_source(&t, rng.gen_range(1..=n));
            }
            src_failure(&t, &EdgePartition::random(n, rng.gen())).map(|e| format!("src n={n} seed={seed}: {e}"))
        }));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// G_{S,σ}

pub fn gssigma_failure(set: &VertexSet, sigma: &Permutation) -> Option<String> {
    let g = match GSSigma::build(set, sigma) {
        Ok(g) => g,
        Err(e) => return Some(e.to_string()),
    };
    let want = g.predicted_kings();
    let kings = g.tournament.all_kings();
    if kings != want {
        Some(format!("S={set:?} σ={sigma}: kings {kings:?}, expected {want:?}"))
    } else if g.tournament.max_out_degree_set() != want {
        Some(format!("S={set:?} σ={sigma}: maximum out-degree set differs"))
    } else {
        None
    }
}

fn random_nonempty_subset<R: Rng>(n: usize, rng: &mut R) -> VertexSet {
    loop {
        let s: VertexSet = (1..=n).filter(|_| rng.gen()).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

fn gssigma_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::GSSigma);
    for n in 1..=scope.max_n.min(4) {
        let before = r.checked;
        for sigma in Permutation::all(n) {
            for mask in 1u32..1 << n {
                let set: VertexSet = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                let fail = gssigma_failure(&set, &sigma);
                r.check(fail.is_none(), || fail.unwrap_or_default());
            }
        }
        r.notes.push(format!("n={n}: {} instances", r.checked - before));
    }
    for n in random_sizes(scope.max_n.min(32)) {
        r.absorb(par_trials(scope.trials, |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(scope.seed, n, k));
            let sigma = Permutation::random(n, &mut rng);
            gssigma_failure(&random_nonempty_subset(n, &mut rng), &sigma)
        }));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// fooling set

fn fooling_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Fooling);
    let top = scope.max_n.clamp(8, 12);
    for n in (8..=top).step_by(2) {
        let set = greedy_fooling_set(n)?;
        r.notes.push(format!("n={n}: greedy set of size {} (floor {})", set.len(), fooling_size_floor(n)));
        r.check(set.len() as u128 >= fooling_size_floor(n), || format!("n={n}: set below the floor"));
        for sigma in &set {
            let t = fooling_input(n, sigma)?.tournament;
            r.check(t.max_out_degree_set() == VertexSet::from([1]), || {
                format!("n={n} σ={sigma}: vertex 1 is not the unique maximum")
            });
        }
        for (x, s) in set.iter().enumerate() {
            for t in &set[x + 1..] {
                let ok = pair_is_fooling(n, s, t)?;
                r.check(ok, || format!("n={n}: σ={s} σ'={t} is not a fooling pair"));
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// PMF and DISJ

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|&v| m >> (v - 1) & 1 == 1).collect())
}

pub fn disj_failure(n: usize, sa: &VertexSet, t: &VertexSet) -> Option<String> {
    let truth = sa.intersection(t).next().is_some();
    match disj_via_king(n, sa, t) {
        Err(e) => Some(e.to_string()),
        Ok((got, _)) if got != truth => Some(format!("n={n} Sa={sa:?} T={t:?}: answered {got}")),
        Ok(_) => None,
    }
}

fn pmf_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Pmf);
    for n in 1..=scope.max_n.min(5) {
        for sigma in Permutation::all(n) {
            for set in subsets(n) {
                let inst = PmfInstance::new(set, sigma.clone())?;
                let (s, g) = pmf_to_tindex(&inst)?;
                let ok = tindex_to_pmf(&s, &g)? == inst && tindex_king(&s, &g)? == pmf_eval(&inst);
                r.check(ok, || format!("n={n} S={:?} σ={sigma}: maps disagree", inst.set));
            }
        }
    }
    for n in 1..=scope.max_n.min(6) {
        let pairs: Vec<(VertexSet, VertexSet)> =
            subsets(n).flat_map(|a| subsets(n).map(move |b| (a.clone(), b))).collect();
        r.absorb(pairs.par_iter().map(|(a, b)| disj_failure(n, a, b)).collect());
    }
    for n in random_sizes(scope.max_n) {
        r.absorb(par_trials(scope.trials, |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(scope.seed, n, k));
            let sa: VertexSet = (1..=n).filter(|_| rng.gen_bool(0.1)).collect();
            let t: VertexSet = (1..=n).filter(|_| rng.gen_bool(0.1)).collect();
            disj_failure(n, &sa, &t)
        }));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// rank game

fn rank_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Rank);
    let mut values = Vec::new();
    for n in 1..=4 {
        let v = exact_game_value(n)?;
        values.push(format!("n={n}: {v}"));
        r.check(v == n - 1, || format!("n={n}: game value {v}"));
    }
    r.notes.push(format!("exact game values {}", values.join(", ")));
    for n in 1..=scope.max_n.clamp(4, 16) {
        let mut delayers: Vec<(String, Box<dyn Delayer>)> = vec![
            ("always-defer".into(), Box::new(AlwaysDefer)),
            ("toward-pivot".into(), Box::new(TowardPivot)),
            (format!("defer-first({})", n - 1), Box::new(DeferFirst::new(n - 1))),
        ];
        for k in 0..scope.trials.min(20) {
            let p = [0.25, 0.5, 0.9][k % 3];
            delayers.push((format!("random({k})"), Box::new(RandomDelayer::new(trial_seed(scope.seed, n, k), p))));
        }
        for (name, mut d) in delayers {
            let g = play_alg3(n, d.as_mut());
            r.check(g.valid && g.delayer_score <= n - 1, || {
                format!("n={n} {name}: score {} valid {}", g.delayer_score, g.valid)
            });
            if name.starts_with("defer-first") {
                r.check(g.delayer_score == n - 1, || format!("n={n} {name}: score {}", g.delayer_score));
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// query model

fn query_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Query);
    for n in 1..=scope.max_n.min(5) {
        for t in Tournament::all(n) {
            let kings = t.all_kings();
            for k in 0..20 {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(scope.seed, n, k));
                let mut o = CountingOracle::new(&t);
                let v = randomized_king_query(&mut o, &mut rng);
                r.check(kings.contains(&v), || format!("n={n} {}: returned {v}", t.to_text().trim()));
            }
        }
    }
    for n in random_sizes(scope.max_n) {
        let results: Vec<(bool, usize, u64)> = (0..scope.trials)
            .into_par_iter()
            .map(|k| {
                let seed = trial_seed(scope.seed, n, k);
                let t = Tournament::random(n, seed).expect("n ≥ 1");
                let mut o = CountingOracle::new(&t);
                let v = randomized_king_query(&mut o, &mut ChaCha8Rng::seed_from_u64(seed ^ 7));
                (t.is_king(v), o.queries(), seed)
            })
            .collect();
        let mean = results.iter().map(|x| x.1).sum::<usize>() as f64 / results.len().max(1) as f64;
        r.notes.push(format!("n={n}: mean {mean:.1} queries ({:.2}n)", mean / n as f64));
        r.check(mean <= 10.0 * n as f64, || format!("n={n}: mean {mean:.1} queries above 10n"));
        r.absorb(
            results
                .into_iter()
                .map(|(ok, _, seed)| (!ok).then(|| format!("n={n} seed={seed}: not a king")))
                .collect(),
        );
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// MAXSUM and MOD

fn sum_is_max(a: &[usize], b: &[usize], index: usize) -> bool {
    let best = argmax_sum(a, b);
    index >= 1 && index <= a.len() && a[index - 1] + b[index - 1] == a[best - 1] + b[best - 1]
}

fn maxsum_suite(scope: &Scope) -> Result<Report> {
    let mut r = Report::new(Suite::Maxsum);
    for n in 1..=scope.max_n.min(5) {
        let parts: Vec<EdgePartition> = (0..4).map(|k| EdgePartition::random(n, trial_seed(scope.seed, n, k))).collect();
        for t in Tournament::all(n) {
            for p in &parts {
                let out = mod_protocol(&t, p, ModMode::Det)?;
                r.check(t.max_out_degree_set().contains(&out.index), || {
                    format!("mod n={n} {}: answered {}", t.to_text().trim(), out.index)
                });
            }
        }
    }
    for n in random_sizes(scope.max_n) {
        let bound = n - 1;
        let outcomes: Vec<(Option<String>, bool)> = (0..scope.trials)
            .into_par_iter()
            .map(|k| {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(scope.seed, n, k));
                let a: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=bound)).collect();
                let b: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=bound)).collect();
                let det = maxsum_det(&a, &b, bound).expect("entries within bound");
                let fail = (!sum_is_max(&a, &b, det.index)).then(|| format!("det n={n} trial {k}"));
                let rand = maxsum_rand(&a, &b, bound, rng.gen()).expect("entries within bound");
                (fail, sum_is_max(&a, &b, rand.index))
            })
            .collect();
        let wins = outcomes.iter().filter(|x| x.1).count();
        r.notes.push(format!("n={n}: randomized success {wins}/{}", outcomes.len()));
        r.check(3 * wins >= 2 * outcomes.len(), || format!("n={n}: randomized success {wins}/{}", outcomes.len()));
        r.absorb(outcomes.into_iter().map(|x| x.0).collect());
    }
    let universe = 1 << 20;
    let errors: usize = (0..scope.trials.max(1) * 10)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(scope.seed, universe, k));
            let x = rng.gen_range(1..universe - 1);
            let y = match k % 3 {
                0 => x + 1,
                1 => x - 1,
                _ => rng.gen_range(0..universe),
            };
            let (got, _) = gt_protocol(x, y, universe, rng.gen()).expect("operands in range");
            usize::from(got != (x >= y))
        })
        .sum();
    let trials = scope.trials.max(1) * 10;
    r.notes.push(format!("greater-than: {errors}/{trials} errors"));
    r.check(3 * errors <= trials, || format!("greater-than error rate {errors}/{trials}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn low_indegree_examples() {
        assert_eq!(low_indegree_count(&Tournament::three_cycle()), 3);
        let t = Tournament::transitive(&Permutation::identity(5)).unwrap();
        // in-degrees 4,3,2,1,0; threshold 16/5
        assert_eq!(low_indegree_count(&t), 4);
    }

    #[test]
    fn low_indegree_floor_is_attained() {
        assert_eq!((1..=8).map(low_indegree_floor).collect::<Vec<_>>(), [1, 1, 2, 3, 4, 5, 4, 5]);
        // a 3-cycle beaten by four others
        let t = Tournament::from_fn(7, |i, j| if j < 3 { j - i == 1 } else { i >= 3 }).unwrap();
        assert_eq!(t.out_degrees()[..3], [1, 1, 1]);
        assert_eq!(low_indegree_count(&t), 4);
        for n in 1..=5 {
            let worst = Tournament::all(n).map(|t| low_indegree_count(&t)).min().unwrap();
            assert_eq!(worst, low_indegree_floor(n));
        }
    }

    #[test]
    fn planted_source() {
        let t = plant_source(&Tournament::three_cycle(), 2);
        assert_eq!(t.source_of(), Some(2));
    }

    #[test]
    fn small_suites_pass() {
        let scope = Scope {
            max_n: 4,
            trials: 5,
            seed: 3,
        };
        for s in Suite::ALL {
            let r = run(s, &scope).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{s}");
        }
    }

    #[test]
    fn gssigma_count_at_four() {
        let r = run(Suite::GSSigma, &Scope { max_n: 4, trials: 0, seed: 0 }).unwrap();
        assert!(r.notes.iter().any(|n| n == "n=4: 360 instances"));
    }
}
