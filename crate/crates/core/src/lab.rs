//! Exhaustive and seeded-random sweeps over balanced bipartite digraphs.
//!
//! Three sweeps are provided: [`verify_theorem2`] (condition A forces
//! bipancyclicity or the single `2a`-cycle, with the structural lemmas and
//! associated-digraph checks tallied alongside), [`search_sharpness`] (strongly
//! connected digraphs meeting a relaxed pair bound but lacking a Hamiltonian
//! cycle), and [`search_open_question`] (relaxed bound but missing a short even
//! cycle).
//!
//! The universe is cut into fixed-size chunks that are processed in parallel
//! and merged in chunk order, so reports never depend on the worker count.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::associated::{
    build_associated, classify_thomassen_case, diagnose_proof_path, CycleLabeling, ThomassenCase, Which,
};
use crate::conditions::{self, check_condition_a, check_degree_cap, check_pair_condition, lemmas, relaxed_bound};
use crate::cycles::{is_directed_2a_cycle, search_cycle_of_length, search_hamiltonian_cycle, Budget, Search};
use crate::digraph::{BipartiteDigraph, Digraph, VertexId, MAX_PART};
use crate::format::write_digraph;

/// Every potential arc of a balanced bipartite digraph, sorted by `(u, v)`.
pub fn arc_slots(a: usize) -> Vec<(VertexId, VertexId)> {
    (0..2 * a)
        .flat_map(|u| {
            let heads = if u < a { a..2 * a } else { 0..a };
            heads.map(move |v| (VertexId(u), VertexId(v)))
        })
        .collect()
}

/// Digraph whose arc set is the bitmask `mask` over [`arc_slots`].
pub fn digraph_from_mask(a: usize, mask: u64) -> BipartiteDigraph {
    let arcs: Vec<_> =
        arc_slots(a).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, arc)| arc).collect();
    BipartiteDigraph::new(a, arcs).expect("arc slots are valid")
}

/// Largest `a` whose labeled universe fits a 64-bit mask.
pub const MAX_ENUMERABLE_PART: usize = 5;

/// All `2^(2a^2)` labeled balanced bipartite digraphs, in increasing mask order.
pub fn enumerate_bipartite(a: usize) -> impl Iterator<Item = BipartiteDigraph> {
    assert!((1..=MAX_ENUMERABLE_PART).contains(&a), "enumeration supports 1 <= a <= {MAX_ENUMERABLE_PART}");
    (0..1u64 << (2 * a * a)).map(move |mask| digraph_from_mask(a, mask))
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 generator (Steele, Lea, Flood), used bit-exactly for reproducible sampling.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Inclusion threshold on 53-bit draws: an arc is kept iff `draw >> 11 < threshold`.
pub fn probability_threshold(p: f64) -> u64 {
    (p * (1u64 << 53) as f64) as u64
}

/// One draw per arc slot in [`arc_slots`] order from `SplitMix64::new(seed)`.
pub fn random_bipartite(a: usize, p: f64, seed: u64) -> BipartiteDigraph {
    let threshold = probability_threshold(p);
    let mut rng = SplitMix64::new(seed);
    let arcs: Vec<_> = arc_slots(a).into_iter().filter(|_| rng.next_u64() >> 11 < threshold).collect();
    BipartiteDigraph::new(a, arcs).expect("arc slots are valid")
}

/// Seed of sample `index` in a random sweep: the `index`-th output of
/// `SplitMix64::new(seed)`.
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    mix64(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Exhaustive,
    Random { seed: u64, samples: u64, arc_probability: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Theorem2,
    /// Pair bound relaxed to `3a - k`; witnesses lack a Hamiltonian cycle.
    Sharpness {
        k: usize,
    },
    /// Pair bound relaxed to `3a - k`; witnesses miss some even length `<= 2l`.
    OpenQuestion {
        k: usize,
        l: usize,
    },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Theorem2 => f.write_str("theorem2"),
            Hypothesis::Sharpness { k } => write!(f, "sharpness(k={k})"),
            Hypothesis::OpenQuestion { k, l } => write!(f, "open-question(k={k}, l={l})"),
        }
    }
}

/// Wall-clock and per-search node limits; whichever is hit first ends the run.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LabBudget {
    pub seconds: Option<f64>,
    pub nodes: Option<u64>,
}

pub type Prefilter = Arc<dyn Fn(&BipartiteDigraph) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct SearchSpec {
    pub a: usize,
    pub mode: Mode,
    pub hypothesis: Hypothesis,
    pub budget: LabBudget,
    /// Permits exhaustive sweeps beyond `a = 3`.
    pub allow_large_exhaustive: bool,
    /// Thread count; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Digraphs rejected here are counted as examined and otherwise skipped.
    pub prefilter: Option<Prefilter>,
}

impl fmt::Debug for SearchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchSpec")
            .field("a", &self.a)
            .field("mode", &self.mode)
            .field("hypothesis", &self.hypothesis)
            .field("budget", &self.budget)
            .field("allow_large_exhaustive", &self.allow_large_exhaustive)
            .field("workers", &self.workers)
            .field("prefilter", &self.prefilter.is_some())
            .finish()
    }
}

impl SearchSpec {
    pub fn exhaustive(a: usize, hypothesis: Hypothesis) -> Self {
        SearchSpec {
            a,
            mode: Mode::Exhaustive,
            hypothesis,
            budget: LabBudget::default(),
            allow_large_exhaustive: false,
            workers: None,
            prefilter: None,
        }
    }

    pub fn random(a: usize, hypothesis: Hypothesis, seed: u64, samples: u64, arc_probability: f64) -> Self {
        SearchSpec { mode: Mode::Random { seed, samples, arc_probability }, ..Self::exhaustive(a, hypothesis) }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn validate(&self) -> Result<(), LabError> {
        let a = self.a;
        if a < 3 {
            return Err(LabError::OrderTooSmall(a));
        }
        match self.mode {
            Mode::Exhaustive => {
                if a > 3 && !self.allow_large_exhaustive {
                    return Err(LabError::ExhaustiveNeedsOverride(a));
                }
                if a > MAX_ENUMERABLE_PART {
                    return Err(LabError::NotEnumerable(a));
                }
            }
            Mode::Random { arc_probability: p, .. } => {
                if a > MAX_PART {
                    return Err(LabError::OrderTooLarge(a));
                }
                if !(p > 0.0 && p < 1.0) {
                    return Err(LabError::Probability(p));
                }
            }
        }
        match self.hypothesis {
            Hypothesis::OpenQuestion { l, .. } if l < 1 || l >= a => {
                Err(LabError::Parameters(format!("l = {l} must satisfy 1 <= l < a = {a}")))
            }
            _ => Ok(()),
        }?;
        if let Some(s) = self.budget.seconds {
            if s.is_nan() || s <= 0.0 {
                return Err(LabError::Parameters(format!("budget of {s} seconds")));
            }
        }
        if self.workers == Some(0) {
            return Err(LabError::Parameters("zero workers".into()));
        }
        Ok(())
    }

    fn universe_size(&self) -> u64 {
        match self.mode {
            Mode::Exhaustive => 1u64 << (2 * self.a * self.a),
            Mode::Random { samples, .. } => samples,
        }
    }

    fn instance(&self, index: u64) -> BipartiteDigraph {
        match self.mode {
            Mode::Exhaustive => digraph_from_mask(self.a, index),
            Mode::Random { seed, arc_probability, .. } => {
                random_bipartite(self.a, arc_probability, sample_seed(seed, index))
            }
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum LabError {
    #[error("partite sets of size {0} < 3")]
    OrderTooSmall(usize),
    #[error("exhaustive mode beyond a = 3 requires an explicit override (a = {0})")]
    ExhaustiveNeedsOverride(usize),
    #[error("a = {0} is too large to enumerate exhaustively")]
    NotEnumerable(usize),
    #[error("a = {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("arc probability {0} must lie strictly between 0 and 1")]
    Probability(f64),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("hypothesis {0} is not handled by this sweep")]
    WrongHypothesis(Hypothesis),
}

/// One offending or witnessing digraph, self-contained for reproduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    /// Arc-set mask (exhaustive) or sample number (random).
    pub index: u64,
    pub clause: String,
    pub detail: String,
    /// The digraph in the plain-text format.
    pub digraph: String,
}

impl Record {
    fn new(index: u64, clause: &str, detail: impl Into<String>, d: &BipartiteDigraph) -> Self {
        Record { index, clause: clause.to_string(), detail: detail.into(), digraph: write_digraph(d) }
    }

    /// Parses the embedded digraph back.
    pub fn digraph(&self) -> Result<BipartiteDigraph, crate::format::ParseError> {
        crate::format::parse_digraph(&self.digraph)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Completed,
    BudgetExhausted,
}

/// Named counters, kept in insertion order for stable output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally(Vec<(&'static str, u64)>);

impl Tally {
    fn add(&mut self, key: &'static str, n: u64) {
        match self.0.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => *v += n,
            None => self.0.push((key, n)),
        }
    }

    fn bump(&mut self, key: &'static str) {
        self.add(key, 1);
    }

    pub fn merge(&mut self, other: &Tally) {
        for &(k, v) in &other.0 {
            self.add(k, v);
        }
    }

    pub fn get(&self, key: &str) -> u64 {
        self.0.iter().find(|(k, _)| *k == key).map_or(0, |&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, u64)> + '_ {
        self.0.iter().copied()
    }
}

#[derive(Clone, Debug)]
pub struct VerdictReport {
    pub a: usize,
    pub hypothesis: Hypothesis,
    pub mode: Mode,
    pub status: Status,
    pub digraphs_examined: u64,
    pub hypothesis_passers: u64,
    pub counters: Tally,
    /// Conclusion failures (for verification) in universe order.
    pub failures: Vec<Record>,
    /// Search witnesses in universe order.
    pub witnesses: Vec<Record>,
    /// Digraphs whose searches ran out of node budget.
    pub undecided: Vec<Record>,
    pub runtime: Duration,
}

impl VerdictReport {
    pub fn is_clean(&self) -> bool {
        self.status == Status::Completed && self.failures.is_empty()
    }

    /// Line-delimited JSON, one record per failure, witness and undecided digraph.
    pub fn machine_format(&self) -> String {
        self.failures
            .iter()
            .chain(&self.witnesses)
            .chain(&self.undecided)
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }

    /// Human-readable summary; only the final `runtime:` line varies between runs.
    pub fn render(&self) -> String {
        let mut lines: Vec<String> = Vec::new();
        let mut line = |s: String| lines.push(s);
        line(format!("hypothesis: {}", self.hypothesis));
        line(format!("a: {}", self.a));
        line(match self.mode {
            Mode::Exhaustive => "mode: exhaustive".to_string(),
            Mode::Random { seed, samples, arc_probability } => {
                format!("mode: random seed={seed} samples={samples} p={arc_probability}")
            }
        });
        line(format!(
            "status: {}",
            match self.status {
                Status::Completed => "completed",
                Status::BudgetExhausted => "budget exhausted",
            }
        ));
        line(format!("digraphs examined: {}", self.digraphs_examined));
        line(format!("hypothesis passers: {}", self.hypothesis_passers));
        for (k, v) in self.counters.iter() {
            line(format!("{k}: {v}"));
        }
        line(format!("conclusion failures: {}", self.failures.len()));
        line(format!("witnesses: {}", self.witnesses.len()));
        line(format!("undecided: {}", self.undecided.len()));
        for r in self.failures.iter().chain(&self.witnesses).chain(&self.undecided) {
            line(format!("-- {} #{}: {}", r.clause, r.index, r.detail));
            line(r.digraph.trim_end().to_string());
        }
        line(format!("runtime: {:.3}s", self.runtime.as_secs_f64()));
        lines.join("\n") + "\n"
    }
}

#[derive(Default)]
struct Partial {
    examined: u64,
    passers: u64,
    counters: Tally,
    failures: Vec<Record>,
    witnesses: Vec<Record>,
    undecided: Vec<Record>,
    out_of_time: bool,
}

impl Partial {
    fn merge(&mut self, other: Partial) {
        self.examined += other.examined;
        self.passers += other.passers;
        self.counters.merge(&other.counters);
        self.failures.extend(other.failures);
        self.witnesses.extend(other.witnesses);
        self.undecided.extend(other.undecided);
        self.out_of_time |= other.out_of_time;
    }
}

const CHUNK: u64 = 4096;

type Checker = fn(&SearchSpec, u64, &BipartiteDigraph, Budget, &mut Partial);

fn run(spec: &SearchSpec, check: Checker) -> Result<VerdictReport, LabError> {
    spec.validate()?;
    let started = Instant::now();
    let deadline = spec.budget.seconds.map(|s| started + Duration::from_secs_f64(s));
    let budget = Budget { max_nodes: spec.budget.nodes, deadline };
    let total = spec.universe_size();
    let chunks = total.div_ceil(CHUNK);

    let process = |chunk: u64| {
        let mut part = Partial::default();
        for index in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
            if deadline.is_some_and(|t| Instant::now() >= t) {
                part.out_of_time = true;
                break;
            }
            let d = spec.instance(index);
            part.examined += 1;
            if spec.prefilter.as_ref().is_none_or(|keep| keep(&d)) {
                check(spec, index, &d, budget, &mut part);
            }
        }
        part
    };
    let partials: Vec<Partial> = match spec.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| LabError::Parameters(e.to_string()))?;
            pool.install(|| (0..chunks).into_par_iter().map(process).collect())
        }
        None => (0..chunks).into_par_iter().map(process).collect(),
    };
    let mut merged = Partial::default();
    for p in partials {
        merged.merge(p);
    }
    let status =
        if merged.out_of_time || !merged.undecided.is_empty() { Status::BudgetExhausted } else { Status::Completed };
    Ok(VerdictReport {
        a: spec.a,
        hypothesis: spec.hypothesis,
        mode: spec.mode,
        status,
        digraphs_examined: merged.examined,
        hypothesis_passers: merged.passers,
        counters: merged.counters,
        failures: merged.failures,
        witnesses: merged.witnesses,
        undecided: merged.undecided,
        runtime: started.elapsed(),
    })
}

/// Structural checks on a digraph meeting the lemma hypotheses, given one of
/// its Hamiltonian cycles.
fn check_structure(index: u64, d: &BipartiteDigraph, hamiltonian: &crate::digraph::Cycle, part: &mut Partial) {
    let t = &mut part.counters;
    t.bump("lemma population");
    for (name, verdict) in [("lemma1", lemmas::lemma1(d)), ("lemma2", lemmas::lemma2(d)), ("lemma3", lemmas::lemma3(d))]
    {
        if let Some(w) = verdict.witness() {
            part.failures.push(Record::new(index, name, w.describe(d), d));
        }
    }
    if let Some(w) = conditions::check_min_degree(d).witness() {
        part.failures.push(Record::new(index, "min_degree", w.describe(d), d));
    }
    let labeling = match CycleLabeling::from_cycle(d, hamiltonian) {
        Ok(l) => l,
        Err(e) => {
            part.failures.push(Record::new(index, "labeling", e.to_string(), d));
            return;
        }
    };
    for which in [Which::G1, Which::G2] {
        let assoc = build_associated(d, &labeling, which).expect("a >= 3");
        part.counters.bump("associated digraphs checked");
        if let Some(i) = assoc.degree_transfer_violation(d) {
            part.failures.push(Record::new(index, "degree_transfer", format!("{which} label {}", i + 1), d));
        }
        if let Some((i, j)) = assoc.degree_sum_violation() {
            part.failures.push(Record::new(index, "lemma4", format!("{which} labels {} and {}", i + 1, j + 1), d));
        }
        if which == Which::G2 {
            continue;
        }
        match classify_thomassen_case(&assoc.graph) {
            Ok(ThomassenCase::Tournament) => {
                part.failures.push(Record::new(index, "tournament", "G1 is a tournament", d));
            }
            Ok(case) => part.counters.bump(match case {
                ThomassenCase::Pancyclic(_) => "G1 pancyclic",
                ThomassenCase::BalancedCompleteBipartite { .. } => "G1 balanced complete bipartite",
                _ => "G1 unclassified",
            }),
            Err(e) => part.failures.push(Record::new(index, "thomassen_hypothesis", e.to_string(), d)),
        }
    }
}

/// Lifts one cycle of each length found in `G1` and checks it doubles in `d`.
fn check_lifts(index: u64, d: &BipartiteDigraph, hamiltonian: &crate::digraph::Cycle, part: &mut Partial) {
    let Ok(labeling) = CycleLabeling::from_cycle(d, hamiltonian) else {
        part.failures.push(Record::new(index, "labeling", "hamiltonian cycle does not relabel", d));
        return;
    };
    let g1 = build_associated(d, &labeling, Which::G1).expect("a >= 3");
    for l in 2..=d.part_size() {
        let Some(c) = crate::cycles::find_cycle_of_length(&g1.graph, l).expect("valid length") else {
            continue;
        };
        part.counters.bump("lift validations");
        match g1.lift_cycle(d, &c) {
            Ok(lift) if lift.len() == 2 * l => {}
            Ok(lift) => {
                part.failures.push(Record::new(index, "lift", format!("length {l} lifted to {}", lift.len()), d))
            }
            Err(e) => part.failures.push(Record::new(index, "lift", e.to_string(), d)),
        }
    }
}

fn check_theorem2(_spec: &SearchSpec, index: u64, d: &BipartiteDigraph, budget: Budget, part: &mut Partial) {
    if !d.is_strongly_connected() {
        return;
    }
    part.counters.bump("strongly connected");
    if !check_condition_a(d).is_ok() {
        return;
    }
    part.passers += 1;
    let hamiltonian = match search_hamiltonian_cycle(d, budget) {
        Search::Found(c) => Some(c),
        Search::Absent => None,
        Search::Exhausted => {
            part.undecided.push(Record::new(index, "undecided", "hamiltonian search out of budget", d));
            return;
        }
    };
    if is_directed_2a_cycle(d) {
        part.counters.bump("exceptional 2a-cycles");
        return;
    }
    let Some(hamiltonian) = hamiltonian else {
        part.failures.push(Record::new(index, "theorem1", "no hamiltonian cycle", d));
        part.failures.push(Record::new(index, "theorem2", "no hamiltonian cycle, not the 2a-cycle", d));
        return;
    };
    part.counters.bump("hamiltonian");
    check_lifts(index, d, &hamiltonian, part);
    match crate::cycles::cycle_spectrum_within(d, budget) {
        None => {
            part.undecided.push(Record::new(index, "undecided", "spectrum search out of budget", d));
            return;
        }
        Some(s) if s.is_bipancyclic() && s.validate(d) => part.counters.bump("bipancyclic"),
        Some(s) => {
            let missing: Vec<_> = s.missing_lengths().iter().map(usize::to_string).collect();
            part.failures.push(Record::new(index, "theorem2", format!("missing lengths {}", missing.join(",")), d));
        }
    }
    match diagnose_proof_path(d) {
        Ok(t) if t.certifies_bipancyclic(d) => part.counters.bump("proof traces"),
        Ok(_) => part.failures.push(Record::new(index, "proof_trace", "certificates incomplete", d)),
        Err(e) => part.failures.push(Record::new(index, "proof_trace", e.to_string(), d)),
    }
    if check_degree_cap(d).is_ok() {
        check_structure(index, d, &hamiltonian, part);
    } else {
        part.counters.bump("degree cap violated");
    }
}

/// Checks that every strongly connected digraph satisfying condition A is
/// bipancyclic or the directed `2a`-cycle, tallying the supporting lemmas.
pub fn verify_theorem2(spec: &SearchSpec) -> Result<VerdictReport, LabError> {
    if spec.hypothesis != Hypothesis::Theorem2 {
        return Err(LabError::WrongHypothesis(spec.hypothesis));
    }
    run(spec, check_theorem2)
}

/// Outcome of the verification checks on a single digraph.
#[derive(Clone, Debug, Default)]
pub struct Audit {
    pub passed_hypotheses: bool,
    pub counters: Tally,
    pub failures: Vec<Record>,
    pub undecided: Vec<Record>,
}

/// Runs the verification checks of [`verify_theorem2`] on one digraph outside
/// any sweep; `index` only labels the records.
pub fn audit_theorem2(index: u64, d: &BipartiteDigraph, budget: Budget) -> Audit {
    let mut part = Partial::default();
    let spec = SearchSpec::exhaustive(d.part_size(), Hypothesis::Theorem2);
    check_theorem2(&spec, index, d, budget, &mut part);
    Audit {
        passed_hypotheses: part.passers > 0,
        counters: part.counters,
        failures: part.failures,
        undecided: part.undecided,
    }
}

fn relaxed_passer(spec: &SearchSpec, k: usize, d: &BipartiteDigraph, part: &mut Partial) -> bool {
    if !d.is_strongly_connected() {
        return false;
    }
    part.counters.bump("strongly connected");
    if !check_pair_condition(d, relaxed_bound(spec.a, k)).is_ok() {
        return false;
    }
    part.passers += 1;
    true
}

fn check_sharpness(spec: &SearchSpec, index: u64, d: &BipartiteDigraph, budget: Budget, part: &mut Partial) {
    let Hypothesis::Sharpness { k } = spec.hypothesis else { unreachable!() };
    if !relaxed_passer(spec, k, d, part) {
        return;
    }
    match search_hamiltonian_cycle(d, budget) {
        Search::Found(_) => {}
        Search::Absent => part.witnesses.push(Record::new(index, "sharpness", "no hamiltonian cycle", d)),
        Search::Exhausted => {
            part.undecided.push(Record::new(index, "undecided", "hamiltonian search out of budget", d))
        }
    }
}

/// Strongly connected digraphs with every dominated pair at `d(u)+d(v) >= 3a-k`
/// and no Hamiltonian cycle.
pub fn search_sharpness(spec: &SearchSpec) -> Result<VerdictReport, LabError> {
    if !matches!(spec.hypothesis, Hypothesis::Sharpness { .. }) {
        return Err(LabError::WrongHypothesis(spec.hypothesis));
    }
    run(spec, check_sharpness)
}

fn check_open_question(spec: &SearchSpec, index: u64, d: &BipartiteDigraph, budget: Budget, part: &mut Partial) {
    let Hypothesis::OpenQuestion { k, l } = spec.hypothesis else { unreachable!() };
    if !relaxed_passer(spec, k, d, part) {
        return;
    }
    for m in 1..=l {
        match search_cycle_of_length(d, 2 * m, budget).expect("even length within order") {
            Search::Found(_) => {}
            Search::Absent => {
                part.witnesses.push(Record::new(index, "open_question", format!("missing length {}", 2 * m), d));
                return;
            }
            Search::Exhausted => {
                part.undecided.push(Record::new(index, "undecided", format!("length {} out of budget", 2 * m), d));
                return;
            }
        }
    }
}

/// Strongly connected digraphs with every dominated pair at `d(u)+d(v) >= 3a-k`
/// missing some even cycle length `2m`, `m <= l`. Each witness names the
/// shortest missing length.
pub fn search_open_question(spec: &SearchSpec) -> Result<VerdictReport, LabError> {
    if !matches!(spec.hypothesis, Hypothesis::OpenQuestion { .. }) {
        return Err(LabError::WrongHypothesis(spec.hypothesis));
    }
    run(spec, check_open_question)
}

/// Dispatches on the spec's hypothesis.
pub fn run_spec(spec: &SearchSpec) -> Result<VerdictReport, LabError> {
    match spec.hypothesis {
        Hypothesis::Theorem2 => verify_theorem2(spec),
        Hypothesis::Sharpness { .. } => search_sharpness(spec),
        Hypothesis::OpenQuestion { .. } => search_open_question(spec),
    }
}
