//! Relabeling along a Hamiltonian cycle and the two associated digraphs.
//!
//! Given a Hamiltonian cycle `C = [y_1, x_1, y_2, x_2, .., y_a, x_a]` of `D`,
//! the digraph `G1` on `v_1..v_a` has an arc `v_i -> v_j` (`i != j`) whenever
//! `x_i -> y_j` is an arc of `D`, and `G2` on `w_1..w_a` has `w_i -> w_j`
//! whenever `y_i -> x_j` is. A cycle `[v_i1, .., v_il]` of `G1` lifts to the
//! cycle `[y_i1, x_i1, .., y_il, x_il]` of `D`, twice as long.

use std::fmt;

use thiserror::Error;

use crate::cycles::{find_cycle_of_length, pancyclic_certificates};
use crate::digraph::{BipartiteDigraph, Cycle, CycleError, Digraph, GeneralDigraph, Side, VertexId, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssocError {
    #[error("cycle is not hamiltonian: length {len}, expected {expected}")]
    NotHamiltonian { len: usize, expected: usize },
    #[error("cycle does not validate in the digraph: {0}")]
    InvalidCycle(#[from] CycleError),
    #[error("associated digraphs need a >= 3, got a = {0}")]
    TooSmall(usize),
    #[error("lifted cycle does not validate: {0}")]
    LiftInconsistent(CycleError),
    #[error("cycle does not validate in the associated digraph: {0}")]
    NotACycleOfAssociated(CycleError),
    #[error("Thomassen hypothesis not satisfied: {0}")]
    HypothesisFailed(String),
}

/// Labels `x_1..x_a`, `y_1..y_a` read off a Hamiltonian cycle so that it becomes
/// `[y_1, x_1, .., y_a, x_a]`. Labels are 0-based in the API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleLabeling {
    x_order: Vec<VertexId>,
    y_order: Vec<VertexId>,
}

impl CycleLabeling {
    /// Rotates `cycle` to start at its smallest `Y` vertex and reads labels alternately.
    pub fn from_cycle(d: &BipartiteDigraph, cycle: &Cycle) -> Result<Self, AssocError> {
        let a = d.part_size();
        if cycle.len() != 2 * a {
            return Err(AssocError::NotHamiltonian { len: cycle.len(), expected: 2 * a });
        }
        cycle.validate(d)?;
        let start = cycle
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, &v)| d.side(v) == Side::Y)
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .expect("a hamiltonian cycle meets Y");
        let rotated = cycle.rotated(start);
        let (y_order, x_order) = rotated.vertices().chunks(2).map(|p| (p[0], p[1])).unzip();
        Ok(CycleLabeling { x_order, y_order })
    }

    pub fn part_size(&self) -> usize {
        self.x_order.len()
    }

    /// Vertex carrying label `x_{i+1}`.
    pub fn x(&self, i: usize) -> VertexId {
        self.x_order[i]
    }

    /// Vertex carrying label `y_{i+1}`.
    pub fn y(&self, i: usize) -> VertexId {
        self.y_order[i]
    }

    pub fn is_identity(&self) -> bool {
        let a = self.part_size();
        (0..a).all(|i| self.x(i) == VertexId(i) && self.y(i) == VertexId(a + i))
    }

    /// `[y_1, x_1, .., y_a, x_a]`.
    pub fn cycle(&self, d: &BipartiteDigraph) -> Result<Cycle, CycleError> {
        let seq = (0..self.part_size()).flat_map(|i| [self.y(i), self.x(i)]).collect();
        Cycle::new(d, seq)
    }

    /// `[x_a, y_a, x_{a-1}, y_{a-1}, .., x_1, y_1]`, if present in `d`.
    pub fn reversed_cycle(&self, d: &BipartiteDigraph) -> Result<Cycle, CycleError> {
        let seq = (0..self.part_size()).rev().flat_map(|i| [self.x(i), self.y(i)]).collect();
        Cycle::new(d, seq)
    }

    /// Label index of a vertex, `(side, i)` meaning `x_{i+1}` or `y_{i+1}`.
    pub fn label_of(&self, v: VertexId) -> Option<(Side, usize)> {
        if let Some(i) = self.x_order.iter().position(|&x| x == v) {
            return Some((Side::X, i));
        }
        self.y_order.iter().position(|&y| y == v).map(|i| (Side::Y, i))
    }

    fn label_name(&self, v: VertexId) -> String {
        match self.label_of(v) {
            Some((Side::X, i)) => format!("x{}", i + 1),
            Some((Side::Y, i)) => format!("y{}", i + 1),
            None => format!("?{}", v.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// Arcs from `x_i -> y_j`.
    G1,
    /// Arcs from `y_i -> x_j`.
    G2,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::G1 => "G1",
            Which::G2 => "G2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedDigraph {
    pub which: Which,
    pub graph: GeneralDigraph,
    pub labeling: CycleLabeling,
}

pub fn build_associated(
    d: &BipartiteDigraph,
    labeling: &CycleLabeling,
    which: Which,
) -> Result<AssociatedDigraph, AssocError> {
    let a = d.part_size();
    if a < 3 {
        return Err(AssocError::TooSmall(a));
    }
    type Pick = fn(&CycleLabeling, usize) -> VertexId;
    let (tail, head): (Pick, Pick) = match which {
        Which::G1 => (CycleLabeling::x, CycleLabeling::y),
        Which::G2 => (CycleLabeling::y, CycleLabeling::x),
    };
    let mut arcs = Vec::new();
    for i in 0..a {
        for j in (0..a).filter(|&j| j != i) {
            if d.has_arc(tail(labeling, i), head(labeling, j)) {
                arcs.push((VertexId(i), VertexId(j)));
            }
        }
    }
    let graph = GeneralDigraph::new(a, arcs).expect("arcs between distinct labels in range");
    Ok(AssociatedDigraph { which, graph, labeling: labeling.clone() })
}

impl AssociatedDigraph {
    pub fn part_size(&self) -> usize {
        self.graph.order()
    }

    /// `[v_1, .., v_a]` for `G1`; `[w_a, .., w_1]` for `G2`.
    pub fn induced_cycle(&self) -> Result<Cycle, CycleError> {
        let a = self.part_size();
        let seq: Vec<_> = match self.which {
            Which::G1 => (0..a).map(VertexId).collect(),
            Which::G2 => (0..a).rev().map(VertexId).collect(),
        };
        Cycle::new(&self.graph, seq)
    }

    /// Maps a cycle of the associated digraph to the doubled-length cycle of `d`.
    ///
    /// `G1` cycles lift through the labeling arcs `y_i -> x_i`; `G2` cycles lift
    /// to `[x_i1, y_i1, x_i2, ..]` through the arcs `x_i -> y_i`, which exist once
    /// the reversed Hamiltonian cycle is present. Every lifted arc is validated.
    pub fn lift_cycle(&self, d: &BipartiteDigraph, c: &Cycle) -> Result<Cycle, AssocError> {
        c.validate(&self.graph).map_err(AssocError::NotACycleOfAssociated)?;
        let l = &self.labeling;
        let seq = c
            .vertices()
            .iter()
            .flat_map(|&v| match self.which {
                Which::G1 => [l.y(v.0), l.x(v.0)],
                Which::G2 => [l.x(v.0), l.y(v.0)],
            })
            .collect();
        Cycle::new(d, seq).map_err(AssocError::LiftInconsistent)
    }

    /// Outgoing and incoming degrees in `d` that each label's degrees must track:
    /// `(x_i, y_i)` for `G1`, `(y_i, x_i)` for `G2`.
    fn source_degrees(&self, d: &BipartiteDigraph, i: usize) -> (usize, usize) {
        let l = &self.labeling;
        match self.which {
            Which::G1 => (d.degrees(l.x(i)).out_degree, d.degrees(l.y(i)).in_degree),
            Which::G2 => (d.degrees(l.y(i)).out_degree, d.degrees(l.x(i)).in_degree),
        }
    }

    /// First label violating `d+_G(i) >= d+_D(tail_i) - 1` or `d-_G(i) >= d-_D(head_i) - 1`.
    pub fn degree_transfer_violation(&self, d: &BipartiteDigraph) -> Option<usize> {
        (0..self.part_size()).find(|&i| {
            let deg = self.graph.degrees(VertexId(i));
            let (out_src, in_src) = self.source_degrees(d, i);
            deg.out_degree + 1 < out_src || deg.in_degree + 1 < in_src
        })
    }

    /// First pair `(i, j)` whose degree sum in the associated digraph is below `2a`.
    pub fn degree_sum_violation(&self) -> Option<(usize, usize)> {
        let a = self.part_size();
        let deg = |i| self.graph.degrees(VertexId(i)).total();
        (0..a).flat_map(|i| (i + 1..a).map(move |j| (i, j))).find(|&(i, j)| deg(i) + deg(j) < 2 * a)
    }

    pub fn name(&self, v: VertexId) -> String {
        match self.which {
            Which::G1 => format!("v{}", v.0 + 1),
            Which::G2 => format!("w{}", v.0 + 1),
        }
    }

    pub fn render_cycle(&self, c: &Cycle) -> String {
        let names: Vec<_> = c.vertices().iter().map(|&v| self.name(v)).collect();
        format!("[{}]", names.join(","))
    }
}

/// Hypothesis check for the degree-sum theorem on general digraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomassenReport {
    pub order: usize,
    pub strongly_connected: bool,
    /// First non-adjacent pair with `d(u) + d(v) < 2n`, with both degrees.
    pub violation: Option<(VertexId, VertexId, usize, usize)>,
}

impl ThomassenReport {
    pub fn pairs_ok(&self) -> bool {
        self.violation.is_none()
    }

    /// All three requirements: order at least 3, strong connectivity, degree sums.
    pub fn holds(&self) -> bool {
        self.order >= 3 && self.strongly_connected && self.pairs_ok()
    }
}

pub fn thomassen_hypothesis<G: Digraph>(g: &G) -> ThomassenReport {
    let n = g.order();
    let mut violation = None;
    'outer: for u in 0..n {
        for v in u + 1..n {
            let (u, v) = (VertexId(u), VertexId(v));
            if g.has_arc(u, v) || g.has_arc(v, u) {
                continue;
            }
            let (du, dv) = (g.degrees(u).total(), g.degrees(v).total());
            if du + dv < 2 * n {
                violation = Some((u, v, du, dv));
                break 'outer;
            }
        }
    }
    ThomassenReport { order: n, strongly_connected: g.is_strongly_connected(), violation }
}

/// Which conclusion of the degree-sum theorem a digraph falls under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThomassenCase {
    /// Certificates for every length `2..=n`, in order.
    Pancyclic(Vec<Cycle>),
    Tournament,
    /// Isomorphic to `K*_{n/2,n/2}` with the given parts; `alternating` when the
    /// parts are the odd and even labels.
    BalancedCompleteBipartite {
        parts: (VertexSet, VertexSet),
        alternating: bool,
    },
    /// None of the three conclusions holds.
    Unclassified,
}

impl ThomassenCase {
    pub fn tag(&self) -> &'static str {
        match self {
            ThomassenCase::Pancyclic(_) => "pancyclic",
            ThomassenCase::Tournament => "tournament",
            ThomassenCase::BalancedCompleteBipartite { .. } => "balanced-complete-bipartite",
            ThomassenCase::Unclassified => "none",
        }
    }
}

pub fn is_tournament<G: Digraph>(g: &G) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_arc(VertexId(u), VertexId(v)) != g.has_arc(VertexId(v), VertexId(u))))
}

fn is_complete_bipartite_on<G: Digraph>(g: &G, left: VertexSet, right: VertexSet) -> bool {
    let side_ok = |own: VertexSet, other: VertexSet| own.iter().all(|v| g.out_set(v) == other && g.in_set(v) == other);
    left.len() == right.len() && side_ok(left, right) && side_ok(right, left)
}

/// Parts of an isomorphism to `K*_{n/2,n/2}`, trying odd/even labels first.
pub fn balanced_complete_bipartite_parts<G: Digraph>(g: &G) -> Option<((VertexSet, VertexSet), bool)> {
    let n = g.order();
    if n % 2 == 1 || n < 2 {
        return None;
    }
    let even: VertexSet = (0..n).step_by(2).map(VertexId).collect();
    let odd = g.vertices().difference(even);
    if is_complete_bipartite_on(g, even, odd) {
        return Some(((even, odd), true));
    }
    // In K*_{m,m} the part of vertex 0 is exactly 0 and its non-neighbours.
    let root = VertexId(0);
    let right = g.out_set(root).union(g.in_set(root));
    let left = g.vertices().difference(right);
    is_complete_bipartite_on(g, left, right).then_some(((left, right), false))
}

pub fn classify_thomassen_case<G: Digraph>(g: &G) -> Result<ThomassenCase, AssocError> {
    let report = thomassen_hypothesis(g);
    if !report.holds() {
        let why = if report.order < 3 {
            format!("order {} < 3", report.order)
        } else if !report.strongly_connected {
            "not strongly connected".to_string()
        } else {
            let (u, v, du, dv) = report.violation.expect("pairs failed");
            format!("non-adjacent {} and {} have degree sum {} < {}", u, v, du + dv, 2 * report.order)
        };
        return Err(AssocError::HypothesisFailed(why));
    }
    if is_tournament(g) {
        return Ok(ThomassenCase::Tournament);
    }
    if let Some((parts, alternating)) = balanced_complete_bipartite_parts(g) {
        return Ok(ThomassenCase::BalancedCompleteBipartite { parts, alternating });
    }
    Ok(match pancyclic_certificates(g) {
        Some(certs) => ThomassenCase::Pancyclic(certs),
        None => ThomassenCase::Unclassified,
    })
}

/// Why a digraph is outside the scope of [`diagnose_proof_path`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Precondition {
    OrderTooSmall(usize),
    NotStronglyConnected,
    ConditionA(crate::conditions::Witness),
    ExceptionalCycle,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::OrderTooSmall(a) => write!(f, "partite sets of size {a} < 3"),
            Precondition::NotStronglyConnected => f.write_str("not strongly connected"),
            Precondition::ConditionA(w) => write!(f, "condition A fails ({})", w.tag()),
            Precondition::ExceptionalCycle => f.write_str("exceptional directed 2a-cycle"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error("precondition failed: {0}")]
    Precondition(Precondition),
    /// Reaching this means the argument being traced does not go through on this input.
    #[error("proof-trace failure: {0}")]
    ProofFailure(String),
}

/// Which branch of the case analysis certified the digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Some vertex has out- or in-degree `a`; it dominates (or is dominated by)
    /// the whole opposite partite set.
    DegreeCapViolated { vertex: VertexId, dominates_all: bool },
    /// `G1` is pancyclic; its cycles lift to all lengths `4..=2a`.
    G1Pancyclic,
    /// `G1` is `K*_{a/2,a/2}` and `x_i` misses the arc from its cycle successor,
    /// so it is dominated by every other vertex of `Y`. `label` is 0-based.
    MissingBackArc { label: usize },
    /// `G1` is `K*_{a/2,a/2}`, the reversed cycle exists, and `G2` is pancyclic.
    G2Pancyclic,
    /// Both associated digraphs are `K*_{2,2}`; `a = 4` and the short cycles are explicit.
    OrderFourEndgame,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::DegreeCapViolated { vertex, dominates_all: true } => {
                write!(f, "degree-cap-violated: vertex {vertex} dominates the opposite partite set")
            }
            Branch::DegreeCapViolated { vertex, dominates_all: false } => {
                write!(f, "degree-cap-violated: vertex {vertex} is dominated by the opposite partite set")
            }
            Branch::G1Pancyclic => f.write_str("G1-pancyclic"),
            Branch::MissingBackArc { label } => {
                write!(f, "bipartite-G1: x{} dominated by all other Y vertices", label + 1)
            }
            Branch::G2Pancyclic => f.write_str("bipartite-G1, G2-pancyclic"),
            Branch::OrderFourEndgame => f.write_str("bipartite-G1, bipartite-G2, a = 4 endgame"),
        }
    }
}

/// One associated digraph as examined by the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedStage {
    pub assoc: AssociatedDigraph,
    pub case: ThomassenCase,
    /// Lifted certificate per associated-cycle length `2..=a`, when pancyclic.
    pub lifted: Vec<(Cycle, Cycle)>,
}

/// Record of the case analysis on one digraph, ending in validated certificates
/// for every even length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub hamiltonian: Cycle,
    pub labeling: CycleLabeling,
    pub branch: Branch,
    pub g1: Option<AssociatedStage>,
    pub reversed_cycle: Option<Cycle>,
    pub g2: Option<AssociatedStage>,
    /// Entry `k - 1` certifies length `2k`.
    pub certificates: Vec<Cycle>,
    pub notes: Vec<String>,
}

fn failure(msg: impl Into<String>) -> TraceError {
    TraceError::ProofFailure(msg.into())
}

fn two_cycle(d: &BipartiteDigraph) -> Result<Cycle, TraceError> {
    find_cycle_of_length(d, 2)
        .expect("length 2 is valid")
        .ok_or_else(|| failure("no 2-cycle, although every vertex should lie on one"))
}

fn stage(d: &BipartiteDigraph, labeling: &CycleLabeling, which: Which) -> Result<AssociatedStage, TraceError> {
    let assoc = build_associated(d, labeling, which).map_err(|e| failure(e.to_string()))?;
    if let Some(i) = assoc.degree_transfer_violation(d) {
        return Err(failure(format!("{which}: degree transfer fails at label {}", i + 1)));
    }
    if let Some((i, j)) = assoc.degree_sum_violation() {
        return Err(failure(format!("{which}: degree sum of labels {} and {} is below 2a", i + 1, j + 1)));
    }
    assoc.induced_cycle().map_err(|e| failure(format!("{which}: induced hamiltonian cycle missing: {e}")))?;
    let case = classify_thomassen_case(&assoc.graph).map_err(|e| failure(format!("{which}: {e}")))?;
    let lifted = match &case {
        ThomassenCase::Pancyclic(certs) => certs
            .iter()
            .map(|c| {
                let lift = assoc.lift_cycle(d, c).map_err(|e| failure(format!("{which}: {e}")))?;
                Ok((c.clone(), lift))
            })
            .collect::<Result<_, TraceError>>()?,
        _ => Vec::new(),
    };
    Ok(AssociatedStage { assoc, case, lifted })
}

/// Checks the sums `d-(x_i) + d+(y_i) + d-(x_j) + d+(y_j)` (or the mirrored
/// sums with `x` and `y` swapped) against `4(a - 1)`; any deviation is a failure.
fn check_quadruple_sums(d: &BipartiteDigraph, l: &CycleLabeling, mirrored: bool) -> Result<(), TraceError> {
    let a = d.part_size();
    let term = |i: usize| {
        let (x, y) = (d.degrees(l.x(i)), d.degrees(l.y(i)));
        if mirrored {
            y.in_degree + x.out_degree
        } else {
            x.in_degree + y.out_degree
        }
    };
    for i in 0..a {
        for j in i + 1..a {
            let sum = term(i) + term(j);
            if sum < 4 * (a - 1) {
                return Err(failure(format!(
                    "labels {} and {}: quadruple degree sum {sum} < {}",
                    i + 1,
                    j + 1,
                    4 * (a - 1)
                )));
            }
            if sum > 4 * (a - 1) {
                let culprit = [l.x(i), l.y(i), l.x(j), l.y(j)]
                    .into_iter()
                    .find(|&v| {
                        let deg = d.degrees(v);
                        deg.out_degree > a - 1 || deg.in_degree > a - 1
                    })
                    .map_or_else(|| "none".to_string(), |v| l.label_name(v));
                return Err(failure(format!(
                    "labels {} and {}: quadruple degree sum {sum} is strict, vertex violating the cap: {culprit}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Checks the forced degrees: out-degree of `x_i` and in-degree of `y_i` equal
/// `a/2 + 1`, the other two equal `a - 1` (roles swapped when `mirrored`).
fn check_forced_degrees(d: &BipartiteDigraph, l: &CycleLabeling, mirrored: bool) -> Result<(), TraceError> {
    let a = d.part_size();
    let (half, full) = (a / 2 + 1, a - 1);
    for i in 0..a {
        let (x, y) = (d.degrees(l.x(i)), d.degrees(l.y(i)));
        let got = [x.out_degree, x.in_degree, y.in_degree, y.out_degree];
        let want = if mirrored { [full, half, full, half] } else { [half, full, half, full] };
        if got != want {
            return Err(failure(format!(
                "label {}: degrees (d+(x), d-(x), d-(y), d+(y)) = {got:?}, forced {want:?}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Walks the case analysis on `d`, returning validated certificates for every
/// even length or the exact point where the argument breaks.
pub fn diagnose_proof_path(d: &BipartiteDigraph) -> Result<ProofTrace, TraceError> {
    trace_from(d, None)
}

/// Same as [`diagnose_proof_path`], relabeling along the given Hamiltonian cycle
/// instead of the first one found.
pub fn diagnose_proof_path_along(d: &BipartiteDigraph, hamiltonian: &Cycle) -> Result<ProofTrace, TraceError> {
    trace_from(d, Some(hamiltonian))
}

fn trace_from(d: &BipartiteDigraph, given: Option<&Cycle>) -> Result<ProofTrace, TraceError> {
    use crate::conditions::{check_condition_a, check_degree_cap, Witness};
    use crate::cycles::{find_hamiltonian_cycle, is_directed_2a_cycle};

    let a = d.part_size();
    if a < 3 {
        return Err(TraceError::Precondition(Precondition::OrderTooSmall(a)));
    }
    if !d.is_strongly_connected() {
        return Err(TraceError::Precondition(Precondition::NotStronglyConnected));
    }
    if let Some(w) = check_condition_a(d).witness() {
        return Err(TraceError::Precondition(Precondition::ConditionA(w.clone())));
    }
    if is_directed_2a_cycle(d) {
        return Err(TraceError::Precondition(Precondition::ExceptionalCycle));
    }

    let found = match given {
        Some(c) => c.clone(),
        None => find_hamiltonian_cycle(d).ok_or_else(|| failure("no hamiltonian cycle"))?,
    };
    let labeling = CycleLabeling::from_cycle(d, &found).map_err(|e| failure(e.to_string()))?;
    let hamiltonian = labeling.cycle(d).map_err(|e| failure(e.to_string()))?;
    let mut trace = ProofTrace {
        hamiltonian: hamiltonian.clone(),
        labeling: labeling.clone(),
        branch: Branch::G1Pancyclic,
        g1: None,
        reversed_cycle: None,
        g2: None,
        certificates: Vec::new(),
        notes: Vec::new(),
    };
    let validated = |seq: Vec<VertexId>, what: &str| Cycle::new(d, seq).map_err(|e| failure(format!("{what}: {e}")));

    if let Some(Witness::DegreeCap { vertex, out_degree, .. }) = check_degree_cap(d).witness().cloned() {
        // Walk the hamiltonian cycle from `vertex`; odd positions are on the opposite side.
        let dominates_all = out_degree > a - 1;
        let pos = hamiltonian.vertices().iter().position(|&v| v == vertex).expect("hamiltonian");
        let walk = hamiltonian.rotated(pos);
        let c = walk.vertices();
        for k in 1..=a {
            let seq: Vec<_> = if dominates_all {
                std::iter::once(vertex).chain(c[2 * a - 2 * k + 1..].iter().copied()).collect()
            } else {
                c[..2 * k].to_vec()
            };
            trace.certificates.push(validated(seq, "degree-cap certificate")?);
        }
        trace.branch = Branch::DegreeCapViolated { vertex, dominates_all };
        return Ok(trace);
    }

    let digon = two_cycle(d)?;
    let g1 = stage(d, &labeling, Which::G1)?;
    match g1.case.clone() {
        ThomassenCase::Pancyclic(_) => {
            trace.certificates.push(digon);
            trace.certificates.extend(g1.lifted.iter().map(|(_, lift)| lift.clone()));
            trace.branch = Branch::G1Pancyclic;
            trace.g1 = Some(g1);
            return Ok(trace);
        }
        ThomassenCase::Tournament => {
            return Err(failure("G1 is a tournament although its degree sums are at least 2a"));
        }
        ThomassenCase::Unclassified => {
            return Err(failure("G1 satisfies the degree-sum hypothesis but fits none of its conclusions"));
        }
        ThomassenCase::BalancedCompleteBipartite { alternating, .. } => {
            if !alternating {
                return Err(failure("G1 is complete bipartite but not on odd/even labels"));
            }
        }
    }
    trace.g1 = Some(g1);
    check_quadruple_sums(d, &labeling, false)?;
    check_forced_degrees(d, &labeling, false)?;
    trace.notes.push("G1 bipartite: quadruple sums tight, forced degrees hold".into());

    // The successor of x_i on the hamiltonian cycle is y_{i+1}.
    if let Some(i0) = (0..a).find(|&i| !d.has_arc(labeling.y((i + 1) % a), labeling.x(i))) {
        trace.certificates.push(digon);
        for k in 2..=a {
            let seq = std::iter::once(labeling.x(i0))
                .chain((1..k).flat_map(|t| [labeling.y((i0 + t) % a), labeling.x((i0 + t) % a)]))
                .chain(std::iter::once(labeling.y((i0 + k) % a)))
                .collect();
            trace.certificates.push(validated(seq, "missing back-arc certificate")?);
        }
        trace.branch = Branch::MissingBackArc { label: i0 };
        return Ok(trace);
    }

    if let Some(i) = (0..a).find(|&i| !d.has_arc(labeling.x(i), labeling.y(i))) {
        return Err(failure(format!("arc x{0} -> y{0} missing although forced", i + 1)));
    }
    let reversed = labeling.reversed_cycle(d).map_err(|e| failure(format!("reversed hamiltonian cycle: {e}")))?;
    trace.reversed_cycle = Some(reversed);

    let g2 = stage(d, &labeling, Which::G2)?;
    match g2.case.clone() {
        ThomassenCase::Pancyclic(_) => {
            trace.certificates.push(digon);
            trace.certificates.extend(g2.lifted.iter().map(|(_, lift)| lift.clone()));
            trace.branch = Branch::G2Pancyclic;
            trace.g2 = Some(g2);
            return Ok(trace);
        }
        ThomassenCase::Tournament => {
            return Err(failure("G2 is a tournament although its degree sums are at least 2a"));
        }
        ThomassenCase::Unclassified => {
            return Err(failure("G2 satisfies the degree-sum hypothesis but fits none of its conclusions"));
        }
        ThomassenCase::BalancedCompleteBipartite { .. } => {}
    }
    trace.g2 = Some(g2);
    check_quadruple_sums(d, &labeling, true)?;
    check_forced_degrees(d, &labeling, true)?;
    if a != 4 {
        return Err(failure(format!("both associated digraphs bipartite with a = {a} != 4")));
    }
    let (x, y) = (|i: usize| labeling.x(i - 1), |i: usize| labeling.y(i - 1));
    for (u, v, name) in [(x(2), y(1), "x2 -> y1"), (x(4), y(3), "x4 -> y3")] {
        if !d.has_arc(u, v) {
            return Err(failure(format!("arc {name} missing although forced")));
        }
    }
    trace.certificates.push(digon);
    trace.certificates.push(validated(vec![x(1), y(2), x(2), y(1)], "4-cycle")?);
    trace.certificates.push(validated(vec![x(1), y(1), x(4), y(3), x(2), y(2)], "6-cycle")?);
    trace.certificates.push(hamiltonian);
    trace.branch = Branch::OrderFourEndgame;
    Ok(trace)
}

impl ProofTrace {
    /// True when every certificate validates in `d` and certificate `k` has length `2k`.
    pub fn certifies_bipancyclic(&self, d: &BipartiteDigraph) -> bool {
        self.certificates.len() == d.part_size()
            && self.certificates.iter().enumerate().all(|(k, c)| c.len() == 2 * (k + 1) && c.validate(d).is_ok())
    }

    /// Plain-text report with a fixed section order.
    pub fn render(&self, d: &BipartiteDigraph) -> String {
        let mut out = String::new();
        let l = &self.labeling;
        let push = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(&mut out, "== digraph".into());
        push(&mut out, format!("a = {}, arcs = {}", d.part_size(), d.arc_count()));
        push(&mut out, "== hamiltonian cycle".into());
        push(&mut out, self.hamiltonian.render(d));
        push(&mut out, "== labeling".into());
        let labels = |f: &dyn Fn(usize) -> VertexId, p: char| {
            (0..l.part_size()).map(|i| format!("{p}{}={}", i + 1, d.vertex_name(f(i)))).collect::<Vec<_>>().join(" ")
        };
        push(&mut out, labels(&|i| l.x(i), 'x'));
        push(&mut out, labels(&|i| l.y(i), 'y'));
        push(&mut out, "== branch".into());
        let branch = match self.branch {
            Branch::DegreeCapViolated { vertex, dominates_all } => format!(
                "degree-cap-violated: {} {} the opposite partite set",
                d.vertex_name(vertex),
                if dominates_all { "dominates" } else { "is dominated by" }
            ),
            ref b => b.to_string(),
        };
        push(&mut out, branch);
        for (title, st) in [("G1", &self.g1), ("G2", &self.g2)] {
            let Some(st) = st else { continue };
            push(&mut out, format!("== associated digraph {title}"));
            let arcs: Vec<_> = st
                .assoc
                .graph
                .arcs()
                .iter()
                .map(|&(u, v)| format!("{}->{}", st.assoc.name(u), st.assoc.name(v)))
                .collect();
            push(&mut out, format!("arcs: {}", arcs.join(" ")));
            push(&mut out, format!("thomassen case: {}", st.case.tag()));
            for (c, lift) in &st.lifted {
                push(&mut out, format!("lift {} -> {}", st.assoc.render_cycle(c), lift.render(d)));
            }
        }
        if let Some(c) = &self.reversed_cycle {
            push(&mut out, "== reversed hamiltonian cycle".into());
            push(&mut out, c.render(d));
        }
        if !self.notes.is_empty() {
            push(&mut out, "== notes".into());
            for n in &self.notes {
                push(&mut out, n.clone());
            }
        }
        push(&mut out, "== certificates".into());
        for c in &self.certificates {
            push(&mut out, format!("{}: {}", c.len(), c.render(d)));
        }
        push(&mut out, "== claim".into());
        if self.certifies_bipancyclic(d) {
            push(&mut out, "bipancyclic via these certificates".into());
        } else {
            push(&mut out, "INCOMPLETE: certificates do not cover every even length".into());
        }
        out
    }
}
