//! Exact search for directed cycles of a prescribed length.
//!
//! The search anchors every cycle at its minimum-index vertex, extends simple
//! paths depth-first through higher-index vertices, and prunes a partial path
//! as soon as its endpoint cannot get back to the anchor within the remaining
//! length. All answers are exact; a search that runs out of budget says so
//! instead of reporting absence.

use std::time::Instant;

use thiserror::Error;

use crate::digraph::{BipartiteDigraph, Cycle, Digraph, VertexId, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("parity: a bipartite digraph has no cycle of odd length {0}")]
    Parity(usize),
    #[error("cycle length {len} outside 2..={order}")]
    LengthOutOfRange { len: usize, order: usize },
}

/// Limits on a single search. Node counts are deterministic; the deadline is not.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None, deadline: None };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), deadline: None }
    }
}

/// Result of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Search::Exhausted)
    }
}

struct Exhausted;

struct Searcher<'g, G: Digraph + ?Sized> {
    g: &'g G,
    len: usize,
    start: VertexId,
    path: Vec<VertexId>,
    nodes: u64,
    budget: Budget,
}

impl<G: Digraph + ?Sized> Searcher<'_, G> {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(Exhausted);
        }
        if self.nodes.is_multiple_of(1024) && self.budget.deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(Exhausted);
        }
        Ok(())
    }

    /// Whether `from` can reach the anchor in at most `steps` arcs through `free`.
    fn can_close(&self, from: VertexId, free: VertexSet, steps: usize) -> bool {
        let mut frontier = VertexSet::singleton(from);
        let mut seen = frontier;
        for _ in 0..steps {
            let (out, _) = self.g.neighbour_sets(frontier);
            if out.contains(self.start) {
                return true;
            }
            frontier = out.intersection(free).difference(seen);
            if frontier.is_empty() {
                return false;
            }
            seen = seen.union(frontier);
        }
        false
    }

    fn extend(&mut self, last: VertexId, free: VertexSet) -> Result<bool, Exhausted> {
        self.tick()?;
        let depth = self.path.len();
        if depth == self.len {
            return Ok(self.g.has_arc(last, self.start));
        }
        let remaining = self.len - depth;
        if free.len() < remaining || !self.can_close(last, free, remaining + 1) {
            return Ok(false);
        }
        for next in self.g.out_set(last).intersection(free) {
            self.path.push(next);
            if self.extend(next, free.without(next))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

fn check_length<G: Digraph + ?Sized>(g: &G, len: usize) -> Result<(), EngineError> {
    let order = g.order();
    if len < 2 || len > order {
        return Err(EngineError::LengthOutOfRange { len, order });
    }
    if g.even_cycles_only() && len % 2 == 1 {
        return Err(EngineError::Parity(len));
    }
    Ok(())
}

/// Budgeted exact search for a cycle with exactly `len` vertices.
pub fn search_cycle_of_length<G: Digraph + ?Sized>(
    g: &G,
    len: usize,
    budget: Budget,
) -> Result<Search<Cycle>, EngineError> {
    check_length(g, len)?;
    let order = g.order();
    let mut nodes = 0;
    for s in 0..order {
        let start = VertexId(s);
        let pool = VertexSet::range(s + 1, order);
        if pool.len() + 1 < len {
            break;
        }
        let mut searcher = Searcher { g, len, start, path: vec![start], nodes, budget };
        match searcher.extend(start, pool) {
            Err(Exhausted) => return Ok(Search::Exhausted),
            Ok(true) => {
                let cycle = Cycle::new(g, searcher.path).expect("search only follows existing arcs");
                return Ok(Search::Found(cycle));
            }
            Ok(false) => nodes = searcher.nodes,
        }
    }
    Ok(Search::Absent)
}

/// Exact search for a cycle with exactly `len` vertices, without limits.
pub fn find_cycle_of_length<G: Digraph + ?Sized>(g: &G, len: usize) -> Result<Option<Cycle>, EngineError> {
    Ok(search_cycle_of_length(g, len, Budget::UNLIMITED)?.found())
}

pub fn search_hamiltonian_cycle<G: Digraph + ?Sized>(g: &G, budget: Budget) -> Search<Cycle> {
    if g.order() < 2 {
        return Search::Absent;
    }
    search_cycle_of_length(g, g.order(), budget).expect("order is a valid length")
}

pub fn find_hamiltonian_cycle<G: Digraph + ?Sized>(g: &G) -> Option<Cycle> {
    search_hamiltonian_cycle(g, Budget::UNLIMITED).found()
}

/// Which even cycle lengths a balanced bipartite digraph contains, with a
/// certificate for each one present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSpectrum {
    a: usize,
    /// Entry `k - 1` covers length `2k`.
    certificates: Vec<Option<Cycle>>,
}

impl CycleSpectrum {
    pub fn part_size(&self) -> usize {
        self.a
    }

    pub fn present(&self, len: usize) -> bool {
        self.certificate(len).is_some()
    }

    pub fn certificate(&self, len: usize) -> Option<&Cycle> {
        if len < 2 || len % 2 == 1 {
            return None;
        }
        self.certificates.get(len / 2 - 1).and_then(Option::as_ref)
    }

    /// `(length, certificate)` for every even length `2..=2a`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Option<&Cycle>)> {
        self.certificates.iter().enumerate().map(|(k, c)| (2 * (k + 1), c.as_ref()))
    }

    pub fn missing_lengths(&self) -> Vec<usize> {
        self.entries().filter(|(_, c)| c.is_none()).map(|(l, _)| l).collect()
    }

    pub fn is_bipancyclic(&self) -> bool {
        self.certificates.iter().all(Option::is_some)
    }

    /// Certificates must be valid cycles of `d` with the advertised lengths.
    pub fn validate(&self, d: &BipartiteDigraph) -> bool {
        self.entries().all(|(len, c)| c.is_none_or(|c| c.len() == len && c.validate(d).is_ok()))
    }
}

/// Budgeted spectrum; `None` if any length ran out of budget.
pub fn cycle_spectrum_within(d: &BipartiteDigraph, budget: Budget) -> Option<CycleSpectrum> {
    let a = d.part_size();
    let mut certificates = Vec::with_capacity(a);
    for k in 1..=a {
        match search_cycle_of_length(d, 2 * k, budget).expect("even length within order") {
            Search::Found(c) => certificates.push(Some(c)),
            Search::Absent => certificates.push(None),
            Search::Exhausted => return None,
        }
    }
    Some(CycleSpectrum { a, certificates })
}

pub fn cycle_spectrum(d: &BipartiteDigraph) -> CycleSpectrum {
    cycle_spectrum_within(d, Budget::UNLIMITED).expect("unlimited budget")
}

pub fn is_bipancyclic(d: &BipartiteDigraph) -> bool {
    cycle_spectrum(d).is_bipancyclic()
}

/// Whether the digraph is a single directed cycle through all of its vertices.
pub fn is_single_cycle<G: Digraph + ?Sized>(g: &G) -> bool {
    g.order() >= 2
        && g.vertices().iter().all(|v| {
            let deg = g.degrees(v);
            deg.out_degree == 1 && deg.in_degree == 1
        })
        && g.is_strongly_connected()
}

/// Whether `d` is the exceptional directed cycle of length `2a`.
pub fn is_directed_2a_cycle(d: &BipartiteDigraph) -> bool {
    is_single_cycle(d)
}

/// One certificate per length `2..=n` if `g` is pancyclic.
pub fn pancyclic_certificates<G: Digraph + ?Sized>(g: &G) -> Option<Vec<Cycle>> {
    (2..=g.order()).map(|len| find_cycle_of_length(g, len).expect("length within order")).collect()
}
