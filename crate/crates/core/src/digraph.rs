//! Balanced bipartite digraphs and plain digraphs over single-word bitsets.
//!
//! Vertices use a fixed numbering. In a [`BipartiteDigraph`] with partite sets of
//! size `a`, indices `0..a` are the set `X` (`x_1..x_a`) and `a..2a` are the set
//! `Y` (`y_1..y_a`). Both digraph types are immutable once built.

use std::fmt;

use thiserror::Error;

/// Largest number of vertices a digraph may have (one bitset word).
pub const MAX_VERTICES: usize = 64;

/// Largest supported partite set size for a [`BipartiteDigraph`].
pub const MAX_PART: usize = MAX_VERTICES / 2;

/// Index of a vertex under the fixed numbering of its digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

/// Set of vertices packed into one 64-bit word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// The half-open range `{lo, .., hi-1}`.
    #[inline]
    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet(Self::full(hi).0 & !Self::full(lo).0)
    }

    #[inline]
    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v.0)
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v.0 < MAX_VERTICES && self.0 >> v.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v.0;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v.0);
    }

    #[inline]
    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | 1u64 << v.0)
    }

    #[inline]
    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v.0))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| VertexId(self.0.trailing_zeros() as usize))
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

/// Ascending iterator over a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(VertexId(v))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Out-, in- and total degree of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub out_degree: usize,
    pub in_degree: usize,
}

impl Degrees {
    #[inline]
    pub fn total(self) -> usize {
        self.out_degree + self.in_degree
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("digraph must have at least one vertex")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES} vertices")]
    TooLarge(usize),
    #[error("arc {0}->{1}: vertex index out of range")]
    OutOfRange(usize, usize),
    #[error("arc {0}->{1}: loop")]
    Loop(usize, usize),
    #[error("arc {0}->{1}: same-partite-set arc")]
    SamePartiteSet(usize, usize),
}

/// Read-only adjacency interface shared by both digraph types.
pub trait Digraph {
    /// Number of vertices.
    fn order(&self) -> usize;
    fn out_set(&self, v: VertexId) -> VertexSet;
    fn in_set(&self, v: VertexId) -> VertexSet;

    /// Only even cycles can exist (bipartite layout).
    fn even_cycles_only(&self) -> bool {
        false
    }

    #[inline]
    fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_set(u).contains(v)
    }

    fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn degrees(&self, v: VertexId) -> Degrees {
        Degrees { out_degree: self.out_set(v).len(), in_degree: self.in_set(v).len() }
    }

    /// Degrees counted only towards vertices of `within`.
    fn restricted_degrees(&self, v: VertexId, within: VertexSet) -> Degrees {
        Degrees {
            out_degree: self.out_set(v).intersection(within).len(),
            in_degree: self.in_set(v).intersection(within).len(),
        }
    }

    /// `(N+(S), N-(S))`: vertices dominated by, respectively dominating, some member of `set`.
    fn neighbour_sets(&self, set: VertexSet) -> (VertexSet, VertexSet) {
        set.iter().fold((VertexSet::EMPTY, VertexSet::EMPTY), |(out, inn), v| {
            (out.union(self.out_set(v)), inn.union(self.in_set(v)))
        })
    }

    fn arc_count(&self) -> usize {
        self.vertices().iter().map(|v| self.out_set(v).len()).sum()
    }

    /// All arcs sorted by `(tail, head)`.
    fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        self.vertices().iter().flat_map(|u| self.out_set(u).iter().map(move |v| (u, v))).collect()
    }

    /// Vertices reachable from `v` by directed paths (including `v`).
    fn reachable_from(&self, v: VertexId) -> VertexSet {
        closure(v, |u| self.out_set(u))
    }

    /// Vertices from which `v` is reachable (including `v`).
    fn reaching(&self, v: VertexId) -> VertexSet {
        closure(v, |u| self.in_set(u))
    }

    fn is_strongly_connected(&self) -> bool {
        let all = self.vertices();
        let root = VertexId(0);
        self.reachable_from(root) == all && self.reaching(root) == all
    }
}

fn closure(start: VertexId, step: impl Fn(VertexId) -> VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for u in frontier {
            next = next.union(step(u));
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// Loop-free digraph on `n` vertices. Antiparallel arc pairs are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralDigraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl GeneralDigraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut out_adj = vec![VertexSet::EMPTY; n];
        let mut in_adj = vec![VertexSet::EMPTY; n];
        for (u, v) in arcs {
            if u.0 >= n || v.0 >= n {
                return Err(GraphError::OutOfRange(u.0, v.0));
            }
            if u == v {
                return Err(GraphError::Loop(u.0, v.0));
            }
            out_adj[u.0].insert(v);
            in_adj[v.0].insert(u);
        }
        Ok(GeneralDigraph { n, out_adj, in_adj })
    }

    /// Digraph with every ordered pair of distinct vertices as an arc.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        GeneralDigraph::new(n, std::iter::empty())?;
        let all = VertexSet::full(n);
        let arcs = all.iter().flat_map(|u| all.without(u).iter().map(move |v| (u, v)));
        GeneralDigraph::new(n, arcs)
    }

    /// Directed cycle `0 -> 1 -> .. -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        GeneralDigraph::new(n, (0..n).map(|i| (VertexId(i), VertexId((i + 1) % n))))
    }
}

impl Digraph for GeneralDigraph {
    #[inline]
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn out_set(&self, v: VertexId) -> VertexSet {
        self.out_adj[v.0]
    }

    #[inline]
    fn in_set(&self, v: VertexId) -> VertexSet {
        self.in_adj[v.0]
    }
}

impl fmt::Debug for GeneralDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneralDigraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().iter().map(|(u, v)| (u.0, v.0)).collect::<Vec<_>>())
            .finish()
    }
}

/// Partite set of a vertex in a balanced bipartite digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Balanced bipartite digraph with partite sets `X = 0..a` and `Y = a..2a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteDigraph {
    a: usize,
    graph: GeneralDigraph,
}

impl BipartiteDigraph {
    /// Builds the digraph from an arc list. Duplicate arcs collapse.
    pub fn new<I>(a: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if a == 0 {
            return Err(GraphError::Empty);
        }
        if a > MAX_PART {
            return Err(GraphError::TooLarge(2 * a));
        }
        let n = 2 * a;
        let mut checked = Vec::new();
        for (u, v) in arcs {
            if u.0 >= n || v.0 >= n {
                return Err(GraphError::OutOfRange(u.0, v.0));
            }
            if u == v {
                return Err(GraphError::Loop(u.0, v.0));
            }
            if (u.0 < a) == (v.0 < a) {
                return Err(GraphError::SamePartiteSet(u.0, v.0));
            }
            checked.push((u, v));
        }
        Ok(BipartiteDigraph { a, graph: GeneralDigraph::new(n, checked)? })
    }

    /// Convenience constructor from raw index pairs.
    pub fn from_pairs(a: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(a, arcs.iter().map(|&(u, v)| (VertexId(u), VertexId(v))))
    }

    /// `K*_{a,a}`: every cross arc in both directions.
    pub fn complete(a: usize) -> Result<Self, GraphError> {
        Self::new(a, std::iter::empty())?;
        let (xs, ys) = (VertexSet::range(0, a), VertexSet::range(a, 2 * a));
        let arcs: Vec<_> = xs.iter().flat_map(|x| ys.iter().flat_map(move |y| [(x, y), (y, x)])).collect();
        Self::new(a, arcs)
    }

    /// The directed cycle `[y_1, x_1, y_2, x_2, .., y_a, x_a]`.
    pub fn cycle(a: usize) -> Result<Self, GraphError> {
        let arcs: Vec<_> =
            (0..a).flat_map(|i| [(VertexId(a + i), VertexId(i)), (VertexId(i), VertexId(a + (i + 1) % a))]).collect();
        Self::new(a, arcs)
    }

    /// Size of each partite set.
    #[inline]
    pub fn part_size(&self) -> usize {
        self.a
    }

    #[inline]
    pub fn x(&self, i: usize) -> VertexId {
        debug_assert!(i < self.a);
        VertexId(i)
    }

    #[inline]
    pub fn y(&self, i: usize) -> VertexId {
        debug_assert!(i < self.a);
        VertexId(self.a + i)
    }

    #[inline]
    pub fn side(&self, v: VertexId) -> Side {
        if v.0 < self.a {
            Side::X
        } else {
            Side::Y
        }
    }

    pub fn part(&self, side: Side) -> VertexSet {
        match side {
            Side::X => VertexSet::range(0, self.a),
            Side::Y => VertexSet::range(self.a, 2 * self.a),
        }
    }

    /// Underlying digraph without the bipartite bookkeeping.
    pub fn as_general(&self) -> &GeneralDigraph {
        &self.graph
    }

    /// Copy with the given arcs added (must cross partite sets).
    pub fn with_arcs(&self, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let arcs = self.arcs().into_iter().chain(extra.iter().map(|&(u, v)| (VertexId(u), VertexId(v))));
        Self::new(self.a, arcs.collect::<Vec<_>>())
    }

    /// Copy with the given arcs removed; absent arcs are ignored.
    pub fn without_arcs(&self, removed: &[(usize, usize)]) -> Self {
        let arcs: Vec<_> = self.arcs().into_iter().filter(|&(u, v)| !removed.contains(&(u.0, v.0))).collect();
        Self::new(self.a, arcs).expect("subset of a valid arc set")
    }

    /// Human-readable name of a vertex: `x3`, `y1`, using 1-based labels.
    pub fn vertex_name(&self, v: VertexId) -> String {
        match self.side(v) {
            Side::X => format!("x{}", v.0 + 1),
            Side::Y => format!("y{}", v.0 - self.a + 1),
        }
    }
}

impl Digraph for BipartiteDigraph {
    #[inline]
    fn order(&self) -> usize {
        2 * self.a
    }

    #[inline]
    fn out_set(&self, v: VertexId) -> VertexSet {
        self.graph.out_set(v)
    }

    #[inline]
    fn in_set(&self, v: VertexId) -> VertexSet {
        self.graph.in_set(v)
    }

    fn even_cycles_only(&self) -> bool {
        true
    }
}

impl fmt::Debug for BipartiteDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteDigraph")
            .field("a", &self.a)
            .field("arcs", &self.arcs().iter().map(|(u, v)| (u.0, v.0)).collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least two vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} repeats")]
    Repeated(usize),
    #[error("missing arc {0}->{1}")]
    MissingArc(usize, usize),
}

/// Directed cycle `[v_1, .., v_m]`, validated against the digraph it was built on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn new<G: Digraph + ?Sized>(g: &G, vertices: Vec<VertexId>) -> Result<Self, CycleError> {
        let c = Cycle { vertices };
        c.validate(g)?;
        Ok(c)
    }

    pub fn from_indices<G: Digraph + ?Sized>(g: &G, indices: &[usize]) -> Result<Self, CycleError> {
        Self::new(g, indices.iter().map(|&i| VertexId(i)).collect())
    }

    /// Re-checks distinctness and every arc, including the closing one.
    pub fn validate<G: Digraph + ?Sized>(&self, g: &G) -> Result<(), CycleError> {
        let m = self.vertices.len();
        if m < 2 {
            return Err(CycleError::TooShort(m));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.vertices {
            if v.0 >= g.order() {
                return Err(CycleError::OutOfRange(v.0));
            }
            if seen.contains(v) {
                return Err(CycleError::Repeated(v.0));
            }
            seen.insert(v);
        }
        for (u, v) in self.arcs() {
            if !g.has_arc(u, v) {
                return Err(CycleError::MissingArc(u.0, v.0));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Consecutive arcs, ending with the closing arc back to the first vertex.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % m]))
    }

    pub fn uses_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs().any(|arc| arc == (u, v))
    }

    /// Same cycle, rotated so that position `start` comes first.
    pub fn rotated(&self, start: usize) -> Cycle {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start % self.vertices.len().max(1));
        Cycle { vertices }
    }

    pub fn render(&self, d: &BipartiteDigraph) -> String {
        let names: Vec<_> = self.vertices.iter().map(|&v| d.vertex_name(v)).collect();
        format!("[{}]", names.join(","))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<_> = self.vertices.iter().map(|v| v.0.to_string()).collect();
        write!(f, "[{}]", idx.join(","))
    }
}
