//! Degree conditions, cycle certification and exhaustive verification for
//! balanced bipartite digraphs.
//!
//! A balanced bipartite digraph with partite sets of size `a` satisfies
//! *condition A* when `d(u) + d(v) >= 3a` for every pair of vertices with a
//! common in-neighbour or a common out-neighbour. Strongly connected digraphs
//! with `a >= 3` satisfying it are bipancyclic unless they are a single directed
//! cycle of length `2a`. This crate checks the hypotheses, certifies cycle
//! lengths with explicit cycles, replays the associated-digraph case analysis on
//! concrete inputs, and sweeps small universes for counterexamples.
//!
//! - [`digraph`]: bitset digraphs, vertex sets, validated cycles.
//! - [`format`]: the plain-text digraph format.
//! - [`conditions`]: condition A, the degree cap and the structural lemmas.
//! - [`cycles`]: exact fixed-length cycle search and cycle spectra.
//! - [`associated`]: cycle labelings, `G1`/`G2`, lifting and proof traces.
//! - [`lab`]: exhaustive and seeded random sweeps.

pub mod associated;
pub mod conditions;
pub mod cycles;
pub mod digraph;
pub mod format;
pub mod lab;

pub use associated::{
    build_associated, classify_thomassen_case, diagnose_proof_path, thomassen_hypothesis, AssociatedDigraph,
    CycleLabeling, ProofTrace, ThomassenCase, TraceError, Which,
};
pub use conditions::{check_condition_a, check_degree_cap, check_min_degree, dominated_pairs, Verdict, Witness};
pub use cycles::{
    cycle_spectrum, find_cycle_of_length, find_hamiltonian_cycle, is_bipancyclic, is_directed_2a_cycle, Budget,
    CycleSpectrum, Search,
};
pub use digraph::{BipartiteDigraph, Cycle, Digraph, GeneralDigraph, Side, VertexId, VertexSet};
pub use format::{parse_digraph, write_digraph, ParseError};
pub use lab::{
    enumerate_bipartite, random_bipartite, search_open_question, search_sharpness, verify_theorem2, Hypothesis, Mode,
    SearchSpec, VerdictReport,
};
