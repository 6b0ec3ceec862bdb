//! Exact analysis of hamiltonian-path structure in small graphs.
//!
//! The crate revolves around one question and its refinements: between which
//! vertex pairs of a graph does a hamiltonian path run? On top of exact
//! solvers for that question it builds:
//!
//! * [`graph`] — an immutable small-graph type with bitmask adjacency,
//!   graph6 and edge-list I/O, and vertex permutations;
//! * [`engine`] — two independent exact solvers (a subset dynamic program and
//!   a pruned backtracker), all-pairs tables, constrained searches that must
//!   traverse a required edge set, and a deliberately naive exhaustive
//!   counter used as an oracle;
//! * [`metrics`] — exact rational pair-connectivity ratios, classification
//!   (hamiltonian, homogeneously traceable, hamiltonian-connected,
//!   hypohamiltonian, ...), and the degree/edge-count necessary conditions
//!   for hamiltonian-connectedness;
//! * [`hpc`] — verification and exhaustive search for edge sets in which
//!   every pair of edges is joined by a hamiltonian path containing the rest
//!   of the set, under either of two witness rules ([`hpc::WitnessRule`]);
//! * [`families`] — named constructions: the Petersen graph, a clique with a
//!   pendant path, a 3-regular cycle-with-chords family, and clique
//!   attachments that drive the pair-connectivity ratio of nonhamiltonian
//!   graphs toward 1;
//! * [`corpus`] — seeded random graph generation for randomized suites.
//!
//! Solvers operate on graphs of at most [`graph::SOLVER_VERTEX_CAP`] (64)
//! vertices so that vertex sets fit in one machine word. All results are
//! exact; ratios use integer rationals in canonical form, never floats.
//!
//! With the default `parallel` feature, all-pairs tables and classification
//! fan out over rayon. Results are bit-identical for any thread count, and
//! for the sequential build with the feature disabled.

pub mod corpus;
pub mod engine;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hpc;
pub mod metrics;

pub use engine::{EngineChoice, Meter, PairTable, Path, SolveConfig, SolveError};
pub use graph::{Graph, GraphError, VertexPermutation};
pub use hpc::{HpcCertificate, SearchResult, VerifyOutcome, WitnessRule};
pub use metrics::{Classification, MoonCheck, Ratio};
