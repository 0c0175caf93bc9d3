//! Exact computational toolkit for topological lower bounds on the chromatic
//! number and for graph representation parameters over fields and matroids.
//!
//! Everything here is exact: linear algebra runs over prime fields or
//! arbitrary-precision rationals, the combinatorial solvers are complete
//! search engines, and every solver emits a machine-checkable witness.
//!
//! The main entry points are:
//!
//! - [`graph`] — graph/hypergraph types, generators (cycles, Kneser graphs,
//!   the orthogonality graphs `H_t`), and Kneser representations;
//! - [`algebra`] — exact vectors and matrices over `GF(p)` or `Q`, with
//!   ranks, kernels and span tests;
//! - [`solvers`] — exact cliques, colorings, homomorphisms, hypergraph
//!   2-colorings, bipartite matchings, and DIMACS CNF export;
//! - [`matroid`] — rank oracles (uniform, linear, transversal) with closure
//!   and greedy independent-subset utilities;
//! - [`reps`] — orthogonal and independent representations, minrank, the
//!   conversions between representing matrices and independent
//!   representations, and the star condition;
//! - [`topo`] — the free Z2-poset of complete bipartite pairs, its exact
//!   cross-index, the 2-colorability defect, and the colorful bipartite
//!   extraction pipeline;
//! - [`hardness`] — monotone 3SAT parsing, the gadget reduction to colorful
//!   complete bipartite subgraph detection, and seeded equivalence fuzzing.

pub mod algebra;
pub mod bits;
pub mod graph;
pub mod hardness;
pub mod matroid;
pub mod reps;
pub mod solvers;
pub mod topo;
