//! Exact combinatorial search engines shared by the rest of the toolkit.
//!
//! Every solver is a complete search with deterministic tie-breaking (lowest
//! vertex index first), and every positive answer carries a witness that is
//! re-checked by an independent validator before being returned.

mod clique;
mod cnf;
mod coloring;
mod homomorphism;
mod hyper;
mod matching;

pub use clique::max_clique;
pub use cnf::{export_kcoloring_cnf, CnfFormula};
pub use coloring::{chromatic_number, k_colorable, Coloring};
pub use homomorphism::homomorphism_exists;
pub use hyper::hypergraph_2colorable;
pub use matching::max_bipartite_matching;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is not bipartite with the given left side")]
    NotBipartite,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
