//! The topological machinery: the free Z2-poset of complete bipartite
//! pairs, its exact cross-index, the 2-colorability defect of hypergraphs,
//! and the executable extraction of colorful complete bipartite subgraphs
//! from independent representations.

mod cd2;
mod extract;
mod phi;
mod poset;
mod sat;
mod xind;

pub use cd2::cd2;
pub use extract::{extract_colorful_bipartite, BipartiteWitness, Extraction};
pub use phi::{build_phi, longest_alternating_chain, Chain, PhiMap};
pub use poset::{build_hom_poset, HomElement, SignedPoset, DEFAULT_POSET_CAP};
pub use xind::xind;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopoError {
    #[error("poset would exceed the cap of {cap} elements")]
    PosetTooLarge { cap: usize },
    #[error("graphs with more than 64 vertices are not supported by the poset machinery")]
    GraphTooLarge(usize),
    #[error("graph has no edge")]
    EdgelessGraph,
    #[error("assignment is not an independent representation: {0}")]
    NotIndependentRep(String),
    #[error("internal error: {0}")]
    Internal(String),
}
