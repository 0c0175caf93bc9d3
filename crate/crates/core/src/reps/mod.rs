//! Orthogonal and independent representations of graphs, the minrank
//! parameter, the conversions between representing matrices and independent
//! representations, the star condition on spans of complete bipartite pairs,
//! and the local chromatic number.

mod convert;
mod search;
mod star;

pub use convert::{indrep_to_matrix, matrix_to_indrep};
pub use search::{min_indrep_dimension, minrank_bruteforce, orthogonality_dimension};
pub use star::{check_star_condition, local_chromatic, StarCheck, StarViolation};

use crate::algebra::{bilinear, rank as matrix_rank, ExactMatrix, ExactVector, FieldSpec, Scalar};
use crate::graph::Graph;
use crate::matroid::{linear_matroid_with_ids, uniform_matroid_with_ids, RankOracle};
use crate::solvers::Coloring;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("assignment is missing vertex {0:?}")]
    MissingVertex(String),
    #[error("vector for {0:?} has length {1}, expected {2}")]
    BadDimension(String, usize, usize),
    #[error("vector for {0:?} is over the wrong field")]
    BadField(String),
    #[error("element {0:?} assigned to {1:?} is a loop")]
    LoopElement(String, String),
    #[error("unknown element {0:?} assigned to {1:?}")]
    UnknownElement(String, String),
    #[error("searching over the rationals is not supported; only verification is")]
    UnsupportedSearchField,
    #[error("matrix is {0}x{1}, expected {2}x{2}")]
    BadMatrixShape(usize, usize, usize),
    #[error("diagonal entry at {0:?} is zero")]
    ZeroDiagonal(String),
    #[error("entry ({0:?},{1:?}) must be zero (vertices nonadjacent in the target)")]
    NonzeroAtNonEdge(String, String),
    #[error("matrix target does not match the expected graph")]
    TargetMismatch,
    #[error("input is not an independent representation: {0}")]
    NotIndependent(String),
    #[error("search budget exceeded ({0} nodes); instance too large")]
    InstanceTooLarge(u64),
    #[error("no proper coloring with at most {0} colors exists")]
    NoColoring(usize),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Matroid(#[from] crate::matroid::MatroidError),
    #[error(transparent)]
    Topo(#[from] crate::topo::TopoError),
}

/// A total assignment of equal-length vectors over one field to the
/// vertices of a graph, stored in vertex-index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorAssignment {
    pub field: FieldSpec,
    pub dim: usize,
    vectors: Vec<ExactVector>,
}

impl VectorAssignment {
    pub fn new(
        g: &Graph,
        field: FieldSpec,
        dim: usize,
        by_id: &BTreeMap<String, ExactVector>,
    ) -> Result<Self, RepError> {
        let mut vectors = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let vec = by_id
                .get(v)
                .ok_or_else(|| RepError::MissingVertex(v.clone()))?;
            if vec.field != field {
                return Err(RepError::BadField(v.clone()));
            }
            if vec.len() != dim {
                return Err(RepError::BadDimension(v.clone(), vec.len(), dim));
            }
            vectors.push(vec.clone());
        }
        Ok(VectorAssignment {
            field,
            dim,
            vectors,
        })
    }

    pub fn from_vectors(field: FieldSpec, dim: usize, vectors: Vec<ExactVector>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == dim && v.field == field));
        VectorAssignment {
            field,
            dim,
            vectors,
        }
    }

    pub fn vector(&self, v: usize) -> &ExactVector {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let vectors: BTreeMap<String, Vec<String>> = g
            .vertices()
            .iter()
            .zip(&self.vectors)
            .map(|(id, vec)| {
                (
                    id.clone(),
                    vec.entries().iter().map(Scalar::to_literal).collect(),
                )
            })
            .collect();
        serde_json::json!({
            "field": self.field,
            "dim": self.dim,
            "vectors": vectors,
        })
    }

    pub fn from_json(g: &Graph, value: &serde_json::Value) -> Result<Self, RepError> {
        let field: FieldSpec = serde_json::from_value(value["field"].clone())
            .map_err(|e| RepError::Internal(format!("bad field spec: {e}")))?;
        let dim = value["dim"]
            .as_u64()
            .ok_or_else(|| RepError::Internal("missing dim".into()))? as usize;
        let raw: BTreeMap<String, Vec<serde_json::Value>> =
            serde_json::from_value(value["vectors"].clone())
                .map_err(|e| RepError::Internal(format!("bad vectors: {e}")))?;
        let mut by_id = BTreeMap::new();
        for (id, lits) in raw {
            let entries = lits
                .iter()
                .map(|l| match l {
                    serde_json::Value::Number(n) => Scalar::parse(&field, &n.to_string()),
                    serde_json::Value::String(s) => Scalar::parse(&field, s),
                    other => Scalar::parse(&field, &other.to_string()),
                })
                .collect::<Result<Vec<_>, _>>()?;
            by_id.insert(id, ExactVector::new(field, entries)?);
        }
        VectorAssignment::new(g, field, dim, &by_id)
    }

    /// The matroid view of this assignment: the linear matroid on one
    /// column per vertex (columns may repeat).
    pub fn to_matroid_assignment(&self, g: &Graph) -> Result<MatroidAssignment, RepError> {
        let cols = ExactMatrix::from_rows(&self.vectors)?.transpose();
        let ids: Vec<String> = g.vertices().to_vec();
        let oracle = linear_matroid_with_ids(ids, cols)?;
        MatroidAssignment::new(g, Arc::new(oracle), (0..g.vertex_count()).collect())
    }
}

/// A total assignment of non-loop matroid elements to the vertices of a
/// graph.
#[derive(Debug, Clone)]
pub struct MatroidAssignment {
    pub oracle: Arc<RankOracle>,
    element_of: Vec<usize>, // by vertex index
}

impl MatroidAssignment {
    pub fn new(
        g: &Graph,
        oracle: Arc<RankOracle>,
        element_of: Vec<usize>,
    ) -> Result<Self, RepError> {
        assert_eq!(element_of.len(), g.vertex_count());
        for (v, &e) in element_of.iter().enumerate() {
            if e >= oracle.ground_size() {
                return Err(RepError::UnknownElement(
                    format!("#{e}"),
                    g.vertex_id(v).to_string(),
                ));
            }
            if oracle.is_loop(e) {
                return Err(RepError::LoopElement(
                    oracle.element_id(e).to_string(),
                    g.vertex_id(v).to_string(),
                ));
            }
        }
        Ok(MatroidAssignment { oracle, element_of })
    }

    pub fn from_ids(
        g: &Graph,
        oracle: Arc<RankOracle>,
        by_id: &BTreeMap<String, String>,
    ) -> Result<Self, RepError> {
        let element_of = g
            .vertices()
            .iter()
            .map(|v| {
                let e = by_id
                    .get(v)
                    .ok_or_else(|| RepError::MissingVertex(v.clone()))?;
                oracle
                    .element_index(e)
                    .ok_or_else(|| RepError::UnknownElement(e.clone(), v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(g, oracle, element_of)
    }

    pub fn element(&self, v: usize) -> usize {
        self.element_of[v]
    }

    /// Elements assigned to a set of vertices (deduplicated, sorted).
    pub fn elements_of(&self, vertices: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.into_iter().map(|v| self.element_of[v]).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Rank of the span of the elements assigned to the given vertices.
    pub fn span_rank(&self, vertices: impl IntoIterator<Item = usize>) -> usize {
        self.oracle.rank(&self.elements_of(vertices))
    }
}

/// A proper coloring seen as an assignment into the rank-r uniform matroid
/// on the r used colors.
pub fn coloring_as_uniform_assignment(
    g: &Graph,
    coloring: &Coloring,
) -> Result<MatroidAssignment, RepError> {
    let used: Vec<u32> = {
        let mut u: Vec<u32> = coloring.colors().to_vec();
        u.sort();
        u.dedup();
        u
    };
    let ids: Vec<String> = used.iter().map(|c| c.to_string()).collect();
    let r = ids.len();
    let oracle = uniform_matroid_with_ids(ids, r)?;
    let element_of = coloring
        .colors()
        .iter()
        .map(|c| used.binary_search(c).unwrap())
        .collect();
    MatroidAssignment::new(g, Arc::new(oracle), element_of)
}

/// A square matrix attached to the graph it represents: nonzero diagonal,
/// zero at every nonadjacent off-diagonal pair.
#[derive(Debug, Clone)]
pub struct RepresentingMatrix {
    pub field: FieldSpec,
    pub matrix: ExactMatrix,
    pub target: Graph,
}

impl RepresentingMatrix {
    pub fn new(target: Graph, matrix: ExactMatrix) -> Result<Self, RepError> {
        let n = target.vertex_count();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(RepError::BadMatrixShape(matrix.nrows(), matrix.ncols(), n));
        }
        for v in 0..n {
            if matrix.at(v, v).is_zero() {
                return Err(RepError::ZeroDiagonal(target.vertex_id(v).to_string()));
            }
        }
        for u in 0..n {
            for v in 0..n {
                if u != v && !target.has_edge(u, v) && !matrix.at(u, v).is_zero() {
                    return Err(RepError::NonzeroAtNonEdge(
                        target.vertex_id(u).to_string(),
                        target.vertex_id(v).to_string(),
                    ));
                }
            }
        }
        Ok(RepresentingMatrix {
            field: matrix.field,
            matrix,
            target,
        })
    }

    pub fn rank(&self) -> usize {
        matrix_rank(&self.matrix)
    }

    /// Witness symmetry is recorded as a statistic, never asserted.
    pub fn is_symmetric(&self) -> bool {
        let n = self.matrix.nrows();
        (0..n).all(|u| (u + 1..n).all(|v| self.matrix.at(u, v) == self.matrix.at(v, u)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.matrix.nrows())
            .map(|r| {
                (0..self.matrix.ncols())
                    .map(|c| self.matrix.at(r, c).to_literal())
                    .collect()
            })
            .collect();
        serde_json::json!({
            "field": self.field,
            "order": self.target.vertices(),
            "rows": rows,
        })
    }
}

/// A reason why a vector assignment fails to be an orthogonal
/// representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrthoViolation {
    /// `<x_v, x_v> = 0`.
    SelfOrthogonal(String),
    /// `<x_u, x_v> != 0` for the edge `uv`.
    EdgeNotOrthogonal(String, String),
}

/// Check the two orthogonal-representation conditions, enumerating every
/// violation.
pub fn verify_orthogonal_rep(g: &Graph, r: &VectorAssignment) -> (bool, Vec<OrthoViolation>) {
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let x = r.vector(v);
        if bilinear(x, x).map(|s| s.is_zero()).unwrap_or(true) {
            violations.push(OrthoViolation::SelfOrthogonal(g.vertex_id(v).to_string()));
        }
    }
    for (u, v) in g.edges() {
        let p = bilinear(r.vector(u), r.vector(v));
        if p.map(|s| !s.is_zero()).unwrap_or(true) {
            violations.push(OrthoViolation::EdgeNotOrthogonal(
                g.vertex_id(u).to_string(),
                g.vertex_id(v).to_string(),
            ));
        }
    }
    (violations.is_empty(), violations)
}

/// A vertex whose element lies in the span of its neighbors' elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndepViolation {
    pub vertex: String,
    pub neighborhood_rank: usize,
}

/// Check the independent-representation condition (each vertex's element
/// outside the span of its neighbors' elements), enumerating violations.
pub fn verify_independent_rep(g: &Graph, a: &MatroidAssignment) -> (bool, Vec<IndepViolation>) {
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let nbr_elems = a.elements_of(g.neighbors(v).iter().map(|&u| u as usize));
        let base = a.oracle.rank(&nbr_elems);
        let mut with_v = nbr_elems.clone();
        with_v.push(a.element(v));
        with_v.sort();
        with_v.dedup();
        if a.oracle.rank(&with_v) == base {
            violations.push(IndepViolation {
                vertex: g.vertex_id(v).to_string(),
                neighborhood_rank: base,
            });
        }
    }
    (violations.is_empty(), violations)
}

/// A complete bipartite subgraph whose assigned vectors are pairwise
/// orthogonal, if one exists: sides of sizes `a` and `b`, every cross pair
/// an edge, and all `a + b` vectors pairwise orthogonal (exhaustive).
pub fn probe_pairwise_orthogonal_bipartite(
    g: &Graph,
    r: &VectorAssignment,
    a: usize,
    b: usize,
) -> Option<(Vec<String>, Vec<String>)> {
    let n = g.vertex_count();
    let orthogonal = |u: usize, v: usize| -> bool {
        bilinear(r.vector(u), r.vector(v))
            .map(|s| s.is_zero())
            .unwrap_or(false)
    };
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    fn choose(
        n: usize,
        start: usize,
        need: usize,
        current: &mut Vec<usize>,
        accept: &mut dyn FnMut(&mut Vec<usize>) -> bool,
    ) -> bool {
        if need == 0 {
            return accept(current);
        }
        for v in start..n {
            current.push(v);
            if choose(n, v + 1, need - 1, current, accept) {
                return true;
            }
            current.pop();
        }
        false
    }
    let found = choose(n, 0, a, &mut side_a, &mut |xs: &mut Vec<usize>| {
        let xs = xs.clone();
        if !pairwise(&xs, &orthogonal) {
            return false;
        }
        let mut ys = Vec::new();
        choose(n, 0, b, &mut ys, &mut |ys: &mut Vec<usize>| {
            if ys.iter().any(|y| xs.contains(y)) {
                return false;
            }
            if !pairwise(ys, &orthogonal) {
                return false;
            }
            let complete = xs.iter().all(|&x| ys.iter().all(|&y| g.has_edge(x, y)));
            let cross_orth = xs.iter().all(|&x| ys.iter().all(|&y| orthogonal(x, y)));
            if complete && cross_orth {
                side_b = ys.clone();
                return true;
            }
            false
        })
    });
    if !found {
        return None;
    }
    let ids = |set: &[usize]| set.iter().map(|&v| g.vertex_id(v).to_string()).collect();
    Some((ids(&side_a), ids(&side_b)))
}

fn pairwise(set: &[usize], pred: &dyn Fn(usize, usize) -> bool) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| pred(u, v)))
}

/// The five 3-dimensional rational vectors assigned consecutively around the
/// 5-cycle, used as a fixture throughout the test suites.
pub fn c5_rational_vectors() -> Vec<ExactVector> {
    let q = FieldSpec::rationals();
    [
        [1, 1, 1],
        [-1, -1, 2],
        [3, 1, 2],
        [-1, 5, -1],
        [1, 0, -1],
    ]
    .iter()
    .map(|row| ExactVector::from_i64(q, &row[..]))
    .collect()
}
