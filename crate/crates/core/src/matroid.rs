//! Matroid rank oracles over finite ground sets: uniform, linear, and
//! transversal, with the closure and greedy-independent-subset utilities the
//! extraction pipeline consumes.
//!
//! Matroids are exposed only through rank queries. Queries are memoized per
//! oracle, keyed by subset bitmask, for ground sets of at most 64 elements;
//! larger ground sets fall back to uncached evaluation.

use crate::algebra::{rank as matrix_rank, ExactMatrix};
use crate::graph::Graph;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("rank {r} exceeds ground size {m}")]
    RankExceedsGround { m: usize, r: usize },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("side is not an independent side of a bipartite graph")]
    BadTransversalSide,
    #[error("insufficient rank: need {need}, set has {have}")]
    InsufficientRank { need: usize, have: usize },
    #[error("duplicate element id {0:?}")]
    DuplicateElement(String),
}

enum OracleKind {
    Uniform {
        r: usize,
    },
    Linear {
        columns: ExactMatrix,
    },
    /// Bipartite substrate; ground elements are the `side` vertices, and the
    /// rank of a subset is the size of a maximum matching covering it.
    Transversal {
        graph: Graph,
        side: Vec<usize>,
    },
}

/// A matroid presented by its rank function on subsets of an ordered ground
/// set of element ids.
pub struct RankOracle {
    ground: Vec<String>,
    index: HashMap<String, usize>,
    kind: OracleKind,
    memo: Mutex<HashMap<u64, usize>>,
}

impl fmt::Debug for RankOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankOracle({}, |E|={})", self.kind_name(), self.ground.len())
    }
}

impl RankOracle {
    fn build(ground: Vec<String>, kind: OracleKind) -> Result<Self, MatroidError> {
        let mut index = HashMap::new();
        for (i, e) in ground.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(MatroidError::DuplicateElement(e.clone()));
            }
        }
        Ok(RankOracle {
            ground,
            index,
            kind,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            OracleKind::Uniform { .. } => "uniform",
            OracleKind::Linear { .. } => "linear",
            OracleKind::Transversal { .. } => "transversal",
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn element_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn element_id(&self, i: usize) -> &str {
        &self.ground[i]
    }

    /// Rank of a subset given by element indices (duplicates are harmless).
    pub fn rank(&self, subset: &[usize]) -> usize {
        if self.ground.len() <= 64 {
            let mask = subset.iter().fold(0u64, |m, &e| m | 1 << e);
            if let Some(&r) = self.memo.lock().unwrap().get(&mask) {
                return r;
            }
            let mut sorted: Vec<usize> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
            sorted.retain(|&i| i < self.ground.len());
            let r = self.rank_uncached(&sorted);
            self.memo.lock().unwrap().insert(mask, r);
            r
        } else {
            let mut sorted = subset.to_vec();
            sorted.sort();
            sorted.dedup();
            self.rank_uncached(&sorted)
        }
    }

    /// Rank of the whole ground set.
    pub fn rank_full(&self) -> usize {
        let all: Vec<usize> = (0..self.ground.len()).collect();
        self.rank(&all)
    }

    pub fn rank_of_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<usize, MatroidError> {
        let subset = ids
            .iter()
            .map(|id| {
                self.element_index(id.as_ref())
                    .ok_or_else(|| MatroidError::UnknownElement(id.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.rank(&subset))
    }

    pub fn is_loop(&self, element: usize) -> bool {
        self.rank(&[element]) == 0
    }

    fn rank_uncached(&self, sorted: &[usize]) -> usize {
        match &self.kind {
            OracleKind::Uniform { r } => sorted.len().min(*r),
            OracleKind::Linear { columns } => {
                if sorted.is_empty() {
                    0
                } else {
                    matrix_rank(&columns.submatrix_columns(sorted))
                }
            }
            OracleKind::Transversal { graph, side } => {
                let chosen: Vec<usize> = sorted.iter().map(|&i| side[i]).collect();
                transversal_rank(graph, &chosen)
            }
        }
    }
}

/// Maximum matching size of the bipartite substrate restricted to the chosen
/// side vertices.
fn transversal_rank(graph: &Graph, chosen: &[usize]) -> usize {
    // Kuhn's algorithm on the restriction; the other side is everything else.
    let n = graph.vertex_count();
    let mut matched: Vec<Option<usize>> = vec![None; n];
    let mut size = 0;
    for &u in chosen {
        let mut visited = vec![false; n];
        if augment(graph, u, &mut visited, &mut matched) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, u: usize, visited: &mut [bool], matched: &mut [Option<usize>]) -> bool {
    for &w in g.neighbors(u) {
        let w = w as usize;
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if matched[w].is_none() || augment(g, matched[w].unwrap(), visited, matched) {
            matched[w] = Some(u);
            return true;
        }
    }
    false
}

/// The uniform matroid with `m` elements (ids `0..m-1`) and rank `r`.
pub fn uniform_matroid(m: usize, r: usize) -> Result<RankOracle, MatroidError> {
    if r > m {
        return Err(MatroidError::RankExceedsGround { m, r });
    }
    let ground = (0..m).map(|i| i.to_string()).collect();
    RankOracle::build(ground, OracleKind::Uniform { r })
}

/// Uniform matroid with explicit element ids.
pub fn uniform_matroid_with_ids(ids: Vec<String>, r: usize) -> Result<RankOracle, MatroidError> {
    if r > ids.len() {
        return Err(MatroidError::RankExceedsGround { m: ids.len(), r });
    }
    RankOracle::build(ids, OracleKind::Uniform { r })
}

/// The linear matroid of the columns of an exact matrix; element `i` is
/// column `i`, with id `c{i}` unless ids are supplied.
pub fn linear_matroid(columns: ExactMatrix) -> RankOracle {
    let ids = (0..columns.ncols()).map(|i| format!("c{i}")).collect();
    RankOracle::build(ids, OracleKind::Linear { columns }).expect("generated ids are unique")
}

pub fn linear_matroid_with_ids(
    ids: Vec<String>,
    columns: ExactMatrix,
) -> Result<RankOracle, MatroidError> {
    assert_eq!(ids.len(), columns.ncols());
    RankOracle::build(ids, OracleKind::Linear { columns })
}

/// The transversal matroid of a bipartite graph on the side `u_side`
/// (vertex indices of `graph`); a subset is independent when a matching of
/// the substrate covers it.
pub fn transversal_matroid(graph: Graph, u_side: Vec<usize>) -> Result<RankOracle, MatroidError> {
    let n = graph.vertex_count();
    let mut in_side = vec![false; n];
    for &v in &u_side {
        if v >= n {
            return Err(MatroidError::BadTransversalSide);
        }
        in_side[v] = true;
    }
    // The side must be independent: every substrate edge leaves it.
    for (a, b) in graph.edges() {
        if in_side[a] && in_side[b] {
            return Err(MatroidError::BadTransversalSide);
        }
    }
    let ids = u_side
        .iter()
        .map(|&v| graph.vertex_id(v).to_string())
        .collect();
    RankOracle::build(
        ids,
        OracleKind::Transversal {
            graph,
            side: u_side,
        },
    )
}

/// Elements of `universe` whose addition does not raise the rank of `s`:
/// the closure of `s` traced inside `universe`.
pub fn closure_trace(oracle: &RankOracle, s: &[usize], universe: &[usize]) -> Vec<usize> {
    let base = oracle.rank(s);
    let mut extended = s.to_vec();
    universe
        .iter()
        .copied()
        .filter(|&e| {
            extended.push(e);
            let r = oracle.rank(&extended);
            extended.pop();
            r == base
        })
        .collect()
}

/// Greedy independent subset of `s` of size exactly `k`, scanning `s` in
/// canonical (ascending index) order.
pub fn greedy_independent_subset(
    oracle: &RankOracle,
    s: &[usize],
    k: usize,
) -> Result<Vec<usize>, MatroidError> {
    let have = oracle.rank(s);
    if have < k {
        return Err(MatroidError::InsufficientRank { need: k, have });
    }
    let mut sorted = s.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    for &e in &sorted {
        if chosen.len() == k {
            break;
        }
        chosen.push(e);
        if oracle.rank(&chosen) < chosen.len() {
            chosen.pop();
        }
    }
    debug_assert_eq!(chosen.len(), k);
    debug_assert_eq!(oracle.rank(&chosen), k);
    Ok(chosen)
}
