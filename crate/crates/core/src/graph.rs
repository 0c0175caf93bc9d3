//! Graph and hypergraph types, the standard generators, and Kneser
//! representations.
//!
//! Vertex ids are opaque strings. Generated graphs use canonical ids
//! (bitstrings for subset and vector vertices, decimal indices for cycles)
//! so that fixtures are reproducible byte for byte.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("duplicate edge id {0:?}")]
    DuplicateEdgeId(String),
    #[error("edge {0:?} is empty")]
    EmptyEdge(String),
    #[error("edges {0:?} and {1:?} have the same vertex set (multi-hypergraph)")]
    DuplicateEdgeSet(String, String),
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("vertex {0:?} has no color")]
    MissingColor(String),
    #[error("color {0} is not positive")]
    NonPositiveColor(u32),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// Simple undirected graph: ordered vertex ids plus a symmetric irreflexive
/// adjacency relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<u32>>, // sorted neighbor indices
}

impl Graph {
    /// Build a graph from vertex ids and an edge list. Both orientations of
    /// an edge describe the same relation pair, and repeated pairs collapse;
    /// loops are rejected.
    pub fn new<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut adj = vec![BTreeSet::new(); vertices.len()];
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let ui = *index
                .get(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            if ui == vi {
                return Err(GraphError::Loop(u.to_string()));
            }
            adj[ui].insert(vi as u32);
            adj[vi].insert(ui as u32);
        }
        Ok(Graph {
            verts: vertices,
            index,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[String] {
        &self.verts
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.verts[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.verts.len() {
            for &v in &self.adj[u] {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Edges as id pairs, in the canonical index order.
    pub fn edge_ids(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (self.verts[u].clone(), self.verts[v].clone()))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.verts.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((self.verts[u].clone(), self.verts[v].clone()));
                }
            }
        }
        Graph::new(self.verts.clone(), &edges).expect("complement of a valid graph is valid")
    }

    /// All maximal independent sets, as sorted index lists in a canonical
    /// order (Bron-Kerbosch with pivoting on the complement).
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        let n = self.verts.len();
        // Maximal independent sets of G = maximal cliques of the complement.
        let comp_adj: Vec<BTreeSet<usize>> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && !self.has_edge(u, v))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: BTreeSet<usize> = (0..n).collect();
        let x = BTreeSet::new();
        bron_kerbosch(&comp_adj, &mut r, p, x, &mut out);
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.verts,
            "edges": self.edge_ids(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        let spec: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| GraphError::Parse(e.to_string()))?;
        let edges: Vec<(String, String)> = spec.edges;
        Graph::new(spec.vertices, &edges)
    }

    /// Plain edge-list text: one `u v` pair per line; blank lines and lines
    /// starting with `#` are skipped. Vertices appear in first-mention order.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut verts = Vec::new();
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u.to_string(), v.to_string()),
                _ => return Err(GraphError::Parse(format!("bad edge line {line:?}"))),
            };
            for w in [&u, &v] {
                if seen.insert(w.clone()) {
                    verts.push(w.clone());
                }
            }
            edges.push((u, v));
        }
        Graph::new(verts, &edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    p: BTreeSet<usize>,
    x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort();
        out.push(clique);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| adj[u].intersection(&p).count())
        .unwrap();
    let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        let p2 = p.intersection(&adj[v]).copied().collect();
        let x2 = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Hypergraph: ordered vertex ids and id-labeled nonempty edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    verts: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(String, BTreeSet<usize>)>, // sorted by edge id
}

impl Hypergraph {
    /// Strict constructor: rejects two edges with the same vertex set.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, Vec<String>)>,
    ) -> Result<Self, GraphError> {
        let h = Self::new_multi(vertices, edges)?;
        let mut seen: BTreeMap<Vec<usize>, &str> = BTreeMap::new();
        for (id, set) in &h.edges {
            let key: Vec<usize> = set.iter().copied().collect();
            if let Some(other) = seen.insert(key, id) {
                return Err(GraphError::DuplicateEdgeSet(other.to_string(), id.clone()));
            }
        }
        Ok(h)
    }

    /// Multi-hypergraph constructor: distinct edge ids may share a vertex set.
    pub fn new_multi(
        vertices: Vec<String>,
        edges: Vec<(String, Vec<String>)>,
    ) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut out = Vec::new();
        let mut ids = BTreeSet::new();
        for (id, members) in edges {
            if !ids.insert(id.clone()) {
                return Err(GraphError::DuplicateEdgeId(id));
            }
            if members.is_empty() {
                return Err(GraphError::EmptyEdge(id));
            }
            let set = members
                .iter()
                .map(|m| {
                    index
                        .get(m)
                        .copied()
                        .ok_or_else(|| GraphError::UnknownVertex(m.clone()))
                })
                .collect::<Result<BTreeSet<_>, _>>()?;
            out.push((id, set));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Hypergraph {
            verts: vertices,
            index,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.verts
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by id, members as vertex indices.
    pub fn edges(&self) -> &[(String, BTreeSet<usize>)] {
        &self.edges
    }

    pub fn has_duplicate_edge_sets(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .any(|(_, set)| !seen.insert(set.iter().copied().collect::<Vec<_>>()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: BTreeMap<String, Vec<String>> = self
            .edges
            .iter()
            .map(|(id, set)| {
                (
                    id.clone(),
                    set.iter().map(|&i| self.verts[i].clone()).collect(),
                )
            })
            .collect();
        serde_json::json!({ "vertices": self.verts, "edges": edges })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        #[derive(Deserialize)]
        struct HyperJson {
            vertices: Vec<String>,
            edges: BTreeMap<String, Vec<String>>,
        }
        let spec: HyperJson = serde_json::from_value(value.clone())
            .map_err(|e| GraphError::Parse(e.to_string()))?;
        Hypergraph::new(spec.vertices, spec.edges.into_iter().collect())
    }
}

/// Graph plus a total coloring (positive color ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    colors: Vec<u32>, // by vertex index
}

impl ColoredGraph {
    pub fn new(graph: Graph, coloring: &BTreeMap<String, u32>) -> Result<Self, GraphError> {
        let mut colors = vec![0u32; graph.vertex_count()];
        for (i, v) in graph.vertices().iter().enumerate() {
            let c = *coloring
                .get(v)
                .ok_or_else(|| GraphError::MissingColor(v.clone()))?;
            if c == 0 {
                return Err(GraphError::NonPositiveColor(c));
            }
            colors[i] = c;
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    pub fn is_proper(&self) -> bool {
        self.graph
            .edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = self.graph.to_json();
        let colors: BTreeMap<String, u32> = self
            .graph
            .vertices()
            .iter()
            .zip(&self.colors)
            .map(|(v, &c)| (v.clone(), c))
            .collect();
        value["colors"] = serde_json::json!(colors);
        value
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        let graph = Graph::from_json(value)?;
        let colors: BTreeMap<String, u32> =
            serde_json::from_value(value.get("colors").cloned().unwrap_or_default())
                .map_err(|e| GraphError::Parse(e.to_string()))?;
        ColoredGraph::new(graph, &colors)
    }
}

/// The cycle graph on vertices `0..n-1`.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let verts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String)> = (0..n)
        .map(|i| (i.to_string(), ((i + 1) % n).to_string()))
        .collect();
    Graph::new(verts, &edges)
}

/// The complete graph on vertices `0..n-1`.
pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("complete needs n >= 1".into()));
    }
    let verts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i.to_string(), j.to_string()));
        }
    }
    Graph::new(verts, &edges)
}

/// The edgeless graph on vertices `0..n-1`.
pub fn gen_empty(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("empty needs n >= 1".into()));
    }
    let verts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Graph::new(verts, &[] as &[(String, String)])
}

fn subset_bitstring(mask: u32, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The Kneser graph `KG(n,k)` together with its canonical representation
/// (`[n]` with all k-subsets as edges). Vertex/edge ids are the subset
/// indicator bitstrings, position `i` standing for element `i+1`.
pub fn gen_kneser(n: usize, k: usize) -> Result<(Graph, Hypergraph), GraphError> {
    if n < 2 * k || k == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "kneser needs n >= 2k >= 2, got n={n} k={k} (use the degenerate variant to bypass)"
        )));
    }
    gen_kneser_degenerate(n, k)
}

/// Kneser construction without the `n >= 2k` guard.
pub fn gen_kneser_degenerate(n: usize, k: usize) -> Result<(Graph, Hypergraph), GraphError> {
    if n == 0 || k == 0 || n > 20 {
        return Err(GraphError::InvalidParameter(format!(
            "kneser needs 1 <= k and 1 <= n <= 20, got n={n} k={k}"
        )));
    }
    let mut masks: Vec<u32> = (1u32..1 << n).filter(|m| m.count_ones() as usize == k).collect();
    masks.sort();
    let ids: Vec<String> = masks.iter().map(|&m| subset_bitstring(m, n)).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    let graph = Graph::new(ids.clone(), &edges)?;
    let ground: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let hyper_edges: Vec<(String, Vec<String>)> = masks
        .iter()
        .zip(&ids)
        .map(|(&m, id)| {
            let members = (0..n)
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            (id.clone(), members)
        })
        .collect();
    let hyper = Hypergraph::new(ground, hyper_edges)?;
    Ok((graph, hyper))
}

/// The Kneser graph of a hypergraph: one vertex per edge id, adjacency =
/// vertex-disjointness of the underlying edges.
pub fn kneser_graph_of(h: &Hypergraph) -> Result<Graph, GraphError> {
    if h.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    if h.has_duplicate_edge_sets() {
        return Err(GraphError::InvalidParameter(
            "Kneser construction rejects multi-hypergraphs".into(),
        ));
    }
    let ids: Vec<String> = h.edges().iter().map(|(id, _)| id.clone()).collect();
    let mut edges = Vec::new();
    for (i, (id_i, set_i)) in h.edges().iter().enumerate() {
        for (id_j, set_j) in h.edges().iter().skip(i + 1) {
            if set_i.is_disjoint(set_j) {
                edges.push((id_i.clone(), id_j.clone()));
            }
        }
    }
    Graph::new(ids, &edges)
}

/// A Kneser representation of an arbitrary simple graph: hypergraph vertices
/// are the maximal independent sets of `G` plus one private token per graph
/// vertex; the edge for vertex `v` is its token together with the maximal
/// independent sets containing `v`. Then `KG` of the result is `G` again,
/// under the identity map on ids.
pub fn kneser_representation(g: &Graph) -> Hypergraph {
    let mis = g.maximal_independent_sets();
    let n = g.vertex_count();
    let mut verts: Vec<String> = mis
        .iter()
        .map(|set| {
            let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
            format!("m{}", subset_bitstring64(mask, n))
        })
        .collect();
    verts.extend(g.vertices().iter().map(|v| format!("t{v}")));
    let edges: Vec<(String, Vec<String>)> = (0..n)
        .map(|v| {
            let mut members = vec![format!("t{}", g.vertex_id(v))];
            for (i, set) in mis.iter().enumerate() {
                if set.binary_search(&v).is_ok() {
                    members.push(verts[i].clone());
                }
            }
            (g.vertex_id(v).to_string(), members)
        })
        .collect();
    Hypergraph::new(verts, edges).expect("token construction yields distinct edge sets")
}

fn subset_bitstring64(mask: u64, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The graph on odd-weight vectors of `Z_2^t` with adjacency given by
/// orthogonality. Vertex ids are the coordinate bitstrings.
pub fn gen_h(t: usize) -> Result<Graph, GraphError> {
    if t < 1 || t > 20 {
        return Err(GraphError::InvalidParameter(format!(
            "H_t needs 1 <= t <= 20, got {t}"
        )));
    }
    let masks: Vec<u32> = (1u32..1 << t).filter(|m| m.count_ones() % 2 == 1).collect();
    let ids: Vec<String> = masks.iter().map(|&m| subset_bitstring(m, t)).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] & masks[j]).count_ones() % 2 == 0 {
                edges.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    Graph::new(ids, &edges)
}

/// Add `s` dummy vertices joined to every original vertex and to nothing
/// else, each carrying a fresh color.
pub fn augment_dummies(g: &ColoredGraph, s: usize) -> ColoredGraph {
    let mut base = String::from("dummy");
    while g.graph.vertices().iter().any(|v| v.starts_with(&base)) {
        base.push('_');
    }
    let mut verts = g.graph.vertices().to_vec();
    let mut edges = g.graph.edge_ids();
    let mut coloring: BTreeMap<String, u32> = g
        .graph
        .vertices()
        .iter()
        .zip(g.colors())
        .map(|(v, &c)| (v.clone(), c))
        .collect();
    let mut next_color = g.colors().iter().copied().max().unwrap_or(0);
    for i in 0..s {
        let id = format!("{base}{i}");
        for orig in g.graph.vertices() {
            edges.push((id.clone(), orig.clone()));
        }
        next_color += 1;
        coloring.insert(id.clone(), next_color);
        verts.push(id);
    }
    let graph = Graph::new(verts, &edges).expect("dummy ids are fresh");
    ColoredGraph::new(graph, &coloring).expect("total coloring by construction")
}
