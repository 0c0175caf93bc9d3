//! Exact maximum clique via branch and bound with greedy coloring bounds.

use crate::bits::BitSet;
use crate::graph::Graph;

/// Maximum clique size together with a witness clique (vertex indices,
/// ascending). The witness is validated before being returned.
pub fn max_clique(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let adj: Vec<BitSet> = (0..n)
        .map(|u| {
            let mut row = BitSet::new(n);
            for &v in g.neighbors(u) {
                row.insert(v as usize);
            }
            row
        })
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    let mut candidates = BitSet::new(n);
    for v in 0..n {
        candidates.insert(v);
    }
    expand(&adj, &mut current, candidates, &mut best);
    debug_assert!(is_clique(g, &best));
    (best.len(), best)
}

fn expand(adj: &[BitSet], current: &mut Vec<usize>, candidates: BitSet, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
            best.sort();
        }
        return;
    }
    // Greedy coloring of the candidate set gives an upper bound on how much
    // the clique can still grow; branch on vertices in reverse color order.
    let order = color_order(adj, &candidates);
    let mut candidates = candidates;
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = candidates.clone();
        next.intersect_with(&adj[v]);
        expand(adj, current, next, best);
        current.pop();
        candidates.remove(v);
    }
}

/// Sequential greedy coloring of the candidate set; returns `(vertex,
/// color_count_at_assignment)` in assignment order, so the second component
/// is a clique-size bound for the suffix starting at that vertex.
fn color_order(adj: &[BitSet], candidates: &BitSet) -> Vec<(usize, usize)> {
    let verts: Vec<usize> = candidates.iter().collect();
    let mut classes: Vec<BitSet> = Vec::new();
    let mut out = Vec::with_capacity(verts.len());
    for &v in &verts {
        let mut c = 0;
        loop {
            if c == classes.len() {
                classes.push(BitSet::new(adj.len()));
            }
            if !classes[c].intersects(&adj[v]) {
                classes[c].insert(v);
                break;
            }
            c += 1;
        }
    }
    for (ci, class) in classes.iter().enumerate() {
        for v in class.iter() {
            out.push((v, ci + 1));
        }
    }
    out
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set.iter().skip(i + 1).all(|&v| g.has_edge(u, v)))
}
