//! Maximum bipartite matching via augmenting paths.

use super::SolverError;
use crate::graph::Graph;

/// Maximum matching of a bipartite graph with the given left side, returned
/// as `(left, right)` index pairs in ascending left order.
///
/// Errors if some edge fails to cross the bipartition.
pub fn max_bipartite_matching(
    g: &Graph,
    left: &[usize],
) -> Result<Vec<(usize, usize)>, SolverError> {
    let n = g.vertex_count();
    let mut is_left = vec![false; n];
    for &v in left {
        if v >= n {
            return Err(SolverError::InvalidParameter(format!(
                "left vertex index {v} out of range"
            )));
        }
        is_left[v] = true;
    }
    for (u, v) in g.edges() {
        if is_left[u] == is_left[v] {
            return Err(SolverError::NotBipartite);
        }
    }
    let mut matched_right: Vec<Option<usize>> = vec![None; n];
    let mut lefts: Vec<usize> = left.to_vec();
    lefts.sort();
    lefts.dedup();
    for &u in &lefts {
        let mut visited = vec![false; n];
        try_augment(g, u, &mut visited, &mut matched_right);
    }
    let mut out: Vec<(usize, usize)> = matched_right
        .iter()
        .enumerate()
        .filter_map(|(r, m)| m.map(|l| (l, r)))
        .collect();
    out.sort();
    Ok(out)
}

fn try_augment(
    g: &Graph,
    u: usize,
    visited: &mut [bool],
    matched_right: &mut [Option<usize>],
) -> bool {
    for &r in g.neighbors(u) {
        let r = r as usize;
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if matched_right[r].is_none()
            || try_augment(g, matched_right[r].unwrap(), visited, matched_right)
        {
            matched_right[r] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let verts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(u, v)| (u.to_string(), v.to_string()))
            .collect();
        Graph::new(verts, &named).unwrap()
    }

    #[test]
    fn complete_bipartite() {
        let g = graph(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let m = max_bipartite_matching(&g, &[0, 1]).unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn star_from_leaves() {
        let g = graph(4, &[(0, 3), (1, 3), (2, 3)]);
        let m = max_bipartite_matching(&g, &[0, 1, 2]).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn path_needs_augmenting() {
        // Path 0-1-2-3 with left = {1, 3}: the greedy first match 1-0 must
        // be augmented through 1-2 to reach size 2.
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = max_bipartite_matching(&g, &[1, 3]).unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn rejects_non_bipartition() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            max_bipartite_matching(&g, &[0]),
            Err(SolverError::NotBipartite)
        );
    }
}
