//! Graph homomorphism search: backtracking over a most-constrained-first
//! vertex order with forward checking of neighborhood domains.

use crate::bits::BitSet;
use crate::graph::Graph;
use std::collections::BTreeMap;

/// An edge-preserving map from `g` to `h`, if one exists. Complete search;
/// `None` is a proof of non-existence.
pub fn homomorphism_exists(g: &Graph, h: &Graph) -> Option<BTreeMap<String, String>> {
    let n = g.vertex_count();
    let m = h.vertex_count();
    if n == 0 {
        return Some(BTreeMap::new());
    }
    if m == 0 {
        return None;
    }
    let h_adj: Vec<BitSet> = (0..m)
        .map(|u| {
            let mut row = BitSet::new(m);
            for &v in h.neighbors(u) {
                row.insert(v as usize);
            }
            row
        })
        .collect();
    // Order the source vertices so each one sees as many already-placed
    // neighbors as possible (cliques cluster early and fail fast).
    let order = max_backward_degree_order(g);
    let mut full = BitSet::new(m);
    for v in 0..m {
        full.insert(v);
    }
    let mut domains: Vec<BitSet> = vec![full; n];
    let mut image = vec![usize::MAX; n];
    if !place(g, &h_adj, &order, 0, &mut domains, &mut image) {
        return None;
    }
    let map: BTreeMap<String, String> = (0..n)
        .map(|v| (g.vertex_id(v).to_string(), h.vertex_id(image[v]).to_string()))
        .collect();
    // Independent verification before returning.
    for (u, v) in g.edges() {
        assert!(
            h.has_edge(image[u], image[v]),
            "homomorphism engine produced a bad witness"
        );
    }
    Some(map)
}

fn max_backward_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut back = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (back[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            back[u as usize] += 1;
        }
    }
    order
}

fn place(
    g: &Graph,
    h_adj: &[BitSet],
    order: &[usize],
    depth: usize,
    domains: &mut [BitSet],
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let candidates: Vec<usize> = domains[v].iter().collect();
    for t in candidates {
        image[v] = t;
        // Forward check: unplaced neighbors must map into N_H(t).
        let saved: Vec<(usize, BitSet)> = g
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| image[u] == usize::MAX)
            .map(|u| (u, domains[u].clone()))
            .collect();
        let mut dead = false;
        for &(u, _) in &saved {
            domains[u].intersect_with(&h_adj[t]);
            if domains[u].is_empty() {
                dead = true;
            }
        }
        if !dead && place(g, h_adj, order, depth + 1, domains, image) {
            return true;
        }
        for (u, dom) in saved {
            domains[u] = dom;
        }
        image[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_h};
    use crate::solvers::k_colorable;

    #[test]
    fn identity_and_collapse() {
        let k2 = gen_complete(2).unwrap();
        assert!(homomorphism_exists(&k2, &k2).is_some());
        let k3 = gen_complete(3).unwrap();
        assert!(homomorphism_exists(&k3, &k2).is_none());
    }

    #[test]
    fn c5_into_h3_is_three_coloring() {
        // H_3 contains a triangle, so mapping C5 into it is exactly a proper
        // 3-coloring of C5, which exists.
        let c5 = gen_cycle(5).unwrap();
        let h3 = gen_h(3).unwrap();
        let hom = homomorphism_exists(&c5, &h3);
        assert!(hom.is_some());
        // But C5 has no homomorphism into H_2 = K_2 (odd cycle).
        let h2 = gen_h(2).unwrap();
        assert!(homomorphism_exists(&c5, &h2).is_none());
    }

    #[test]
    fn coloring_equivalence_small() {
        // k-colorability is the same as mapping into K_k.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let verts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let edges: Vec<(String, String)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &(u, v))| (u.to_string(), v.to_string()))
                    .collect();
                let g = crate::graph::Graph::new(verts, &edges).unwrap();
                for k in 1..=4usize {
                    let kk = gen_complete(k).unwrap();
                    assert_eq!(
                        k_colorable(&g, k).is_some(),
                        homomorphism_exists(&g, &kk).is_some(),
                        "n={n} mask={mask} k={k}"
                    );
                }
            }
        }
    }
}
