//! Hypergraph proper 2-coloring (no monochromatic edge) by exhaustive
//! search with propagation.

use crate::graph::Hypergraph;
use std::collections::BTreeMap;

/// A 2-coloring with no monochromatic edge, or `None` if impossible.
/// Colors are 1 and 2.
pub fn hypergraph_2colorable(h: &Hypergraph) -> Option<BTreeMap<String, u32>> {
    let n = h.vertex_count();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|(_, set)| set.iter().copied().collect())
        .collect();
    // A singleton edge is monochromatic under any coloring.
    if edges.iter().any(|e| e.len() == 1) {
        return None;
    }
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in edges.iter().enumerate() {
        for &v in e {
            touching[v].push(ei);
        }
    }
    let mut colors = vec![0u8; n];
    if !assign(0, &mut colors, &edges, &touching) {
        return None;
    }
    let map = h
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), if colors[i] == 1 { 1 } else { 2 }))
        .collect();
    Some(map)
}

fn assign(v: usize, colors: &mut Vec<u8>, edges: &[Vec<usize>], touching: &[Vec<usize>]) -> bool {
    if v == colors.len() {
        return edges.iter().all(|e| !monochromatic(e, colors));
    }
    'colors: for c in [1u8, 2u8] {
        colors[v] = c;
        // Any fully-colored edge through v must already be bichromatic.
        for &ei in &touching[v] {
            let e = &edges[ei];
            if e.iter().all(|&u| colors[u] != 0) && monochromatic(e, colors) {
                colors[v] = 0;
                continue 'colors;
            }
        }
        if assign(v + 1, colors, edges, touching) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

fn monochromatic(e: &[usize], colors: &[u8]) -> bool {
    let first = colors[e[0]];
    first != 0 && e.iter().all(|&u| colors[u] == first)
}
