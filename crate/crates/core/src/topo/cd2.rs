//! The 2-colorability defect: minimum vertex removals after which the
//! surviving edges (those avoiding every removed vertex) admit a 2-coloring
//! with no monochromatic edge.

use crate::graph::Hypergraph;
use crate::solvers::hypergraph_2colorable;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Unset,
    Color(u8),
    Removed,
}

/// Exact defect with a minimum removal set, by branch and bound over
/// {color-1, color-2, removed} labelings.
pub fn cd2(h: &Hypergraph) -> (usize, Vec<String>) {
    let n = h.vertex_count();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|(_, set)| set.iter().copied().collect())
        .collect();
    // Vertices hitting many edges first.
    let mut order: Vec<usize> = (0..n).collect();
    let mut frequency = vec![0usize; n];
    for e in &edges {
        for &v in e {
            frequency[v] += 1;
        }
    }
    order.sort_by_key(|&v| (std::cmp::Reverse(frequency[v]), v));
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in edges.iter().enumerate() {
        for &v in e {
            touching[v].push(ei);
        }
    }
    let mut labels = vec![Label::Unset; n];
    let mut best: (usize, Vec<Label>) = (n + 1, Vec::new());
    branch(&order, &edges, &touching, 0, 0, &mut labels, &mut best);
    // A full removal always works, so a labeling was found.
    let removed: Vec<String> = best
        .1
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, Label::Removed))
        .map(|(v, _)| h.vertices()[v].clone())
        .collect();
    debug_assert_eq!(removed.len(), best.0);
    debug_assert!(removal_works(h, &removed));
    (best.0, removed)
}

fn branch(
    order: &[usize],
    edges: &[Vec<usize>],
    touching: &[Vec<usize>],
    depth: usize,
    removed: usize,
    labels: &mut Vec<Label>,
    best: &mut (usize, Vec<Label>),
) {
    if removed >= best.0 {
        return;
    }
    if depth == order.len() {
        *best = (removed, labels.clone());
        return;
    }
    let v = order[depth];
    // Swapping the two colors is a symmetry; pin the first branched vertex
    // to color 1.
    let colors: &[u8] = if depth == 0 { &[1] } else { &[1, 2] };
    'colors: for &c in colors {
        labels[v] = Label::Color(c);
        for &ei in &touching[v] {
            if fully_monochromatic(&edges[ei], labels) {
                labels[v] = Label::Unset;
                continue 'colors;
            }
        }
        branch(order, edges, touching, depth + 1, removed, labels, best);
        labels[v] = Label::Unset;
    }
    labels[v] = Label::Removed;
    branch(order, edges, touching, depth + 1, removed + 1, labels, best);
    labels[v] = Label::Unset;
}

fn fully_monochromatic(edge: &[usize], labels: &[Label]) -> bool {
    let mut seen: Option<u8> = None;
    for &v in edge {
        match labels[v] {
            Label::Removed | Label::Unset => return false,
            Label::Color(c) => {
                if let Some(s) = seen {
                    if s != c {
                        return false;
                    }
                } else {
                    seen = Some(c);
                }
            }
        }
    }
    seen.is_some()
}

/// Independent validation route: drop the removed vertices, keep only the
/// edges avoiding them, and ask the plain 2-coloring solver.
pub fn removal_works(h: &Hypergraph, removed: &[String]) -> bool {
    let surviving: Vec<(String, Vec<String>)> = h
        .edges()
        .iter()
        .filter(|(_, set)| {
            set.iter().all(|&v| {
                let id = &h.vertices()[v];
                !removed.contains(id)
            })
        })
        .map(|(id, set)| {
            (
                id.clone(),
                set.iter().map(|&v| h.vertices()[v].clone()).collect(),
            )
        })
        .collect();
    let keep: Vec<String> = h
        .vertices()
        .iter()
        .filter(|id| !removed.contains(id))
        .cloned()
        .collect();
    let reduced = Hypergraph::new_multi(keep, surviving).expect("surviving edges remain valid");
    hypergraph_2colorable(&reduced).is_some()
}
