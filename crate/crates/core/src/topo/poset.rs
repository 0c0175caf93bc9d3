//! The free Z2-poset of complete bipartite pairs of a graph.

use super::TopoError;
use crate::graph::Graph;
use std::collections::{HashMap, HashSet, VecDeque};

pub const DEFAULT_POSET_CAP: usize = 200_000;

/// A pair of nonempty disjoint vertex sets (as index bitmasks) spanning a
/// complete bipartite subgraph: every `x` in `X` adjacent to every `y` in
/// `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomElement {
    pub x: u64,
    pub y: u64,
}

impl HomElement {
    pub fn swapped(self) -> HomElement {
        HomElement {
            x: self.y,
            y: self.x,
        }
    }

    pub fn size(self) -> u32 {
        self.x.count_ones() + self.y.count_ones()
    }

    /// Componentwise inclusion, the poset order.
    pub fn leq(self, other: HomElement) -> bool {
        self.x & other.x == self.x && self.y & other.y == self.y
    }

    pub fn x_vertices(self) -> Vec<usize> {
        mask_bits(self.x)
    }

    pub fn y_vertices(self) -> Vec<usize> {
        mask_bits(self.y)
    }
}

pub fn mask_bits(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// A finite poset with a fixed-point free order-preserving involution,
/// realized on the complete bipartite pairs of a graph. Elements are sorted
/// by total size, so index order is a linear extension.
#[derive(Debug, Clone)]
pub struct SignedPoset {
    elements: Vec<HomElement>,
    nu: Vec<u32>,
    lower_covers: Vec<Vec<u32>>,
}

impl SignedPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> HomElement {
        self.elements[i]
    }

    pub fn elements(&self) -> &[HomElement] {
        &self.elements
    }

    /// The involution: swap the two sides.
    pub fn nu(&self, i: usize) -> usize {
        self.nu[i] as usize
    }

    /// Strict order (componentwise strict inclusion) between element ids.
    pub fn lt(&self, p: usize, q: usize) -> bool {
        p != q && self.elements[p].leq(self.elements[q])
    }

    /// Immediate predecessors: one vertex removed from either side.
    pub fn lower_covers(&self, i: usize) -> &[u32] {
        &self.lower_covers[i]
    }

    /// Length of a longest chain minus one.
    pub fn height(&self) -> usize {
        if self.elements.is_empty() {
            return 0;
        }
        let mut h = vec![1usize; self.elements.len()];
        for i in 0..self.elements.len() {
            for &p in &self.lower_covers[i] {
                h[i] = h[i].max(h[p as usize] + 1);
            }
        }
        h.into_iter().max().unwrap() - 1
    }

    /// Machine check of the free Z2-poset structure.
    pub fn check_invariants(&self) -> Result<(), TopoError> {
        for i in 0..self.len() {
            let j = self.nu(i);
            if self.nu(j) != i {
                return Err(TopoError::Internal("nu is not an involution".into()));
            }
            if j == i {
                return Err(TopoError::Internal("nu has a fixed point".into()));
            }
            if self.lt(i, j) || self.lt(j, i) {
                return Err(TopoError::Internal("element comparable with its mate".into()));
            }
            for &p in &self.lower_covers[i] {
                let p = p as usize;
                if !self.lt(p, i) {
                    return Err(TopoError::Internal("cover is not below".into()));
                }
                // Order-preserving involution on covers.
                if !self.lt(self.nu(p), j) {
                    return Err(TopoError::Internal("nu does not preserve order".into()));
                }
            }
        }
        Ok(())
    }

    pub fn render(&self, g: &Graph, i: usize) -> (Vec<String>, Vec<String>) {
        let e = self.element(i);
        let ids = |vs: Vec<usize>| {
            vs.into_iter()
                .map(|v| g.vertex_id(v).to_string())
                .collect()
        };
        (ids(e.x_vertices()), ids(e.y_vertices()))
    }
}

/// Enumerate all complete bipartite pairs of `g`, growing upward from the
/// single-edge pairs (every pair shrinks to one stepwise, so the expansion
/// is exhaustive). Errors when the element count would exceed `cap`.
pub fn build_hom_poset(g: &Graph, cap: usize) -> Result<SignedPoset, TopoError> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(TopoError::GraphTooLarge(n));
    }
    let nbr: Vec<u64> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0u64, |m, &v| m | 1 << v)
        })
        .collect();
    let mut seen: HashSet<HomElement> = HashSet::new();
    let mut queue: VecDeque<HomElement> = VecDeque::new();
    for (u, v) in g.edges() {
        for e in [
            HomElement {
                x: 1 << u,
                y: 1 << v,
            },
            HomElement {
                x: 1 << v,
                y: 1 << u,
            },
        ] {
            if seen.insert(e) {
                queue.push_back(e);
            }
        }
    }
    while let Some(e) = queue.pop_front() {
        if seen.len() > cap {
            return Err(TopoError::PosetTooLarge { cap });
        }
        let occupied = e.x | e.y;
        for w in 0..n {
            if occupied >> w & 1 == 1 {
                continue;
            }
            // w joins X when adjacent to all of Y, and vice versa.
            if e.y & !nbr[w] == 0 {
                let grown = HomElement {
                    x: e.x | 1 << w,
                    y: e.y,
                };
                if seen.insert(grown) {
                    queue.push_back(grown);
                }
            }
            if e.x & !nbr[w] == 0 {
                let grown = HomElement {
                    x: e.x,
                    y: e.y | 1 << w,
                };
                if seen.insert(grown) {
                    queue.push_back(grown);
                }
            }
        }
    }
    if seen.len() > cap {
        return Err(TopoError::PosetTooLarge { cap });
    }
    let mut elements: Vec<HomElement> = seen.into_iter().collect();
    elements.sort_by_key(|e| (e.size(), e.x, e.y));
    let index: HashMap<HomElement, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let nu: Vec<u32> = elements.iter().map(|e| index[&e.swapped()]).collect();
    let lower_covers: Vec<Vec<u32>> = elements
        .iter()
        .map(|e| {
            let mut covers = Vec::new();
            if e.x.count_ones() > 1 {
                for &v in &e.x_vertices() {
                    covers.push(
                        index[&HomElement {
                            x: e.x & !(1 << v),
                            y: e.y,
                        }],
                    );
                }
            }
            if e.y.count_ones() > 1 {
                for &v in &e.y_vertices() {
                    covers.push(
                        index[&HomElement {
                            x: e.x,
                            y: e.y & !(1 << v),
                        }],
                    );
                }
            }
            covers.sort();
            covers
        })
        .collect();
    let poset = SignedPoset {
        elements,
        nu,
        lower_covers,
    };
    poset.check_invariants()?;
    Ok(poset)
}
