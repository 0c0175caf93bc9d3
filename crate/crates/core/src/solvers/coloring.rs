//! Exact graph coloring: DSATUR-style branch and bound with clique
//! preseeding, fresh-color symmetry breaking, and independence-capacity
//! pruning.

use crate::bits::BitSet;
use crate::graph::Graph;
use std::collections::BTreeMap;

/// A total proper coloring with colors in `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub palette: usize,
    colors: Vec<u32>, // by vertex index, values in 1..=palette
}

impl Coloring {
    pub fn new(palette: usize, colors: Vec<u32>) -> Self {
        Coloring { palette, colors }
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn distinct_count(&self) -> usize {
        let mut seen = vec![false; self.palette + 1];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    /// Independent validity check: total, in palette, proper.
    pub fn verify(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self
                .colors
                .iter()
                .all(|&c| c >= 1 && c as usize <= self.palette)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn by_vertex_id(&self, g: &Graph) -> BTreeMap<String, u32> {
        g.vertices()
            .iter()
            .zip(&self.colors)
            .map(|(v, &c)| (v.clone(), c))
            .collect()
    }
}

struct Searcher {
    adj: Vec<BitSet>,
    n: usize,
    k: usize,
    alpha: usize,
    colors: Vec<u32>,
    class_size: Vec<usize>,
    /// Per color class: vertices adjacent to at least one member.
    forbidden: Vec<BitSet>,
    uncolored: BitSet,
    used: usize,
}

impl Searcher {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c as u32 + 1;
        self.class_size[c] += 1;
        self.uncolored.remove(v);
        self.forbidden[c].union_with(&self.adj[v]);
        self.used = self.used.max(c + 1);
    }

    /// Capacity prune: every color class is an independent set, so it can
    /// never exceed the independence number, and it can only grow by
    /// vertices not adjacent to any current member.
    fn capacity_ok(&self) -> bool {
        let remaining = self.uncolored.count();
        let mut reachable = 0usize;
        for c in 0..self.k {
            let ext = if self.class_size[c] == 0 {
                remaining
            } else {
                let mut free = self.uncolored.clone();
                free.subtract(&self.forbidden[c]);
                free.count()
            };
            reachable += (self.class_size[c] + ext).min(self.alpha);
            if reachable >= self.n {
                return true;
            }
        }
        false
    }

    fn pick_branch_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None; // (sat, deg, v)
        for v in self.uncolored.iter() {
            let sat = (0..self.used)
                .filter(|&c| self.forbidden[c].contains(v))
                .count();
            let deg = self.adj[v].count();
            let cand = (sat, deg, v);
            best = Some(match best {
                None => cand,
                Some(b) => {
                    // Highest saturation, then highest degree, then lowest id.
                    if (cand.0, cand.1, std::cmp::Reverse(cand.2))
                        > (b.0, b.1, std::cmp::Reverse(b.2))
                    {
                        cand
                    } else {
                        b
                    }
                }
            });
        }
        best.map(|(_, _, v)| v)
    }

    fn search(&mut self) -> bool {
        let Some(v) = self.pick_branch_vertex() else {
            return true;
        };
        if !self.capacity_ok() {
            return false;
        }
        // Try existing classes plus at most one fresh class: fresh classes
        // are interchangeable, so exploring a single one is exhaustive.
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[c].contains(v) {
                continue;
            }
            let saved_sizes = self.class_size[c];
            let saved_forbidden = self.forbidden[c].clone();
            let saved_used = self.used;
            self.assign(v, c);
            if self.search() {
                return true;
            }
            self.colors[v] = 0;
            self.class_size[c] = saved_sizes;
            self.forbidden[c] = saved_forbidden;
            self.uncolored.insert(v);
            self.used = saved_used;
        }
        false
    }
}

/// A proper `k`-coloring if one exists. Complete search; `None` is a proof
/// of non-colorability.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring {
            palette: k,
            colors: Vec::new(),
        });
    }
    if k == 0 {
        return None;
    }
    let (omega, clique) = super::max_clique(g);
    if omega > k {
        return None;
    }
    let (alpha, _) = super::max_clique(&g.complement());
    if alpha * k < n {
        return None;
    }
    if k >= n {
        // Rainbow coloring is always proper.
        let coloring = Coloring {
            palette: k,
            colors: (1..=n as u32).collect(),
        };
        assert!(coloring.verify(g));
        return Some(coloring);
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
    let mut uncolored = BitSet::new(n);
    for v in 0..n {
        uncolored.insert(v);
    }
    let mut s = Searcher {
        adj,
        n,
        k,
        alpha,
        colors: vec![0; n],
        class_size: vec![0; k],
        forbidden: vec![BitSet::new(n); k],
        uncolored,
        used: 0,
    };
    // Preseed a maximum clique with distinct colors to break symmetry.
    for (c, &v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    if !s.search() {
        return None;
    }
    let coloring = Coloring {
        palette: k,
        colors: s.colors,
    };
    assert!(coloring.verify(g), "coloring engine produced a bad witness");
    Some(coloring)
}

/// Exact chromatic number with witness, growing `k` upward from the
/// clique/capacity lower bound.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.vertex_count();
    if n == 0 {
        return (
            0,
            Coloring {
                palette: 0,
                colors: Vec::new(),
            },
        );
    }
    let (omega, _) = super::max_clique(g);
    let (alpha, _) = super::max_clique(&g.complement());
    let mut k = omega.max(n.div_ceil(alpha));
    loop {
        if let Some(coloring) = k_colorable(g, k) {
            return (k, coloring);
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cycle, gen_empty, gen_h};

    #[test]
    fn odd_cycle() {
        let c5 = gen_cycle(5).unwrap();
        assert!(k_colorable(&c5, 2).is_none());
        let w = k_colorable(&c5, 3).unwrap();
        assert!(w.verify(&c5));
    }

    #[test]
    fn chromatic_basics() {
        let e3 = gen_empty(3).unwrap();
        let (chi, w) = chromatic_number(&e3);
        assert_eq!(chi, 1);
        assert!(w.verify(&e3));

        let (chi, w) = chromatic_number(&gen_cycle(6).unwrap());
        assert_eq!(chi, 2);
        assert_eq!(w.distinct_count(), 2);
    }

    #[test]
    fn h_small_chromatic() {
        for (t, expect) in [(1usize, 1usize), (2, 2), (3, 3), (4, 4)] {
            let h = gen_h(t).unwrap();
            let (chi, w) = chromatic_number(&h);
            assert_eq!(chi, expect, "H_{t}");
            assert!(w.verify(&h));
        }
    }

    #[test]
    fn h5_chromatic() {
        let h5 = gen_h(5).unwrap();
        let (chi, w) = chromatic_number(&h5);
        assert_eq!(chi, 5);
        assert!(w.verify(&h5));
    }

    #[test]
    fn zero_palette() {
        let g = gen_empty(1).unwrap();
        assert!(k_colorable(&g, 0).is_none());
    }
}
