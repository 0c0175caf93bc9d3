//! DIMACS CNF export of the k-coloring decision problem.

use crate::graph::Graph;
use std::fmt::Write;

/// A CNF formula over variables `1..=nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    nvars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(nvars: usize, clauses: Vec<Vec<i32>>) -> Self {
        for clause in &clauses {
            for &lit in clause {
                assert!(lit != 0 && lit.unsigned_abs() as usize <= nvars);
            }
        }
        CnfFormula { nvars, clauses }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// DIMACS text: `p cnf V C` header, clauses zero-terminated.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p cnf {} {}", self.nvars, self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// Exhaustive satisfiability check for small formulas (test oracle and
    /// cross-check channel; caller must keep `nvars` small).
    pub fn brute_force_satisfiable(&self) -> Option<Vec<bool>> {
        assert!(self.nvars <= 24, "brute-force SAT limited to 24 variables");
        for bits in 0u64..1 << self.nvars {
            let val = |lit: i32| -> bool {
                let v = bits >> (lit.unsigned_abs() - 1) & 1 == 1;
                if lit > 0 {
                    v
                } else {
                    !v
                }
            };
            if self.clauses.iter().all(|c| c.iter().any(|&l| val(l))) {
                return Some((0..self.nvars).map(|i| bits >> i & 1 == 1).collect());
            }
        }
        None
    }
}

/// Standard encoding of "G is k-colorable": variable `v*k + c + 1` says
/// vertex `v` takes color `c`; one at-least-one clause per vertex and one
/// conflict clause per edge and color. Satisfiable iff a proper k-coloring
/// exists.
pub fn export_kcoloring_cnf(g: &Graph, k: usize) -> CnfFormula {
    assert!(k >= 1, "export needs k >= 1");
    let n = g.vertex_count();
    let var = |v: usize, c: usize| (v * k + c + 1) as i32;
    let mut clauses = Vec::new();
    for v in 0..n {
        clauses.push((0..k).map(|c| var(v, c)).collect());
    }
    for (u, v) in g.edges() {
        for c in 0..k {
            clauses.push(vec![-var(u, c), -var(v, c)]);
        }
    }
    CnfFormula::new(n * k, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_empty};
    use crate::solvers::k_colorable;

    #[test]
    fn k2_one_color() {
        let f = export_kcoloring_cnf(&gen_complete(2).unwrap(), 1);
        assert_eq!(f.nvars(), 2);
        assert_eq!(f.clauses().len(), 3);
        assert!(f.brute_force_satisfiable().is_none());
    }

    #[test]
    fn single_vertex() {
        let f = export_kcoloring_cnf(&gen_empty(1).unwrap(), 1);
        assert!(f.brute_force_satisfiable().is_some());
    }

    #[test]
    fn c5_three_colors() {
        let c5 = gen_cycle(5).unwrap();
        let f = export_kcoloring_cnf(&c5, 3);
        assert_eq!(f.nvars(), 15);
        assert!(f.brute_force_satisfiable().is_some());
        assert!(k_colorable(&c5, 3).is_some());
        let f2 = export_kcoloring_cnf(&c5, 2);
        assert_eq!(f2.brute_force_satisfiable().is_some(), false);
        assert!(k_colorable(&c5, 2).is_none());
    }

    #[test]
    fn dimacs_format_exact() {
        let f = export_kcoloring_cnf(&gen_complete(2).unwrap(), 1);
        assert_eq!(f.to_dimacs(), "p cnf 2 3\n1 0\n2 0\n-1 -2 0\n");
    }

    #[test]
    fn agrees_with_coloring_engine() {
        for n in 2..=4usize {
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
                for k in 1..=3usize {
                    if n * k > 12 {
                        continue;
                    }
                    let f = export_kcoloring_cnf(&g, k);
                    assert_eq!(
                        f.brute_force_satisfiable().is_some(),
                        k_colorable(&g, k).is_some()
                    );
                }
            }
        }
    }
}
