//! The integer sign map on the complete bipartite pair poset induced by an
//! independent representation, and the alternating-chain dynamic program.

use super::poset::{mask_bits, SignedPoset};
use super::TopoError;
use crate::graph::Graph;
use crate::reps::{verify_independent_rep, MatroidAssignment};
use std::collections::HashMap;

/// A map from poset elements to nonzero integers with the three properties
/// the Fan lemma needs: it negates under the involution, its magnitude is
/// monotone along the order, and opposite values never sit on a comparable
/// pair. All three are machine-checked at construction.
#[derive(Debug, Clone)]
pub struct PhiMap {
    values: Vec<i64>,
}

impl PhiMap {
    pub fn value(&self, i: usize) -> i64 {
        self.values[i]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Build the sign map: an element `(X, Y)` gets `±(rk S(X) + rk S(Y))`,
/// positive exactly when the span of the X side precedes the span of the Y
/// side in a fixed total order refining rank. Spans are compared by
/// `(rank, trace)` where the trace is the sorted list of vertices whose
/// element falls inside the span; for an independent representation the two
/// sides always differ (an X vertex is adjacent to all of Y, so its element
/// escapes the Y span), making the map well defined.
pub fn build_phi(
    g: &Graph,
    a: &MatroidAssignment,
    poset: &SignedPoset,
) -> Result<PhiMap, TopoError> {
    let (independent, violations) = verify_independent_rep(g, a);
    if !independent {
        return Err(TopoError::NotIndependentRep(format!("{violations:?}")));
    }
    let n = g.vertex_count();
    let mut cache: HashMap<u64, (usize, Vec<u16>)> = HashMap::new();
    let mut key = |mask: u64| -> (usize, Vec<u16>) {
        if let Some(k) = cache.get(&mask) {
            return k.clone();
        }
        let base_elems = a.elements_of(mask_bits(mask));
        let rank = a.oracle.rank(&base_elems);
        let mut trace = Vec::new();
        for v in 0..n {
            let mut with = base_elems.clone();
            with.push(a.element(v));
            with.sort();
            with.dedup();
            if a.oracle.rank(&with) == rank {
                trace.push(v as u16);
            }
        }
        let k = (rank, trace);
        cache.insert(mask, k.clone());
        k
    };
    let mut values = Vec::with_capacity(poset.len());
    for i in 0..poset.len() {
        let e = poset.element(i);
        let key_x = key(e.x);
        let key_y = key(e.y);
        if key_x == key_y {
            return Err(TopoError::Internal(format!(
                "span comparison keys coincide on element {i}"
            )));
        }
        let magnitude = (key_x.0 + key_y.0) as i64;
        values.push(if key_x < key_y { magnitude } else { -magnitude });
    }
    let phi = PhiMap { values };
    check_fan_hypotheses(poset, &phi)?;
    Ok(phi)
}

/// The three hypotheses of the Fan lemma, checked directly.
pub fn check_fan_hypotheses(poset: &SignedPoset, phi: &PhiMap) -> Result<(), TopoError> {
    for i in 0..poset.len() {
        if phi.values[i] == 0 {
            return Err(TopoError::Internal(format!("phi vanishes on {i}")));
        }
        if phi.values[poset.nu(i)] != -phi.values[i] {
            return Err(TopoError::Internal(format!(
                "phi does not negate under the involution at {i}"
            )));
        }
        for &p in poset.lower_covers(i) {
            if phi.values[p as usize].abs() > phi.values[i].abs() {
                return Err(TopoError::Internal(format!(
                    "phi magnitude drops along cover {p} < {i}"
                )));
            }
        }
    }
    // Opposite values on comparable pairs: checked on all ordered pairs.
    for p in 0..poset.len() {
        for q in p + 1..poset.len() {
            if (poset.lt(p, q) || poset.lt(q, p)) && phi.values[p] == -phi.values[q] {
                return Err(TopoError::Internal(format!(
                    "opposite phi values on the comparable pair {p}, {q}"
                )));
            }
        }
    }
    Ok(())
}

/// A chain with strictly increasing magnitudes and alternating signs,
/// starting negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub indices: Vec<usize>,
    pub values: Vec<i64>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn verify(&self, poset: &SignedPoset, phi: &PhiMap) -> bool {
        for (k, &i) in self.indices.iter().enumerate() {
            if phi.value(i) != self.values[k] {
                return false;
            }
            // Signs alternate starting negative: position k has sign (-1)^{k+1}.
            let expect_negative = k % 2 == 0;
            if (self.values[k] < 0) != expect_negative {
                return false;
            }
            if k > 0 {
                if !poset.lt(self.indices[k - 1], i) {
                    return false;
                }
                if self.values[k - 1].abs() >= self.values[k].abs() {
                    return false;
                }
            }
        }
        true
    }
}

/// Longest chain with strictly increasing `|phi|` and alternating signs
/// starting negative, by dynamic programming over the order relation. The
/// sign of an element fixes the parity of its position in any such chain,
/// so one length per element suffices.
pub fn longest_alternating_chain(poset: &SignedPoset, phi: &PhiMap) -> Chain {
    let n = poset.len();
    let mut len = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut best = usize::MAX;
    for q in 0..n {
        if phi.value(q) < 0 {
            len[q] = 1;
        }
        for p in 0..q {
            if len[p] == 0 {
                continue;
            }
            if !poset.lt(p, q) {
                continue;
            }
            if phi.value(p).abs() >= phi.value(q).abs() {
                continue;
            }
            if phi.value(p).signum() == phi.value(q).signum() {
                continue;
            }
            if len[p] + 1 > len[q] {
                len[q] = len[p] + 1;
                parent[q] = p;
            }
        }
        if len[q] > 0 && (best == usize::MAX || len[q] > len[best]) {
            best = q;
        }
    }
    if best == usize::MAX {
        return Chain {
            indices: Vec::new(),
            values: Vec::new(),
        };
    }
    let mut indices = Vec::new();
    let mut cur = best;
    loop {
        indices.push(cur);
        if parent[cur] == usize::MAX {
            break;
        }
        cur = parent[cur];
    }
    indices.reverse();
    let values = indices.iter().map(|&i| phi.value(i)).collect();
    let chain = Chain { indices, values };
    debug_assert!(chain.verify(poset, phi));
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle};
    use crate::reps::{c5_rational_vectors, coloring_as_uniform_assignment, VectorAssignment};
    use crate::solvers::k_colorable;
    use crate::topo::{build_hom_poset, xind, DEFAULT_POSET_CAP};

    #[test]
    fn k2_phi_from_two_coloring() {
        let k2 = gen_complete(2).unwrap();
        let coloring = k_colorable(&k2, 2).unwrap();
        let a = coloring_as_uniform_assignment(&k2, &coloring).unwrap();
        let poset = build_hom_poset(&k2, DEFAULT_POSET_CAP).unwrap();
        let phi = build_phi(&k2, &a, &poset).unwrap();
        // Both elements carry rank sum 1 + 1 = 2, with opposite signs.
        assert_eq!(phi.value(0).abs(), 2);
        assert_eq!(phi.value(poset.nu(0)), -phi.value(0));
        let chain = longest_alternating_chain(&poset, &phi);
        assert_eq!(chain.len(), 1);
        assert_eq!(chain.values[0], -2);
    }

    #[test]
    fn c5_phi_from_rational_vectors() {
        let c5 = gen_cycle(5).unwrap();
        let rep = VectorAssignment::from_vectors(
            crate::algebra::FieldSpec::rationals(),
            3,
            c5_rational_vectors(),
        );
        let a = rep.to_matroid_assignment(&c5).unwrap();
        let poset = build_hom_poset(&c5, DEFAULT_POSET_CAP).unwrap();
        let phi = build_phi(&c5, &a, &poset).unwrap();
        // A star pair (one vertex versus its two neighbors) has span ranks
        // 1 and 2.
        for i in 0..poset.len() {
            let e = poset.element(i);
            if e.size() == 3 {
                assert_eq!(phi.value(i).abs(), 3);
            } else {
                assert_eq!(phi.value(i).abs(), 2);
            }
        }
        let chain = longest_alternating_chain(&poset, &phi);
        assert!(chain.verify(&poset, &phi));
        // The Fan lemma floor: chain length at least xind + 1 = 2.
        let x = xind(&poset);
        assert_eq!(x, 1);
        assert!(chain.len() >= (x + 1) as usize);
    }

    #[test]
    fn empty_poset_chain() {
        let g = crate::graph::gen_empty(2).unwrap();
        let poset = build_hom_poset(&g, DEFAULT_POSET_CAP).unwrap();
        let phi = PhiMap { values: vec![] };
        let chain = longest_alternating_chain(&poset, &phi);
        assert!(chain.is_empty());
    }

    #[test]
    fn dependent_assignment_rejected() {
        let k2 = gen_complete(2).unwrap();
        let oracle = crate::matroid::uniform_matroid(2, 2).unwrap();
        let a = crate::reps::MatroidAssignment::new(&k2, std::sync::Arc::new(oracle), vec![0, 0])
            .unwrap();
        let poset = build_hom_poset(&k2, DEFAULT_POSET_CAP).unwrap();
        assert!(matches!(
            build_phi(&k2, &a, &poset),
            Err(TopoError::NotIndependentRep(_))
        ));
    }
}
