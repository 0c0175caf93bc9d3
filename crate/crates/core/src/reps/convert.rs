//! The two constructive directions connecting representing matrices of the
//! complement with independent representations.

use super::{verify_independent_rep, RepError, RepresentingMatrix, VectorAssignment};
use crate::algebra::{bilinear, kernel_basis, ExactMatrix};
use crate::graph::Graph;

/// From a matrix representing the complement of `g` to an independent
/// representation of `g` of dimension `rank(A)`: restrict to a maximal set
/// of linearly independent columns and read off the rows.
pub fn matrix_to_indrep(g: &Graph, a: &RepresentingMatrix) -> Result<VectorAssignment, RepError> {
    if a.target != g.complement() {
        return Err(RepError::TargetMismatch);
    }
    let mut work = a.matrix.clone();
    let pivots = work.rref();
    let b = a.matrix.submatrix_columns(&pivots);
    let vectors: Vec<_> = (0..b.nrows()).map(|v| b.row(v)).collect();
    let rep = VectorAssignment::from_vectors(a.field, pivots.len(), vectors);
    let assignment = rep.to_matroid_assignment(g)?;
    let (ok, violations) = verify_independent_rep(g, &assignment);
    if !ok {
        return Err(RepError::Internal(format!(
            "row construction failed to be independent: {violations:?}"
        )));
    }
    Ok(rep)
}

/// From an independent representation of `g` over `F^s` to a matrix of rank
/// at most `s` representing the complement of `g`: column `v` is `B y_v`
/// where `B` stacks the representation rows and `y_v` annihilates the
/// neighbor rows of `v` but not row `v` itself.
pub fn indrep_to_matrix(g: &Graph, r: &VectorAssignment) -> Result<RepresentingMatrix, RepError> {
    let assignment = r.to_matroid_assignment(g)?;
    let (ok, violations) = verify_independent_rep(g, &assignment);
    if !ok {
        return Err(RepError::NotIndependent(format!("{violations:?}")));
    }
    let n = g.vertex_count();
    let b = ExactMatrix::from_rows(r.vectors())?;
    let mut out = ExactMatrix::zero(r.field, n, n);
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&u| u as usize).collect();
        let d = b.submatrix_rows(&nbrs);
        let y = kernel_basis(&d)
            .into_iter()
            .find(|y| {
                bilinear(r.vector(v), y)
                    .map(|s| !s.is_zero())
                    .unwrap_or(false)
            })
            .ok_or_else(|| {
                RepError::Internal(format!(
                    "no kernel vector separates vertex {} from its neighborhood",
                    g.vertex_id(v)
                ))
            })?;
        let col = b.mul_vector(&y)?;
        for u in 0..n {
            *out.at_mut(u, v) = col.entries()[u].clone();
        }
    }
    let witness = RepresentingMatrix::new(g.complement(), out)
        .map_err(|e| RepError::Internal(format!("constructed matrix is invalid: {e}")))?;
    if witness.rank() > r.dim {
        return Err(RepError::Internal(format!(
            "constructed matrix has rank {} > dimension {}",
            witness.rank(),
            r.dim
        )));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactVector, FieldSpec};
    use crate::graph::{gen_complete, gen_cycle, gen_empty};
    use crate::reps::{c5_rational_vectors, minrank_bruteforce};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn identity_matrix_gives_basis_rows() {
        // The identity represents the empty graph, whose complement is K_n;
        // the construction recovers the standard basis.
        let kn = gen_complete(3).unwrap();
        let f = gf(2);
        let ident = RepresentingMatrix::new(gen_empty(3).unwrap(), ExactMatrix::identity(f, 3))
            .unwrap();
        let rep = matrix_to_indrep(&kn, &ident).unwrap();
        assert_eq!(rep.dim, 3);
        for v in 0..3 {
            assert_eq!(
                rep.vector(v),
                &ExactVector::from_i64(f, &[(v == 0) as i64, (v == 1) as i64, (v == 2) as i64])
            );
        }
    }

    #[test]
    fn all_ones_matrix_collapses() {
        // The all-ones matrix represents K3; the complement graph is empty
        // and every vertex receives the same 1-dimensional row.
        let e3 = gen_empty(3).unwrap();
        let f = gf(2);
        let ones = ExactMatrix::from_i64(f, &[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let rep_matrix = RepresentingMatrix::new(gen_complete(3).unwrap(), ones).unwrap();
        let rep = matrix_to_indrep(&e3, &rep_matrix).unwrap();
        assert_eq!(rep.dim, 1);
        assert!(rep.vectors().iter().all(|v| v == rep.vector(0)));
    }

    #[test]
    fn indrep_to_matrix_on_shared_vector() {
        // Both vertices of the empty graph on one vector: the output matrix
        // represents K2 with rank 1.
        let e2 = gen_empty(2).unwrap();
        let f = gf(2);
        let one = ExactVector::from_i64(f, &[1]);
        let rep = VectorAssignment::from_vectors(f, 1, vec![one.clone(), one]);
        let m = indrep_to_matrix(&e2, &rep).unwrap();
        assert_eq!(m.target, gen_complete(2).unwrap());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn indrep_to_matrix_on_basis() {
        let k2 = gen_complete(2).unwrap();
        let f = gf(3);
        let rep = VectorAssignment::from_vectors(
            f,
            2,
            vec![
                ExactVector::from_i64(f, &[1, 0]),
                ExactVector::from_i64(f, &[0, 1]),
            ],
        );
        let m = indrep_to_matrix(&k2, &rep).unwrap();
        assert_eq!(m.target, gen_empty(2).unwrap());
        assert!(m.rank() <= 2);
    }

    #[test]
    fn c5_roundtrip_through_both_directions() {
        // minrank witness for C5 over GF(2) -> independent rep of the
        // complement -> matrix again, with ranks preserved.
        let c5 = gen_cycle(5).unwrap();
        let co = c5.complement();
        let (r, witness) = minrank_bruteforce(&c5, gf(2)).unwrap();
        assert_eq!(r, 3);
        // witness represents C5 = complement(co), so it converts to an
        // independent representation of co.
        let rep = matrix_to_indrep(&co, &witness).unwrap();
        assert_eq!(rep.dim, r);
        let back = indrep_to_matrix(&co, &rep).unwrap();
        assert_eq!(back.target, c5);
        assert!(back.rank() <= r);
    }

    #[test]
    fn rational_c5_vectors_convert() {
        let c5 = gen_cycle(5).unwrap();
        let rep = VectorAssignment::from_vectors(FieldSpec::rationals(), 3, c5_rational_vectors());
        let m = indrep_to_matrix(&c5, &rep).unwrap();
        assert_eq!(m.target, c5.complement());
        assert!(m.rank() <= 3);
    }

    #[test]
    fn target_mismatch_rejected() {
        let k3 = gen_complete(3).unwrap();
        let f = gf(2);
        let ident =
            RepresentingMatrix::new(gen_empty(3).unwrap(), ExactMatrix::identity(f, 3)).unwrap();
        // complement(K3) is empty, matching; complement(empty) is K3, not
        // matching the identity's empty target.
        assert!(matrix_to_indrep(&k3, &ident).is_ok());
        let e3 = gen_empty(3).unwrap();
        assert!(matches!(
            matrix_to_indrep(&e3, &ident),
            Err(RepError::TargetMismatch)
        ));
    }

    #[test]
    fn dependent_input_rejected() {
        let k2 = gen_complete(2).unwrap();
        let f = gf(2);
        let one = ExactVector::from_i64(f, &[1]);
        let rep = VectorAssignment::from_vectors(f, 1, vec![one.clone(), one]);
        assert!(matches!(
            indrep_to_matrix(&k2, &rep),
            Err(RepError::NotIndependent(_))
        ));
    }
}
