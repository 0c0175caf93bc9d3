//! The star condition on independent representations and the local
//! chromatic number.

use super::{verify_independent_rep, MatroidAssignment, RepError};
use crate::graph::Graph;
use crate::solvers::Coloring;
use crate::topo::build_hom_poset;

/// A complete bipartite pair whose side spans overshoot the matroid rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarViolation {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub rank_x: usize,
    pub rank_y: usize,
    pub rank_m: usize,
}

#[derive(Debug, Clone)]
pub struct StarCheck {
    pub satisfied: bool,
    pub violation: Option<StarViolation>,
    /// Whether the assignment is an independent representation at all
    /// (reported alongside, since the condition is usually studied on
    /// independent representations).
    pub independent_rep: bool,
}

/// Check that `rank S(X) + rank S(Y) <= rank M` for every complete bipartite
/// pair `(X, Y)` of the graph; with `balanced_only`, restrict to pairs whose
/// side cardinalities differ by at most one.
pub fn check_star_condition(
    g: &Graph,
    a: &MatroidAssignment,
    balanced_only: bool,
    poset_cap: usize,
) -> Result<StarCheck, RepError> {
    let poset = build_hom_poset(g, poset_cap)?;
    let rank_m = a.oracle.rank_full();
    let independent_rep = verify_independent_rep(g, a).0;
    for i in 0..poset.len() {
        let elem = poset.element(i);
        let xs: Vec<usize> = mask_vertices(elem.x);
        let ys: Vec<usize> = mask_vertices(elem.y);
        if balanced_only && xs.len().abs_diff(ys.len()) > 1 {
            continue;
        }
        let rank_x = a.span_rank(xs.iter().copied());
        let rank_y = a.span_rank(ys.iter().copied());
        if rank_x + rank_y > rank_m {
            let ids = |set: &[usize]| set.iter().map(|&v| g.vertex_id(v).to_string()).collect();
            return Ok(StarCheck {
                satisfied: false,
                violation: Some(StarViolation {
                    x: ids(&xs),
                    y: ids(&ys),
                    rank_x,
                    rank_y,
                    rank_m,
                }),
                independent_rep,
            });
        }
    }
    Ok(StarCheck {
        satisfied: true,
        violation: None,
        independent_rep,
    })
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Minimum over proper colorings with at most `m_max` colors of the largest
/// number of distinct colors in a closed neighborhood, with a witness
/// coloring. Exact search over canonical colorings; colors beyond the
/// chromatic number only ever help, so `m_max` bounds the palette.
pub fn local_chromatic(g: &Graph, m_max: usize) -> Result<(usize, Coloring), RepError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((
            0,
            crate::solvers::k_colorable(g, 0).expect("empty graph trivially colorable"),
        ));
    }
    if m_max == 0 || m_max > 64 {
        return Err(RepError::Internal(format!(
            "local chromatic search needs 1 <= m_max <= 64, got {m_max}"
        )));
    }
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut colors = vec![0u32; n];
    // closed[v] = bitmask of colors currently present in N[v]
    let mut closed = vec![0u64; n];
    search(g, m_max, 0, 0, &mut colors, &mut closed, &mut best);
    let Some((psi, witness)) = best else {
        return Err(RepError::NoColoring(m_max));
    };
    let coloring = Coloring::new(m_max, witness);
    assert!(coloring.verify(g));
    Ok((psi, coloring))
}

fn search(
    g: &Graph,
    m_max: usize,
    v: usize,
    used: usize,
    colors: &mut Vec<u32>,
    closed: &mut Vec<u64>,
    best: &mut Option<(usize, Vec<u32>)>,
) {
    let n = g.vertex_count();
    // Colors already committed around some closed neighborhood can only
    // grow; prune against the incumbent.
    let current_worst = closed.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    if let Some((psi, _)) = best {
        if current_worst >= *psi {
            return;
        }
    }
    if v == n {
        let value = current_worst;
        if best.as_ref().map_or(true, |(psi, _)| value < *psi) {
            *best = Some((value, colors.clone()));
        }
        return;
    }
    // Canonical color order: previously used colors plus one fresh color.
    let limit = (used + 1).min(m_max);
    'colors: for c in 1..=limit as u32 {
        for &u in g.neighbors(v) {
            if colors[u as usize] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        let bit = 1u64 << (c - 1);
        let mut touched = vec![v];
        touched.extend(g.neighbors(v).iter().map(|&u| u as usize));
        let saved: Vec<u64> = touched.iter().map(|&u| closed[u]).collect();
        for &u in &touched {
            closed[u] |= bit;
        }
        search(g, m_max, v + 1, used.max(c as usize), colors, closed, best);
        for (&u, &old) in touched.iter().zip(&saved) {
            closed[u] = old;
        }
        colors[v] = 0;
    }
}
