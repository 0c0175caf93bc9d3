//! Monotone 3SAT, the gadget reduction to colorful complete bipartite
//! subgraph detection, witness lifting in both directions, the dummy-vertex
//! family for the balanced variant, and seeded equivalence fuzzing.

use crate::graph::{augment_dummies, ColoredGraph, Graph};
use crate::topo::BipartiteWitness;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HardnessError {
    #[error("malformed DIMACS: {0}")]
    Parse(String),
    #[error("clause {0} has {1} literals, expected 3")]
    WrongArity(usize, usize),
    #[error("clause {0} mixes polarities")]
    NotMonotone(usize),
    #[error("brute force limited to 24 variables, instance has {0}")]
    TooManyVariables(usize),
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("assignment does not satisfy the instance")]
    Unsatisfying,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

/// A monotone 3SAT instance: every clause has exactly three (possibly
/// repeated) variables, all of one polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotone3SatInstance {
    pub nvars: usize,
    pub clauses: Vec<(Polarity, [usize; 3])>, // 1-based variable indices
}

/// A total truth assignment, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatAssignment {
    values: Vec<bool>,
}

impl SatAssignment {
    pub fn new(values: Vec<bool>) -> Self {
        SatAssignment { values }
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn satisfies(&self, instance: &Monotone3SatInstance) -> bool {
        instance.clauses.iter().all(|(pol, vars)| {
            vars.iter().any(|&v| match pol {
                Polarity::Positive => self.value(v),
                Polarity::Negative => !self.value(v),
            })
        })
    }
}

/// Parse DIMACS CNF text into a monotone instance. Every clause must have
/// exactly three literals of a single polarity.
pub fn parse_monotone_3sat(text: &str) -> Result<Monotone3SatInstance, HardnessError> {
    let mut nvars: Option<usize> = None;
    let mut declared_clauses = 0usize;
    let mut literals: Vec<i64> = Vec::new();
    let mut clauses = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "cnf" {
                return Err(HardnessError::Parse(format!("bad header {line:?}")));
            }
            nvars = Some(
                parts[1]
                    .parse()
                    .map_err(|_| HardnessError::Parse(format!("bad variable count {line:?}")))?,
            );
            declared_clauses = parts[2]
                .parse()
                .map_err(|_| HardnessError::Parse(format!("bad clause count {line:?}")))?;
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| HardnessError::Parse(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                finish_clause(&mut literals, &mut clauses, nvars)?;
            } else {
                literals.push(lit);
            }
        }
    }
    if !literals.is_empty() {
        finish_clause(&mut literals, &mut clauses, nvars)?;
    }
    let nvars = nvars.ok_or_else(|| HardnessError::Parse("missing p cnf header".into()))?;
    if declared_clauses != clauses.len() {
        return Err(HardnessError::Parse(format!(
            "header declares {declared_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    Ok(Monotone3SatInstance { nvars, clauses })
}

fn finish_clause(
    literals: &mut Vec<i64>,
    clauses: &mut Vec<(Polarity, [usize; 3])>,
    nvars: Option<usize>,
) -> Result<(), HardnessError> {
    let clause_no = clauses.len() + 1;
    let lits = std::mem::take(literals);
    if lits.len() != 3 {
        return Err(HardnessError::WrongArity(clause_no, lits.len()));
    }
    let positive = lits[0] > 0;
    if lits.iter().any(|&l| (l > 0) != positive) {
        return Err(HardnessError::NotMonotone(clause_no));
    }
    let mut vars = [0usize; 3];
    for (slot, &l) in vars.iter_mut().zip(&lits) {
        let v = l.unsigned_abs() as usize;
        if let Some(n) = nvars {
            if v > n {
                return Err(HardnessError::Parse(format!(
                    "literal {l} exceeds declared variable count {n}"
                )));
            }
        }
        *slot = v;
    }
    clauses.push((
        if positive {
            Polarity::Positive
        } else {
            Polarity::Negative
        },
        vars,
    ));
    Ok(())
}

/// Render back to DIMACS.
pub fn to_dimacs(instance: &Monotone3SatInstance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", instance.nvars, instance.clauses.len()).unwrap();
    for (pol, vars) in &instance.clauses {
        let sign = match pol {
            Polarity::Positive => 1i64,
            Polarity::Negative => -1,
        };
        writeln!(
            out,
            "{} {} {} 0",
            sign * vars[0] as i64,
            sign * vars[1] as i64,
            sign * vars[2] as i64
        )
        .unwrap();
    }
    out
}

/// Satisfying assignment by full enumeration (independent oracle for the
/// reduction fuzz); variables beyond 24 are refused.
pub fn brute_force_sat(
    instance: &Monotone3SatInstance,
) -> Result<Option<SatAssignment>, HardnessError> {
    if instance.nvars > 24 {
        return Err(HardnessError::TooManyVariables(instance.nvars));
    }
    for bits in 0u64..1 << instance.nvars {
        let assignment = SatAssignment::new(
            (0..instance.nvars).map(|i| bits >> i & 1 == 1).collect(),
        );
        if assignment.satisfies(instance) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

fn gadget_vertex(positive: bool, clause: usize, var: usize) -> String {
    format!("{}{}_{}", if positive { "x" } else { "y" }, clause, var)
}

/// The gadget graph: one vertex per (clause, variable) incidence, positive
/// incidences on one side and negative on the other, edges between cross
/// pairs with distinct variables, colored by clause index. The coloring is
/// proper because a clause's incidences share a side.
pub fn reduce_3sat_to_colorful(instance: &Monotone3SatInstance) -> ColoredGraph {
    let mut x_side: Vec<(usize, usize)> = Vec::new();
    let mut y_side: Vec<(usize, usize)> = Vec::new();
    for (ci, (pol, vars)) in instance.clauses.iter().enumerate() {
        let side = match pol {
            Polarity::Positive => &mut x_side,
            Polarity::Negative => &mut y_side,
        };
        for &v in vars {
            if !side.contains(&(ci + 1, v)) {
                side.push((ci + 1, v));
            }
        }
    }
    let mut verts = Vec::new();
    let mut colors = BTreeMap::new();
    for &(c, v) in &x_side {
        let id = gadget_vertex(true, c, v);
        colors.insert(id.clone(), c as u32);
        verts.push(id);
    }
    for &(c, v) in &y_side {
        let id = gadget_vertex(false, c, v);
        colors.insert(id.clone(), c as u32);
        verts.push(id);
    }
    let mut edges = Vec::new();
    for &(ci, vi) in &x_side {
        for &(cj, vj) in &y_side {
            if vi != vj {
                edges.push((gadget_vertex(true, ci, vi), gadget_vertex(false, cj, vj)));
            }
        }
    }
    let graph = Graph::new(verts, &edges).expect("gadget ids are unique");
    ColoredGraph::new(graph, &colors).expect("every gadget vertex is colored")
}

/// Decision mode for colorful complete bipartite subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorfulMode {
    /// A complete bipartite subgraph carrying every color of the graph
    /// (one side may be empty).
    AllColors,
    /// A complete bipartite subgraph with `floor(t/2)` colors on one side
    /// and `ceil(t/2)` distinct colors on the other.
    Balanced(usize),
}

/// Exact decision by backtracking over one (vertex, side) choice per
/// selected color; a witness restricted to one vertex per color stays
/// complete bipartite, so this search is complete. The coloring must be
/// proper.
pub fn colorful_complete_bipartite_exists(
    colored: &ColoredGraph,
    mode: ColorfulMode,
) -> Result<Option<BipartiteWitness>, HardnessError> {
    if !colored.is_proper() {
        return Err(HardnessError::ImproperColoring);
    }
    let palette: Vec<u32> = colored.distinct_colors().into_iter().collect();
    let class_of = |color: u32| -> Vec<usize> {
        (0..colored.graph.vertex_count())
            .filter(|&v| colored.color(v) == color)
            .collect()
    };
    let classes: Vec<Vec<usize>> = palette.iter().map(|&c| class_of(c)).collect();
    let (color_count, left_cap, right_cap) = match mode {
        ColorfulMode::AllColors => (palette.len(), palette.len(), palette.len()),
        ColorfulMode::Balanced(t) => {
            if t > palette.len() {
                return Ok(None);
            }
            (t, t / 2, t.div_ceil(2))
        }
    };
    let mut left: Vec<usize> = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    let found = match mode {
        ColorfulMode::AllColors => choose_all_colors(
            &colored.graph,
            &classes,
            0,
            &mut left,
            &mut right,
        ),
        ColorfulMode::Balanced(_) => choose_balanced(
            &colored.graph,
            &classes,
            0,
            color_count,
            left_cap,
            right_cap,
            &mut left,
            &mut right,
        ),
    };
    if !found {
        return Ok(None);
    }
    let ids = |set: &[usize]| -> Vec<String> {
        let mut v: Vec<String> = set
            .iter()
            .map(|&x| colored.graph.vertex_id(x).to_string())
            .collect();
        v.sort();
        v
    };
    let witness = BipartiteWitness {
        x_star: ids(&left),
        y_star: ids(&right),
    };
    debug_assert!(witness.is_complete_bipartite(&colored.graph));
    Ok(Some(witness))
}

fn compatible(g: &Graph, v: usize, other_side: &[usize]) -> bool {
    other_side.iter().all(|&u| g.has_edge(v, u))
}

fn choose_all_colors(
    g: &Graph,
    classes: &[Vec<usize>],
    depth: usize,
    left: &mut Vec<usize>,
    right: &mut Vec<usize>,
) -> bool {
    if depth == classes.len() {
        return true;
    }
    for &v in &classes[depth] {
        if compatible(g, v, right) {
            left.push(v);
            if choose_all_colors(g, classes, depth + 1, left, right) {
                return true;
            }
            left.pop();
        }
        if compatible(g, v, left) {
            right.push(v);
            if choose_all_colors(g, classes, depth + 1, left, right) {
                return true;
            }
            right.pop();
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn choose_balanced(
    g: &Graph,
    classes: &[Vec<usize>],
    from: usize,
    remaining: usize,
    left_cap: usize,
    right_cap: usize,
    left: &mut Vec<usize>,
    right: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    if classes.len() - from < remaining {
        return false;
    }
    // Skip this color entirely.
    if choose_balanced(g, classes, from + 1, remaining, left_cap, right_cap, left, right) {
        return true;
    }
    for &v in &classes[from] {
        if left.len() < left_cap && compatible(g, v, right) {
            left.push(v);
            if choose_balanced(
                g,
                classes,
                from + 1,
                remaining - 1,
                left_cap,
                right_cap,
                left,
                right,
            ) {
                return true;
            }
            left.pop();
        }
        if right.len() < right_cap && compatible(g, v, left) {
            right.push(v);
            if choose_balanced(
                g,
                classes,
                from + 1,
                remaining - 1,
                left_cap,
                right_cap,
                left,
                right,
            ) {
                return true;
            }
            right.pop();
        }
    }
    false
}

/// Independent validity check for an all-colors witness of a colored graph.
pub fn verify_all_colors_witness(
    colored: &ColoredGraph,
    witness: &BipartiteWitness,
) -> Result<(), HardnessError> {
    if !witness.is_complete_bipartite(&colored.graph) {
        return Err(HardnessError::InvalidWitness(
            "not a complete bipartite subgraph".into(),
        ));
    }
    let mut covered: BTreeSet<u32> = BTreeSet::new();
    for id in witness.x_star.iter().chain(&witness.y_star) {
        let v = colored
            .graph
            .vertex_index(id)
            .ok_or_else(|| HardnessError::InvalidWitness(format!("unknown vertex {id:?}")))?;
        covered.insert(colored.color(v));
    }
    if covered != colored.distinct_colors() {
        return Err(HardnessError::InvalidWitness(
            "witness misses some color".into(),
        ));
    }
    Ok(())
}

/// Lift an all-colors witness of the gadget back to a satisfying
/// assignment: variables selected on the positive side become true, on the
/// negative side false, all others false.
pub fn witness_to_assignment(
    instance: &Monotone3SatInstance,
    witness: &BipartiteWitness,
) -> Result<SatAssignment, HardnessError> {
    let gadget = reduce_3sat_to_colorful(instance);
    verify_all_colors_witness(&gadget, witness)?;
    let mut values = vec![false; instance.nvars];
    let mut forced_false: BTreeSet<usize> = BTreeSet::new();
    let parse = |id: &str| -> Result<(bool, usize), HardnessError> {
        let positive = id.starts_with('x');
        let rest = &id[1..];
        let (_, var) = rest
            .split_once('_')
            .ok_or_else(|| HardnessError::InvalidWitness(format!("bad vertex id {id:?}")))?;
        let var: usize = var
            .parse()
            .map_err(|_| HardnessError::InvalidWitness(format!("bad vertex id {id:?}")))?;
        Ok((positive, var))
    };
    for id in witness.x_star.iter().chain(&witness.y_star) {
        let (positive, var) = parse(id)?;
        if positive {
            values[var - 1] = true;
        } else {
            forced_false.insert(var);
        }
    }
    for &var in &forced_false {
        if values[var - 1] {
            return Err(HardnessError::InvalidWitness(format!(
                "variable {var} selected on both sides"
            )));
        }
    }
    let assignment = SatAssignment::new(values);
    if !assignment.satisfies(instance) {
        return Err(HardnessError::InvalidWitness(
            "lifted assignment does not satisfy the instance".into(),
        ));
    }
    Ok(assignment)
}

/// Lift a satisfying assignment to an all-colors witness of the gadget:
/// select every positive incidence of a true variable and every negative
/// incidence of a false one.
pub fn assignment_to_witness(
    instance: &Monotone3SatInstance,
    assignment: &SatAssignment,
) -> Result<BipartiteWitness, HardnessError> {
    if !assignment.satisfies(instance) {
        return Err(HardnessError::Unsatisfying);
    }
    let mut x_star = BTreeSet::new();
    let mut y_star = BTreeSet::new();
    for (ci, (pol, vars)) in instance.clauses.iter().enumerate() {
        for &v in vars {
            match pol {
                Polarity::Positive if assignment.value(v) => {
                    x_star.insert(gadget_vertex(true, ci + 1, v));
                }
                Polarity::Negative if !assignment.value(v) => {
                    y_star.insert(gadget_vertex(false, ci + 1, v));
                }
                _ => {}
            }
        }
    }
    let witness = BipartiteWitness {
        x_star: x_star.into_iter().collect(),
        y_star: y_star.into_iter().collect(),
    };
    let gadget = reduce_3sat_to_colorful(instance);
    verify_all_colors_witness(&gadget, &witness)?;
    Ok(witness)
}

/// The dummy-vertex family: `G_s` for `s = 0..r-1` where `r` is the number
/// of colors used, paired with the balanced size `t = s + r` it must be
/// probed at.
pub fn reduce_balanced(colored: &ColoredGraph) -> Vec<(usize, usize, ColoredGraph)> {
    let r = colored.distinct_colors().len();
    (0..r)
        .map(|s| (s, s + r, augment_dummies(colored, s)))
        .collect()
}

/// Seeded random monotone instance with `n` variables and `m` clauses.
pub fn random_monotone_instance(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    nclauses: usize,
) -> Monotone3SatInstance {
    let clauses = (0..nclauses)
        .map(|_| {
            let pol = if rng.gen_bool(0.5) {
                Polarity::Positive
            } else {
                Polarity::Negative
            };
            let vars = [
                rng.gen_range(1..=nvars),
                rng.gen_range(1..=nvars),
                rng.gen_range(1..=nvars),
            ];
            (pol, vars)
        })
        .collect();
    Monotone3SatInstance { nvars, clauses }
}

/// Seeded random properly-colored graph: classes first, cross edges kept
/// with probability 1/2.
pub fn random_colored_graph(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_colors: usize,
) -> ColoredGraph {
    let n = rng.gen_range(1..=max_vertices);
    let colors_used = rng.gen_range(1..=max_colors);
    let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let assignment: Vec<u32> = (0..n)
        .map(|_| rng.gen_range(1..=colors_used) as u32)
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if assignment[u] != assignment[v] && rng.gen_bool(0.5) {
                edges.push((verts[u].clone(), verts[v].clone()));
            }
        }
    }
    let graph = Graph::new(verts.clone(), &edges).unwrap();
    let coloring: BTreeMap<String, u32> = verts.into_iter().zip(assignment).collect();
    ColoredGraph::new(graph, &coloring).unwrap()
}

/// Outcome of an equivalence fuzz campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub instances: usize,
    pub satisfiable: usize,
    pub disagreements: usize,
}

/// Reduction fuzz: on seeded random monotone instances, the brute-force SAT
/// oracle and the gadget decision must agree, and both witness liftings
/// must round-trip.
pub fn fuzz_reduction(seed: u64, instances: usize, nvars: usize, nclauses: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut satisfiable = 0;
    let mut disagreements = 0;
    for _ in 0..instances {
        let instance = random_monotone_instance(&mut rng, nvars, nclauses);
        let gadget = reduce_3sat_to_colorful(&instance);
        let by_sat = brute_force_sat(&instance).expect("sizes under the brute-force cap");
        let by_gadget = colorful_complete_bipartite_exists(&gadget, ColorfulMode::AllColors)
            .expect("gadget coloring is proper");
        match (by_sat, by_gadget) {
            (Some(assignment), Some(witness)) => {
                satisfiable += 1;
                let lifted = witness_to_assignment(&instance, &witness);
                let dropped = assignment_to_witness(&instance, &assignment);
                if lifted.is_err() || dropped.is_err() {
                    disagreements += 1;
                }
            }
            (None, None) => {}
            _ => disagreements += 1,
        }
    }
    FuzzReport {
        instances,
        satisfiable,
        disagreements,
    }
}

/// Balanced-family fuzz: a colored graph has an all-colors witness exactly
/// when some member of its dummy family has a balanced witness at the
/// paired size.
pub fn fuzz_balanced(seed: u64, instances: usize, max_vertices: usize, max_colors: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut satisfiable = 0;
    let mut disagreements = 0;
    for _ in 0..instances {
        let colored = random_colored_graph(&mut rng, max_vertices, max_colors);
        let direct = colorful_complete_bipartite_exists(&colored, ColorfulMode::AllColors)
            .expect("construction is proper")
            .is_some();
        let via_family = reduce_balanced(&colored).into_iter().any(|(_, t, g_s)| {
            colorful_complete_bipartite_exists(&g_s, ColorfulMode::Balanced(t))
                .expect("family members stay proper")
                .is_some()
        });
        if direct {
            satisfiable += 1;
        }
        if direct != via_family {
            disagreements += 1;
        }
    }
    FuzzReport {
        instances,
        satisfiable,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let instance = parse_monotone_3sat("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        assert_eq!(instance.nvars, 3);
        assert_eq!(instance.clauses.len(), 2);
        assert_eq!(instance.clauses[0].0, Polarity::Positive);
        assert_eq!(instance.clauses[1].0, Polarity::Negative);

        assert_eq!(
            parse_monotone_3sat("p cnf 3 1\n1 -2 3 0\n"),
            Err(HardnessError::NotMonotone(1))
        );
        assert_eq!(
            parse_monotone_3sat("p cnf 2 1\n1 2 0\n"),
            Err(HardnessError::WrongArity(1, 2))
        );
        assert!(matches!(
            parse_monotone_3sat("garbage"),
            Err(HardnessError::Parse(_))
        ));
    }

    #[test]
    fn dimacs_roundtrip() {
        let instance = parse_monotone_3sat("p cnf 4 2\n1 1 2 0\n-3 -3 -4 0\n").unwrap();
        let text = to_dimacs(&instance);
        assert_eq!(parse_monotone_3sat(&text).unwrap(), instance);
    }

    #[test]
    fn brute_force_examples() {
        let sat = parse_monotone_3sat("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert!(brute_force_sat(&sat).unwrap().is_some());

        // Repeated literals force both values of one variable.
        let unsat = parse_monotone_3sat("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n").unwrap();
        assert!(brute_force_sat(&unsat).unwrap().is_none());

        let empty = Monotone3SatInstance {
            nvars: 2,
            clauses: vec![],
        };
        assert!(brute_force_sat(&empty).unwrap().is_some());

        let huge = Monotone3SatInstance {
            nvars: 30,
            clauses: vec![],
        };
        assert!(matches!(
            brute_force_sat(&huge),
            Err(HardnessError::TooManyVariables(30))
        ));
    }

    #[test]
    fn gadget_shape() {
        let instance = parse_monotone_3sat("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        let gadget = reduce_3sat_to_colorful(&instance);
        assert_eq!(gadget.graph.vertex_count(), 6);
        // Cross pairs with distinct variables: 3*3 - 3 equal-variable pairs.
        assert_eq!(gadget.graph.edge_count(), 6);
        assert_eq!(gadget.distinct_colors().len(), 2);
        assert!(gadget.is_proper());

        let single = parse_monotone_3sat("p cnf 3 1\n1 2 3 0\n").unwrap();
        let gadget = reduce_3sat_to_colorful(&single);
        assert_eq!(gadget.graph.vertex_count(), 3);
        assert_eq!(gadget.graph.edge_count(), 0);
        assert_eq!(gadget.distinct_colors().len(), 1);

        let empty = Monotone3SatInstance {
            nvars: 1,
            clauses: vec![],
        };
        let gadget = reduce_3sat_to_colorful(&empty);
        assert_eq!(gadget.graph.vertex_count(), 0);
    }

    #[test]
    fn gadget_collapses_repeated_literals() {
        let instance = parse_monotone_3sat("p cnf 1 1\n1 1 1 0\n").unwrap();
        let gadget = reduce_3sat_to_colorful(&instance);
        assert_eq!(gadget.graph.vertex_count(), 1);
    }

    #[test]
    fn colorful_decision_examples() {
        let sat_instance = parse_monotone_3sat("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        let gadget = reduce_3sat_to_colorful(&sat_instance);
        let witness = colorful_complete_bipartite_exists(&gadget, ColorfulMode::AllColors)
            .unwrap()
            .expect("instance satisfiable");
        verify_all_colors_witness(&gadget, &witness).unwrap();

        let unsat = parse_monotone_3sat("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n").unwrap();
        let gadget = reduce_3sat_to_colorful(&unsat);
        assert!(colorful_complete_bipartite_exists(&gadget, ColorfulMode::AllColors)
            .unwrap()
            .is_none());
    }

    #[test]
    fn balanced_mode_on_k22() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let coloring: BTreeMap<String, u32> = [
            ("a".to_string(), 1),
            ("b".to_string(), 2),
            ("c".to_string(), 1),
            ("d".to_string(), 2),
        ]
        .into_iter()
        .collect();
        let colored = ColoredGraph::new(g, &coloring).unwrap();
        let w = colorful_complete_bipartite_exists(&colored, ColorfulMode::Balanced(2))
            .unwrap()
            .expect("cross edge with two colors exists");
        assert_eq!(w.x_star.len() + w.y_star.len(), 2);
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = Graph::new(vec!["a".into(), "b".into()], &[("a", "b")]).unwrap();
        let coloring: BTreeMap<String, u32> =
            [("a".to_string(), 1), ("b".to_string(), 1)].into_iter().collect();
        let colored = ColoredGraph::new(g, &coloring).unwrap();
        assert_eq!(
            colorful_complete_bipartite_exists(&colored, ColorfulMode::AllColors),
            Err(HardnessError::ImproperColoring)
        );
    }

    #[test]
    fn witness_lifting_roundtrip() {
        let instance = parse_monotone_3sat("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        let assignment = SatAssignment::new(vec![true, true, false]);
        assert!(assignment.satisfies(&instance));
        let witness = assignment_to_witness(&instance, &assignment).unwrap();
        // Positive incidences of true variables and negative of false ones.
        assert_eq!(witness.x_star, vec!["x1_1", "x1_2"]);
        assert_eq!(witness.y_star, vec!["y2_3"]);
        let back = witness_to_assignment(&instance, &witness).unwrap();
        assert!(back.satisfies(&instance));

        let forged = BipartiteWitness {
            x_star: vec!["x1_1".into()],
            y_star: vec!["y2_1".into()],
        };
        assert!(witness_to_assignment(&instance, &forged).is_err());
    }

    #[test]
    fn unsatisfying_assignment_rejected() {
        let instance = parse_monotone_3sat("p cnf 3 1\n1 2 3 0\n").unwrap();
        let assignment = SatAssignment::new(vec![false, false, false]);
        assert!(matches!(
            assignment_to_witness(&instance, &assignment),
            Err(HardnessError::Unsatisfying)
        ));
    }

    #[test]
    fn balanced_family_shape() {
        let g = Graph::new(vec!["a".into(), "b".into()], &[("a", "b")]).unwrap();
        let coloring: BTreeMap<String, u32> =
            [("a".to_string(), 1), ("b".to_string(), 2)].into_iter().collect();
        let colored = ColoredGraph::new(g, &coloring).unwrap();
        let family = reduce_balanced(&colored);
        assert_eq!(family.len(), 2);
        assert_eq!(family[0].0, 0);
        assert_eq!(family[0].1, 2);
        assert_eq!(family[1].1, 3);
        assert_eq!(family[1].2.graph.vertex_count(), 3);
    }

    #[test]
    fn single_color_family() {
        let g = Graph::new(vec!["a".into()], &[] as &[(String, String)]).unwrap();
        let coloring: BTreeMap<String, u32> = [("a".to_string(), 1)].into_iter().collect();
        let colored = ColoredGraph::new(g, &coloring).unwrap();
        let family = reduce_balanced(&colored);
        assert_eq!(family.len(), 1);
        let all = colorful_complete_bipartite_exists(&colored, ColorfulMode::AllColors)
            .unwrap()
            .is_some();
        let balanced =
            colorful_complete_bipartite_exists(&family[0].2, ColorfulMode::Balanced(family[0].1))
                .unwrap()
                .is_some();
        assert!(all);
        assert!(balanced);
    }

    #[test]
    fn mini_fuzz_campaigns() {
        let r = fuzz_reduction(7, 40, 4, 4);
        assert_eq!(r.disagreements, 0);
        assert!(r.satisfiable > 0);
        let b = fuzz_balanced(11, 20, 6, 3);
        assert_eq!(b.disagreements, 0);
    }
}
