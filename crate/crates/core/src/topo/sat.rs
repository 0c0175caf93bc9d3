//! Minimal conflict-driven clause-learning SAT engine used by the
//! cross-index feasibility decisions. Self-contained, deterministic
//! (activity ties break on variable index, geometric restarts with phase
//! saving), and complete.

type Lit = u32; // var << 1 | sign, sign 1 = negated

#[inline]
fn lit(var: usize, negated: bool) -> Lit {
    (var << 1) as Lit | negated as Lit
}

#[inline]
fn var_of(l: Lit) -> usize {
    (l >> 1) as usize
}

#[inline]
fn neg(l: Lit) -> Lit {
    l ^ 1
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Val {
    True,
    False,
    Undef,
}

pub struct Sat {
    nvars: usize,
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<u32>>, // per literal
    assign: Vec<Val>,       // per var
    level: Vec<u32>,
    reason: Vec<Option<u32>>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    phase: Vec<bool>,
    unsat: bool,
}

impl Sat {
    pub fn new(nvars: usize) -> Self {
        Sat {
            nvars,
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * nvars],
            assign: vec![Val::Undef; nvars],
            level: vec![0; nvars],
            reason: vec![None; nvars],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; nvars],
            var_inc: 1.0,
            phase: vec![false; nvars],
            unsat: false,
        }
    }

    fn val_lit(&self, l: Lit) -> Val {
        match self.assign[var_of(l)] {
            Val::Undef => Val::Undef,
            Val::True => {
                if l & 1 == 0 {
                    Val::True
                } else {
                    Val::False
                }
            }
            Val::False => {
                if l & 1 == 0 {
                    Val::False
                } else {
                    Val::True
                }
            }
        }
    }

    /// Add a clause over (var, negated) pairs.
    pub fn add_clause(&mut self, raw: &[(usize, bool)]) {
        if self.unsat {
            return;
        }
        let mut lits: Vec<Lit> = raw.iter().map(|&(v, n)| lit(v, n)).collect();
        lits.sort();
        lits.dedup();
        // Tautology?
        if lits.windows(2).any(|w| w[0] == neg(w[1])) {
            return;
        }
        match lits.len() {
            0 => self.unsat = true,
            1 => match self.val_lit(lits[0]) {
                Val::True => {}
                Val::False => self.unsat = true,
                Val::Undef => {
                    self.enqueue(lits[0], None);
                    if self.propagate().is_some() {
                        self.unsat = true;
                    }
                }
            },
            _ => {
                let ci = self.clauses.len() as u32;
                self.watches[lits[0] as usize].push(ci);
                self.watches[lits[1] as usize].push(ci);
                self.clauses.push(lits);
            }
        }
    }

    fn enqueue(&mut self, l: Lit, reason: Option<u32>) {
        debug_assert!(matches!(self.val_lit(l), Val::Undef));
        let v = var_of(l);
        self.assign[v] = if l & 1 == 0 { Val::True } else { Val::False };
        self.level[v] = self.trail_lim.len() as u32;
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn propagate(&mut self) -> Option<u32> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let fl = neg(p);
            let watchers = std::mem::take(&mut self.watches[fl as usize]);
            let mut keep = Vec::with_capacity(watchers.len());
            let mut conflict = None;
            let mut it = watchers.into_iter();
            while let Some(ci) = it.next() {
                if self.clauses[ci as usize][0] == fl {
                    self.clauses[ci as usize].swap(0, 1);
                }
                let first = self.clauses[ci as usize][0];
                if self.val_lit(first) == Val::True {
                    keep.push(ci);
                    continue;
                }
                let len = self.clauses[ci as usize].len();
                let mut moved = false;
                for k in 2..len {
                    let lk = self.clauses[ci as usize][k];
                    if self.val_lit(lk) != Val::False {
                        self.clauses[ci as usize].swap(1, k);
                        self.watches[lk as usize].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                keep.push(ci);
                if self.val_lit(first) == Val::False {
                    conflict = Some(ci);
                    self.qhead = self.trail.len();
                    keep.extend(it.by_ref());
                    break;
                }
                self.enqueue(first, Some(ci));
            }
            self.watches[fl as usize] = keep;
            if conflict.is_some() {
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
    }

    /// First-UIP learning; returns the learned clause and backjump level.
    fn analyze(&mut self, mut confl: u32) -> (Vec<Lit>, u32) {
        let mut learned: Vec<Lit> = vec![0];
        let mut seen = vec![false; self.nvars];
        let mut counter = 0u32;
        let mut p: Option<Lit> = None;
        let mut index = self.trail.len();
        let current = self.trail_lim.len() as u32;
        loop {
            let start = usize::from(p.is_some());
            let len = self.clauses[confl as usize].len();
            for k in start..len {
                let q = self.clauses[confl as usize][k];
                let v = var_of(q);
                if !seen[v] && self.level[v] > 0 {
                    seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        counter += 1;
                    } else {
                        learned.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                if seen[var_of(self.trail[index])] {
                    break;
                }
            }
            let pl = self.trail[index];
            p = Some(pl);
            seen[var_of(pl)] = false;
            counter -= 1;
            if counter == 0 {
                break;
            }
            confl = self.reason[var_of(pl)].expect("interior literal has a reason");
        }
        learned[0] = neg(p.unwrap());
        // Backjump target: highest level among the remaining literals.
        let mut bl = 0u32;
        let mut pos = 1;
        for (k, &q) in learned.iter().enumerate().skip(1) {
            if self.level[var_of(q)] > bl {
                bl = self.level[var_of(q)];
                pos = k;
            }
        }
        if learned.len() > 1 {
            learned.swap(1, pos);
        }
        (learned, bl)
    }

    fn cancel_until(&mut self, target: u32) {
        while self.trail_lim.len() as u32 > target {
            let lim = self.trail_lim.pop().unwrap();
            while self.trail.len() > lim {
                let l = self.trail.pop().unwrap();
                let v = var_of(l);
                self.phase[v] = self.assign[v] == Val::True;
                self.assign[v] = Val::Undef;
                self.reason[v] = None;
            }
        }
        self.qhead = self.trail.len();
    }

    fn decide(&mut self) -> bool {
        let pick = (0..self.nvars)
            .filter(|&v| self.assign[v] == Val::Undef)
            .max_by(|&a, &b| {
                self.activity[a]
                    .partial_cmp(&self.activity[b])
                    .unwrap()
                    .then(b.cmp(&a))
            });
        let Some(v) = pick else {
            return false;
        };
        self.trail_lim.push(self.trail.len());
        self.enqueue(lit(v, !self.phase[v]), None);
        true
    }

    pub fn solve(&mut self) -> bool {
        if self.unsat {
            return false;
        }
        if self.propagate().is_some() {
            self.unsat = true;
            return false;
        }
        let mut conflicts_since_restart = 0u64;
        let mut restart_limit = 100u64;
        loop {
            if let Some(confl) = self.propagate() {
                if self.trail_lim.is_empty() {
                    self.unsat = true;
                    return false;
                }
                let (learned, bl) = self.analyze(confl);
                self.cancel_until(bl);
                let assert_lit = learned[0];
                if learned.len() == 1 {
                    self.enqueue(assert_lit, None);
                } else {
                    let ci = self.clauses.len() as u32;
                    self.watches[learned[0] as usize].push(ci);
                    self.watches[learned[1] as usize].push(ci);
                    self.clauses.push(learned);
                    self.enqueue(assert_lit, Some(ci));
                }
                self.var_inc /= 0.95;
                conflicts_since_restart += 1;
                if conflicts_since_restart >= restart_limit {
                    conflicts_since_restart = 0;
                    restart_limit = restart_limit.saturating_mul(2);
                    self.cancel_until(0);
                }
            } else if !self.decide() {
                return true;
            }
        }
    }

    pub fn model_true(&self, v: usize) -> bool {
        self.assign[v] == Val::True
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sat_unsat() {
        let mut s = Sat::new(2);
        s.add_clause(&[(0, false), (1, false)]);
        s.add_clause(&[(0, true)]);
        assert!(s.solve());
        assert!(!s.model_true(0));
        assert!(s.model_true(1));

        let mut s = Sat::new(1);
        s.add_clause(&[(0, false)]);
        s.add_clause(&[(0, true)]);
        assert!(!s.solve());
    }

    #[test]
    fn pigeonhole_three_into_two() {
        // 3 pigeons, 2 holes: classic small UNSAT needing real search.
        let v = |p: usize, h: usize| p * 2 + h;
        let mut s = Sat::new(6);
        for p in 0..3 {
            s.add_clause(&[(v(p, 0), false), (v(p, 1), false)]);
        }
        for h in 0..2 {
            for p1 in 0..3 {
                for p2 in p1 + 1..3 {
                    s.add_clause(&[(v(p1, h), true), (v(p2, h), true)]);
                }
            }
        }
        assert!(!s.solve());
    }

    #[test]
    fn random_instances_agree_with_brute_force() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..300 {
            let nvars = rng.gen_range(3..=8);
            let nclauses = rng.gen_range(3..=24);
            let clauses: Vec<Vec<(usize, bool)>> = (0..nclauses)
                .map(|_| {
                    let len = rng.gen_range(1..=3);
                    (0..len)
                        .map(|_| (rng.gen_range(0..nvars), rng.gen_bool(0.5)))
                        .collect()
                })
                .collect();
            let mut s = Sat::new(nvars);
            for c in &clauses {
                s.add_clause(c);
            }
            let got = s.solve();
            let expect = (0u32..1 << nvars).any(|bits| {
                clauses.iter().all(|c| {
                    c.iter()
                        .any(|&(v, negated)| (bits >> v & 1 == 1) != negated)
                })
            });
            assert_eq!(got, expect, "trial {trial}: {clauses:?}");
            if got {
                // model must satisfy every clause
                for c in &clauses {
                    assert!(c.iter().any(|&(v, negated)| s.model_true(v) != negated));
                }
            }
        }
    }
}
