//! DPLL with two watched literals and chronological backtracking.
//!
//! No clause learning and no restarts. Variables are decided in index
//! order, false first, which on the representation encodings means the
//! pair-class variables are branched on before any auxiliary.

use super::CnfFormula;

/// Truth value of each variable, indexed by variable - 1.
pub type Model = Vec<bool>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Sat(Model),
    Unsat,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(_))
    }
}

// Literal code: 2 * var + sign, var 0-based, sign 1 for negative.
type Lit = usize;

fn code(lit: i32) -> Lit {
    (lit.unsigned_abs() as usize - 1) * 2 + usize::from(lit < 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    Unset,
    True,
    False,
}

struct Solver {
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    values: Vec<Value>,
    trail: Vec<Lit>,
    /// Per decision level: trail position where it starts, and whether the
    /// decision has already been flipped.
    levels: Vec<(usize, bool)>,
    qhead: usize,
}

fn value_of(values: &[Value], l: Lit) -> Value {
    match (values[l >> 1], l & 1) {
        (Value::Unset, _) => Value::Unset,
        (v, 0) => v,
        (Value::True, _) => Value::False,
        (Value::False, _) => Value::True,
    }
}

impl Solver {
    fn lit_value(&self, l: Lit) -> Value {
        value_of(&self.values, l)
    }

    fn assign(&mut self, l: Lit) {
        self.values[l >> 1] = if l & 1 == 0 {
            Value::True
        } else {
            Value::False
        };
        self.trail.push(l);
    }

    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let falsified = self.trail[self.qhead] ^ 1;
            self.qhead += 1;
            let watching = std::mem::take(&mut self.watches[falsified]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = false;
            for (pos, &ci) in watching.iter().enumerate() {
                if conflict {
                    keep.extend_from_slice(&watching[pos..]);
                    break;
                }
                let clause = &mut self.clauses[ci];
                if clause[0] == falsified {
                    clause.swap(0, 1);
                }
                let other = clause[0];
                if value_of(&self.values, other) == Value::True {
                    keep.push(ci);
                    continue;
                }
                let replacement =
                    (2..clause.len()).find(|&k| value_of(&self.values, clause[k]) != Value::False);
                if let Some(k) = replacement {
                    clause.swap(1, k);
                    let w = clause[1];
                    self.watches[w].push(ci);
                    continue;
                }
                keep.push(ci);
                match self.lit_value(other) {
                    Value::False => conflict = true,
                    _ => self.assign(other),
                }
            }
            self.watches[falsified] = keep;
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        for &l in &self.trail[len..] {
            self.values[l >> 1] = Value::Unset;
        }
        self.trail.truncate(len);
        self.qhead = len;
    }

    /// Flips the most recent unflipped decision. False when none is left.
    fn backtrack(&mut self) -> bool {
        while let Some((start, flipped)) = self.levels.pop() {
            if flipped {
                continue;
            }
            let decision = self.trail[start];
            self.undo_to(start);
            self.levels.push((start, true));
            self.assign(decision ^ 1);
            return true;
        }
        false
    }

    fn run(&mut self) -> bool {
        let mut next_var = 0;
        loop {
            if !self.propagate() {
                if !self.backtrack() {
                    return false;
                }
                next_var = 0;
                continue;
            }
            while next_var < self.values.len() && self.values[next_var] != Value::Unset {
                next_var += 1;
            }
            if next_var == self.values.len() {
                return true;
            }
            self.levels.push((self.trail.len(), false));
            self.assign(next_var * 2 + 1);
        }
    }
}

/// Complete and sound satisfiability check. A returned model satisfies
/// every clause.
pub fn solve(formula: &CnfFormula) -> SolveResult {
    let n = formula.num_vars();
    let mut solver = Solver {
        clauses: Vec::new(),
        watches: vec![Vec::new(); 2 * n],
        values: vec![Value::Unset; n],
        trail: Vec::new(),
        levels: Vec::new(),
        qhead: 0,
    };
    let mut units = Vec::new();
    for clause in formula.clauses() {
        let mut lits: Vec<Lit> = clause.iter().map(|&l| code(l)).collect();
        lits.sort_unstable();
        lits.dedup();
        if lits.len() == 1 {
            units.push(lits[0]);
            continue;
        }
        let ci = solver.clauses.len();
        solver.watches[lits[0]].push(ci);
        solver.watches[lits[1]].push(ci);
        solver.clauses.push(lits);
    }
    for l in units {
        match solver.lit_value(l) {
            Value::False => return SolveResult::Unsat,
            Value::True => {}
            Value::Unset => solver.assign(l),
        }
    }
    if !solver.run() {
        return SolveResult::Unsat;
    }
    let model: Model = solver.values.iter().map(|&v| v == Value::True).collect();
    assert!(formula.satisfied_by(&model), "solver produced a non-model");
    SolveResult::Sat(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(num_vars: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(num_vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn trivial_instances() {
        assert_eq!(solve(&f(1, &[&[1], &[-1]])), SolveResult::Unsat);
        match solve(&f(2, &[&[1, 2], &[-1, 2]])) {
            SolveResult::Sat(m) => assert!(m[1]),
            SolveResult::Unsat => panic!(),
        }
        assert!(solve(&f(3, &[])).is_sat());
        assert_eq!(
            solve(&f(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]])),
            SolveResult::Unsat
        );
    }

    fn brute(formula: &CnfFormula) -> bool {
        let n = formula.num_vars();
        (0u32..1 << n).any(|bits| {
            let model: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            formula.satisfied_by(&model)
        })
    }

    fn random_3cnf(rng: &mut ChaCha8Rng, n: usize, m: usize) -> CnfFormula {
        let mut clauses = Vec::new();
        while clauses.len() < m {
            let mut vars: Vec<i32> = Vec::new();
            while vars.len() < 3 {
                let v = rng.gen_range(1..=n as i32);
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            clauses.push(
                vars.into_iter()
                    .map(|v| if rng.gen() { v } else { -v })
                    .collect(),
            );
        }
        CnfFormula::new(n, clauses).unwrap()
    }

    #[test]
    fn random_3cnf_against_truth_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let (mut sat, mut unsat) = (0, 0);
        for i in 0..60 {
            let n = 5 + i % 16; // 5..=20 variables
            let m = (n as f64 * 4.26).round() as usize; // near the phase transition
            let formula = random_3cnf(&mut rng, n, m);
            let expected = brute(&formula);
            assert_eq!(solve(&formula).is_sat(), expected, "instance {i}");
            if expected {
                sat += 1;
            } else {
                unsat += 1;
            }
        }
        assert!(
            sat > 5 && unsat > 5,
            "corpus should mix outcomes: {sat} sat, {unsat} unsat"
        );
    }
}
