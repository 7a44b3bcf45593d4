use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Algebra, Color, ColorPair, CycleClass};
use crate::error::{out_of_range, Error, Result};
use crate::group::Element;
use crate::verifier::{verify, Coloring};

use super::solver::Model;
use super::CnfFormula;

/// An auxiliary variable standing for "`x` is colored `need.first` and `y`
/// is colored `need.second`", introduced for the need `need` of `z` when `z`
/// is colored `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuxVar {
    pub z: Element,
    pub color: Color,
    pub need: ColorPair,
    pub x: Element,
    pub y: Element,
}

/// Variable layout of an encoding. Variable `i` in `1..=n/2` is true when
/// the pair class `{i, n - i}` is colored `a`; auxiliaries follow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarMap {
    pub algebra: Algebra,
    pub n: usize,
    pub aux: Vec<AuxVar>,
}

impl VarMap {
    pub fn num_base(&self) -> usize {
        self.n / 2
    }

    pub fn num_vars(&self) -> usize {
        self.num_base() + self.aux.len()
    }

    pub fn aux_var(&self, i: usize) -> i32 {
        (self.num_base() + i + 1) as i32
    }

    /// One comment line per variable.
    pub fn describe(&self) -> Vec<String> {
        let mut out = vec![format!(
            "{} over Z/{}: {} base + {} auxiliary variables",
            self.algebra,
            self.n,
            self.num_base(),
            self.aux.len()
        )];
        for i in 1..=self.num_base() {
            out.push(format!("base {i} = class {{{i},{}}} colored a", self.n - i));
        }
        for (i, a) in self.aux.iter().enumerate() {
            out.push(format!(
                "aux {} = z={} ({}) need {}: {} is {}, {} is {}",
                self.aux_var(i),
                a.z,
                a.color.letter(),
                a.need,
                a.x,
                a.need.first.letter(),
                a.y,
                a.need.second.letter()
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EncodeOptions {
    /// Adds the unit clause fixing class `{1, n-1}` to color `b`. Off by
    /// default: it narrows the solution set and is only a heuristic.
    pub symmetry_break: bool,
}

fn class(n: usize, x: Element) -> usize {
    x.min(n - x)
}

fn lit(n: usize, x: Element, c: Color) -> i32 {
    let v = class(n, x) as i32;
    match c {
        Color::A => v,
        Color::B => -v,
    }
}

/// Sorted, deduplicated clause; `None` if it is a tautology.
fn normalize(mut clause: Vec<i32>) -> Option<Vec<i32>> {
    clause.sort_by_key(|&l| (l.unsigned_abs(), l < 0));
    clause.dedup();
    if clause.windows(2).any(|w| w[0] == -w[1]) {
        None
    } else {
        Some(clause)
    }
}

pub fn encode(algebra: &Algebra, n: usize) -> Result<(CnfFormula, VarMap)> {
    encode_with(algebra, n, EncodeOptions::default())
}

/// CNF that is satisfiable exactly when `algebra` has a representation over
/// `Z/n`.
///
/// * For every `x + y = z` among nonzero elements and every coloring of the
///   three that forms a forbidden cycle, a clause ruling that coloring out.
/// * For every class representative `z`, color `c` of `z` and need `c1 c2`
///   of `c`: `¬(z is c) ∨ aux_1 ∨ … ∨ aux_m`, one auxiliary per witnessing
///   pair, each with `aux ⇒ x is c1` and `aux ⇒ y is c2`.
/// * Both colors are used.
pub fn encode_with(
    algebra: &Algebra,
    n: usize,
    options: EncodeOptions,
) -> Result<(CnfFormula, VarMap)> {
    if n < 3 {
        return Err(out_of_range("n", n, "n >= 3"));
    }
    let m = n / 2;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut push = |clauses: &mut Vec<Vec<i32>>, clause: Vec<i32>| {
        if let Some(c) = normalize(clause) {
            if seen.insert(c.clone()) {
                clauses.push(c);
            }
        }
    };

    for x in 1..n {
        for y in x..n {
            let z = (x + y) % n;
            if z == 0 {
                continue;
            }
            for cx in Color::ALL {
                for cy in Color::ALL {
                    for cz in Color::ALL {
                        if !algebra.is_mandatory(CycleClass::of(cx, cy, cz)) {
                            push(
                                &mut clauses,
                                vec![-lit(n, x, cx), -lit(n, y, cy), -lit(n, z, cz)],
                            );
                        }
                    }
                }
            }
        }
    }

    let mut aux = Vec::new();
    for z in 1..=m {
        for color in Color::ALL {
            for need in algebra.needs_of(color) {
                let mut conjs: Vec<(i32, i32, Element, Element)> = Vec::new();
                let mut conj_seen = HashSet::new();
                for x in 1..n {
                    if x == z {
                        continue;
                    }
                    let y = (z + n - x) % n;
                    let (l1, l2) = (lit(n, x, need.first), lit(n, y, need.second));
                    if l1 == -l2 {
                        continue;
                    }
                    if conj_seen.insert((l1.min(l2), l1.max(l2))) {
                        conjs.push((l1, l2, x, y));
                    }
                }
                let mut need_clause = vec![-lit(n, z, color)];
                for (l1, l2, x, y) in conjs {
                    aux.push(AuxVar {
                        z,
                        color,
                        need,
                        x,
                        y,
                    });
                    let v = (m + aux.len()) as i32;
                    need_clause.push(v);
                    push(&mut clauses, vec![-v, l1]);
                    push(&mut clauses, vec![-v, l2]);
                }
                push(&mut clauses, need_clause);
            }
        }
    }

    push(&mut clauses, (1..=m as i32).collect());
    push(&mut clauses, (1..=m as i32).map(|v| -v).collect());
    if options.symmetry_break {
        push(&mut clauses, vec![-1]);
    }

    let map = VarMap {
        algebra: algebra.clone(),
        n,
        aux,
    };
    let formula = CnfFormula::new(map.num_vars(), clauses)?;
    Ok((formula, map))
}

/// Coloring read off the base variables of a model. Fails if the coloring
/// is not a representation, which would mean the encoding is wrong.
pub fn decode(model: &Model, map: &VarMap) -> Result<Coloring> {
    let n = map.n;
    if model.len() < map.num_base() {
        return Err(Error::BadModel(0));
    }
    let a = (1..n).filter(|&x| model[class(n, x) - 1]);
    let coloring = Coloring::cyclic(n, a)?;
    let violations = verify(&map.algebra, &coloring);
    if violations.is_empty() {
        Ok(coloring)
    } else {
        Err(Error::BadModel(violations.len()))
    }
}
