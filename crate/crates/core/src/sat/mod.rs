//! Propositional encoding of "the algebra is representable over `Z/n`",
//! DIMACS text I/O, and an embedded DPLL solver.

mod dimacs;
mod encode;
mod solver;

use serde::Serialize;

use crate::error::{Error, Result};

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use encode::{decode, encode, encode_with, AuxVar, EncodeOptions, VarMap};
pub use solver::{solve, Model, SolveResult};

/// A formula in conjunctive normal form over variables `1..=num_vars`.
/// Literals are signed variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::Dimacs(format!("clause {} is empty", i + 1)));
            }
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > num_vars {
                    return Err(Error::Dimacs(format!(
                        "clause {} has literal {lit} outside 1..={num_vars}",
                        i + 1
                    )));
                }
                if clause.contains(&-lit) {
                    return Err(Error::Dimacs(format!(
                        "clause {} contains both {lit} and {}",
                        i + 1,
                        -lit
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Whether `model` (indexed by variable - 1) satisfies every clause.
    pub fn satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| model[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }
}

/// Encode, solve and decode in one go: a representation over `Z/n` if one
/// exists.
pub fn find_representation(
    algebra: &crate::algebra::Algebra,
    n: usize,
) -> Result<Option<crate::verifier::Coloring>> {
    let (formula, map) = encode(algebra, n)?;
    match solve(&formula) {
        SolveResult::Sat(model) => decode(&model, &map).map(Some),
        SolveResult::Unsat => Ok(None),
    }
}
