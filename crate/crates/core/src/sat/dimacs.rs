use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{CnfFormula, VarMap};

/// DIMACS CNF text. When a variable map is given its description is written
/// as leading `c ` comment lines.
pub fn emit_dimacs(formula: &CnfFormula, map: Option<&VarMap>) -> String {
    let mut out = String::new();
    if let Some(map) = map {
        for line in map.describe() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(
        out,
        "p cnf {} {}",
        formula.num_vars(),
        formula.clauses().len()
    );
    for clause in formula.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::Dimacs(format!("line {}: second header", lineno + 1)));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                Error::Dimacs(format!("line {}: malformed header `{line}`", lineno + 1))
            })?);
            continue;
        }
        if header.is_none() {
            return Err(Error::Dimacs(format!(
                "line {}: clause before header",
                lineno + 1
            )));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::Dimacs(format!("line {}: bad literal `{tok}`", lineno + 1)))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| Error::Dimacs("missing header".into()))?;
    if !current.is_empty() {
        return Err(Error::Dimacs("last clause is not terminated by 0".into()));
    }
    if clauses.len() != num_clauses {
        return Err(Error::Dimacs(format!(
            "header declares {num_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(num_vars, clauses)
}
