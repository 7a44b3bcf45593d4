//! Encode representability as CNF, write DIMACS, solve with the embedded
//! solver and decode the model back to a coloring.

use cyspec::algebra::Algebra;
use cyspec::sat::{decode, emit_dimacs, encode, parse_dimacs, solve, SolveResult};

fn main() -> cyspec::Result<()> {
    for (name, n) in [
        ("6_7", 8),
        ("6_7", 9),
        ("6_7", 10),
        ("7_7", 11),
        ("7_7", 12),
        ("7_7", 33),
    ] {
        let alg: Algebra = name.parse()?;
        let (formula, map) = encode(&alg, n)?;
        let text = emit_dimacs(&formula, Some(&map));
        assert_eq!(parse_dimacs(&text)?, formula);
        let verdict = match solve(&formula) {
            SolveResult::Sat(model) => format!("SAT  {}", decode(&model, &map)?),
            SolveResult::Unsat => "UNSAT".to_string(),
        };
        println!(
            "{alg} n={n:>2}  {:>5} vars {:>6} clauses  {verdict}",
            formula.num_vars(),
            formula.clauses().len()
        );
    }

    let (small, map) = encode(&"5_7".parse()?, 5)?;
    print!("{}", emit_dimacs(&small, Some(&map)));
    Ok(())
}
