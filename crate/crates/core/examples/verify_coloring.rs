//! Checking colorings of Z/n. A valid one reports nothing, a broken one
//! reports every violation with the least witnessing pair.

use cyspec::algebra::Algebra;
use cyspec::verifier::{verify, verify_by_sumsets, Coloring};

fn main() -> cyspec::Result<()> {
    let alg: Algebra = "5_7".parse()?;

    let good = Coloring::cyclic(5, [1, 4])?;
    println!("{good}");
    println!("  violations: {}", verify(&alg, &good).len());
    println!("  sum-set check agrees: {}", verify_by_sumsets(&alg, &good));

    // same split over Z/6 fails in several ways
    let bad = Coloring::cyclic(6, [1, 5])?;
    println!("{bad}");
    for v in verify(&alg, &bad) {
        println!("  {v}");
    }

    // round trip through the JSON form the CLI reads and writes
    let json = serde_json::to_string(&good)?;
    println!("{json}");
    let back: Coloring = serde_json::from_str(&json)?;
    assert_eq!(back, good);
    Ok(())
}
