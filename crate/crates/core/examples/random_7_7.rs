//! The probabilistic argument for 7_7: the union bound drops below one at
//! n = 34, and from there random symmetric colorings succeed quickly.

use cyspec::bounds::{union_bound, union_bound_threshold};
use cyspec::search::random_search;
use cyspec::verifier::verify;

fn main() -> cyspec::Result<()> {
    for n in [12, 20, 30, 33, 34, 40, 60] {
        let r = union_bound(n)?;
        println!(
            "n={n:>2}  bound {:.4}  below one: {}",
            r.p_value, r.below_one
        );
    }
    println!("threshold: {}", union_bound_threshold());

    let alg = "7_7".parse()?;
    for n in 34..=40 {
        let c =
            random_search(&alg, n, 10_000, 7)?.expect("union bound says this almost never fails");
        assert!(verify(&alg, &c).is_empty());
        println!("7_7 over Z/{n}: |A| = {}", c.a_set().len());
    }
    // below the bound it may still work, just without the guarantee
    println!(
        "7_7 over Z/16, 10000 samples: {}",
        random_search(&alg, 16, 10_000, 7)?.is_some()
    );
    Ok(())
}
