//! Closed-form representations for each algebra at a few sizes. Every
//! coloring returned has already passed the verifier.

use cyspec::algebra::catalog;
use cyspec::constructions::{construct, sumfree_6_7};

fn main() -> cyspec::Result<()> {
    for alg in catalog() {
        for n in [4, 5, 8, 9, 12, 15, 17] {
            let c = construct(&alg, n)?;
            match c.coloring() {
                Some(col) => println!("{alg} n={n:>2}  {col}"),
                None => println!("{alg} n={n:>2}  {}", c.sentinel_name()),
            }
        }
    }

    // the sum-free sets behind 6_7, one per residue class
    for n in [17, 19, 24, 27] {
        println!("6_7 B over Z/{n}: {:?}", sumfree_6_7(n)?);
    }
    Ok(())
}
