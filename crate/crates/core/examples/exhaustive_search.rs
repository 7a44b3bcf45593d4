//! Exhaustive search over pair-class masks: every representation at one n,
//! orbits under unit multiplication, and spectra over a range.

use cyspec::algebra::catalog;
use cyspec::search::Search;

fn main() -> cyspec::Result<()> {
    let search = Search::new();
    let alg = "6_7".parse()?;

    let all = search.find_all_masks(&alg, 8, false)?;
    let reps = search.find_all_masks(&alg, 8, true)?;
    println!(
        "6_7 over Z/8: {} representations, {} up to automorphism",
        all.len(),
        reps.len()
    );
    for m in &all {
        println!("  {m}  {}", m.to_coloring());
    }
    for n in [9, 10] {
        println!("6_7 over Z/{n}: exists = {}", search.exists(&alg, n)?);
    }

    for alg in catalog() {
        println!(
            "CySp({alg}) in [3, 40]: {:?}",
            search.spectrum(&alg, 3, 40)?
        );
    }
    Ok(())
}
