//! Finite abelian groups as products of cyclic factors, their subgroups and
//! cosets, and the 4_7 criterion over them.

use cyspec::constructions::{abelian_4_7_representable, construct_4_7_abelian};
use cyspec::group::{cosets, units, AbelianGroup};
use cyspec::verifier::verify;

fn main() -> cyspec::Result<()> {
    let g: AbelianGroup = "4x4".parse()?;
    let h = g.subgroup_of_order(4)?;
    println!(
        "{g}: subgroup of order 4 = {:?}",
        h.members()
            .iter()
            .map(|&x| g.format_element(x))
            .collect::<Vec<_>>()
    );
    for (i, coset) in cosets(&g, &h).iter().enumerate() {
        println!(
            "  coset {i}: {:?}",
            coset
                .iter()
                .map(|&x| g.format_element(x))
                .collect::<Vec<_>>()
        );
    }
    println!("units of Z/12: {:?}", units(12));

    let alg = "4_7".parse()?;
    for text in ["2x2", "2x4", "3x3", "2x2x2", "4x4", "2x2x2x2"] {
        let g: AbelianGroup = text.parse()?;
        match abelian_4_7_representable(&g) {
            Some(h) => {
                let c = construct_4_7_abelian(&g)?;
                assert!(verify(&alg, &c).is_empty());
                println!("4_7 over {g}: yes, a = H \\ {{0}} with |H| = {}", h.order());
            }
            None => println!("4_7 over {g}: no"),
        }
    }
    Ok(())
}
