//! The seven algebras: mandatory cycles and the composition law each one
//! induces on the atoms a and b.

use cyspec::algebra::{catalog, Color};

fn main() {
    for alg in catalog() {
        let cycles: Vec<_> = alg.mandatory().iter().map(|c| c.name()).collect();
        let law = alg.composition_law();
        println!("{alg}: mandatory {{{}}}", cycles.join(", "));
        println!(
            "    a+a = {}   a+b = {}   b+b = {}",
            law.get(Color::A, Color::A),
            law.get(Color::A, Color::B),
            law.get(Color::B, Color::B)
        );
        for c in Color::ALL {
            let needs: Vec<String> = alg.needs_of(c).iter().map(|p| p.to_string()).collect();
            println!("    each {} needs {}", c.letter(), needs.join(", "));
        }
    }
}
