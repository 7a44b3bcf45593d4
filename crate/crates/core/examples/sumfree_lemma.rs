//! Largest sum-free subsets of Z/n for odd n, and the counting argument that
//! rules out 2_7 over odd cyclic groups.

use cyspec::bounds::{check_sumfree_lemma, lemma_excludes_2_7};
use cyspec::search::max_sumfree_size;

fn main() -> cyspec::Result<()> {
    for n in (3..=25).step_by(2) {
        println!(
            "n={n:>2}  max sum-free {:>2}  <= n/2: {}  excludes 2_7: {}",
            max_sumfree_size(n)?,
            check_sumfree_lemma(n)?,
            lemma_excludes_2_7(n)
        );
    }
    Ok(())
}
