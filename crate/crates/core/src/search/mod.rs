//! Exhaustive and randomized search for representations over `Z/n`.
//!
//! The exhaustive search walks pair-class assignments depth first, deciding
//! classes in increasing order and discarding a branch as soon as a
//! forbidden cycle appears among the decided classes. Needs are only checked
//! on complete assignments.

mod mask;
mod space;
mod sumfree;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{out_of_range, Result};
use crate::group::AbelianGroup;
use crate::verifier::Coloring;

pub use mask::{canonical_form, PairClassMask};
pub use space::{Mode, SearchSpace, MAX_CLASSES};
pub use sumfree::{max_sumfree_size, MAX_SUMFREE_N};

pub const DEFAULT_LIMIT: usize = 40;

/// Exhaustive search over `Z/n` for `n` up to a configurable limit.
#[derive(Debug, Clone, Copy)]
pub struct Search {
    limit: usize,
}

impl Default for Search {
    fn default() -> Self {
        Search {
            limit: DEFAULT_LIMIT,
        }
    }
}

impl Search {
    pub fn new() -> Search {
        Search::default()
    }

    /// Largest `n` searched exhaustively. Capped by what a pair-class mask
    /// can hold.
    pub fn with_limit(limit: usize) -> Result<Search> {
        if limit > 2 * MAX_CLASSES + 1 {
            return Err(out_of_range(
                "limit",
                limit,
                format!("at most {}", 2 * MAX_CLASSES + 1),
            ));
        }
        Ok(Search { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn space(&self, n: usize) -> Result<SearchSpace> {
        if n == 0 || n > self.limit {
            return Err(out_of_range(
                "n",
                n,
                format!("1 ..= {} (exhaustive limit)", self.limit),
            ));
        }
        SearchSpace::new(AbelianGroup::cyclic(n)?)
    }

    pub fn exists(&self, algebra: &Algebra, n: usize) -> Result<bool> {
        Ok(!self.space(n)?.solutions(algebra, Mode::Any).is_empty())
    }

    /// The first representation in search order, if any.
    pub fn first(&self, algebra: &Algebra, n: usize) -> Result<Option<PairClassMask>> {
        let masks = self.space(n)?.solutions(algebra, Mode::First);
        masks.first().map(|&b| PairClassMask::new(n, b)).transpose()
    }

    /// Every representation as a mask, ascending. With `up_to_automorphism`
    /// only masks equal to their own canonical form are kept.
    pub fn find_all_masks(
        &self,
        algebra: &Algebra,
        n: usize,
        up_to_automorphism: bool,
    ) -> Result<Vec<PairClassMask>> {
        let masks = self
            .space(n)?
            .solutions(algebra, Mode::All)
            .into_iter()
            .map(|b| PairClassMask::new(n, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(if up_to_automorphism {
            masks
                .into_iter()
                .filter(|&m| canonical_form(m) == m)
                .collect()
        } else {
            masks
        })
    }

    pub fn find_all(
        &self,
        algebra: &Algebra,
        n: usize,
        up_to_automorphism: bool,
    ) -> Result<Vec<Coloring>> {
        Ok(self
            .find_all_masks(algebra, n, up_to_automorphism)?
            .iter()
            .map(PairClassMask::to_coloring)
            .collect())
    }

    /// All `n` in `lo..=hi` admitting a representation over `Z/n`.
    pub fn spectrum(&self, algebra: &Algebra, lo: usize, hi: usize) -> Result<Vec<usize>> {
        if lo == 0 || lo > hi || hi > self.limit {
            return Err(out_of_range(
                "spectrum range",
                hi,
                format!("1 <= lo <= hi <= {} (got lo = {lo})", self.limit),
            ));
        }
        let found = (lo..=hi)
            .into_par_iter()
            .map(|n| self.exists(algebra, n).map(|e| e.then_some(n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(found.into_iter().flatten().collect())
    }
}

pub fn exists(algebra: &Algebra, n: usize) -> Result<bool> {
    Search::default().exists(algebra, n)
}

pub fn find_all(algebra: &Algebra, n: usize, up_to_automorphism: bool) -> Result<Vec<Coloring>> {
    Search::default().find_all(algebra, n, up_to_automorphism)
}

pub fn spectrum(algebra: &Algebra, lo: usize, hi: usize) -> Result<Vec<usize>> {
    Search::default().spectrum(algebra, lo, hi)
}

/// Representation over an arbitrary abelian group, by exhaustive search.
pub fn find_over(algebra: &Algebra, group: &AbelianGroup) -> Result<Option<Coloring>> {
    let space = SearchSpace::new(group.clone())?;
    Ok(space
        .solutions(algebra, Mode::First)
        .first()
        .map(|&b| space.coloring(b)))
}

/// Samples uniform pair-class colorings of `Z/n` until one is a
/// representation. Each class is `a` or `b` independently with probability
/// 1/2. Deterministic in `seed`; `None` after `max_iters` failures.
pub fn random_search(
    algebra: &Algebra,
    n: usize,
    max_iters: u64,
    seed: u64,
) -> Result<Option<Coloring>> {
    let space = SearchSpace::new(AbelianGroup::cyclic(n)?)?;
    let full = space.full_mask();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_iters {
        let bits = rng.gen::<u128>() & full;
        if space.is_representation(algebra, bits) {
            return Ok(Some(space.coloring(bits)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::group::units;
    use crate::verifier::verify;

    fn alg(i: u8) -> Algebra {
        Algebra::by_index(i).unwrap()
    }

    #[test]
    fn existence_examples() {
        assert!(exists(&alg(1), 4).unwrap());
        assert!(!exists(&alg(1), 5).unwrap());
        assert!(!exists(&alg(6), 9).unwrap());
        assert!(!exists(&alg(6), 10).unwrap());
        assert!(exists(&alg(7), 12).unwrap());
        assert!(!exists(&alg(7), 11).unwrap());
        for a in catalog() {
            assert!(!exists(&a, 1).unwrap());
            assert!(!exists(&a, 2).unwrap());
        }
    }

    #[test]
    fn find_all_examples() {
        let one = find_all(&alg(1), 4, false).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].a_set(), vec![2]);

        // Brute force over the 2^2 masks of Z/5 for 5_7.
        let brute: Vec<Vec<usize>> = (0u128..4)
            .map(|b| PairClassMask::new(5, b).unwrap().to_coloring())
            .filter(|c| verify(&alg(5), c).is_empty())
            .map(|c| c.a_set())
            .collect();
        assert_eq!(brute, vec![vec![1, 4], vec![2, 3]]);
        let found: Vec<Vec<usize>> = find_all(&alg(5), 5, false)
            .unwrap()
            .iter()
            .map(|c| c.a_set())
            .collect();
        assert_eq!(found, brute);
        assert_eq!(find_all(&alg(5), 5, true).unwrap().len(), 1);

        assert!(find_all(&alg(6), 9, false).unwrap().is_empty());
        assert!(find_all(&alg(1), 41, false).is_err());
    }

    #[test]
    fn find_all_closed_under_units() {
        for n in 3..=24 {
            for a in catalog() {
                if a.index() == 7 && n > 20 {
                    continue; // too many solutions to be quick
                }
                let all = Search::new().find_all_masks(&a, n, false).unwrap();
                let reduced = Search::new().find_all_masks(&a, n, true).unwrap();
                for m in &all {
                    assert!(verify(&a, &m.to_coloring()).is_empty());
                    assert!(reduced.contains(&canonical_form(*m)));
                    for u in units(n) {
                        assert!(all.binary_search(&m.scaled(u)).is_ok(), "{a} n={n} u={u}");
                    }
                }
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(spectrum(&alg(5), 3, 20).unwrap(), vec![5]);
        // Z/15 has no 6_7 representation (cross-checked by brute force and SAT).
        let mut six: Vec<usize> = vec![8];
        six.extend((11..=20).filter(|&n| n != 15));
        assert_eq!(spectrum(&alg(6), 3, 20).unwrap(), six);
        assert_eq!(
            spectrum(&alg(4), 3, 20).unwrap(),
            vec![9, 12, 15, 16, 18, 20]
        );
        assert!(spectrum(&alg(4), 5, 3).is_err());
        assert!(spectrum(&alg(4), 0, 3).is_err());
        assert!(spectrum(&alg(4), 3, 41).is_err());
    }

    #[test]
    fn random_examples() {
        let c = random_search(&alg(7), 40, 10_000, 7).unwrap().unwrap();
        assert!(verify(&alg(7), &c).is_empty());
        assert_eq!(random_search(&alg(7), 40, 10_000, 7).unwrap(), Some(c));
        assert!(random_search(&alg(1), 5, 10_000, 3).unwrap().is_none());
    }

    #[test]
    fn first_is_deterministic() {
        let a = Search::new().first(&alg(7), 20).unwrap();
        let b = Search::new().first(&alg(7), 20).unwrap();
        assert_eq!(a, b);
        assert!(verify(&alg(7), &a.unwrap().to_coloring()).is_empty());
    }
}
