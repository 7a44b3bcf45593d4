//! Explicit representations over `Z/n`, and the 4_7 criterion for
//! arbitrary finite abelian groups.
//!
//! Every coloring handed out here has been run through the verifier.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{out_of_range, Error, Result};
use crate::group::{divisors, AbelianGroup, CyclicGroup, FiniteGroup, Subgroup};
use crate::search::Search;
use crate::verifier::{verify, Coloring};

/// Outcome of [`construct`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "coloring")]
pub enum Construction {
    Coloring(Coloring),
    /// No representation at this `n` from the known closed forms.
    NoConstruction,
    /// The algebra has no closed-form construction at all (7_7).
    NoClosedForm,
}

impl Construction {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Construction::Coloring(c) => Some(c),
            _ => None,
        }
    }

    pub fn sentinel_name(&self) -> &'static str {
        match self {
            Construction::Coloring(_) => "Coloring",
            Construction::NoConstruction => "NoConstruction",
            Construction::NoClosedForm => "NoClosedForm",
        }
    }
}

/// Largest `n` for which a failing 6_7 sum-free formula falls back to
/// exhaustive search.
const SUMFREE_FALLBACK_LIMIT: usize = 40;

fn checked(algebra: &Algebra, coloring: Coloring) -> Result<Construction> {
    if verify(algebra, &coloring).is_empty() {
        Ok(Construction::Coloring(coloring))
    } else {
        Err(Error::Unverified {
            algebra: algebra.name(),
            n: coloring.group().order(),
        })
    }
}

/// Closed-form representation of `algebra` over `Z/n`.
///
/// `1_7` at 4, `5_7` at 5 and `6_7` at 8 are fixed small colorings. `2_7`
/// and `3_7` use the parity split and the half-turn respectively for even
/// `n >= 6`, `4_7` the least subgroup of order and index above 2, and
/// `6_7` the symmetric complete sum-free sets from [`sumfree_6_7`] for
/// `n >= 11`. A sum-free formula that fails to verify is replaced by an
/// exhaustive search result when `n` is small enough.
pub fn construct(algebra: &Algebra, n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(out_of_range("n", n, "n >= 1"));
    }
    let coloring = match algebra.index() {
        1 if n == 4 => Coloring::cyclic(4, [2])?,
        2 if n >= 6 && n.is_multiple_of(2) => Coloring::cyclic(n, (2..n).step_by(2))?,
        // 3_7 = {bbb, abb}: a + a = Id, so `a` is the single element n/2.
        3 if n >= 6 && n.is_multiple_of(2) => Coloring::cyclic(n, [n / 2])?,
        4 => match least_4_7_divisor(n) {
            Some(k) => {
                let h = CyclicGroup::new(n)?.subgroup_of_order(k)?;
                Coloring::cyclic(n, h.members()[1..].iter().copied())?
            }
            None => return Ok(Construction::NoConstruction),
        },
        5 if n == 5 => Coloring::cyclic(5, [1, 4])?,
        6 if n == 8 => Coloring::cyclic(8, [2, 3, 5, 6])?,
        6 if n >= 11 => {
            let b = sumfree_6_7(n)?;
            let coloring = Coloring::cyclic(n, (1..n).filter(|x| !b.contains(x)))?;
            if verify(algebra, &coloring).is_empty() {
                coloring
            } else if n <= SUMFREE_FALLBACK_LIMIT {
                match Search::new().first(algebra, n)? {
                    Some(mask) => mask.to_coloring(),
                    None => return Ok(Construction::NoConstruction),
                }
            } else {
                return Err(Error::Unverified {
                    algebra: algebra.name(),
                    n,
                });
            }
        }
        7 => return Ok(Construction::NoClosedForm),
        _ => return Ok(Construction::NoConstruction),
    };
    checked(algebra, coloring)
}

fn least_4_7_divisor(n: usize) -> Option<usize> {
    divisors(n).into_iter().find(|&k| k > 2 && n / k > 2)
}

/// The set `B` of a 6_7 coloring of `Z/n`, `n >= 11`: a symmetric complete
/// sum-free set chosen by the residue of `n`.
///
/// * `n = 3k + 2`: the middle third `[k+1, 2k+1]`
/// * `n = 3k + 1`: `{k} ∪ [k+2, 2k-1] ∪ {2k+1}`
/// * `n = 6k`: `[k, 2k-1] ∪ [4k+1, 5k]`
/// * `n = 6k + 3`: `[k, 2k-1] ∪ [4k+4, 5k+3]`
///
/// Intervals are inclusive.
pub fn sumfree_6_7(n: usize) -> Result<BTreeSet<usize>> {
    if n <= 10 {
        return Err(out_of_range("n", n, "n >= 11"));
    }
    let set: BTreeSet<usize> = match n % 3 {
        2 => {
            let k = n / 3;
            (k + 1..=2 * k + 1).collect()
        }
        1 => {
            let k = n / 3;
            std::iter::once(k)
                .chain(k + 2..=2 * k - 1)
                .chain(std::iter::once(2 * k + 1))
                .collect()
        }
        _ if n.is_multiple_of(6) => {
            let k = n / 6;
            (k..=2 * k - 1).chain(4 * k + 1..=5 * k).collect()
        }
        _ => {
            let k = n / 6;
            (k..=2 * k - 1).chain(4 * k + 4..=5 * k + 3).collect()
        }
    };
    Ok(set)
}

/// Whether 4_7 is representable over `g`, with a witnessing subgroup of
/// order and index both greater than 2.
pub fn abelian_4_7_representable(g: &AbelianGroup) -> Option<Subgroup> {
    let order = g.order();
    let d = least_4_7_divisor(order)?;
    g.subgroup_of_order(d).ok()
}

/// 4_7 coloring of `g`: `A = H \ {0}`, `B` the complement of `H`.
pub fn construct_4_7_abelian(g: &AbelianGroup) -> Result<Coloring> {
    let h = abelian_4_7_representable(g).ok_or_else(|| Error::No47Subgroup(g.to_string()))?;
    let coloring = Coloring::new(g.clone(), h.members().iter().copied().filter(|&x| x != 0))?;
    let algebra = Algebra::by_index(4).expect("4_7 is in the catalog");
    match checked(&algebra, coloring)? {
        Construction::Coloring(c) => Ok(c),
        _ => unreachable!(),
    }
}

/// Checks that `b` is symmetric, sum-free and complete in `Z/n`: `B = -B`,
/// `B ∩ (B + B) = ∅` and `B + B` covers everything outside `B`.
pub fn is_symmetric_complete_sumfree(n: usize, b: &BTreeSet<usize>) -> bool {
    let g = match CyclicGroup::new(n) {
        Ok(g) => g,
        Err(_) => return false,
    };
    let sums: BTreeSet<usize> = b
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| g.add(x, y)))
        .collect();
    b.iter().all(|&x| b.contains(&g.neg(x)))
        && b.iter().all(|x| !sums.contains(x))
        && g.elements().all(|x| b.contains(&x) || sums.contains(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    fn alg(i: u8) -> Algebra {
        Algebra::by_index(i).unwrap()
    }

    #[test]
    fn named_constructions() {
        let c = construct(&alg(3), 10).unwrap();
        let c = c.coloring().unwrap();
        assert_eq!(c.a_set(), vec![5]);
        assert_eq!(c.b_set(), vec![1, 2, 3, 4, 6, 7, 8, 9]);

        let c = construct(&alg(4), 9).unwrap();
        let c = c.coloring().unwrap();
        assert_eq!(c.a_set(), vec![3, 6]);
        assert_eq!(c.b_set(), vec![1, 2, 4, 5, 7, 8]);

        assert_eq!(construct(&alg(2), 7).unwrap(), Construction::NoConstruction);
        assert_eq!(construct(&alg(7), 20).unwrap(), Construction::NoClosedForm);
        assert_eq!(
            construct(&alg(1), 4).unwrap().coloring().unwrap().a_set(),
            vec![2]
        );
        assert_eq!(
            construct(&alg(5), 5).unwrap().coloring().unwrap().a_set(),
            vec![1, 4]
        );
        assert_eq!(
            construct(&alg(6), 8).unwrap().coloring().unwrap().a_set(),
            vec![2, 3, 5, 6]
        );
        assert!(construct(&alg(1), 0).is_err());
    }

    #[test]
    fn sumfree_examples() {
        let s = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(sumfree_6_7(11).unwrap(), s(&[4, 5, 6, 7]));
        assert_eq!(sumfree_6_7(13).unwrap(), s(&[4, 6, 7, 9]));
        assert_eq!(sumfree_6_7(12).unwrap(), s(&[2, 3, 9, 10]));
        assert_eq!(sumfree_6_7(15).unwrap(), s(&[2, 3, 12, 13]));
        assert!(sumfree_6_7(10).is_err());
    }

    #[test]
    fn sumfree_formula_fails_only_at_15() {
        let failing: Vec<usize> = (11..=200)
            .filter(|&n| !is_symmetric_complete_sumfree(n, &sumfree_6_7(n).unwrap()))
            .collect();
        assert_eq!(failing, vec![15]);
        // No 6_7 representation of Z/15 exists at all.
        assert_eq!(
            construct(&alg(6), 15).unwrap(),
            Construction::NoConstruction
        );
        for n in (11..=200).filter(|&n| n != 15) {
            assert!(construct(&alg(6), n).unwrap().coloring().is_some(), "n={n}");
        }
    }

    #[test]
    fn construct_success_sets() {
        for n in 1..=200 {
            let even6 = n % 2 == 0 && n >= 6;
            assert_eq!(construct(&alg(2), n).unwrap().coloring().is_some(), even6);
            assert_eq!(construct(&alg(3), n).unwrap().coloring().is_some(), even6);
            let prime = crate::group::is_prime(n);
            let twice_prime = n % 2 == 0 && crate::group::is_prime(n / 2);
            let expect4 = n > 8 && !prime && !twice_prime;
            assert_eq!(
                construct(&alg(4), n).unwrap().coloring().is_some(),
                expect4,
                "n={n}"
            );
        }
    }

    #[test]
    fn every_construction_verifies() {
        for a in catalog() {
            for n in 1..=200 {
                if let Construction::Coloring(c) = construct(&a, n).unwrap() {
                    assert!(verify(&a, &c).is_empty(), "{a} n={n}");
                }
            }
        }
    }

    #[test]
    fn abelian_criterion() {
        let z9 = AbelianGroup::cyclic(9).unwrap();
        assert_eq!(
            abelian_4_7_representable(&z9).unwrap().members(),
            &[0, 3, 6]
        );
        assert!(abelian_4_7_representable(&AbelianGroup::cyclic(10).unwrap()).is_none());
        let e8: AbelianGroup = "2x2x2".parse().unwrap();
        assert!(abelian_4_7_representable(&e8).is_none());
        // Brute force: no 4_7 coloring of (Z/2)^3 at all.
        let space = crate::search::SearchSpace::new(e8).unwrap();
        assert!((0..=space.full_mask()).all(|b| !verify(&alg(4), &space.coloring(b)).is_empty()));
    }

    #[test]
    fn abelian_constructions() {
        let g: AbelianGroup = "3x3".parse().unwrap();
        let c = construct_4_7_abelian(&g).unwrap();
        assert!(verify(&alg(4), &c).is_empty());
        assert_eq!(c.a_set().len(), 2);

        let z12 = AbelianGroup::cyclic(12).unwrap();
        let c = construct_4_7_abelian(&z12).unwrap();
        assert_eq!(c.a_set(), vec![4, 8]);
        assert!(verify(&alg(4), &c).is_empty());

        assert!(matches!(
            construct_4_7_abelian(&AbelianGroup::cyclic(4).unwrap()),
            Err(Error::No47Subgroup(_))
        ));
    }
}
