use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Result};
use crate::group::units;
use crate::verifier::{Coloring, ViolationKind};

use super::space::MAX_CLASSES;

/// A symmetric coloring of `Z/n` given by one bit per pair class
/// `{x, n - x}`, `x = 1 ..= n/2`. Bit `x - 1` is set when the class is
/// colored `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairClassMask {
    n: usize,
    bits: u128,
}

impl PairClassMask {
    pub fn new(n: usize, bits: u128) -> Result<PairClassMask> {
        let m = n / 2;
        if m > MAX_CLASSES || n == 0 {
            return Err(out_of_range(
                "n",
                n,
                format!("1 ..= {}", 2 * MAX_CLASSES + 1),
            ));
        }
        if m < 128 && bits >> m != 0 {
            return Err(out_of_range(
                "mask width",
                128 - bits.leading_zeros() as usize,
                format!("at most {m} bits"),
            ));
        }
        Ok(PairClassMask { n, bits })
    }

    /// Mask with the given pair classes (by least element) colored `a`.
    pub fn from_classes(
        n: usize,
        classes: impl IntoIterator<Item = usize>,
    ) -> Result<PairClassMask> {
        let mut bits = 0u128;
        for x in classes {
            if x == 0 || x > n / 2 {
                return Err(out_of_range("pair class", x, format!("1 ..= {}", n / 2)));
            }
            bits |= 1 << (x - 1);
        }
        PairClassMask::new(n, bits)
    }

    /// The mask of a symmetric coloring of a cyclic group.
    pub fn from_coloring(coloring: &Coloring) -> Option<PairClassMask> {
        let g = coloring.group();
        if !g.is_cyclic()
            || !coloring
                .structural_violations()
                .iter()
                .all(|v| v.kind == ViolationKind::EmptyAtom)
        {
            return None;
        }
        let n = g.factors()[0];
        let classes = coloring.a_set().into_iter().filter(|&x| x <= n / 2);
        PairClassMask::from_classes(n, classes).ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn num_classes(&self) -> usize {
        self.n / 2
    }

    /// Whether pair class `{x, n - x}` is colored `a`.
    pub fn is_a(&self, x: usize) -> bool {
        let r = x % self.n;
        let c = r.min(self.n - r);
        c != 0 && self.bits >> (c - 1) & 1 == 1
    }

    pub fn a_elements(&self) -> Vec<usize> {
        (1..self.n).filter(|&x| self.is_a(x)).collect()
    }

    pub fn to_coloring(&self) -> Coloring {
        Coloring::cyclic(self.n, self.a_elements()).expect("mask elements are in range")
    }

    /// Image under `x ↦ ux`.
    pub fn scaled(&self, u: usize) -> PairClassMask {
        let mut bits = 0u128;
        for x in 1..=self.n / 2 {
            if self.bits >> (x - 1) & 1 == 1 {
                let y = u * x % self.n;
                let c = y.min(self.n - y);
                bits |= 1 << (c - 1);
            }
        }
        PairClassMask { n: self.n, bits }
    }
}

impl fmt::Display for PairClassMask {
    /// Bits from class 1 to class n/2, left to right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.num_classes())
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

/// Least mask, as an integer, in the orbit of `mask` under multiplication by
/// units of `Z/n`.
pub fn canonical_form(mask: PairClassMask) -> PairClassMask {
    units(mask.n)
        .into_iter()
        .map(|u| mask.scaled(u))
        .min_by_key(|m| m.bits)
        .unwrap_or(mask)
}
