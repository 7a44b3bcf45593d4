//! Finite abelian groups, written additively.
//!
//! Elements are plain indices `0..order`. For `Z/n` the index is the residue
//! itself; for a product `Z/n_1 × … × Z/n_k` it is the mixed-radix encoding of
//! the residue tuple with the first factor most significant, so `(x, y)` in
//! `Z/4 × Z/3` is `3x + y`. The identity is always index 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Element = usize;

/// Largest group order handled.
pub const MAX_ORDER: usize = 4096;

pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn add(&self, x: Element, y: Element) -> Element;
    fn neg(&self, x: Element) -> Element;

    fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    fn nonzero(&self) -> std::ops::Range<Element> {
        1..self.order()
    }
}

/// `Z/nZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicGroup {
    n: usize,
}

impl CyclicGroup {
    pub fn new(n: usize) -> Result<CyclicGroup> {
        if n == 0 {
            return Err(Error::InvalidGroup("modulus must be positive".into()));
        }
        Ok(CyclicGroup { n })
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    /// Multiplication by an integer, i.e. the endomorphism `x ↦ ux`.
    pub fn scale(&self, u: usize, x: Element) -> Element {
        (u % self.n) * x % self.n
    }

    /// The unique subgroup of order `d`: the multiples of `n / d`.
    pub fn subgroup_of_order(&self, d: usize) -> Result<Subgroup> {
        if d == 0 || !self.n.is_multiple_of(d) {
            return Err(Error::NotADivisor { d, order: self.n });
        }
        let step = self.n / d;
        Ok(Subgroup {
            parent: AbelianGroup::cyclic(self.n)?,
            members: (0..d).map(|i| i * step).collect(),
        })
    }
}

impl FiniteGroup for CyclicGroup {
    fn order(&self) -> usize {
        self.n
    }

    fn add(&self, x: Element, y: Element) -> Element {
        let s = x + y;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }

    fn neg(&self, x: Element) -> Element {
        if x == 0 {
            0
        } else {
            self.n - x
        }
    }
}

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}", self.n)
    }
}

/// A product of cyclic groups `Z/n_1 × … × Z/n_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(factors: Vec<usize>) -> Result<AbelianGroup> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup(
                "need at least one cyclic factor".into(),
            ));
        }
        if factors.contains(&0) {
            return Err(Error::InvalidGroup(
                "cyclic factors must be positive".into(),
            ));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(f))
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| {
                Error::InvalidGroup(format!("order exceeds the supported maximum {MAX_ORDER}"))
            })?;
        Ok(AbelianGroup { factors, order })
    }

    pub fn cyclic(n: usize) -> Result<AbelianGroup> {
        AbelianGroup::new(vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() == 1
    }

    /// Residue tuple of an element.
    pub fn coords(&self, mut x: Element) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = x % f;
            x /= f;
        }
        out
    }

    pub fn from_coords(&self, coords: &[usize]) -> Result<Element> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidGroup(format!(
                "element has {} coordinates, group has {} factors",
                coords.len(),
                self.factors.len()
            )));
        }
        let mut x = 0;
        for (&c, &f) in coords.iter().zip(&self.factors) {
            if c >= f {
                return Err(Error::InvalidGroup(format!("coordinate {c} not below {f}")));
            }
            x = x * f + c;
        }
        Ok(x)
    }

    fn combine(
        &self,
        x: Element,
        y: Element,
        op: impl Fn(usize, usize, usize) -> usize,
    ) -> Element {
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut place = 1;
        for &f in self.factors.iter().rev() {
            out += op(x % f, y % f, f) * place;
            place *= f;
            x /= f;
            y /= f;
        }
        out
    }

    /// Subgroup of order `d`, built as a product of cyclic subgroups whose
    /// orders split `d` across the factors.
    pub fn subgroup_of_order(&self, d: usize) -> Result<Subgroup> {
        if d == 0 || !self.order.is_multiple_of(d) {
            return Err(Error::NotADivisor {
                d,
                order: self.order,
            });
        }
        // Taking gcd greedily works prime by prime: each factor absorbs as much
        // of the remaining prime power as it can hold.
        let mut remaining = d;
        let mut parts = Vec::with_capacity(self.factors.len());
        for &f in &self.factors {
            let g = gcd(remaining, f);
            parts.push(g);
            remaining /= g;
        }
        debug_assert_eq!(remaining, 1);
        let mut members = Vec::with_capacity(d);
        let mut coords = vec![0; self.factors.len()];
        loop {
            let actual: Vec<usize> = coords
                .iter()
                .zip(&parts)
                .zip(&self.factors)
                .map(|((&c, &p), &f)| c * (f / p))
                .collect();
            members.push(self.from_coords(&actual)?);
            // odometer over 0..parts[i]
            let mut i = coords.len();
            loop {
                if i == 0 {
                    members.sort_unstable();
                    return Ok(Subgroup {
                        parent: self.clone(),
                        members,
                    });
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < parts[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    /// Format a single element: a residue for cyclic groups, a tuple otherwise.
    pub fn format_element(&self, x: Element) -> String {
        if self.is_cyclic() {
            x.to_string()
        } else {
            let c: Vec<String> = self.coords(x).iter().map(|v| v.to_string()).collect();
            format!("({})", c.join(","))
        }
    }
}

impl FiniteGroup for AbelianGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn add(&self, x: Element, y: Element) -> Element {
        if self.is_cyclic() {
            return (x + y) % self.order;
        }
        self.combine(x, y, |a, b, f| (a + b) % f)
    }

    fn neg(&self, x: Element) -> Element {
        if self.is_cyclic() {
            return (self.order - x) % self.order;
        }
        self.combine(x, 0, |a, _, f| (f - a) % f)
    }
}

impl From<CyclicGroup> for AbelianGroup {
    fn from(g: CyclicGroup) -> Self {
        AbelianGroup {
            factors: vec![g.n],
            order: g.n,
        }
    }
}

impl fmt::Display for AbelianGroup {
    /// `Z/n` for a single factor, `4x3` style for products.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_cyclic() {
            write!(f, "Z/{}", self.order)
        } else {
            let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join("x"))
        }
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Accepts `Z/8`, `8`, `4x3` and `Z/4xZ/3`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .trim()
            .split(['x', 'X', '×'])
            .map(|part| {
                let p = part.trim();
                let p = p.strip_prefix("Z/").unwrap_or(p);
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidGroup(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }
}

/// A subgroup, stored as the sorted list of its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: AbelianGroup,
    members: Vec<Element>,
}

impl Subgroup {
    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Direct check of the subgroup axioms.
    pub fn is_closed(&self) -> bool {
        let g = &self.parent;
        self.contains(0)
            && self.members.iter().all(|&x| self.contains(g.neg(x)))
            && self
                .members
                .iter()
                .all(|&x| self.members.iter().all(|&y| self.contains(g.add(x, y))))
    }
}

/// Partition of the group into cosets of `h`, identity coset first and the
/// rest ordered by least element.
pub fn cosets<G: FiniteGroup + ?Sized>(group: &G, h: &Subgroup) -> Vec<Vec<Element>> {
    let mut seen = vec![false; group.order()];
    let mut out = Vec::with_capacity(h.index());
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        let mut coset: Vec<Element> = h.members().iter().map(|&m| group.add(g, m)).collect();
        coset.sort_unstable();
        for &x in &coset {
            seen[x] = true;
        }
        out.push(coset);
    }
    out
}

/// Units of `Z/n`, ascending.
pub fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_subgroups() {
        let z12 = CyclicGroup::new(12).unwrap();
        assert_eq!(z12.subgroup_of_order(4).unwrap().members(), &[0, 3, 6, 9]);
        let z9 = CyclicGroup::new(9).unwrap();
        assert_eq!(z9.subgroup_of_order(3).unwrap().members(), &[0, 3, 6]);
        assert!(matches!(
            z9.subgroup_of_order(4),
            Err(Error::NotADivisor { d: 4, order: 9 })
        ));
    }

    // All subsets of a small group that are subgroups, by brute force.
    fn brute_subgroups(g: &AbelianGroup) -> Vec<Vec<Element>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<Element> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let has = |x: Element| mask >> x & 1 == 1;
            if has(0)
                && set.iter().all(|&x| has(g.neg(x)))
                && set.iter().all(|&x| set.iter().all(|&y| has(g.add(x, y))))
            {
                out.push(set);
            }
        }
        out
    }

    #[test]
    fn product_subgroup_of_order_four() {
        let g: AbelianGroup = "2x4".parse().unwrap();
        let h = g.subgroup_of_order(4).unwrap();
        assert_eq!(h.order(), 4);
        assert!(h.is_closed());
        let all = brute_subgroups(&g);
        assert!(all.contains(&h.members().to_vec()));
    }

    #[test]
    fn every_divisor_gives_a_subgroup() {
        for spec in ["2x2x2", "4x3", "2x6", "3x3", "2x2x4", "8", "5x5"] {
            let g: AbelianGroup = spec.parse().unwrap();
            for d in divisors(g.order()) {
                let h = g.subgroup_of_order(d).unwrap();
                assert_eq!(h.order(), d, "{spec} d={d}");
                assert!(h.is_closed(), "{spec} d={d}");
            }
        }
    }

    #[test]
    fn coset_examples() {
        let z9 = CyclicGroup::new(9).unwrap();
        let h = z9.subgroup_of_order(3).unwrap();
        assert_eq!(
            cosets(&z9, &h),
            vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]
        );
        let z12 = CyclicGroup::new(12).unwrap();
        let h = z12.subgroup_of_order(2).unwrap();
        let cs = cosets(&z12, &h);
        assert_eq!(cs.len(), 6);
        assert!(cs.iter().all(|c| c.len() == 2));
        let z4 = CyclicGroup::new(4).unwrap();
        let h = z4.subgroup_of_order(4).unwrap();
        assert_eq!(cosets(&z4, &h), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cosets_partition_products() {
        let g: AbelianGroup = "2x6".parse().unwrap();
        for d in divisors(12) {
            let h = g.subgroup_of_order(d).unwrap();
            let cs = cosets(&g, &h);
            assert_eq!(cs[0], h.members());
            assert_eq!(cs.len(), 12 / d);
            let mut all: Vec<Element> = cs.concat();
            all.sort_unstable();
            assert_eq!(all, (0..12).collect::<Vec<_>>());
        }
    }

    #[test]
    fn unit_lists() {
        assert_eq!(units(8), vec![1, 3, 5, 7]);
        assert_eq!(units(7), vec![1, 2, 3, 4, 5, 6]);
        assert!(units(1).is_empty());
    }

    #[test]
    fn unit_maps_are_automorphisms() {
        for n in 1..=40 {
            let g = CyclicGroup::new(n).unwrap();
            for u in units(n) {
                let mut image: Vec<Element> = g.elements().map(|x| g.scale(u, x)).collect();
                assert_eq!(image[0], 0);
                for x in g.elements() {
                    for y in g.elements() {
                        assert_eq!(g.scale(u, g.add(x, y)), g.add(image[x], image[y]));
                    }
                }
                image.sort_unstable();
                assert_eq!(image, (0..n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn product_arithmetic() {
        let g: AbelianGroup = "4x3".parse().unwrap();
        assert_eq!(g.to_string(), "4x3");
        assert_eq!(g.order(), 12);
        let x = g.from_coords(&[3, 2]).unwrap();
        let y = g.from_coords(&[2, 2]).unwrap();
        assert_eq!(g.coords(g.add(x, y)), vec![1, 1]);
        assert_eq!(g.coords(g.neg(x)), vec![1, 1]);
        assert_eq!(g.format_element(x), "(3,2)");
        assert_eq!("Z/8".parse::<AbelianGroup>().unwrap().to_string(), "Z/8");
        assert!("0x3".parse::<AbelianGroup>().is_err());
        assert!("65x65".parse::<AbelianGroup>().is_err());
        assert!("abc".parse::<AbelianGroup>().is_err());
    }
}
