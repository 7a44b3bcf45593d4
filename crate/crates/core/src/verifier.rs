//! Checking candidate representations.
//!
//! A [`Coloring`] splits the nonzero elements of an abelian group into the
//! two diversity atoms. It is a representation of an algebra when every
//! element sees each of its needs witnessed by some sum and no sum witnesses
//! a forbidden cycle.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Color, CycleClass};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Element, FiniteGroup};

/// A partition of the nonzero group elements into `A` and `B`. Only `A` is
/// stored; `B` is whatever remains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    group: AbelianGroup,
    in_a: Vec<bool>,
}

impl Coloring {
    pub fn new(group: AbelianGroup, a: impl IntoIterator<Item = Element>) -> Result<Coloring> {
        let mut in_a = vec![false; group.order()];
        for x in a {
            if x == 0 {
                return Err(Error::InvalidColoring(
                    "the identity cannot be colored".into(),
                ));
            }
            if x >= group.order() {
                return Err(Error::InvalidColoring(format!(
                    "element {x} is not in {group}"
                )));
            }
            in_a[x] = true;
        }
        Ok(Coloring { group, in_a })
    }

    /// Coloring of `Z/n` from the residues in `A`.
    pub fn cyclic(n: usize, a: impl IntoIterator<Item = Element>) -> Result<Coloring> {
        Coloring::new(AbelianGroup::cyclic(n)?, a)
    }

    pub(crate) fn from_flags(group: AbelianGroup, in_a: Vec<bool>) -> Coloring {
        debug_assert_eq!(in_a.len(), group.order());
        debug_assert!(!in_a.first().copied().unwrap_or(false));
        Coloring { group, in_a }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Color of a nonzero element; `None` for the identity.
    pub fn color(&self, x: Element) -> Option<Color> {
        match x {
            0 => None,
            _ if self.in_a[x] => Some(Color::A),
            _ => Some(Color::B),
        }
    }

    pub fn set(&self, c: Color) -> Vec<Element> {
        self.group
            .nonzero()
            .filter(|&x| self.color(x) == Some(c))
            .collect()
    }

    pub fn a_set(&self) -> Vec<Element> {
        self.set(Color::A)
    }

    pub fn b_set(&self) -> Vec<Element> {
        self.set(Color::B)
    }

    /// Image under `x ↦ ux`; `u` must be a unit of a cyclic group.
    pub fn scaled(&self, u: usize) -> Coloring {
        let n = self.group.order();
        let mut in_a = vec![false; n];
        for x in self.a_set() {
            in_a[u * x % n] = true;
        }
        Coloring::from_flags(self.group.clone(), in_a)
    }

    /// Violations of the partition itself: an empty atom, or an element
    /// whose negative has the other color.
    pub fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for c in Color::ALL {
            if self.set(c).is_empty() {
                out.push(Violation {
                    kind: ViolationKind::EmptyAtom,
                    z: 0,
                    cycle: None,
                    atom: Some(c),
                    witnesses: None,
                });
            }
        }
        for x in self.group.nonzero() {
            let nx = self.group.neg(x);
            if self.color(x) != self.color(nx) {
                out.push(Violation {
                    kind: ViolationKind::NotSymmetric,
                    z: x,
                    cycle: None,
                    atom: self.color(x),
                    witnesses: None,
                });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: Color| {
            self.set(c)
                .iter()
                .map(|&x| self.group.format_element(x))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{}: A={{{}}} B={{{}}}",
            self.group,
            show(Color::A),
            show(Color::B)
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawElement {
    Residue(usize),
    Tuple(Vec<usize>),
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    group: String,
    #[serde(rename = "A")]
    a: Vec<RawElement>,
    #[serde(rename = "B", default, skip_deserializing)]
    b: Vec<RawElement>,
}

impl Coloring {
    fn raw_elements(&self, c: Color) -> Vec<RawElement> {
        self.set(c)
            .into_iter()
            .map(|x| {
                if self.group.is_cyclic() {
                    RawElement::Residue(x)
                } else {
                    RawElement::Tuple(self.group.coords(x))
                }
            })
            .collect()
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawColoring {
            group: self.group.to_string(),
            a: self.raw_elements(Color::A),
            b: self.raw_elements(Color::B),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawColoring::deserialize(deserializer)?;
        let group: AbelianGroup = raw.group.parse().map_err(D::Error::custom)?;
        let a = raw
            .a
            .iter()
            .map(|e| match e {
                RawElement::Residue(x) if group.is_cyclic() => Ok(*x),
                RawElement::Residue(x) => Err(Error::InvalidColoring(format!(
                    "element {x} must be a coordinate tuple in {group}"
                ))),
                RawElement::Tuple(c) => group.from_coords(c),
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Coloring::new(group, a).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    ForbiddenCycleWitnessed,
    NeedUnmet,
    EmptyAtom,
    NotSymmetric,
}

/// One reason a coloring is not a representation.
///
/// `z` is the element at which the failure is observed (the identity for
/// [`ViolationKind::EmptyAtom`]). `cycle` names the offending cycle class
/// for the two cycle kinds; `atom` names the color involved in structural
/// failures. `witnesses` holds the lexicographically least `(x, y)` with
/// `x + y = z` realizing a forbidden cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub z: Element,
    pub cycle: Option<CycleClass>,
    pub atom: Option<Color>,
    pub witnesses: Option<(Element, Element)>,
}

impl PartialOrd for Violation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Violation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.z, self.kind, self.cycle, self.atom, self.witnesses).cmp(&(
            other.z,
            other.kind,
            other.cycle,
            other.atom,
            other.witnesses,
        ))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::ForbiddenCycleWitnessed => {
                let (x, y) = self.witnesses.unwrap_or_default();
                write!(
                    f,
                    "forbidden cycle {} witnessed at z={}: {} + {}",
                    self.cycle.map(|c| c.name()).unwrap_or("?"),
                    self.z,
                    x,
                    y
                )
            }
            ViolationKind::NeedUnmet => write!(
                f,
                "need of cycle {} unmet at z={}",
                self.cycle.map(|c| c.name()).unwrap_or("?"),
                self.z
            ),
            ViolationKind::EmptyAtom => {
                write!(f, "atom {:?} is empty", self.atom.unwrap_or(Color::A))
            }
            ViolationKind::NotSymmetric => {
                write!(f, "element {} and its negative differ in color", self.z)
            }
        }
    }
}

/// All violations of `coloring` as a representation of `algebra`, sorted.
/// Empty exactly when the coloring is a representation.
pub fn verify(algebra: &Algebra, coloring: &Coloring) -> Vec<Violation> {
    let structural = coloring.structural_violations();
    if !structural.is_empty() {
        return structural;
    }
    let g = coloring.group();
    let mut out = Vec::new();
    for z in g.nonzero() {
        let cz = coloring.color(z).expect("nonzero");
        // First witness of each cycle class at z, scanning x upward.
        let mut first: [Option<(Element, Element)>; 4] = [None; 4];
        for x in g.nonzero() {
            if x == z {
                continue;
            }
            let y = g.sub(z, x);
            let class = CycleClass::of(coloring.color(x).unwrap(), coloring.color(y).unwrap(), cz);
            let slot = &mut first[class as usize];
            if slot.is_none() {
                *slot = Some((x, y));
            }
        }
        for class in CycleClass::ALL {
            let seen = first[class as usize];
            let mandatory = algebra.is_mandatory(class);
            if let (Some(w), false) = (seen, mandatory) {
                out.push(Violation {
                    kind: ViolationKind::ForbiddenCycleWitnessed,
                    z,
                    cycle: Some(class),
                    atom: None,
                    witnesses: Some(w),
                });
            }
            if seen.is_none() && mandatory && class.contains(cz) {
                out.push(Violation {
                    kind: ViolationKind::NeedUnmet,
                    z,
                    cycle: Some(class),
                    atom: Some(cz),
                    witnesses: None,
                });
            }
        }
    }
    out.sort();
    out
}

pub fn is_representation(algebra: &Algebra, coloring: &Coloring) -> bool {
    verify(algebra, coloring).is_empty()
}

/// Literal sum-set check: computes `A+A`, `A+B`, `B+B` and compares each
/// with the algebra's composition law.
pub fn verify_by_sumsets(algebra: &Algebra, coloring: &Coloring) -> bool {
    if !coloring.structural_violations().is_empty() {
        return false;
    }
    let g = coloring.group();
    let law = algebra.composition_law();
    let sumset = |c1: Color, c2: Color| -> BTreeSet<Element> {
        let (s1, s2) = (coloring.set(c1), coloring.set(c2));
        s1.iter()
            .flat_map(|&x| s2.iter().map(move |&y| g.add(x, y)))
            .collect()
    };
    [
        (Color::A, Color::A),
        (Color::A, Color::B),
        (Color::B, Color::B),
    ]
    .into_iter()
    .all(|(c1, c2)| {
        let required = law.get(c1, c2);
        let mut expected = BTreeSet::new();
        if required.id {
            expected.insert(0);
        }
        for c in Color::ALL {
            if required.contains(c) {
                expected.extend(coloring.set(c));
            }
        }
        sumset(c1, c2) == expected
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    fn alg(i: u8) -> Algebra {
        Algebra::by_index(i).unwrap()
    }

    fn col(n: usize, a: &[usize]) -> Coloring {
        Coloring::cyclic(n, a.iter().copied()).unwrap()
    }

    #[test]
    fn known_representations_verify() {
        assert_eq!(verify(&alg(2), &col(6, &[2, 4])), vec![]);
        assert_eq!(verify(&alg(5), &col(5, &[1, 4])), vec![]);
        assert_eq!(verify(&alg(6), &col(8, &[2, 3, 5, 6])), vec![]);
        assert_eq!(verify(&alg(1), &col(4, &[2])), vec![]);
    }

    #[test]
    fn need_unmet_in_z4() {
        let v = verify(&alg(2), &col(4, &[2]));
        assert!(v.iter().any(|v| v.kind == ViolationKind::NeedUnmet
            && v.z == 2
            && v.cycle == Some(CycleClass::Aaa)));
    }

    #[test]
    fn forbidden_witness_is_least_pair() {
        // 2_7 forbids bbb. In Z/7 with B = {1,2,5,6}: 1 + 1 = 2 is the least.
        let v = verify(&alg(2), &col(7, &[3, 4]));
        let w = v
            .iter()
            .find(|v| v.kind == ViolationKind::ForbiddenCycleWitnessed && v.z == 2)
            .unwrap();
        assert_eq!(w.cycle, Some(CycleClass::Bbb));
        assert_eq!(w.witnesses, Some((1, 1)));
    }

    #[test]
    fn structural_violations_short_circuit() {
        let v = verify(&alg(7), &col(5, &[1]));
        assert!(!v.is_empty());
        assert!(v.iter().all(|v| v.kind == ViolationKind::NotSymmetric));
        let v = verify(&alg(7), &col(5, &[]));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::EmptyAtom);
        assert_eq!(v[0].atom, Some(Color::A));
        // Z/1 has nothing to color: both atoms are empty.
        assert_eq!(verify(&alg(1), &col(1, &[])).len(), 2);
    }

    #[test]
    fn sumset_examples() {
        // 3_7 with the table's labels: the self-inverse atom is a.
        assert!(verify_by_sumsets(&alg(3), &col(6, &[3])));
        assert!(!verify_by_sumsets(&alg(3), &col(6, &[1, 2, 4, 5])));
        assert!(verify_by_sumsets(&alg(1), &col(4, &[2])));
        assert!(!verify_by_sumsets(&alg(1), &col(4, &[1, 3])));
    }

    #[test]
    fn no_7_7_over_z9() {
        let a = alg(7);
        for mask in 0u32..16 {
            let set: Vec<usize> = (1..=4)
                .filter(|&i| mask >> (i - 1) & 1 == 1)
                .flat_map(|i| [i, 9 - i])
                .collect();
            let c = col(9, &set);
            assert!(!verify_by_sumsets(&a, &c));
            assert!(!verify(&a, &c).is_empty());
        }
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(Coloring::cyclic(5, [0]).is_err());
        assert!(Coloring::cyclic(5, [5]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = col(8, &[2, 3, 5, 6]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"group":"Z/8","A":[2,3,5,6],"B":[1,4,7]}"#);
        let back: Coloring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);

        let g: AbelianGroup = "3x3".parse().unwrap();
        let c = Coloring::new(
            g.clone(),
            [
                g.from_coords(&[1, 0]).unwrap(),
                g.from_coords(&[2, 0]).unwrap(),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.starts_with(r#"{"group":"3x3","A":[[1,0],[2,0]]"#));
        let back: Coloring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);

        let parsed: Coloring = serde_json::from_str(r#"{"group": "Z/5", "A": [1, 4]}"#).unwrap();
        assert!(is_representation(&alg(5), &parsed));
        assert!(serde_json::from_str::<Coloring>(r#"{"group": "3x3", "A": [1]}"#).is_err());
    }

    #[test]
    fn violations_are_sorted_and_deterministic() {
        for a in catalog() {
            let c = col(11, &[1, 10, 3, 8]);
            let v1 = verify(&a, &c);
            let v2 = verify(&a, &c);
            assert_eq!(v1, v2);
            assert!(v1.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
