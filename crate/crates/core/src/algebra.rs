//! The seven symmetric integral relation algebras on three atoms.
//!
//! Every algebra here has the identity atom plus two symmetric diversity
//! atoms `a` and `b`. Up to equivalence there are four diversity cycles,
//! `aaa`, `bbb`, `abb` and `baa`, and an algebra is determined by which of
//! them are mandatory. The remaining cycles are forbidden.
//!
//! In a representation over an abelian group each atom is a set of group
//! elements (its "color class"), and a cycle `{c1, c2, c3}` is witnessed at
//! `z` when `z = x + y` with `x` colored `c1`, `y` colored `c2` and `z`
//! colored `c3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A diversity atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    A,
    B,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::A, Color::B];

    pub fn other(self) -> Color {
        match self {
            Color::A => Color::B,
            Color::B => Color::A,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
        }
    }
}

/// A diversity cycle class, i.e. a multiset of three colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleClass {
    Aaa,
    Bbb,
    Abb,
    Baa,
}

impl CycleClass {
    pub const ALL: [CycleClass; 4] = [
        CycleClass::Aaa,
        CycleClass::Bbb,
        CycleClass::Abb,
        CycleClass::Baa,
    ];

    /// Classifies three colors by how many of them are `a`.
    pub fn of(c1: Color, c2: Color, c3: Color) -> CycleClass {
        let a_count = [c1, c2, c3].iter().filter(|&&c| c == Color::A).count();
        match a_count {
            3 => CycleClass::Aaa,
            2 => CycleClass::Baa,
            1 => CycleClass::Abb,
            _ => CycleClass::Bbb,
        }
    }

    pub fn colors(self) -> [Color; 3] {
        use Color::*;
        match self {
            CycleClass::Aaa => [A, A, A],
            CycleClass::Bbb => [B, B, B],
            CycleClass::Abb => [A, B, B],
            CycleClass::Baa => [B, A, A],
        }
    }

    pub fn contains(self, c: Color) -> bool {
        self.colors().contains(&c)
    }

    /// The two colors left after removing one occurrence of `c`, ordered
    /// `a` before `b`.
    pub fn remove(self, c: Color) -> Option<ColorPair> {
        let colors = self.colors();
        let pos = colors.iter().position(|&x| x == c)?;
        let rest: Vec<Color> = colors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, &x)| x)
            .collect();
        Some(ColorPair::new(rest[0], rest[1]))
    }

    pub fn name(self) -> &'static str {
        match self {
            CycleClass::Aaa => "aaa",
            CycleClass::Bbb => "bbb",
            CycleClass::Abb => "abb",
            CycleClass::Baa => "baa",
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An unordered pair of colors, normalized so that `first <= second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorPair {
    pub first: Color,
    pub second: Color,
}

impl ColorPair {
    pub fn new(c1: Color, c2: Color) -> ColorPair {
        ColorPair {
            first: c1.min(c2),
            second: c1.max(c2),
        }
    }

    pub const AA: ColorPair = ColorPair {
        first: Color::A,
        second: Color::A,
    };
    pub const AB: ColorPair = ColorPair {
        first: Color::A,
        second: Color::B,
    };
    pub const BB: ColorPair = ColorPair {
        first: Color::B,
        second: Color::B,
    };
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first.letter(), self.second.letter())
    }
}

/// One of the seven algebras `1_7` through `7_7`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    index: u8,
    mandatory: [bool; 4],
}

fn class_slot(c: CycleClass) -> usize {
    match c {
        CycleClass::Aaa => 0,
        CycleClass::Bbb => 1,
        CycleClass::Abb => 2,
        CycleClass::Baa => 3,
    }
}

impl Algebra {
    fn from_row(index: u8, classes: &[CycleClass]) -> Algebra {
        let mut mandatory = [false; 4];
        for &c in classes {
            mandatory[class_slot(c)] = true;
        }
        Algebra { index, mandatory }
    }

    /// Looks up an algebra by its position 1..=7.
    pub fn by_index(index: u8) -> Option<Algebra> {
        use CycleClass::*;
        let row: &[CycleClass] = match index {
            1 => &[Abb],
            2 => &[Aaa, Abb],
            3 => &[Bbb, Abb],
            4 => &[Aaa, Bbb, Abb],
            5 => &[Abb, Baa],
            6 => &[Aaa, Abb, Baa],
            7 => &[Aaa, Bbb, Abb, Baa],
            _ => return None,
        };
        Some(Algebra::from_row(index, row))
    }

    /// Position in the catalog, 1 for `1_7` up to 7 for `7_7`.
    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn name(&self) -> String {
        format!("{}_7", self.index)
    }

    pub fn is_mandatory(&self, c: CycleClass) -> bool {
        self.mandatory[class_slot(c)]
    }

    pub fn mandatory(&self) -> Vec<CycleClass> {
        CycleClass::ALL
            .into_iter()
            .filter(|&c| self.is_mandatory(c))
            .collect()
    }

    pub fn forbidden(&self) -> Vec<CycleClass> {
        CycleClass::ALL
            .into_iter()
            .filter(|&c| !self.is_mandatory(c))
            .collect()
    }

    /// Whether `z = x + y` with these colors is allowed.
    pub fn allows(&self, cx: Color, cy: Color, cz: Color) -> bool {
        self.is_mandatory(CycleClass::of(cx, cy, cz))
    }

    /// The sum-set law a representation must satisfy.
    pub fn composition_law(&self) -> CompositionLaw {
        composition_law(self)
    }

    pub fn needs_of(&self, c: Color) -> Vec<ColorPair> {
        needs_of(self, c)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_7", self.index)
    }
}

impl FromStr for Algebra {
    type Err = Error;

    /// Accepts `"4_7"` and the alias `"47"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let digits = t
            .strip_suffix("_7")
            .or_else(|| t.strip_suffix('7').filter(|d| d.len() == 1))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))?;
        digits
            .parse::<u8>()
            .ok()
            .and_then(Algebra::by_index)
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

impl Serialize for Algebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Algebra {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The seven algebras, 1_7 first.
pub fn catalog() -> Vec<Algebra> {
    (1..=7).filter_map(Algebra::by_index).collect()
}

/// Which parts the sum-set `c1 + c2` must consist of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SumResult {
    pub id: bool,
    pub a: bool,
    pub b: bool,
}

impl SumResult {
    pub fn contains(&self, c: Color) -> bool {
        match c {
            Color::A => self.a,
            Color::B => self.b,
        }
    }

    fn set(&mut self, c: Color) {
        match c {
            Color::A => self.a = true,
            Color::B => self.b = true,
        }
    }
}

impl fmt::Display for SumResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.a {
            parts.push("A");
        }
        if self.b {
            parts.push("B");
        }
        if self.id {
            parts.push("Id");
        }
        if parts.is_empty() {
            f.write_str("{}")
        } else {
            f.write_str(&parts.join("∪"))
        }
    }
}

/// Required value of every sum-set `c1 + c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompositionLaw {
    pub aa: SumResult,
    pub ab: SumResult,
    pub bb: SumResult,
}

impl CompositionLaw {
    pub fn get(&self, c1: Color, c2: Color) -> SumResult {
        match ColorPair::new(c1, c2) {
            ColorPair::AA => self.aa,
            ColorPair::BB => self.bb,
            _ => self.ab,
        }
    }
}

pub fn composition_law(algebra: &Algebra) -> CompositionLaw {
    let entry = |c1: Color, c2: Color| {
        let mut r = SumResult {
            id: c1 == c2,
            ..SumResult::default()
        };
        for c3 in Color::ALL {
            if algebra.allows(c1, c2, c3) {
                r.set(c3);
            }
        }
        r
    };
    CompositionLaw {
        aa: entry(Color::A, Color::A),
        ab: entry(Color::A, Color::B),
        bb: entry(Color::B, Color::B),
    }
}

/// Pairs of colors that must sum to every element of color `c`, with the
/// `ab`/`ba` needs collapsed into one.
pub fn needs_of(algebra: &Algebra, c: Color) -> Vec<ColorPair> {
    let mut needs: Vec<ColorPair> = algebra
        .mandatory()
        .into_iter()
        .filter_map(|class| class.remove(c))
        .collect();
    needs.sort();
    needs.dedup();
    needs
}
