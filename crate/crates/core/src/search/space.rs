//! Search space of symmetric colorings of an abelian group.
//!
//! Since both atoms are symmetric, a coloring is fixed by the color of each
//! class `{x, -x}`. Classes are numbered by their least element, so for
//! `Z/n` class `i` (0-based) is `{i + 1, n - i - 1}`. An assignment is a
//! `u128` with bit `i` set when class `i` is colored `a`.

use rayon::prelude::*;

use crate::algebra::{Algebra, Color, ColorPair};
use crate::error::{out_of_range, Result};
use crate::group::{AbelianGroup, Element, FiniteGroup};
use crate::verifier::Coloring;

/// Most classes a search space can hold.
pub const MAX_CLASSES: usize = 128;

type Class = u8;

/// How many solutions [`SearchSpace::solutions`] collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    All,
    /// The first solution in depth-first order; deterministic.
    First,
    /// Whichever solution turns up first; cheapest for existence checks.
    Any,
}

#[derive(Debug, Clone)]
pub struct SearchSpace {
    group: AbelianGroup,
    classes: Vec<Vec<Element>>,
    class_of: Vec<usize>,
    /// Class triples `(i, j, k)` with `i <= j <= k` such that some
    /// `x + y = z` has classes `{i, j, k}`, bucketed by `k`.
    triples_by_max: Vec<Vec<(Class, Class)>>,
    /// For the representative `z` of each class: the distinct unordered class
    /// pairs `{class(x), class(z - x)}` over nonzero `x != z`.
    sum_pairs: Vec<Vec<(Class, Class)>>,
}

/// Forbidden-ness of a cycle, indexed by how many of its colors are `a`.
fn forbidden_by_a_count(algebra: &Algebra) -> [bool; 4] {
    let mut out = [false; 4];
    for (count, slot) in out.iter_mut().enumerate() {
        let colors: Vec<Color> = (0..3)
            .map(|i| if i < count { Color::A } else { Color::B })
            .collect();
        *slot = !algebra.allows(colors[0], colors[1], colors[2]);
    }
    out
}

impl SearchSpace {
    pub fn new(group: AbelianGroup) -> Result<SearchSpace> {
        let order = group.order();
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<Vec<Element>> = Vec::new();
        for x in group.nonzero() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let nx = group.neg(x);
            let members = if nx == x { vec![x] } else { vec![x, nx] };
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let m = classes.len();
        if m > MAX_CLASSES {
            return Err(out_of_range(
                "symmetric classes",
                m,
                format!("at most {MAX_CLASSES}"),
            ));
        }

        let mut triple_seen = vec![false; m * m * m];
        let mut triples_by_max = vec![Vec::new(); m];
        let mut sum_pairs = vec![Vec::new(); m];
        for (zc, members) in classes.iter().enumerate() {
            let z = members[0];
            let mut pair_seen = vec![false; m * m];
            for x in group.nonzero() {
                if x == z {
                    continue;
                }
                let y = group.sub(z, x);
                let (cx, cy) = (class_of[x], class_of[y]);
                let (p, q) = (cx.min(cy), cx.max(cy));
                if !pair_seen[p * m + q] {
                    pair_seen[p * m + q] = true;
                    sum_pairs[zc].push((p as Class, q as Class));
                }
                let mut t = [cx, cy, zc];
                t.sort_unstable();
                let key = (t[0] * m + t[1]) * m + t[2];
                if !triple_seen[key] {
                    triple_seen[key] = true;
                    triples_by_max[t[2]].push((t[0] as Class, t[1] as Class));
                }
            }
        }
        Ok(SearchSpace {
            group,
            classes,
            class_of,
            triples_by_max,
            sum_pairs,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn class_of(&self, x: Element) -> Option<usize> {
        self.class_of.get(x).copied().filter(|&c| c != usize::MAX)
    }

    pub fn full_mask(&self) -> u128 {
        match self.classes.len() {
            0 => 0,
            m => u128::MAX >> (128 - m),
        }
    }

    pub fn coloring(&self, bits: u128) -> Coloring {
        let mut in_a = vec![false; self.group.order()];
        for (i, members) in self.classes.iter().enumerate() {
            if bits >> i & 1 == 1 {
                for &x in members {
                    in_a[x] = true;
                }
            }
        }
        Coloring::from_flags(self.group.clone(), in_a)
    }

    /// Assignment of a coloring, if the coloring is symmetric.
    pub fn bits_of(&self, coloring: &Coloring) -> Option<u128> {
        let mut bits = 0u128;
        for (i, members) in self.classes.iter().enumerate() {
            let colors: Vec<Option<Color>> = members.iter().map(|&x| coloring.color(x)).collect();
            if colors.iter().any(|&c| c != colors[0]) {
                return None;
            }
            if colors[0] == Some(Color::A) {
                bits |= 1 << i;
            }
        }
        Some(bits)
    }

    fn triples_ok(&self, forbidden: &[bool; 4], bits: u128, k: usize) -> bool {
        let bk = (bits >> k & 1) as usize;
        self.triples_by_max[k].iter().all(|&(i, j)| {
            let count = (bits >> i & 1) as usize + (bits >> j & 1) as usize + bk;
            !forbidden[count]
        })
    }

    /// No forbidden cycle anywhere in a complete assignment.
    pub fn no_forbidden(&self, algebra: &Algebra, bits: u128) -> bool {
        let forbidden = forbidden_by_a_count(algebra);
        (0..self.num_classes()).all(|k| self.triples_ok(&forbidden, bits, k))
    }

    /// Every need is witnessed and both atoms are nonempty. Forbidden cycles
    /// are not examined here.
    pub fn needs_met(&self, algebra: &Algebra, bits: u128) -> bool {
        if bits == 0 || bits == self.full_mask() {
            return false;
        }
        let needs = [algebra.needs_of(Color::A), algebra.needs_of(Color::B)];
        let color = |c: Class| {
            if bits >> c & 1 == 1 {
                Color::A
            } else {
                Color::B
            }
        };
        self.sum_pairs.iter().enumerate().all(|(zc, pairs)| {
            let cz = color(zc as Class);
            needs[cz as usize].iter().all(|&need| {
                pairs
                    .iter()
                    .any(|&(p, q)| ColorPair::new(color(p), color(q)) == need)
            })
        })
    }

    pub fn is_representation(&self, algebra: &Algebra, bits: u128) -> bool {
        self.no_forbidden(algebra, bits) && self.needs_met(algebra, bits)
    }

    /// Assignments that are representations, ascending.
    pub fn solutions(&self, algebra: &Algebra, mode: Mode) -> Vec<u128> {
        let first_only = mode != Mode::All;
        let m = self.num_classes();
        if m == 0 {
            return Vec::new();
        }
        let forbidden = forbidden_by_a_count(algebra);
        // Split on a prefix so the branches can run in parallel.
        let depth = m.min(8);
        let mut prefixes = Vec::new();
        self.extend(&forbidden, 0, 0, depth, &mut |bits| {
            prefixes.push(bits);
            true
        });
        let run = |&prefix: &u128| {
            let mut found = Vec::new();
            self.extend(&forbidden, prefix, depth, m, &mut |bits| {
                if self.needs_met(algebra, bits) {
                    found.push(bits);
                    !first_only
                } else {
                    true
                }
            });
            found
        };
        let mut out: Vec<u128> = match mode {
            Mode::All => prefixes.par_iter().flat_map_iter(run).collect(),
            Mode::First => prefixes
                .par_iter()
                .map(run)
                .find_first(|found| !found.is_empty())
                .unwrap_or_default(),
            Mode::Any => prefixes
                .par_iter()
                .map(run)
                .find_any(|found| !found.is_empty())
                .unwrap_or_default(),
        };
        out.sort_unstable();
        out
    }

    /// Depth-first extension of `bits` (classes `0..depth` decided) up to
    /// `stop` classes, pruning on forbidden cycles among decided classes.
    /// `visit` returns false to abort. Returns false if aborted.
    fn extend(
        &self,
        forbidden: &[bool; 4],
        bits: u128,
        depth: usize,
        stop: usize,
        visit: &mut dyn FnMut(u128) -> bool,
    ) -> bool {
        if depth == stop {
            return visit(bits);
        }
        for bit in [0u128, 1] {
            let next = bits | bit << depth;
            if self.triples_ok(forbidden, next, depth)
                && !self.extend(forbidden, next, depth + 1, stop, visit)
            {
                return false;
            }
        }
        true
    }
}
