//! The summary table: expected cyclic spectra next to computed ones.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{catalog, Algebra};
use crate::constructions::construct;
use crate::error::{out_of_range, Result};
use crate::group::is_prime;
use crate::sat::find_representation;
use crate::search::{random_search, Search};

/// Beyond this `n` the report no longer tries SAT and falls back to random
/// search, which can only confirm existence.
pub const SAT_LIMIT: usize = 128;

/// Membership of `n` in the published cyclic spectrum of `algebra`.
pub fn expected_cyclic_spec(algebra: &Algebra, n: usize) -> bool {
    match algebra.index() {
        1 => n == 4,
        2 | 3 => n >= 6 && n.is_multiple_of(2),
        4 => n >= 9 && !is_prime(n) && !(n.is_multiple_of(2) && is_prime(n / 2)),
        5 => n == 5,
        6 => n == 8 || n >= 11,
        7 => n >= 12,
        _ => unreachable!("catalog indices are 1..=7"),
    }
}

/// The published spectrum and cyclic spectrum of `algebra`, as text.
pub fn published_spec(algebra: &Algebra) -> (&'static str, &'static str) {
    match algebra.index() {
        1 => ("{4}", "{4}"),
        2 => ("{n >= 6}", "{2k : k >= 3}"),
        3 => ("{2k : k >= 3}", "{2k : k >= 3}"),
        4 => ("{n >= 9}", "{n >= 9} \\ {p, 2p : p prime}"),
        5 => ("{5}", "{5}"),
        6 => ("{n >= 8}", "{8} ∪ {n >= 11}"),
        7 => ("{n >= 9}", "{n >= 12}"),
        _ => unreachable!("catalog indices are 1..=7"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Construction,
    Exhaustive,
    Sat,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub n: usize,
    pub representable: bool,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraRow {
    pub algebra: Algebra,
    pub spec: &'static str,
    pub cyclic_spec: &'static str,
    pub expected: Vec<usize>,
    pub computed: Vec<usize>,
    /// Expected but not found.
    pub missing: Vec<usize>,
    /// Found but not expected.
    pub unexpected: Vec<usize>,
    pub cells: Vec<Cell>,
}

impl AlgebraRow {
    pub fn diff_is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub lo: usize,
    pub hi: usize,
    pub rows: Vec<AlgebraRow>,
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub limit: usize,
    pub seed: u64,
    pub iters: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            limit: crate::search::DEFAULT_LIMIT,
            seed: 1,
            iters: 10_000,
        }
    }
}

/// Decides one cell with the cheapest applicable method: a closed-form
/// construction, then exhaustive search, then SAT, then random search.
fn decide(algebra: &Algebra, n: usize, search: &Search, opts: &ReportOptions) -> Result<Cell> {
    let cell = |representable, method| Cell {
        n,
        representable,
        method,
    };
    if construct(algebra, n)?.coloring().is_some() {
        return Ok(cell(true, Method::Construction));
    }
    if n <= search.limit() {
        return Ok(cell(search.exists(algebra, n)?, Method::Exhaustive));
    }
    if n <= SAT_LIMIT {
        return Ok(cell(
            find_representation(algebra, n)?.is_some(),
            Method::Sat,
        ));
    }
    let found = random_search(algebra, n, opts.iters, opts.seed)?;
    Ok(cell(found.is_some(), Method::Random))
}

impl SpectrumReport {
    pub fn compute(lo: usize, hi: usize, opts: ReportOptions) -> Result<SpectrumReport> {
        if lo < 1 || lo > hi {
            return Err(out_of_range("lo", lo, format!("1 <= lo <= hi (hi = {hi})")));
        }
        let search = Search::with_limit(opts.limit)?;
        let algebras = catalog();
        let jobs: Vec<(usize, usize)> = (0..algebras.len())
            .flat_map(|i| (lo..=hi).map(move |n| (i, n)))
            .collect();
        // collect() keeps input order, so rows come out sorted by (algebra, n)
        let cells = jobs
            .par_iter()
            .map(|&(i, n)| decide(&algebras[i], n, &search, &opts))
            .collect::<Result<Vec<_>>>()?;
        let width = hi - lo + 1;
        let rows = algebras
            .iter()
            .zip(cells.chunks(width))
            .map(|(algebra, cells)| {
                let expected: Vec<usize> = (lo..=hi)
                    .filter(|&n| expected_cyclic_spec(algebra, n))
                    .collect();
                let computed: Vec<usize> = cells
                    .iter()
                    .filter(|c| c.representable)
                    .map(|c| c.n)
                    .collect();
                let (spec, cyclic_spec) = published_spec(algebra);
                AlgebraRow {
                    algebra: algebra.clone(),
                    spec,
                    cyclic_spec,
                    missing: expected
                        .iter()
                        .copied()
                        .filter(|n| !computed.contains(n))
                        .collect(),
                    unexpected: computed
                        .iter()
                        .copied()
                        .filter(|n| !expected.contains(n))
                        .collect(),
                    expected,
                    computed,
                    cells: cells.to_vec(),
                }
            })
            .collect();
        Ok(SpectrumReport { lo, hi, rows })
    }

    pub fn all_diffs_empty(&self) -> bool {
        self.rows.iter().all(AlgebraRow::diff_is_empty)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cyclic spectra over [{}, {}]", self.lo, self.hi);
        let _ = writeln!(
            out,
            "{:<5} | {:<15} | {:<30} | {:<32} | diff",
            "", "Spec", "Cyclic Spec", "computed"
        );
        let _ = writeln!(out, "{}", "-".repeat(99));
        for row in &self.rows {
            let diff = if row.diff_is_empty() {
                "none".to_string()
            } else {
                let mut parts = Vec::new();
                if !row.missing.is_empty() {
                    parts.push(format!("missing {}", ranges(&row.missing)));
                }
                if !row.unexpected.is_empty() {
                    parts.push(format!("unexpected {}", ranges(&row.unexpected)));
                }
                parts.join("; ")
            };
            let _ = writeln!(
                out,
                "{:<5} | {:<15} | {:<30} | {:<32} | {}",
                row.algebra.name(),
                row.spec,
                row.cyclic_spec,
                ranges(&row.computed),
                diff
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "methods (c = construction, e = exhaustive, s = sat, r = random)"
        );
        for row in &self.rows {
            let codes: String = row
                .cells
                .iter()
                .map(|c| match c.method {
                    Method::Construction => 'c',
                    Method::Exhaustive => 'e',
                    Method::Sat => 's',
                    Method::Random => 'r',
                })
                .collect();
            let _ = writeln!(out, "{:<5} {codes}", row.algebra.name());
        }
        out
    }
}

/// Compact text for a sorted list: `4, 6-9, 12`, with runs of four or
/// more even or odd numbers written `6-40 step 2`.
pub fn ranges(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "{}".into();
    }
    let run_len = |i: usize, step: usize| {
        let mut j = i;
        while j + 1 < xs.len() && xs[j + 1] == xs[j] + step {
            j += 1;
        }
        j - i + 1
    };
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let (ones, twos) = (run_len(i, 1), run_len(i, 2));
        if ones >= 2 {
            parts.push(format!("{}-{}", xs[i], xs[i + ones - 1]));
            i += ones;
        } else if twos >= 4 {
            parts.push(format!("{}-{} step 2", xs[i], xs[i + twos - 1]));
            i += twos;
        } else {
            parts.push(xs[i].to_string());
            i += 1;
        }
    }
    parts.join(", ")
}
