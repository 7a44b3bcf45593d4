//! The union bound for random 7_7 colorings, and the sum-free size lemma.
//!
//! A uniformly random pair-class coloring of `Z/n` leaves some need unmet
//! with probability at most `3(n-1)(3/4)^((n-2)/2)`. Whether that is below
//! one is decided exactly: squaring both sides gives
//! `9(n-1)^2 3^(n-2) < 4^(n-2)`, an inequality between integers.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::group::divisors;
use crate::search::{max_sumfree_size, MAX_SUMFREE_N};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    /// Floating-point value of the bound, for display only.
    pub p_value: f64,
    /// Exact answer to `p_value < 1`.
    pub below_one: bool,
}

pub fn union_bound(n: usize) -> Result<BoundReport> {
    if n < 3 {
        return Err(out_of_range("n", n, "n >= 3"));
    }
    let p_value = 3.0 * (n - 1) as f64 * 0.75f64.powf((n - 2) as f64 / 2.0);
    let e = (n - 2) as u32;
    let lhs = BigUint::from(9u32) * BigUint::from(n - 1).pow(2) * BigUint::from(3u32).pow(e);
    let rhs = BigUint::from(4u32).pow(e);
    Ok(BoundReport {
        n,
        p_value,
        below_one: lhs < rhs,
    })
}

/// Least `n >= 3` at which the union bound drops below one.
pub fn union_bound_threshold() -> usize {
    (3..)
        .find(|&n| union_bound(n).map(|r| r.below_one).unwrap_or(false))
        .expect("the bound tends to zero")
}

/// Whether every sum-free subset of `Z/n` has at most `⌊n/2⌋` elements,
/// by exhaustive search. Only odd `3 <= n <= 25`.
pub fn check_sumfree_lemma(n: usize) -> Result<bool> {
    if n.is_multiple_of(2) || !(3..=MAX_SUMFREE_N).contains(&n) {
        return Err(out_of_range("n", n, format!("odd, 3 ..= {MAX_SUMFREE_N}")));
    }
    Ok(max_sumfree_size(n)? <= n / 2)
}

/// The counting argument ruling out 2_7 over `Z/n` for odd `n`: `A ∪ {0}`
/// must be a proper subgroup, hence of order at most the largest proper
/// divisor `d`, so `|B| >= n - d > n/2` and `B` cannot be sum-free, yet
/// 2_7 needs `B + B = A ∪ {0}`. Returns true when the argument applies.
pub fn lemma_excludes_2_7(n: usize) -> bool {
    if n.is_multiple_of(2) || n < 3 {
        return false;
    }
    let largest_proper = divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .max()
        .unwrap_or(1);
    let min_b = n - largest_proper;
    2 * min_b > n
}
