use crate::error::{out_of_range, Result};

/// Largest `n` accepted by [`max_sumfree_size`].
pub const MAX_SUMFREE_N: usize = 25;

fn rotate(set: u32, by: usize, n: usize, full: u32) -> u32 {
    if by == 0 {
        set
    } else {
        ((set << by) | (set >> (n - by))) & full
    }
}

/// Size of the largest sum-free subset of `Z/n` (no `x + y` in the set for
/// `x`, `y` in the set, `x = y` included).
pub fn max_sumfree_size(n: usize) -> Result<usize> {
    if n == 0 || n > MAX_SUMFREE_N {
        return Err(out_of_range("n", n, format!("1 ..= {MAX_SUMFREE_N}")));
    }
    let full = (1u32 << n) - 1;
    let mut best = 0;
    grow(n, full, 0, 0, 0, 1, &mut best);
    Ok(best)
}

// `set` is sum-free with sum-set `sums`; candidates are `next..n`.
// 0 never qualifies since 0 + 0 = 0.
fn grow(n: usize, full: u32, set: u32, sums: u32, size: usize, next: usize, best: &mut usize) {
    *best = (*best).max(size);
    for x in next..n {
        if size + (n - x) <= *best {
            return;
        }
        if sums >> x & 1 == 1 {
            continue;
        }
        let new_set = set | 1 << x;
        let new_sums = sums | rotate(set, x, n, full) | 1 << (2 * x % n);
        if new_set & new_sums == 0 {
            grow(n, full, new_set, new_sums, size + 1, x + 1, best);
        }
    }
}
