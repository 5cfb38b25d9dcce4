//! Precedence-based measures: Kendall tau and reinsertion.

use crate::error::Result;
use crate::permutation::Permutation;

use super::relative_positions;

/// Number of element pairs ordered differently in `p1` and `p2`, i.e. the
/// minimum number of adjacent swaps between them. `O(n log n)`.
pub fn kendall_tau(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let mut s = relative_positions(p1, p2)?;
    let mut buf = vec![0; s.len()];
    Ok(sort_counting_inversions(&mut s, &mut buf))
}

/// Minimum number of remove-and-reinsert moves: `n` minus the length of the
/// longest common subsequence. `O(n log n)`.
pub fn reinsertion(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    Ok((s.len() - longest_increasing_run(&s)) as u64)
}

/// Bottom-up mergesort of `a`, returning the number of inversions it removed.
pub(crate) fn sort_counting_inversions(a: &mut [usize], buf: &mut [usize]) -> u64 {
    let n = a.len();
    let mut inversions = 0u64;
    let mut width = 1;
    while width < n {
        let mut lo = 0;
        while lo + width < n {
            let mid = lo + width;
            let hi = (lo + 2 * width).min(n);
            let (mut i, mut j, mut k) = (lo, mid, lo);
            while i < mid && j < hi {
                if a[i] <= a[j] {
                    buf[k] = a[i];
                    i += 1;
                } else {
                    buf[k] = a[j];
                    j += 1;
                    inversions += (mid - i) as u64;
                }
                k += 1;
            }
            buf[k..k + mid - i].copy_from_slice(&a[i..mid]);
            k += mid - i;
            buf[k..k + hi - j].copy_from_slice(&a[j..hi]);
            a[lo..hi].copy_from_slice(&buf[lo..hi]);
            lo = hi;
        }
        width *= 2;
    }
    inversions
}

/// Length of the longest strictly increasing subsequence (patience sorting).
///
/// For two permutations, the LCS equals the LIS of the relative positions,
/// which is what the Hunt–Szymanski reduction yields for distinct symbols.
pub(crate) fn longest_increasing_run(s: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::with_capacity(s.len());
    for &x in s {
        let at = tails.partition_point(|&t| t < x);
        if at == tails.len() {
            tails.push(x);
        } else {
            tails[at] = x;
        }
    }
    tails.len()
}
