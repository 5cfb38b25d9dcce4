//! Adjacency-based measures. `s[i]` below is the index in `p2` of `p1[i]`,
//! so an adjacency of `p1` survives in `p2` exactly when consecutive `s`
//! values differ by one (in the right direction for the directed forms).

use crate::error::Result;
use crate::permutation::Permutation;

use super::relative_positions;

/// Undirected adjacencies of `p1` absent from `p2`; the ends are not linked.
pub fn acyclic_edge(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    Ok(s.windows(2).filter(|w| w[0].abs_diff(w[1]) != 1).count() as u64)
}

/// Undirected adjacencies of `p1`, including the closing one, absent from `p2` viewed as a cycle.
pub fn cyclic_edge(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    let n = s.len();
    Ok((0..n)
        .filter(|&i| {
            let x = s[(i + 1) % n].abs_diff(s[i]);
            x != 1 && x != n - 1
        })
        .count() as u64)
}

/// Directed adjacencies of `p1` absent from `p2`.
pub fn rtype(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    Ok(s.windows(2).filter(|w| w[1] as i64 - w[0] as i64 != 1).count() as u64)
}

/// Directed adjacencies of `p1` as a cycle absent from `p2` as a cycle.
pub fn cyclic_rtype(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    let n = s.len() as i64;
    Ok((0..s.len())
        .filter(|&i| {
            let x = s[(i + 1) % s.len()] as i64 - s[i] as i64;
            x != 1 && x != 1 - n
        })
        .count() as u64)
}
