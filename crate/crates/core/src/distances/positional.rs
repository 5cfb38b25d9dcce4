//! Measures driven by absolute element positions: exact match, interchange,
//! and the deviation family.

use crate::error::{Error, Result};
use crate::permutation::{check_lengths, Permutation};

use super::relative_positions;

/// Number of positions holding different elements.
pub fn exact_match(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    check_lengths(p1, p2)?;
    Ok(p1.iter().zip(p2.iter()).filter(|(a, b)| a != b).count() as u64)
}

/// Minimum number of swaps turning `p1` into `p2`: `n` minus the cycle count.
pub fn interchange(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    let n = s.len();
    let mut visited = vec![false; n];
    let mut cycles = 0u64;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = s[i];
        }
    }
    Ok(n as u64 - cycles)
}

/// Sum over elements of the absolute difference of their indices.
pub fn deviation(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    Ok(s.iter().enumerate().map(|(i, &j)| i.abs_diff(j) as u64).sum())
}

/// [`deviation`] divided by `n - 1`.
pub fn normalized_deviation(p1: &Permutation, p2: &Permutation) -> Result<f64> {
    check_lengths(p1, p2)?;
    if p1.len() < 2 {
        return Err(Error::TooShort { what: "normalized deviation", min: 2, len: p1.len() });
    }
    Ok(deviation(p1, p2)? as f64 / (p1.len() - 1) as f64)
}

/// Sum over elements of the squared difference of their indices.
pub fn squared_deviation(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    Ok(s.iter()
        .enumerate()
        .map(|(i, &j)| {
            let d = i.abs_diff(j) as u64;
            d * d
        })
        .sum())
}

/// Positional deviation measured around the cycle: `sum min(d, n - d)`.
pub fn lee(p1: &Permutation, p2: &Permutation) -> Result<u64> {
    let s = relative_positions(p1, p2)?;
    let n = s.len();
    Ok(s.iter()
        .enumerate()
        .map(|(i, &j)| {
            let d = i.abs_diff(j);
            d.min(n - d) as u64
        })
        .sum())
}
