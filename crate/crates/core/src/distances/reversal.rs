//! Exact reversal edit distance via a breadth-first lookup table over `S_n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::permutation::{check_lengths, factorial, rank_slice, unrank_into, Permutation};

/// Default cap on `n`; the table holds `n!` entries.
pub const DEFAULT_REVERSAL_CAP: usize = 10;

/// Reversal distance from every permutation of length `n` to a fixed reference,
/// indexed by lexicographic rank.
#[derive(Debug, Clone)]
pub struct ReversalDistanceTable {
    reference: Permutation,
    table: Vec<u8>,
}

impl ReversalDistanceTable {
    pub fn build(reference: &Permutation) -> Result<Self> {
        Self::build_with_cap(reference, DEFAULT_REVERSAL_CAP)
    }

    pub fn build_with_cap(reference: &Permutation, cap: usize) -> Result<Self> {
        let n = reference.len();
        if n > cap || n > crate::permutation::MAX_RANK_LEN {
            return Err(Error::CapExceeded { what: "reversal distance table", n, cap });
        }
        let size = factorial(n) as usize;
        let mut table = vec![u8::MAX; size];
        let mut queue = VecDeque::new();
        let start = rank_slice(reference.as_slice());
        table[start as usize] = 0;
        queue.push_back(start);
        let mut current = vec![0usize; n];
        while let Some(r) = queue.pop_front() {
            let d = table[r as usize];
            unrank_into(r, &mut current);
            for i in 0..n {
                for j in i + 1..n {
                    current[i..=j].reverse();
                    let next = rank_slice(&current) as usize;
                    if table[next] == u8::MAX {
                        table[next] = d + 1;
                        queue.push_back(next as u64);
                    }
                    current[i..=j].reverse();
                }
            }
        }
        Ok(Self { reference: reference.clone(), table })
    }

    pub fn n(&self) -> usize {
        self.reference.len()
    }

    pub fn reference(&self) -> &Permutation {
        &self.reference
    }

    /// Distances indexed by rank.
    pub fn entries(&self) -> &[u8] {
        &self.table
    }

    /// Largest distance in the table (the diameter of the reversal graph).
    pub fn max_distance(&self) -> u8 {
        self.table.iter().copied().max().unwrap_or(0)
    }

    /// Minimum number of reversals between `q` and the reference.
    pub fn distance(&self, q: &Permutation) -> Result<u64> {
        check_lengths(q, &self.reference)?;
        Ok(u64::from(self.table[rank_slice(q.as_slice()) as usize]))
    }

    /// Minimum number of reversals between two arbitrary permutations.
    ///
    /// Reversals act on positions, so relabeling the elements of both
    /// permutations by the same bijection preserves the distance. Relabeling by
    /// `reference ∘ p2⁻¹` sends `p2` to the reference, leaving a table lookup.
    pub fn distance_between(&self, p1: &Permutation, p2: &Permutation) -> Result<u64> {
        check_lengths(p1, p2)?;
        check_lengths(p1, &self.reference)?;
        let inv2 = p2.inverse();
        let relabeled: Vec<usize> = p1.iter().map(|&e| self.reference[inv2[e]]).collect();
        Ok(u64::from(self.table[rank_slice(&relabeled) as usize]))
    }
}

pub fn build_reversal_table(n: usize, reference: &Permutation) -> Result<ReversalDistanceTable> {
    if reference.len() != n {
        return Err(Error::LengthMismatch { left: n, right: reference.len() });
    }
    ReversalDistanceTable::build(reference)
}

pub fn reversal_edit(table: &ReversalDistanceTable, q: &Permutation) -> Result<u64> {
    table.distance(q)
}
