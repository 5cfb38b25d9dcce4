//! The permutation value type and its elementary algebra.

use std::fmt;
use std::ops::Index;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Largest length whose rank fits in a `u64` (20! < 2^63).
pub const MAX_RANK_LEN: usize = 20;

/// A bijective arrangement of `0..n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elements: Vec<usize>,
}

impl Permutation {
    /// Validates that `elements` is a permutation of `0..elements.len()`.
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidPermutation { len: 0, reason: "empty".into() });
        }
        let mut seen = vec![false; n];
        for &e in &elements {
            if e >= n {
                return Err(Error::InvalidPermutation {
                    len: n,
                    reason: format!("element {e} out of range"),
                });
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidPermutation { len: n, reason: format!("element {e} repeated") });
            }
        }
        Ok(Self { elements })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation length must be positive");
        Self { elements: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; a permutation has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.elements.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.elements
    }

    /// Mutable access for operators that preserve the bijection.
    pub(crate) fn elements_mut(&mut self) -> &mut [usize] {
        &mut self.elements
    }

    /// `q` with `q[p[i]] = i`.
    pub fn inverse(&self) -> Permutation {
        Permutation { elements: inverse_of(&self.elements) }
    }

    pub fn reversed(&self) -> Permutation {
        let mut elements = self.elements.clone();
        elements.reverse();
        Permutation { elements }
    }

    /// Left rotation by `k` positions.
    pub fn rotated(&self, k: usize) -> Permutation {
        let mut elements = self.elements.clone();
        let n = elements.len();
        elements.rotate_left(k % n);
        Permutation { elements }
    }

    /// Lexicographic successor, or `None` for the last permutation.
    pub fn next_lexicographic(&self) -> Option<Permutation> {
        let mut next = self.clone();
        next.advance_lexicographic().then_some(next)
    }

    /// Steps to the lexicographic successor in place; returns false (leaving
    /// `self` untouched) when `self` is already the last permutation.
    pub fn advance_lexicographic(&mut self) -> bool {
        next_permutation(&mut self.elements)
    }

    /// Index in `0..n!` in lexicographic order, via the Lehmer code.
    pub fn rank(&self) -> Result<u64> {
        if self.len() > MAX_RANK_LEN {
            return Err(Error::CapExceeded { what: "permutation rank", n: self.len(), cap: MAX_RANK_LEN });
        }
        Ok(rank_slice(&self.elements))
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, rank: u64) -> Result<Permutation> {
        if n == 0 || n > MAX_RANK_LEN {
            return Err(Error::CapExceeded { what: "permutation unrank", n, cap: MAX_RANK_LEN });
        }
        if rank >= factorial(n) {
            return Err(Error::InvalidParameter(format!("rank {rank} out of range for n = {n}")));
        }
        let mut elements = vec![0; n];
        unrank_into(rank, &mut elements);
        Ok(Permutation { elements })
    }

    /// Uniformly random permutation of length `n` (Fisher–Yates).
    pub fn random(n: usize, rng: &mut RandomSource) -> Result<Permutation> {
        if n == 0 {
            return Err(Error::TooShort { what: "random permutation", min: 1, len: 0 });
        }
        let mut elements: Vec<usize> = (0..n).collect();
        elements.shuffle(rng);
        Ok(Permutation { elements })
    }

    /// All `n!` permutations in lexicographic order, starting at the identity.
    pub fn lexicographic(n: usize) -> Lexicographic {
        Lexicographic { next: Some(Permutation::identity(n)) }
    }
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn random_permutation(n: usize, rng: &mut RandomSource) -> Result<Permutation> {
    Permutation::random(n, rng)
}

/// Number of cycles, fixed points included, of the position map `i -> p1⁻¹(p2(i))`.
pub fn cycle_count(p1: &Permutation, p2: &Permutation) -> Result<usize> {
    check_lengths(p1, p2)?;
    let inv1 = inverse_of(p1.as_slice());
    let n = p1.len();
    let mut visited = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = inv1[p2.elements[i]];
        }
    }
    Ok(cycles)
}

pub(crate) fn check_lengths(p1: &Permutation, p2: &Permutation) -> Result<()> {
    if p1.len() != p2.len() {
        return Err(Error::LengthMismatch { left: p1.len(), right: p2.len() });
    }
    Ok(())
}

pub(crate) fn inverse_of(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &e) in p.iter().enumerate() {
        inv[e] = i;
    }
    inv
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Lehmer-code rank of a permutation slice of length at most [`MAX_RANK_LEN`].
pub(crate) fn rank_slice(p: &[usize]) -> u64 {
    let n = p.len();
    debug_assert!(n <= MAX_RANK_LEN);
    // bit e set while element e is unused; Horner form of sum(c_i * (n-1-i)!)
    let mut unused: u64 = (1u64 << n) - 1;
    let mut acc = 0u64;
    for (i, &e) in p.iter().enumerate() {
        let smaller = (unused & ((1u64 << e) - 1)).count_ones() as u64;
        unused &= !(1u64 << e);
        acc = acc * (n - i) as u64 + smaller;
    }
    acc
}

pub(crate) fn unrank_into(mut rank: u64, out: &mut [usize]) {
    let n = out.len();
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        digits[i] = (rank % radix) as usize;
        rank /= radix;
    }
    let mut unused: u64 = (1u64 << n) - 1;
    for (slot, &d) in out.iter_mut().zip(&digits) {
        // select the d-th set bit of `unused`
        let mut bits = unused;
        for _ in 0..d {
            bits &= bits - 1;
        }
        let e = bits.trailing_zeros() as usize;
        *slot = e;
        unused &= !(1u64 << e);
    }
}

impl Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.elements[i]
    }
}

impl AsRef<[usize]> for Permutation {
    fn as_ref(&self) -> &[usize] {
        &self.elements
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements)
    }
}

pub struct Lexicographic {
    next: Option<Permutation>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = current.next_lexicographic();
        Some(current)
    }
}
