//! Randomized mutation operators over permutations.
//!
//! Every operator changes its input: segment shuffles reject the unchanged
//! arrangement and the geometric operators pick only non-trivial moves.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rng::RandomSource;

pub const DEFAULT_KMAX: usize = 10;
pub const DEFAULT_U: f64 = 1.0 / 3.0;

/// Registry names of the operators.
pub const OPERATOR_NAMES: [&str; 10] =
    ["adjswap", "swap", "insertion", "reversal", "3opt", "blockmove", "blockswap", "cycle", "scramble", "uscramble"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MutationOperator {
    AdjSwap,
    Swap,
    Insertion,
    Reversal,
    ThreeOpt,
    BlockMove,
    BlockSwap,
    Cycle { kmax: usize },
    Scramble,
    UniformScramble { u: f64 },
}

impl MutationOperator {
    pub fn all() -> Vec<MutationOperator> {
        OPERATOR_NAMES.iter().map(|n| n.parse().expect("registry name")).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            MutationOperator::AdjSwap => "adjswap",
            MutationOperator::Swap => "swap",
            MutationOperator::Insertion => "insertion",
            MutationOperator::Reversal => "reversal",
            MutationOperator::ThreeOpt => "3opt",
            MutationOperator::BlockMove => "blockmove",
            MutationOperator::BlockSwap => "blockswap",
            MutationOperator::Cycle { .. } => "cycle",
            MutationOperator::Scramble => "scramble",
            MutationOperator::UniformScramble { .. } => "uscramble",
        }
    }

    /// Shortest permutation the operator accepts.
    pub fn min_len(&self) -> usize {
        match self {
            MutationOperator::ThreeOpt => 4,
            _ => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MutationOperator::Cycle { kmax } if kmax < 2 => {
                Err(Error::InvalidParameter(format!("cycle kmax must be at least 2, got {kmax}")))
            }
            MutationOperator::UniformScramble { u } if !(u > 0.0 && u <= 1.0) => {
                Err(Error::InvalidParameter(format!("uniform scramble U must lie in (0, 1], got {u}")))
            }
            _ => Ok(()),
        }
    }

    /// Mutates `p` in place.
    pub fn apply(&self, p: &mut Permutation, rng: &mut RandomSource) -> Result<()> {
        self.validate()?;
        let n = p.len();
        if n < self.min_len() {
            return Err(Error::TooShort { what: self.name(), min: self.min_len(), len: n });
        }
        let a = p.elements_mut();
        match *self {
            MutationOperator::AdjSwap => adj_swap(a, rng),
            MutationOperator::Swap => swap(a, rng),
            MutationOperator::Insertion => insertion(a, rng),
            MutationOperator::Reversal => reversal(a, rng),
            MutationOperator::ThreeOpt => three_opt(a, rng),
            MutationOperator::BlockMove => block_move(a, rng),
            MutationOperator::BlockSwap => block_swap(a, rng),
            MutationOperator::Cycle { kmax } => {
                cycle(a, kmax, rng);
            }
            MutationOperator::Scramble => scramble(a, rng),
            MutationOperator::UniformScramble { u } => uniform_scramble(a, u, rng),
        }
        Ok(())
    }

    /// Returns a mutated copy of `p`.
    pub fn mutate(&self, p: &Permutation, rng: &mut RandomSource) -> Result<Permutation> {
        let mut out = p.clone();
        self.apply(&mut out, rng)?;
        Ok(out)
    }

    /// Parses a comma-separated operator list such as `swap,cycle:5,uscramble:0.25`.
    pub fn parse_list(list: &str) -> Result<Vec<MutationOperator>> {
        list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
    }
}

impl FromStr for MutationOperator {
    type Err = Error;

    /// Accepts registry names with an optional `:parameter` suffix for
    /// `cycle` (kmax) and `uscramble` (U).
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let bad_param = || Error::InvalidParameter(format!("bad parameter in operator `{s}`"));
        let op = match (name, param) {
            ("adjswap", None) => MutationOperator::AdjSwap,
            ("swap", None) => MutationOperator::Swap,
            ("insertion", None) => MutationOperator::Insertion,
            ("reversal", None) => MutationOperator::Reversal,
            ("3opt", None) => MutationOperator::ThreeOpt,
            ("blockmove", None) => MutationOperator::BlockMove,
            ("blockswap", None) => MutationOperator::BlockSwap,
            ("scramble", None) => MutationOperator::Scramble,
            ("cycle", None) => MutationOperator::Cycle { kmax: DEFAULT_KMAX },
            ("cycle", Some(k)) => MutationOperator::Cycle { kmax: k.parse().map_err(|_| bad_param())? },
            ("uscramble", None) => MutationOperator::UniformScramble { u: DEFAULT_U },
            ("uscramble", Some(u)) => MutationOperator::UniformScramble { u: u.parse().map_err(|_| bad_param())? },
            (n, Some(_)) if OPERATOR_NAMES.contains(&n) => return Err(bad_param()),
            _ => return Err(Error::UnknownOperator(s.to_string())),
        };
        op.validate()?;
        Ok(op)
    }
}

impl fmt::Display for MutationOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationOperator::Cycle { kmax } if *kmax != DEFAULT_KMAX => write!(f, "cycle:{kmax}"),
            MutationOperator::UniformScramble { u } if *u != DEFAULT_U => write!(f, "uscramble:{u}"),
            other => f.write_str(other.name()),
        }
    }
}

fn adj_swap(a: &mut [usize], rng: &mut RandomSource) {
    let i = rng.below(a.len() - 1);
    a.swap(i, i + 1);
}

fn swap(a: &mut [usize], rng: &mut RandomSource) {
    let (i, j) = rng.distinct_pair(a.len());
    a.swap(i, j);
}

fn insertion(a: &mut [usize], rng: &mut RandomSource) {
    let from = rng.below(a.len());
    let mut to = rng.below(a.len() - 1);
    if to >= from {
        to += 1;
    }
    if from < to {
        a[from..=to].rotate_left(1);
    } else {
        a[to..=from].rotate_right(1);
    }
}

fn reversal(a: &mut [usize], rng: &mut RandomSource) {
    let (i, j) = rng.distinct_pair(a.len());
    a[i..=j].reverse();
}

/// Removes three distinct edges of the cyclic tour and reconnects the two
/// free segments in one of the seven non-identity ways, chosen uniformly.
/// Reconnections that degenerate to the input (length-one segments) are redrawn.
fn three_opt(a: &mut [usize], rng: &mut RandomSource) {
    let n = a.len();
    loop {
        let mut cuts = [rng.below(n), rng.below(n), rng.below(n)];
        cuts.sort_unstable();
        if cuts[0] == cuts[1] || cuts[1] == cuts[2] {
            continue;
        }
        let case = 1 + rng.below(7);
        if apply_three_opt_case(a, cuts, case) {
            return;
        }
    }
}

/// Rewrites `a[i..k]`, made of segments `b = a[i..j]` and `c = a[j..k]`,
/// according to `case` in `1..=7`. Returns false (leaving `a` unchanged) if
/// the result would equal the input.
pub(crate) fn apply_three_opt_case(a: &mut [usize], [i, j, k]: [usize; 3], case: usize) -> bool {
    let (b, c) = (a[i..j].to_vec(), a[j..k].to_vec());
    let rev = |s: &[usize]| s.iter().rev().copied().collect::<Vec<_>>();
    let (first, second) = match case {
        1 => (rev(&b), c.clone()),
        2 => (b.clone(), rev(&c)),
        3 => (rev(&b), rev(&c)),
        4 => (c.clone(), b.clone()),
        5 => (rev(&c), b.clone()),
        6 => (c.clone(), rev(&b)),
        7 => (rev(&c), rev(&b)),
        _ => unreachable!("three-opt case out of range"),
    };
    let changed = first.iter().chain(&second).ne(b.iter().chain(&c));
    if changed {
        a[i..i + first.len()].copy_from_slice(&first);
        a[i + first.len()..k].copy_from_slice(&second);
    }
    changed
}

/// Swaps the adjacent blocks `a[i..j]` and `a[j..k]` for uniform `i < j < k` in `0..=n`.
fn block_move(a: &mut [usize], rng: &mut RandomSource) {
    let n = a.len();
    let [i, j, k] = loop {
        let mut idx = [rng.below(n + 1), rng.below(n + 1), rng.below(n + 1)];
        idx.sort_unstable();
        if idx[0] < idx[1] && idx[1] < idx[2] {
            break idx;
        }
    };
    a[i..k].rotate_left(j - i);
}

/// Exchanges `a[i..=j]` and `a[k..=l]`, from four uniform indices sorted so
/// that `i <= j < k <= l`.
fn block_swap(a: &mut [usize], rng: &mut RandomSource) {
    let n = a.len();
    let [i, j, k, l] = loop {
        let mut idx = [rng.below(n), rng.below(n), rng.below(n), rng.below(n)];
        idx.sort_unstable();
        if idx[1] < idx[2] {
            break idx;
        }
    };
    let (left, right) = (j + 1 - i, l + 1 - k);
    // [L M R] -> [R M L]
    a[i..=l].rotate_left(left);
    // now [M R L]; rotate the M R prefix so R comes first
    let middle = k - j - 1;
    a[i..i + middle + right].rotate_left(middle);
    // now [R M L]
}

/// Picks `k` uniform in `[2, min(kmax, n)]` and `k` distinct positions, and
/// rotates their elements one step along that cycle. Returns `k`.
pub(crate) fn cycle(a: &mut [usize], kmax: usize, rng: &mut RandomSource) -> usize {
    let n = a.len();
    let top = kmax.min(n);
    let k = 2 + rng.below(top - 1);
    let positions = rand::seq::index::sample(rng, n, k).into_vec();
    let first = a[positions[0]];
    for w in 0..k - 1 {
        a[positions[w]] = a[positions[w + 1]];
    }
    a[positions[k - 1]] = first;
    k
}

fn shuffle_changed(values: &mut [usize], rng: &mut RandomSource) {
    let original = values.to_vec();
    loop {
        values.shuffle(rng);
        if values != original.as_slice() {
            return;
        }
    }
}

fn scramble(a: &mut [usize], rng: &mut RandomSource) {
    let (i, j) = rng.distinct_pair(a.len());
    shuffle_changed(&mut a[i..=j], rng);
}

fn uniform_scramble(a: &mut [usize], u: f64, rng: &mut RandomSource) {
    let positions: Vec<usize> = loop {
        let chosen: Vec<usize> = (0..a.len()).filter(|_| rng.unit() < u).collect();
        if chosen.len() >= 2 {
            break chosen;
        }
    };
    let mut values: Vec<usize> = positions.iter().map(|&i| a[i]).collect();
    shuffle_changed(&mut values, rng);
    for (&i, v) in positions.iter().zip(values) {
        a[i] = v;
    }
}
