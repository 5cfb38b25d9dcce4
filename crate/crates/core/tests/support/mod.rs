//! Independent reference implementations used as test oracles: literal,
//! quadratic-time readings of each distance definition and breadth-first
//! searches over explicit edit moves.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

pub type Move = fn(&[usize]) -> Vec<Vec<usize>>;

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for e in 0..used.len() {
            if !used[e] {
                used[e] = true;
                prefix.push(e);
                extend(prefix, used, out);
                prefix.pop();
                used[e] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn adjacent_swaps(p: &[usize]) -> Vec<Vec<usize>> {
    (0..p.len() - 1)
        .map(|i| {
            let mut q = p.to_vec();
            q.swap(i, i + 1);
            q
        })
        .collect()
}

pub fn swaps(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let mut q = p.to_vec();
            q.swap(i, j);
            out.push(q);
        }
    }
    out
}

pub fn reinsertions(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j {
                let mut q = p.to_vec();
                let e = q.remove(i);
                q.insert(j, e);
                out.push(q);
            }
        }
    }
    out
}

pub fn reversals(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let mut q = p.to_vec();
            q[i..=j].reverse();
            out.push(q);
        }
    }
    out
}

/// Minimum number of moves from `start` to every reachable permutation.
pub fn bfs(start: &[usize], moves: Move) -> HashMap<Vec<usize>, u64> {
    let mut dist = HashMap::new();
    dist.insert(start.to_vec(), 0);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for q in moves(&p) {
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

fn position(p: &[usize], e: usize) -> usize {
    p.iter().position(|&x| x == e).unwrap()
}

pub fn exact_match(a: &[usize], b: &[usize]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
}

pub fn kendall_tau(a: &[usize], b: &[usize]) -> u64 {
    let n = a.len();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if position(a, x) > position(a, y) && position(b, x) < position(b, y) {
                count += 1;
            }
        }
    }
    count
}

fn undirected_edges(p: &[usize], cyclic: bool) -> HashSet<(usize, usize)> {
    let n = p.len();
    let count = if cyclic && n > 1 { n } else { n - 1 };
    (0..count)
        .map(|i| {
            let (x, y) = (p[i], p[(i + 1) % n]);
            (x.min(y), x.max(y))
        })
        .collect()
}

fn directed_edges(p: &[usize], cyclic: bool) -> HashSet<(usize, usize)> {
    let n = p.len();
    let count = if cyclic && n > 1 { n } else { n - 1 };
    (0..count).map(|i| (p[i], p[(i + 1) % n])).collect()
}

/// Edges of `a` missing from `b`, counted over `a`'s edge list.
fn missing<F: Fn(&[usize]) -> HashSet<(usize, usize)>>(a: &[usize], b: &[usize], edges: F, directed: bool, cyclic: bool) -> u64 {
    let present = edges(b);
    let n = a.len();
    let count = if cyclic && n > 1 { n } else { n - 1 };
    (0..count)
        .filter(|&i| {
            let (x, y) = (a[i], a[(i + 1) % n]);
            let e = if directed { (x, y) } else { (x.min(y), x.max(y)) };
            !present.contains(&e)
        })
        .count() as u64
}

pub fn acyclic_edge(a: &[usize], b: &[usize]) -> u64 {
    missing(a, b, |p| undirected_edges(p, false), false, false)
}

/// For n = 2 the single cyclic edge appears twice; counting over positions
/// keeps agreement with the position-based definition.
pub fn cyclic_edge(a: &[usize], b: &[usize]) -> u64 {
    missing(a, b, |p| undirected_edges(p, true), false, true)
}

pub fn rtype(a: &[usize], b: &[usize]) -> u64 {
    missing(a, b, |p| directed_edges(p, false), true, false)
}

pub fn cyclic_rtype(a: &[usize], b: &[usize]) -> u64 {
    missing(a, b, |p| directed_edges(p, true), true, true)
}

pub fn deviation(a: &[usize], b: &[usize]) -> u64 {
    (0..a.len()).map(|e| position(a, e).abs_diff(position(b, e)) as u64).sum()
}

pub fn squared_deviation(a: &[usize], b: &[usize]) -> u64 {
    (0..a.len()).map(|e| (position(a, e).abs_diff(position(b, e)) as u64).pow(2)).sum()
}

pub fn lee(a: &[usize], b: &[usize]) -> u64 {
    let n = a.len();
    (0..n)
        .map(|e| {
            let d = position(a, e).abs_diff(position(b, e));
            d.min(n - d) as u64
        })
        .sum()
}

/// Cycles of the position map, by repeated search rather than an inverse table.
pub fn interchange(a: &[usize], b: &[usize]) -> u64 {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if !seen[s] {
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = position(a, b[i]);
            }
        }
    }
    (n - cycles) as u64
}

/// n minus the longest common subsequence, by the quadratic table.
pub fn reinsertion(a: &[usize], b: &[usize]) -> u64 {
    let n = a.len();
    let mut t = vec![vec![0usize; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            t[i][j] = if a[i - 1] == b[j - 1] { t[i - 1][j - 1] + 1 } else { t[i - 1][j].max(t[i][j - 1]) };
        }
    }
    (n - t[n][n]) as u64
}

/// Memoized recursion over suffixes for unit-cost edit distance.
pub fn levenshtein(a: &[usize], b: &[usize]) -> u64 {
    fn go(a: &[usize], b: &[usize], memo: &mut HashMap<(usize, usize), u64>) -> u64 {
        if a.is_empty() || b.is_empty() {
            return (a.len() + b.len()) as u64;
        }
        if let Some(&v) = memo.get(&(a.len(), b.len())) {
            return v;
        }
        let v = if a[0] == b[0] {
            go(&a[1..], &b[1..], memo)
        } else {
            1 + go(&a[1..], b, memo).min(go(a, &b[1..], memo)).min(go(&a[1..], &b[1..], memo))
        };
        memo.insert((a.len(), b.len()), v);
        v
    }
    go(a, b, &mut HashMap::new())
}

/// Oracle for a measure by registry name, where one exists.
pub fn by_name(name: &str) -> Option<fn(&[usize], &[usize]) -> u64> {
    Some(match name {
        "exact-match" => exact_match,
        "interchange" => interchange,
        "acyclic-edge" => acyclic_edge,
        "cyclic-edge" => cyclic_edge,
        "rtype" => rtype,
        "cyclic-rtype" => cyclic_rtype,
        "kendall-tau" => kendall_tau,
        "reinsertion" => reinsertion,
        "deviation" => deviation,
        "squared-deviation" => squared_deviation,
        "lee" => lee,
        "edit" => levenshtein,
        _ => return None,
    })
}

use permscape::{DistanceKind, Measure, Permutation, MEASURE_NAMES};

fn perms(n: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().map(|v| Permutation::new(v).unwrap()).collect()
}

/// Checks each measure against its declared kind over every triple of Sₙ:
/// metrics get identity of indiscernibles, symmetry and the triangle
/// inequality; pseudo-metrics symmetry and the triangle inequality;
/// semimetrics identity and symmetry, plus confirmation that some triple
/// violates the triangle inequality. Returns the number of measures checked.
pub fn check_metric_axioms(n: usize) -> Result<usize, String> {
    let all = perms(n);
    let mut checked = 0;
    for name in MEASURE_NAMES {
        let m = Measure::from_name(name, n).map_err(|e| e.to_string())?;
        let k = all.len();
        let mut d = vec![0.0f64; k * k];
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                d[i * k + j] = m.evaluate(a, b).map_err(|e| e.to_string())?;
            }
        }
        let kind = m.kind();
        let separates = kind != DistanceKind::PseudoMetric;
        let triangle = kind != DistanceKind::Semimetric;
        let mut triangle_violated = false;
        for i in 0..k {
            for j in 0..k {
                let dij = d[i * k + j];
                if dij < 0.0 {
                    return Err(format!("{name}: negative distance {dij}"));
                }
                if dij != d[j * k + i] {
                    return Err(format!("{name}: asymmetric on {:?}, {:?}", all[i], all[j]));
                }
                if i == j && dij != 0.0 {
                    return Err(format!("{name}: d(p, p) = {dij} for {:?}", all[i]));
                }
                if separates && i != j && dij == 0.0 {
                    return Err(format!("{name}: zero distance between {:?} and {:?}", all[i], all[j]));
                }
                for l in 0..k {
                    if d[i * k + l] > dij + d[j * k + l] + 1e-9 {
                        if triangle {
                            return Err(format!("{name}: triangle fails on {:?}, {:?}, {:?}", all[i], all[j], all[l]));
                        }
                        triangle_violated = true;
                    }
                }
            }
        }
        if !triangle && !triangle_violated && n >= 4 {
            return Err(format!("{name}: declared a semimetric but satisfies the triangle inequality on S{n}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Rotation and reversal invariances of the pseudo-metrics over every p in Sₙ.
pub fn check_pseudo_invariances(n: usize) -> Result<usize, String> {
    let m = |name: &str| Measure::from_name(name, n).unwrap();
    let (acyclic, cyclic, crtype) = (m("acyclic-edge"), m("cyclic-edge"), m("cyclic-rtype"));
    let mut checks = 0;
    for p in perms(n) {
        let zero = |measure: &Measure, q: &Permutation| measure.evaluate_exact(&p, q).unwrap() == Some(0);
        if !zero(&acyclic, &p.reversed()) || !zero(&cyclic, &p.reversed()) {
            return Err(format!("reversal invariance fails for {p:?}"));
        }
        for k in 0..n {
            let r = p.rotated(k);
            if !zero(&cyclic, &r) || !zero(&crtype, &r) {
                return Err(format!("rotation invariance fails for {p:?} by {k}"));
            }
            checks += 2;
        }
        checks += 2;
    }
    Ok(checks)
}

/// Exact agreement of kendall tau, interchange, reinsertion and reversal edit
/// with breadth-first searches over the corresponding moves, for all pairs of
/// Sₙ. Returns the number of pairs compared per measure.
pub fn check_bfs_oracles(n: usize) -> Result<usize, String> {
    let all = all_permutations(n);
    let cases: [(&str, Move); 4] =
        [("kendall-tau", adjacent_swaps), ("interchange", swaps), ("reinsertion", reinsertions), ("reversal-edit", reversals)];
    for (name, moves) in cases {
        let m = Measure::from_name(name, n).map_err(|e| e.to_string())?;
        for a in &all {
            let dist = bfs(a, moves);
            if dist.len() != all.len() {
                return Err(format!("{name}: move set does not connect S{n}"));
            }
            let pa = Permutation::new(a.clone()).unwrap();
            for b in &all {
                let pb = Permutation::new(b.clone()).unwrap();
                let got = m.evaluate_exact(&pa, &pb).map_err(|e| e.to_string())?;
                if got != Some(dist[b]) {
                    return Err(format!("{name}({a:?}, {b:?}) = {got:?}, BFS gives {}", dist[b]));
                }
            }
        }
    }
    Ok(all.len() * all.len())
}
