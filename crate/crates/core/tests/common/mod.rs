//! Brute-force reference implementations. Nothing here touches the sieve,
//! the S-table or the search code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn in_s(n: u64) -> bool {
    n == 1 || (n != 2 && is_prime(n))
}

/// Linear scan for the least member of S above `x`.
pub fn next_in_s(x: u64) -> u64 {
    let mut s = x + 1;
    while !in_s(s) {
        s += 1;
    }
    s
}

pub fn dot(a: u64, b: u64) -> u64 {
    next_in_s(a.abs_diff(b))
}

pub fn s_upto(bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&n| in_s(n)).collect()
}

/// O(|S|²) fiber enumeration, pairs `(a, b)` with `a > b`.
pub fn fiber(x: u64, bound: u64, include_one: bool) -> Vec<(u64, u64)> {
    let s = s_upto(bound);
    let mut out = Vec::new();
    for &a in &s {
        for &b in &s {
            if a > b && (include_one || b != 1) && dot(a, b) == x {
                out.push((a, b));
            }
        }
    }
    out.sort();
    out
}

/// Minimal rotation/reflection representative, computed by trying all 2n.
pub fn canonical(cycle: &[u64]) -> Vec<u64> {
    let n = cycle.len();
    let mut best: Option<Vec<u64>> = None;
    for start in 0..n {
        for dir in [1isize, -1] {
            let v: Vec<u64> = (0..n as isize)
                .map(|k| cycle[((start as isize + dir * k).rem_euclid(n as isize)) as usize])
                .collect();
            if v[0] == *cycle.iter().min().unwrap() && best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

/// O(|S|⁴) quartet enumeration: every ordered 4-tuple of distinct vertices.
pub fn quartets(bound: u64, include_one: bool) -> Vec<(Vec<u64>, u64)> {
    let s: Vec<u64> = s_upto(bound)
        .into_iter()
        .filter(|&v| include_one || v != 1)
        .collect();
    let n = s.len();
    let d: Vec<Vec<u64>> = s
        .iter()
        .map(|&a| s.iter().map(|&b| dot(a, b)).collect())
        .collect();
    let mut found = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let ids = [i, j, k, l];
                    let distinct: BTreeSet<usize> = ids.into_iter().collect();
                    if distinct.len() != 4 {
                        continue;
                    }
                    let v = d[i][j];
                    if d[j][k] == v && d[k][l] == v && d[l][i] == v {
                        found.insert((canonical(&[s[i], s[j], s[k], s[l]]), v));
                    }
                }
            }
        }
    }
    let mut out: Vec<(Vec<u64>, u64)> = found.into_iter().collect();
    out.sort_by_key(|(c, _)| (*c.iter().max().unwrap(), c.clone()));
    out
}

/// Smallest AP of `n` odd primes ≤ bound by (first, difference).
pub fn ap(n: u64, bound: u64, min_start: u64) -> Option<Vec<u64>> {
    for first in (min_start.max(3)..=bound).filter(|&p| p % 2 == 1 && is_prime(p)) {
        for d in 1..=bound {
            if first + (n - 1) * d > bound {
                break;
            }
            let terms: Vec<u64> = (0..n).map(|k| first + k * d).collect();
            if terms.iter().all(|&t| t % 2 == 1 && is_prime(t)) {
                return Some(terms);
            }
        }
    }
    None
}

/// Triples a < b < c with equal pairwise products.
pub fn triangles(bound: u64) -> Vec<[u64; 3]> {
    let s = s_upto(bound);
    let mut out = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for (j, &b) in s.iter().enumerate().skip(i + 1) {
            for &c in &s[j + 1..] {
                let v = dot(a, b);
                if dot(b, c) == v && dot(a, c) == v {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every fiber at once: one pass over all pairs `a > b` of S ∩ [1, bound],
/// with N looked up in a table filled by [`next_in_s`]. Indexed by x.
pub fn all_fiber_counts(bound: u64, include_one: bool) -> Vec<u64> {
    let s = s_upto(bound);
    let n: Vec<u64> = (0..=bound).map(next_in_s).collect();
    let mut counts = vec![0u64; n[bound as usize] as usize + 1];
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[..i] {
            if include_one || b != 1 {
                counts[n[(a - b) as usize] as usize] += 1;
            }
        }
    }
    counts
}
