use rayon::prelude::*;

use super::{Statement, VerificationReport};
use crate::carrier::{BoundedLoop, PrimeLoop};
use crate::error::{Error, Result};

/// Checks every triple `a < b < c` in `S ∩ [1, bound]` for
/// `a • b = b • c = a • c`.
pub fn verify_no_equal_triangle(lp: &PrimeLoop, bound: u64) -> Result<VerificationReport> {
    let b = BoundedLoop::new(lp, bound)?;
    let verts = b.vertices();
    let violations: Vec<Vec<u64>> = (0..verts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = verts[i];
            let mut out = Vec::new();
            for j in i + 1..verts.len() {
                let mid = verts[j];
                let v = b.dot(a, mid);
                for &c in &verts[j + 1..] {
                    if b.dot(mid, c) == v && b.dot(a, c) == v {
                        out.push(vec![a, mid, c]);
                    }
                }
            }
            out
        })
        .collect();
    let n = verts.len() as u64;
    let checked = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
    Ok(VerificationReport {
        statement: Statement::NoTriangle,
        bound,
        checked,
        violations,
    })
}

/// For every twin pair `(p, p + 2)` with `p + 2 ≤ bound` and every `x < p`
/// in `S`, checks that `p • x` and `(p + 2) • x` are equal or adjacent.
pub fn verify_twin_adjacency(lp: &PrimeLoop, bound: u64) -> Result<VerificationReport> {
    if bound < 5 {
        return Err(Error::invalid("twin adjacency needs bound ≥ 5"));
    }
    let b = BoundedLoop::new(lp, bound)?;
    let verts = b.vertices();
    let table = b.table();
    let twins: Vec<usize> = (1..verts.len().saturating_sub(1))
        .filter(|&i| verts[i + 1] - verts[i] == 2)
        .collect();
    let per_twin: Vec<(u64, Vec<Vec<u64>>)> = twins
        .par_iter()
        .map(|&i| {
            let (p, q) = (verts[i], verts[i + 1]);
            let mut bad = Vec::new();
            for &x in &verts[..i] {
                let (u, w) = (b.dot(p, x), b.dot(q, x));
                let ok = u == w || table.adjacent(u, w).unwrap_or(false);
                if !ok {
                    bad.push(vec![p, q, x]);
                }
            }
            (i as u64, bad)
        })
        .collect();
    let checked = per_twin.iter().map(|(i, _)| i).sum();
    Ok(VerificationReport {
        statement: Statement::TwinAdjacency,
        bound,
        checked,
        violations: per_twin.into_iter().flat_map(|(_, bad)| bad).collect(),
    })
}

/// For every even `t` in `[2, t_max]`, checks that the ranks of `N(t)` and
/// `N(t + 2)` differ by 0 or 1.
pub fn verify_lemma_adjacent(lp: &PrimeLoop, t_max: u64) -> Result<VerificationReport> {
    if t_max < 2 || !t_max.is_multiple_of(2) {
        return Err(Error::invalid("t_max must be an even integer ≥ 2"));
    }
    let table = lp.ensure(2 * t_max + 6)?;
    let rank_of_next = |t: u64| -> Result<usize> {
        let n = table.successor(t).expect("table covers N(t)");
        table.rank(n)
    };
    let mut violations = Vec::new();
    let mut checked = 0;
    for t in (2..=t_max).step_by(2) {
        let (r0, r1) = (rank_of_next(t)?, rank_of_next(t + 2)?);
        if !(r1 == r0 || r1 == r0 + 1) {
            violations.push(vec![t, table.elements()[r0], table.elements()[r1]]);
        }
        checked += 1;
    }
    Ok(VerificationReport {
        statement: Statement::LemmaAdjacent,
        bound: t_max,
        checked,
        violations,
    })
}

/// Checks `N(t) < 2t` for every integer `t` in `[2, t_max]`.
pub fn verify_bertrand_bound(lp: &PrimeLoop, t_max: u64) -> Result<VerificationReport> {
    if t_max < 2 {
        return Err(Error::invalid("t_max must be at least 2"));
    }
    let table = lp.ensure(2 * t_max + 2)?;
    let elements = table.elements();
    let mut violations = Vec::new();
    let mut i = 0;
    for t in 2..=t_max {
        while elements[i] <= t {
            i += 1;
        }
        if elements[i] >= 2 * t {
            violations.push(vec![t, elements[i]]);
        }
    }
    Ok(VerificationReport {
        statement: Statement::BertrandBound,
        bound: t_max,
        checked: t_max - 1,
        violations,
    })
}
