use std::collections::BTreeMap;

use rayon::prelude::*;

use super::EqualEdgeCycle;
use crate::carrier::{BoundedLoop, PrimeLoop, SElement};
use crate::error::{Error, Result};

/// Canonical representative of a cycle under rotation and reflection:
/// smallest vertex first, then whichever direction has the smaller second
/// vertex.
pub fn canonical_form(cycle: &[u64]) -> Vec<u64> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<u64> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    if n > 2 && forward[n - 1] < forward[1] {
        std::iter::once(forward[0])
            .chain(forward[1..].iter().rev().copied())
            .collect()
    } else {
        forward
    }
}

fn vertex_list(b: &BoundedLoop, include_one: bool) -> Vec<u64> {
    b.vertices()
        .iter()
        .copied()
        .filter(|&v| include_one || v != 1)
        .collect()
}

fn sort_cycles(mut cycles: Vec<EqualEdgeCycle>) -> Vec<EqualEdgeCycle> {
    cycles.sort_by_cached_key(|c| c.sort_key());
    cycles
}

/// All canonical 4-cycles `a • b = b • c = c • d = d • a` on distinct
/// vertices `≤ bound`, sorted by largest vertex, then vertex sequence.
///
/// For each smallest vertex `a`, its larger neighbours are bucketed by edge
/// value; every pair `b < d` within a bucket is closed by each common
/// neighbour `c > a`. Diagonals are unconstrained.
pub fn find_quartets(
    lp: &PrimeLoop,
    bound: u64,
    edge_value: Option<SElement>,
    include_one: bool,
) -> Result<Vec<EqualEdgeCycle>> {
    let b = BoundedLoop::new(lp, bound)?;
    let verts = vertex_list(&b, include_one);
    let found: Vec<EqualEdgeCycle> = (0..verts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = verts[i];
            let mut buckets: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
            for &y in &verts[i + 1..] {
                let v = b.dot(a, y);
                if edge_value.is_none_or(|e| e.get() == v) {
                    buckets.entry(v).or_default().push(y);
                }
            }
            let mut out = Vec::new();
            for (v, nbrs) in &buckets {
                for (j, &second) in nbrs.iter().enumerate() {
                    for &last in &nbrs[j + 1..] {
                        for third in b.neighbors(second, *v) {
                            if third > a && third != last && b.dot(third, last) == *v {
                                out.push(EqualEdgeCycle::from_canonical_unchecked(
                                    vec![a, second, third, last],
                                    *v,
                                ));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(sort_cycles(found))
}

/// All canonical `n`-cycles with a uniform edge value on distinct vertices
/// `≤ bound`, by depth-first search from each smallest vertex.
pub fn find_equal_edge_cycle(
    lp: &PrimeLoop,
    n: usize,
    bound: u64,
    include_one: bool,
) -> Result<Vec<EqualEdgeCycle>> {
    if n < 3 {
        return Err(Error::invalid("a cycle needs at least three vertices"));
    }
    let b = BoundedLoop::new(lp, bound)?;
    let verts = vertex_list(&b, include_one);
    let found: Vec<EqualEdgeCycle> = (0..verts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = verts[i];
            let mut out = Vec::new();
            for &second in &verts[i + 1..] {
                let v = b.dot(a, second);
                let mut path = vec![a, second];
                close_cycles(&b, &mut path, n, v, include_one, &mut out);
            }
            out
        })
        .collect();
    Ok(sort_cycles(found))
}

fn close_cycles(
    b: &BoundedLoop,
    path: &mut Vec<u64>,
    n: usize,
    v: u64,
    include_one: bool,
    out: &mut Vec<EqualEdgeCycle>,
) {
    let (first, second, last) = (path[0], path[1], *path.last().unwrap());
    let closing = path.len() + 1 == n;
    let next: Vec<u64> = b
        .neighbors(last, v)
        .filter(|&y| y > first && (include_one || y != 1) && !path.contains(&y))
        .filter(|&y| !closing || (y > second && b.dot(y, first) == v))
        .collect();
    for y in next {
        path.push(y);
        if closing {
            out.push(EqualEdgeCycle::from_canonical_unchecked(path.clone(), v));
        } else {
            close_cycles(b, path, n, v, include_one, out);
        }
        path.pop();
    }
}
