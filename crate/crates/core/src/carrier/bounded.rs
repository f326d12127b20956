use std::sync::Arc;

use super::table::{PrimeLoop, STable};
use crate::error::{Error, Result};

/// The loop restricted to vertices `S ∩ [1, bound]`, with `N(d)` tabulated
/// for every difference `0 ≤ d ≤ bound` so that `dot` is a lookup.
#[derive(Debug, Clone)]
pub struct BoundedLoop {
    table: Arc<STable>,
    bound: u64,
    vertex_count: usize,
    next_by_diff: Vec<u64>,
}

impl BoundedLoop {
    pub fn new(lp: &PrimeLoop, bound: u64) -> Result<Self> {
        if bound == 0 {
            return Err(Error::invalid("bound must be at least 1"));
        }
        // N(bound) < 2·bound + 2
        let table = lp.ensure(2 * bound + 2)?;
        let vertex_count = table.upto(bound).len();
        let elements = table.elements();
        let mut next_by_diff = Vec::with_capacity(bound as usize + 1);
        let mut i = 0;
        for d in 0..=bound {
            while elements[i] <= d {
                i += 1;
            }
            next_by_diff.push(elements[i]);
        }
        Ok(BoundedLoop {
            table,
            bound,
            vertex_count,
            next_by_diff,
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn table(&self) -> &STable {
        &self.table
    }

    /// `S ∩ [1, bound]`, ascending.
    pub fn vertices(&self) -> &[u64] {
        &self.table.elements()[..self.vertex_count]
    }

    /// `N(d)` for `d ≤ bound`.
    #[inline]
    pub fn next_in_s(&self, d: u64) -> u64 {
        self.next_by_diff[d as usize]
    }

    /// `a • b` for vertices `a, b ≤ bound`.
    #[inline]
    pub fn dot(&self, a: u64, b: u64) -> u64 {
        self.next_by_diff[a.abs_diff(b) as usize]
    }

    /// Differences `d` with `N(d) = v` form the interval `[pred(v), v − 1]`;
    /// returns it clamped to positive differences, or `None` if empty.
    pub fn diff_window(&self, v: u64) -> Option<(u64, u64)> {
        let lo = self.table.predecessor(v)?.max(1);
        let hi = v.checked_sub(1)?;
        (lo <= hi).then_some((lo, hi))
    }

    /// Vertices `y` with `x • y = v`, ascending.
    pub fn neighbors(&self, x: u64, v: u64) -> impl Iterator<Item = u64> + '_ {
        let verts = self.vertices();
        let (below, above) = match self.diff_window(v) {
            Some((lo, hi)) => {
                let below = if x > lo {
                    let from = verts.partition_point(|&y| y < x.saturating_sub(hi));
                    let to = verts.partition_point(|&y| y <= x - lo);
                    &verts[from..to]
                } else {
                    &verts[0..0]
                };
                let from = verts.partition_point(|&y| y < x + lo);
                let to = verts.partition_point(|&y| y <= x + hi);
                (below, &verts[from..to])
            }
            None => (&verts[0..0], &verts[0..0]),
        };
        below.iter().chain(above).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_matches_prime_loop() {
        let lp = PrimeLoop::with_bound(10).unwrap();
        let b = BoundedLoop::new(&lp, 500).unwrap();
        for d in 0..=500 {
            assert_eq!(b.next_in_s(d), lp.next_in_s(d).get());
        }
        assert_eq!(b.vertices().last(), Some(&499));
        assert_eq!(b.dot(41, 47), 7);
    }

    #[test]
    fn neighbors_are_exactly_the_fiber() {
        let lp = PrimeLoop::new();
        let b = BoundedLoop::new(&lp, 300).unwrap();
        for &x in b.vertices() {
            for v in [1, 3, 5, 7, 11, 97, 127, 293] {
                let fast: Vec<u64> = b.neighbors(x, v).collect();
                let slow: Vec<u64> = b
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&y| y != x && b.dot(x, y) == v)
                    .collect();
                assert_eq!(fast, slow, "x = {x}, v = {v}");
            }
        }
    }
}
