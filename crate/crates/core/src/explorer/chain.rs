use rayon::prelude::*;

use super::Chain;
use crate::carrier::{BoundedLoop, PrimeLoop, SElement};
use crate::error::{Error, Result};

/// The arithmetic progression of `n` odd primes `≤ bound` that is smallest
/// by `(first element, common difference)`, starting at or after
/// `min_start`. 1 and 2 never take part.
pub fn find_ap_chain(
    lp: &PrimeLoop,
    n: usize,
    bound: u64,
    min_start: Option<u64>,
) -> Result<Chain> {
    if n < 2 {
        return Err(Error::invalid("chain length must be at least 2"));
    }
    let b = BoundedLoop::new(lp, bound)?;
    let table = b.table();
    let in_s = |v: u64| table.contains(v) == Some(true);
    let span = n as u64 - 1;
    let min_start = min_start.unwrap_or(3).max(3);
    for &first in b.vertices().iter().filter(|&&p| p >= min_start) {
        let mut d = 2;
        while first + span * d <= bound {
            if (1..=span).all(|k| in_s(first + k * d)) {
                let values: Vec<u64> = (0..=span).map(|k| first + k * d).collect();
                return Chain::from_elements(lp, &values);
            }
            d += 2;
        }
    }
    Err(Error::NotFound {
        what: "arithmetic progression of odd primes",
        range: min_start..=bound,
    })
}

/// The lexicographically smallest sequence of `n` distinct elements of
/// `S ∩ [1, bound]` whose consecutive products are all equal (to
/// `edge_value` when given). The element 1 is skipped unless
/// `include_one` is set.
pub fn find_equal_edge_path(
    lp: &PrimeLoop,
    n: usize,
    bound: u64,
    edge_value: Option<SElement>,
    include_one: bool,
) -> Result<Chain> {
    if n < 2 {
        return Err(Error::invalid("path length must be at least 2"));
    }
    let b = BoundedLoop::new(lp, bound)?;
    let verts: Vec<u64> = b
        .vertices()
        .iter()
        .copied()
        .filter(|&v| include_one || v != 1)
        .collect();

    let found = verts.par_iter().find_map_first(|&first| {
        let mut path = vec![first];
        match edge_value {
            Some(v) => extend_path(&b, &mut path, n, v.get(), include_one).then_some(path),
            None => verts.iter().find_map(|&second| {
                if second == first {
                    return None;
                }
                let mut path = vec![first, second];
                let v = b.dot(first, second);
                extend_path(&b, &mut path, n, v, include_one).then_some(path)
            }),
        }
    });
    match found {
        Some(values) => Chain::from_elements(lp, &values),
        None => Err(Error::NotFound {
            what: "equal-edge path",
            range: 1..=bound,
        }),
    }
}

/// Depth-first extension in ascending neighbour order; the first complete
/// path found is the lexicographically smallest.
fn extend_path(b: &BoundedLoop, path: &mut Vec<u64>, n: usize, v: u64, include_one: bool) -> bool {
    if path.len() == n {
        return true;
    }
    let last = *path.last().unwrap();
    let candidates: Vec<u64> = b
        .neighbors(last, v)
        .filter(|&y| (include_one || y != 1) && !path.contains(&y))
        .collect();
    for y in candidates {
        path.push(y);
        if extend_path(b, path, n, v, include_one) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: u64) -> Option<SElement> {
        Some(SElement::new(v).unwrap())
    }

    #[test]
    fn ap_examples() {
        let lp = PrimeLoop::new();
        let c = find_ap_chain(&lp, 4, 60, None).unwrap();
        assert_eq!(c.values(), [5, 11, 17, 23]);
        assert_eq!((c.edge_value.get(), c.common_difference), (7, Some(6)));
        let c = find_ap_chain(&lp, 4, 60, Some(41)).unwrap();
        assert_eq!(c.values(), [41, 47, 53, 59]);
        assert_eq!(c.edge_value.get(), 7);
        let c = find_ap_chain(&lp, 2, 10, None).unwrap();
        assert_eq!(c.values(), [3, 5]);
        assert_eq!((c.edge_value.get(), c.common_difference), (3, Some(2)));
    }

    #[test]
    fn ap_errors() {
        let lp = PrimeLoop::new();
        assert!(find_ap_chain(&lp, 1, 60, None)
            .unwrap_err()
            .is_invalid_argument());
        assert!(find_ap_chain(&lp, 4, 22, None).unwrap_err().is_not_found());
        assert!(find_ap_chain(&lp, 4, 58, Some(41))
            .unwrap_err()
            .is_not_found());
    }

    #[test]
    fn path_examples() {
        let lp = PrimeLoop::new();
        let c = find_equal_edge_path(&lp, 3, 20, s(3), false).unwrap();
        assert_eq!(c.values(), [3, 5, 7]);
        let c = find_equal_edge_path(&lp, 2, 10, s(5), false).unwrap();
        assert_eq!(c.values(), [3, 7]);
        let c = find_equal_edge_path(&lp, 4, 60, None, false).unwrap();
        assert_eq!(c.values(), [3, 11, 19, 29]);
        assert_eq!(c.edge_value.get(), 11);
        assert!(!c.is_arithmetic);
        // with 1 allowed the smallest sequence starts there
        let c = find_equal_edge_path(&lp, 3, 20, s(3), true).unwrap();
        assert_eq!(c.values(), [1, 3, 5]);
    }

    #[test]
    fn path_not_found() {
        let lp = PrimeLoop::new();
        assert!(find_equal_edge_path(&lp, 1, 20, None, false)
            .unwrap_err()
            .is_invalid_argument());
        // edge value 3 needs twin steps; no four distinct odd primes chain that way
        assert!(find_equal_edge_path(&lp, 4, 200, s(3), false)
            .unwrap_err()
            .is_not_found());
    }
}
