use crate::carrier::{is_in_s, BoundedLoop, PrimeLoop, SElement};
use crate::error::{Error, Result};

/// Smallest `a ≥ s` in `S ∩ [1, limit]` with `a • s = a`, i.e. `N(a − s) = a`.
///
/// Only partners at or above `s` are considered: those come from a run of
/// non-primes just below the prime `a`. Partners below `s` can exist
/// (`3 • 5 = 3`) but are a different phenomenon.
pub fn absorbing_partner(lp: &PrimeLoop, s: u64, limit: u64) -> Result<SElement> {
    if !is_in_s(s) {
        return Err(Error::invalid(format!("{s} is not in S")));
    }
    if limit < s {
        return Err(Error::invalid(format!("limit {limit} is below s = {s}")));
    }
    let b = BoundedLoop::new(lp, limit)?;
    let verts = b.vertices();
    let start = verts.partition_point(|&a| a < s);
    verts[start..]
        .iter()
        .find(|&&a| b.dot(a, s) == a)
        .map(|&a| SElement::new_unchecked(a))
        .ok_or(Error::NotFound {
            what: "absorbing partner",
            range: s..=limit,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let lp = PrimeLoop::new();
        assert_eq!(absorbing_partner(&lp, 1, 10).unwrap().get(), 1);
        assert_eq!(absorbing_partner(&lp, 3, 100).unwrap().get(), 11);
        assert_eq!(absorbing_partner(&lp, 5, 100).unwrap().get(), 29);
    }

    #[test]
    fn errors() {
        let lp = PrimeLoop::new();
        assert!(absorbing_partner(&lp, 4, 100)
            .unwrap_err()
            .is_invalid_argument());
        assert!(absorbing_partner(&lp, 2, 100)
            .unwrap_err()
            .is_invalid_argument());
        assert!(absorbing_partner(&lp, 11, 7)
            .unwrap_err()
            .is_invalid_argument());
        let err = absorbing_partner(&lp, 5, 28).unwrap_err();
        assert!(err.is_not_found());
        assert!(err.to_string().contains("[5, 28]"));
    }

    #[test]
    fn partner_comes_after_long_enough_gap() {
        // a run of at least 2s non-primes below a prime a > 2s guarantees a • s = a
        let lp = PrimeLoop::new();
        for s in [3u64, 5, 7, 11, 13] {
            let a = absorbing_partner(&lp, s, 100_000).unwrap().get();
            let gap = lp.gap_search(2 * s, 100_000).unwrap().prime.get();
            assert!(a <= gap.max(s), "s = {s}: partner {a}, gap prime {gap}");
            assert_eq!(lp.dot(a, s).unwrap().get(), a);
        }
    }
}
