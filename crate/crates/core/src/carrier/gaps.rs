use serde::{Deserialize, Serialize};

use super::table::{PrimeLoop, SElement};
use crate::error::{Error, Result};

/// An odd prime together with the exact length of the run of non-primes
/// immediately below it (1 counts as a non-prime).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapWitness {
    pub prime: SElement,
    pub preceding_composite_run: u64,
}

impl PrimeLoop {
    /// Smallest odd prime `p ≤ limit` preceded by at least `min_run`
    /// consecutive non-primes.
    pub fn gap_search(&self, min_run: u64, limit: u64) -> Result<GapWitness> {
        if min_run == 0 {
            return Err(Error::invalid("min_run must be at least 1"));
        }
        let table = self.ensure(limit)?;
        // 2 precedes 3 among the primes but is not stored in the table.
        let mut previous_prime = 2;
        for &p in table.upto(limit).iter().skip(1) {
            let run = p - previous_prime - 1;
            if run >= min_run {
                return Ok(GapWitness {
                    prime: SElement::new_unchecked(p),
                    preceding_composite_run: run,
                });
            }
            previous_prime = p;
        }
        Err(Error::NotFound {
            what: "prime with a long enough run of non-primes below it",
            range: 1..=limit,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let lp = PrimeLoop::new();
        let w = lp.gap_search(5, 100).unwrap();
        assert_eq!((w.prime.get(), w.preceding_composite_run), (29, 5));
        let w = lp.gap_search(1, 100).unwrap();
        assert_eq!((w.prime.get(), w.preceding_composite_run), (5, 1));
        let w = lp.gap_search(13, 200).unwrap();
        assert_eq!((w.prime.get(), w.preceding_composite_run), (127, 13));
        // run is reported exactly, not clamped to min_run
        let w = lp.gap_search(4, 100).unwrap();
        assert_eq!((w.prime.get(), w.preceding_composite_run), (29, 5));
    }

    #[test]
    fn errors() {
        let lp = PrimeLoop::new();
        assert!(lp.gap_search(0, 100).unwrap_err().is_invalid_argument());
        let err = lp.gap_search(13, 126).unwrap_err();
        assert!(err.is_not_found());
        assert!(err.to_string().contains("[1, 126]"));
        assert!(lp.gap_search(1, 4).unwrap_err().is_not_found());
    }
}
