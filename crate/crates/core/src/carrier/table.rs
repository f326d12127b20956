use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use super::primality::is_in_s;
use super::sieve::{primes_in_range, SieveConfig};
use crate::error::{Error, Result};

/// A member of `S`: 1 or an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct SElement(u64);

impl SElement {
    pub const ONE: SElement = SElement(1);

    pub fn new(value: u64) -> Result<Self> {
        if is_in_s(value) {
            Ok(SElement(value))
        } else {
            Err(Error::invalid(format!(
                "{value} is not in S (1 or an odd prime)"
            )))
        }
    }

    /// Caller guarantees membership.
    pub(crate) fn new_unchecked(value: u64) -> Self {
        debug_assert!(is_in_s(value), "{value} not in S");
        SElement(value)
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for SElement {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        SElement::new(value)
    }
}

impl From<SElement> for u64 {
    fn from(s: SElement) -> u64 {
        s.0
    }
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Every element of `S` up to `bound`, ascending; `elements[0] == 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STable {
    bound: u64,
    elements: Vec<u64>,
}

/// Build the S-table up to `bound` with the default sieve configuration.
pub fn sieve_upto(bound: u64) -> Result<STable> {
    STable::build(bound, &SieveConfig::default())
}

impl STable {
    pub fn build(bound: u64, config: &SieveConfig) -> Result<Self> {
        if bound == 0 {
            return Err(Error::invalid("sieve bound must be at least 1"));
        }
        let mut elements = Vec::with_capacity(estimate_count(bound));
        elements.push(1);
        elements.extend(primes_in_range(3, bound, config)?);
        Ok(STable { bound, elements })
    }

    /// A new table covering `new_bound`, reusing the already sieved prefix.
    pub fn extend(&self, new_bound: u64, config: &SieveConfig) -> Result<Self> {
        if new_bound <= self.bound {
            return Ok(self.clone());
        }
        let lo = (self.bound + 1).max(3);
        let mut elements = Vec::with_capacity(estimate_count(new_bound));
        elements.extend_from_slice(&self.elements);
        elements.extend(primes_in_range(lo, new_bound, config)?);
        Ok(STable {
            bound: new_bound,
            elements,
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements `≤ limit` (clamped to the table).
    pub fn upto(&self, limit: u64) -> &[u64] {
        &self.elements[..self.elements.partition_point(|&e| e <= limit)]
    }

    /// Membership for `n ≤ bound`; `None` when the table cannot answer.
    pub fn contains(&self, n: u64) -> Option<bool> {
        (n <= self.bound).then(|| self.elements.binary_search(&n).is_ok())
    }

    pub fn rank(&self, s: u64) -> Result<usize> {
        if s > self.bound {
            return Err(Error::invalid(format!(
                "{s} exceeds the table bound {}",
                self.bound
            )));
        }
        self.elements
            .binary_search(&s)
            .map_err(|_| Error::invalid(format!("{s} is not in S")))
    }

    pub fn adjacent(&self, a: u64, b: u64) -> Result<bool> {
        Ok(self.rank(a)?.abs_diff(self.rank(b)?) == 1)
    }

    /// Smallest element `> x`, if the table reaches it.
    pub fn successor(&self, x: u64) -> Option<u64> {
        self.elements
            .get(self.elements.partition_point(|&e| e <= x))
            .copied()
    }

    /// Largest element `< x`.
    pub fn predecessor(&self, x: u64) -> Option<u64> {
        let i = self.elements.partition_point(|&e| e < x);
        i.checked_sub(1).map(|i| self.elements[i])
    }
}

fn estimate_count(bound: u64) -> usize {
    let b = bound.max(16) as f64;
    (1.3 * b / b.ln()) as usize + 8
}

const DEFAULT_INITIAL_BOUND: u64 = 1 << 16;

/// Shared handle on a growing S-table.
///
/// Queries beyond the current bound grow the table to
/// `max(2·bound, 2x + 2)`; `2x + 2` always suffices because there is a
/// prime between `x` and `2x`. Growth happens under a write lock and
/// publishes a fresh immutable [`STable`], so readers only ever see a
/// complete table.
#[derive(Debug)]
pub struct PrimeLoop {
    table: RwLock<Arc<STable>>,
    config: SieveConfig,
}

impl Default for PrimeLoop {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeLoop {
    pub fn new() -> Self {
        Self::with_config(DEFAULT_INITIAL_BOUND, SieveConfig::default())
            .expect("default bound is positive")
    }

    pub fn with_bound(bound: u64) -> Result<Self> {
        Self::with_config(bound, SieveConfig::default())
    }

    pub fn with_config(bound: u64, config: SieveConfig) -> Result<Self> {
        let table = STable::build(bound, &config)?;
        Ok(PrimeLoop {
            table: RwLock::new(Arc::new(table)),
            config,
        })
    }

    pub fn config(&self) -> &SieveConfig {
        &self.config
    }

    /// The current table. Later growth does not affect the returned value.
    pub fn snapshot(&self) -> Arc<STable> {
        self.table.read().unwrap().clone()
    }

    /// A table covering at least `bound`, growing if necessary.
    pub fn ensure(&self, bound: u64) -> Result<Arc<STable>> {
        let current = self.snapshot();
        if current.bound() >= bound {
            return Ok(current);
        }
        let mut guard = self.table.write().unwrap();
        if guard.bound() < bound {
            let target = bound.max(guard.bound().saturating_mul(2));
            *guard = Arc::new(guard.extend(target, &self.config)?);
        }
        Ok(guard.clone())
    }

    /// `N(x)`: the least element of `S` strictly greater than `x`.
    ///
    /// # Panics
    ///
    /// If `x` is so large that `2x + 2` overflows `u64`.
    pub fn next_in_s(&self, x: u64) -> SElement {
        if let Some(s) = self.snapshot().successor(x) {
            return SElement::new_unchecked(s);
        }
        let target = x
            .checked_mul(2)
            .and_then(|v| v.checked_add(2))
            .expect("N(x) argument out of range");
        let table = self.ensure(target).expect("sieve over a positive bound");
        SElement::new_unchecked(table.successor(x).expect("a prime lies in (x, 2x+2]"))
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.snapshot().contains(n) {
            Some(hit) => hit,
            None => is_in_s(n),
        }
    }

    /// Zero-based index of `s` in the ascending enumeration of `S`.
    pub fn rank(&self, s: u64) -> Result<usize> {
        if !is_in_s(s) {
            return Err(Error::invalid(format!("{s} is not in S")));
        }
        self.ensure(s)?.rank(s)
    }

    /// True iff no element of `S` lies strictly between `a` and `b`, `a ≠ b`.
    pub fn adjacent_in_s(&self, a: u64, b: u64) -> Result<bool> {
        Ok(self.rank(a)?.abs_diff(self.rank(b)?) == 1)
    }

    /// `a • b = N(|a − b|)`.
    pub fn dot(&self, a: u64, b: u64) -> Result<SElement> {
        SElement::new(a)?;
        SElement::new(b)?;
        Ok(self.next_in_s(a.abs_diff(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_examples() {
        assert_eq!(sieve_upto(10).unwrap().elements(), [1, 3, 5, 7]);
        assert_eq!(sieve_upto(2).unwrap().elements(), [1]);
        assert_eq!(sieve_upto(1).unwrap().elements(), [1]);
        assert_eq!(*sieve_upto(60).unwrap().elements().last().unwrap(), 59);
        assert!(sieve_upto(0).unwrap_err().is_invalid_argument());
    }

    #[test]
    fn rank_and_adjacency() {
        let t10 = sieve_upto(10).unwrap();
        assert_eq!(t10.rank(1).unwrap(), 0);
        assert_eq!(t10.rank(7).unwrap(), 3);
        assert_eq!(sieve_upto(20).unwrap().rank(11).unwrap(), 4);
        assert!(t10.rank(9).is_err());
        assert!(t10.rank(11).is_err());
        assert!(t10.rank(2).is_err());

        let lp = PrimeLoop::with_bound(16).unwrap();
        assert!(lp.adjacent_in_s(3, 5).unwrap());
        assert!(lp.adjacent_in_s(7, 11).unwrap());
        assert!(!lp.adjacent_in_s(3, 7).unwrap());
        assert!(!lp.adjacent_in_s(5, 5).unwrap());
        assert!(lp.adjacent_in_s(4, 5).is_err());
        // rank grows the table on demand
        assert_eq!(lp.rank(97).unwrap(), 24);
    }

    #[test]
    fn next_in_s_examples() {
        let lp = PrimeLoop::with_bound(8).unwrap();
        let n = |x| lp.next_in_s(x).get();
        assert_eq!(n(0), 1);
        assert_eq!(n(1), 3);
        assert_eq!(n(2), 3);
        assert_eq!(n(6), 7);
        assert_eq!(n(8), 11);
        assert_eq!(n(114), 127);
        assert!(lp.snapshot().bound() >= 230);
    }

    #[test]
    fn growth_policy() {
        let lp = PrimeLoop::with_bound(100).unwrap();
        lp.next_in_s(150);
        assert_eq!(lp.snapshot().bound(), 302);
        lp.next_in_s(310);
        assert_eq!(lp.snapshot().bound(), 622);
        lp.ensure(700).unwrap();
        assert_eq!(lp.snapshot().bound(), 1244);
    }

    #[test]
    fn successor_predecessor() {
        let t = sieve_upto(30).unwrap();
        assert_eq!(t.successor(0), Some(1));
        assert_eq!(t.successor(1), Some(3));
        assert_eq!(t.successor(29), None);
        assert_eq!(t.predecessor(1), None);
        assert_eq!(t.predecessor(3), Some(1));
        assert_eq!(t.predecessor(24), Some(23));
        assert_eq!(t.upto(12), [1, 3, 5, 7, 11]);
    }

    #[test]
    fn dot_rejects_non_members() {
        let lp = PrimeLoop::new();
        assert!(lp.dot(2, 3).unwrap_err().is_invalid_argument());
        assert!(lp.dot(3, 9).unwrap_err().is_invalid_argument());
        assert_eq!(lp.dot(101, 7).unwrap().get(), 97);
    }

    #[test]
    fn selement_serde() {
        let s: SElement = serde_json::from_str("7").unwrap();
        assert_eq!(s.get(), 7);
        assert!(serde_json::from_str::<SElement>("2").is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "7");
    }

    #[test]
    fn concurrent_growth_is_consistent() {
        let lp = Arc::new(PrimeLoop::with_bound(10).unwrap());
        let expected: Vec<u64> = {
            let fresh = PrimeLoop::with_bound(50_000).unwrap();
            (0..20_000).map(|x| fresh.next_in_s(x).get()).collect()
        };
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let lp = lp.clone();
                std::thread::spawn(move || {
                    (0..20_000u64)
                        .rev()
                        .skip(t)
                        .step_by(3)
                        .map(|x| (x, lp.next_in_s(x).get()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (x, n) in h.join().unwrap() {
                assert_eq!(n, expected[x as usize]);
            }
        }
    }
}
