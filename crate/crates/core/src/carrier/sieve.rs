//! Segmented sieve of Eratosthenes.
//!
//! The integer line is cut into blocks `[k·B, (k+1)·B)` for a fixed block
//! size `B`. Each block is sieved independently against the base primes up
//! to `√hi`, so blocks can be processed in parallel and optionally served
//! from the on-disk [`cache`](super::cache). The resulting prime list does
//! not depend on `B` or on the number of worker threads.

use std::path::PathBuf;

use rayon::prelude::*;

use super::cache;
use crate::error::{Error, Result};

/// Integers per block; 2^20 bits is 128 KiB of bitmap.
pub const DEFAULT_BLOCK_SIZE: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct SieveConfig {
    pub block_size: u64,
    /// Directory for cached full blocks. `None` disables caching.
    pub cache_dir: Option<PathBuf>,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            block_size: DEFAULT_BLOCK_SIZE,
            cache_dir: None,
        }
    }
}

impl SieveConfig {
    pub fn with_block_size(mut self, block_size: u64) -> Self {
        self.block_size = block_size;
        self
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }
}

/// Primality bitmap for the integers `base .. base + len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub base: u64,
    pub len: u64,
    bits: Vec<u64>,
}

impl Segment {
    pub(crate) fn from_words(base: u64, len: u64, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len() as u64, len.div_ceil(64));
        Segment { base, len, bits }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n >= self.base && n < self.base + self.len);
        let i = n - self.base;
        self.bits[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as u64;
                word &= word - 1;
                Some(self.base + w as u64 * 64 + bit)
            })
        })
    }
}

/// All primes `≤ limit` by a plain (unsegmented) sieve; used for base primes.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Sieve `base .. base + len` against `base_primes`, which must contain
/// every prime up to `√(base + len − 1)`.
pub fn sieve_segment(base: u64, len: u64, base_primes: &[u64]) -> Segment {
    let mut bits = vec![u64::MAX; len.div_ceil(64) as usize];
    let tail = len % 64;
    if tail != 0 {
        *bits.last_mut().unwrap() = (1u64 << tail) - 1;
    }
    let clear = |bits: &mut [u64], i: u64| bits[(i / 64) as usize] &= !(1u64 << (i % 64));
    for n in base..(base + len).min(2) {
        clear(&mut bits, n - base);
    }
    let end = base + len;
    for &p in base_primes {
        if p * p >= end {
            break;
        }
        let first = (p * p).max(base.div_ceil(p) * p);
        let mut m = first;
        while m < end {
            clear(&mut bits, m - base);
            m += p;
        }
    }
    Segment::from_words(base, len, bits)
}

/// All primes in `[lo, hi]`, ascending (2 included when in range).
pub fn primes_in_range(lo: u64, hi: u64, config: &SieveConfig) -> Result<Vec<u64>> {
    if config.block_size == 0 {
        return Err(Error::invalid("sieve block size must be positive"));
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    let block = config.block_size;
    let base_primes = small_primes(isqrt(hi));
    let blocks: Vec<u64> = (lo / block..=hi / block).collect();
    let segments: Vec<Vec<u64>> = blocks
        .into_par_iter()
        .map(|k| {
            let start = k * block;
            let full_end = start.saturating_add(block);
            let end = full_end.min(hi.saturating_add(1));
            let segment = load_or_sieve(start, end - start, end == full_end, &base_primes, config);
            segment.primes().filter(|&p| p >= lo && p <= hi).collect()
        })
        .collect();
    Ok(segments.concat())
}

fn load_or_sieve(
    base: u64,
    len: u64,
    full_block: bool,
    base_primes: &[u64],
    config: &SieveConfig,
) -> Segment {
    let dir = match (&config.cache_dir, full_block) {
        (Some(dir), true) => dir,
        _ => return sieve_segment(base, len, base_primes),
    };
    if let Some(seg) = cache::load(dir, base, len) {
        return seg;
    }
    let seg = sieve_segment(base, len, base_primes);
    // A failed write only costs a re-sieve next time.
    let _ = cache::store(dir, &seg);
    seg
}
