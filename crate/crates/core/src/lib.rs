//! The abelian loop `(S, •)` on `S = {1} ∪ {odd primes}`, where
//! `a • b` is the smallest element of `S` strictly larger than `|a − b|`.
//!
//! The crate is split into four layers:
//!
//! * [`carrier`]: segmented sieve, the sorted S-table with rank and
//!   successor queries, the successor function `N`, and prime-gap search.
//! * [`loop_ops`]: the operation itself, bounded axiom verification and the
//!   non-associativity witness search.
//! * [`explorer`]: exhaustive bounded verifiers for the structural results
//!   about the loop and searchers for equal-edge chains, fibers and cycles.
//! * [`cli`], [`report`] and [`graph`]: the command-line front end with its
//!   JSON/CSV/text reports and DOT/TikZ figures.
//!
//! ```
//! use ncloop::PrimeLoop;
//!
//! let lp = PrimeLoop::new();
//! assert_eq!(lp.dot(41, 47).unwrap().get(), 7);
//! assert_eq!(lp.next_in_s(114).get(), 127);
//! ```

pub mod carrier;
pub mod cli;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod loop_ops;
pub mod report;

pub use carrier::{
    is_in_s, sieve_upto, BoundedLoop, GapWitness, PrimeLoop, SElement, STable, SieveConfig,
};
pub use error::{Error, Result};
pub use explorer::{Chain, EqualEdgeCycle, FiberReport, Statement, VerificationReport};
pub use loop_ops::{AxiomMode, AxiomReport};
