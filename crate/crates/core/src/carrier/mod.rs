//! The carrier set `S`: prime generation and the sorted S-table.

mod bounded;
pub mod cache;
mod gaps;
mod primality;
pub mod sieve;
mod table;

pub use bounded::BoundedLoop;
pub use gaps::GapWitness;
pub use primality::{is_in_s, is_prime};
pub use sieve::SieveConfig;
pub use table::{sieve_upto, PrimeLoop, SElement, STable};
