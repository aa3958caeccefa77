#![no_std]
//! Exact combinatorics of free multiple stochastic measures.
//!
//! Everything here is exact rational arithmetic over noncrossing partition
//! lattices: lattice operations and Möbius functions ([`partitions`]), free
//! moment/cumulant conversions and S-transforms ([`transforms`]), expectations
//! of stochastic and product measures with a finite-`N` oracle ([`measures`]),
//! and the free Kailath–Segall recursion with its orthogonal polynomial
//! families ([`polynomials`]).
//!
//! The crate needs only `alloc`.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod limits;
pub mod num;
pub mod measures;
pub mod ncsum;
pub mod partitions;
pub mod polynomials;
pub mod series;
pub mod transforms;

pub use error::{Error, Result};
pub use num::Rational;
pub use partitions::SetPartition;
