//! Exact-arithmetic library for deciding whether two quartic polynomials over Q
//! have the same splitting field, and what the intersection of those fields is.
//!
//! Everything is computed over Q with arbitrary-precision rationals: generic-form
//! normalization, Galois group classification, multi-resolvent polynomials,
//! factorization into irreducibles, decomposition types, the table-driven
//! intersection answer, and the explicit parameter families that realize
//! coincident splitting fields.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and file handling live in
//! the companion `qg-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod factor;
pub mod forms;
pub mod intersect;
pub mod isom;
pub mod poly;
pub mod resolvent;
pub mod scalar;

pub use error::Error;
pub use poly::UniPoly;
pub use scalar::{Int, Rat};
