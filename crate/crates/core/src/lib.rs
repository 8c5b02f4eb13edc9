//! Exact enumeration of standard Young tableaux on truncated shapes.
//!
//! Closed-form counts, volume generating functions, a bijection between
//! plane partitions and pairs of tableaux, and brute-force oracles for all of
//! them. Arithmetic is exact throughout.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijection;
pub mod closed;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod shape;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
