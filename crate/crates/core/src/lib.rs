//! Periodic colorings, orientations, matchings and factors of two-ended
//! (Z-periodic) infinite graphs, together with generators and brute-force
//! verifiers for finite counterexample gadgets.

pub mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod periodic;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
