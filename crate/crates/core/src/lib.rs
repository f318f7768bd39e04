//! Exact computation and cross-validation of GKP-type triangular arrays.
//!
//! A pair of affine step weights a(n,k) = a0 + a1 k + a2 n and
//! b(n,k) = b0 + b1 k + b2 n defines a triangle by
//!
//! ```text
//! T(n,k) = a(n,k) T(n-1,k) + b(n,k) T(n-1,k-1),    T(0,0) = 1,
//! ```
//!
//! which is also the total weight of the E/NE lattice paths from (0,0)
//! to (n,k). This crate computes such triangles in exact rational
//! arithmetic and realizes the same numbers along several independent
//! routes so each can be checked against the others:
//!
//! - [`triangle`]: the defining recurrence (ground truth);
//! - [`paths`]: brute-force path enumeration and sums over rise/East
//!   abscissa sets;
//! - [`compositions`]: weak-composition bijections and closed forms;
//! - [`closed_forms`]: alternating binomial sums for b = 1 and
//!   b = b0 + b1 k;
//! - [`poly`]: the b = 1 triangle as a transition matrix between
//!   factorial polynomial bases;
//! - [`stirling`]: r-Eulerian and marked r-Eulerian triangles with
//!   brute-force descent oracles over Stirling permutations.

pub mod closed_forms;
pub mod compositions;
pub mod error;
pub mod paths;
pub mod poly;
pub mod rational;
pub mod stirling;
pub mod triangle;

pub use error::{Error, Result};
pub use rational::Rational;
pub use triangle::{AffineWeight, GkpSpec, Triangle};
