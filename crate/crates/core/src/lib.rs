//! Exact combinatorics of the open-boundary asymmetric exclusion process.
//!
//! Everything here is computed in arbitrary-precision rational arithmetic:
//! staircase tableaux and their weight generating functions, the exact
//! stationary distribution of the ASEP chain (solved two independent ways),
//! the four-index transfer matrices and the generalized matrix-ansatz
//! identities they satisfy, Askey-Wilson moments via two independent
//! pipelines, and the bijections with permutation and alternative tableaux.

pub mod ansatz;
pub mod asep;
pub mod bijections;
pub mod error;
pub mod exactmath;
pub mod moments;
pub mod selftest;
pub mod tableaux;

pub use error::{Error, Result};
