//! Independent transversals in matrices whose entries live in a matroid.
//!
//! Given an `m x n` matrix in which every row is an independent set of `n`
//! distinct elements, [`engine::find_it`] constructs an independent
//! transversal (one entry per column, all in distinct rows, jointly
//! independent) whenever `m >= 2n - 1`. The crate also ships a brute-force
//! finder, generators for the classic extremal matrices, and search tools for
//! packing and decomposition questions at small sizes.

pub mod bench;
pub mod cli;
pub mod engine;
pub mod error;
pub mod generators;
pub mod instance;
pub mod lab;
pub mod matroid;
pub mod selftest;

pub use error::{Error, Result};
