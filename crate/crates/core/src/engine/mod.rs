//! Finding independent transversals.
//!
//! [`find_it`] is the constructive algorithm for matrices with at least
//! `2n - 1` independent rows; it needs O(n^3) independence queries.
//! [`brute_force_find`] is an exhaustive backtracking search used to
//! cross-check it and to certify non-existence on small matrices.

mod brute;
mod construct;
mod scaling;

pub use brute::{
    brute_force_count, brute_force_find, brute_force_find_with_limit, brute_force_first, BruteMode,
    BruteOutcome, DEFAULT_BRUTE_LIMIT,
};
pub use construct::{find_it, find_it_with, FindOptions, FindOutcome, OracleStats};
pub use scaling::{
    instrument_scaling, instrument_scaling_for, loglog_slope, ScalingMode, ScalingRow, MAX_BENCH_N,
};
