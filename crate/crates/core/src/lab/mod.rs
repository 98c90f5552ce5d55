//! Exhaustive and sampled searches around transversal packings.
//!
//! The finders here are complete within their size limits: `Ok(None)` is a
//! proof that no packing or decomposition exists, and a blown node budget is
//! reported as [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) rather
//! than as a negative answer.

mod disjoint;
mod drisko;
mod enumerate;
mod iso;
mod nrow;
mod report;
mod sweep;

pub use disjoint::{find_disjoint_transversals, find_disjoint_transversals_with, DisjointPacking};
pub use drisko::verify_drisko_uniqueness;
pub use enumerate::{arrangements, combinations, permutations, row_multisets};
pub use iso::{iso_equivalent, iso_equivalent_with};
pub use nrow::{find_nrow_decomposition, find_nrow_decomposition_with, RowDecomposition};
pub use report::{Certificate, CertificateRecord, Counterexample, SearchReport};
pub use sweep::{sweep, Conjecture, Sampler, SweepParams};

/// Size and effort caps shared by the searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Backtracking nodes per single search.
    pub max_nodes: u64,
    /// Instances per sweep or enumeration.
    pub max_instances: usize,
    pub packing_max_n: usize,
    pub nrow_max_n: usize,
    pub iso_max_n: usize,
    pub iso_max_m: usize,
    pub iso_max_symbols: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: 50_000_000,
            max_instances: 1_000_000,
            packing_max_n: 8,
            nrow_max_n: 4,
            iso_max_n: 6,
            iso_max_m: 24,
            iso_max_symbols: 16,
        }
    }
}
