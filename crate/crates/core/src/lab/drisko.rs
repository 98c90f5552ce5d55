use std::time::Instant;

use rayon::prelude::*;

use super::enumerate::row_multisets;
use super::{iso_equivalent_with, Counterexample, SearchLimits, SearchReport};
use crate::engine::brute_force_first;
use crate::error::{Error, Result};
use crate::generators::gen_r;
use crate::instance::Instance;

/// Checks every `(2n-2) x n` row-latin rectangle on `1..=k`, up to row order:
/// each must either have a transversal or be equivalent to R_{2n-2,n}.
pub fn verify_drisko_uniqueness(n: usize, k: usize, limits: &SearchLimits) -> Result<SearchReport> {
    if n < 2 || k < n {
        return Err(Error::Parameters(format!(
            "need n >= 2 and k >= n, got n={n}, k={k}"
        )));
    }
    let start = Instant::now();
    let m = 2 * n - 2;
    let mut report = SearchReport::new("drisko-uniqueness")
        .config("n", n)
        .config("k", k)
        .config("rows", m)
        .config("max_instances", limits.max_instances);
    let mut matrices = row_multisets(n, k, m);
    if matrices.len() > limits.max_instances {
        matrices.truncate(limits.max_instances);
        report.budget_exceeded = true;
    }
    let extremal = gen_r(m, n)?;
    let outcomes: Vec<Result<Option<(Instance, bool)>>> = matrices
        .par_iter()
        .map(|rows| {
            let inst = Instance::row_latin(k, rows)?;
            if brute_force_first(&inst)?.is_some() {
                return Ok(None);
            }
            let iso = iso_equivalent_with(&inst, &extremal, limits)?;
            Ok(Some((inst, iso)))
        })
        .collect();
    report.instances_scanned = matrices.len();
    for (index, outcome) in outcomes.into_iter().enumerate() {
        if let Some((inst, iso)) = outcome? {
            if !iso {
                report.counterexamples.push(Counterexample {
                    index,
                    instance: inst.clone(),
                    reason: "no transversal and not equivalent to R".into(),
                });
            }
            report.transversal_free.push(inst);
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}
