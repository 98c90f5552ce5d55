//! Oracle-call scaling table for the constructive finder.

use std::fmt::Write as _;

use crate::engine::{instrument_scaling_for, loglog_slope, ScalingMode, ScalingRow};
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<ScalingRow>,
    /// Per mode: fitted slope of mean calls and of mean wall time against n.
    pub slopes: Vec<(ScalingMode, Option<f64>, Option<f64>)>,
}

pub fn run_bench(
    modes: &[ScalingMode],
    n_values: &[usize],
    trials: usize,
    seed: u64,
) -> Result<BenchReport> {
    let mut rows = Vec::new();
    let mut slopes = Vec::new();
    for &mode in modes {
        let part = instrument_scaling_for(mode, n_values, trials, seed)?;
        let calls: Vec<(f64, f64)> = part.iter().map(|r| (r.n as f64, r.mean_calls)).collect();
        let wall: Vec<(f64, f64)> = part
            .iter()
            .map(|r| (r.n as f64, r.mean_wall.as_secs_f64()))
            .collect();
        slopes.push((mode, loglog_slope(&calls), loglog_slope(&wall)));
        rows.extend(part);
    }
    Ok(BenchReport { rows, slopes })
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<9} {:>4} {:>7} {:>12} {:>10} {:>12}",
            "mode", "n", "trials", "mean_calls", "max_calls", "mean_wall_us"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<9} {:>4} {:>7} {:>12.1} {:>10} {:>12.1}",
                r.mode.name(),
                r.n,
                r.trials,
                r.mean_calls,
                r.max_calls,
                r.mean_wall.as_secs_f64() * 1e6
            );
        }
        for (mode, calls, wall) in &self.slopes {
            let _ = writeln!(
                out,
                "slope {} calls={} wall={}",
                mode.name(),
                fmt_slope(*calls),
                fmt_slope(*wall)
            );
        }
        out
    }
}

fn fmt_slope(s: Option<f64>) -> String {
    s.map_or_else(|| "n/a".to_string(), |v| format!("{v:.3}"))
}
