use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{find_it_with, FindOptions};
use crate::error::{Error, Result};
use crate::generators::{gen_random, GeneratorSpec};

pub const MAX_BENCH_N: usize = 128;

/// Field used for linear-mode benchmark instances.
const BENCH_PRIME: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingMode {
    /// `2n - 1` random rows over `2n` symbols.
    RowLatin,
    /// `2n - 1` random rows of vectors in GF(7)^n.
    Linear,
}

impl ScalingMode {
    pub fn name(self) -> &'static str {
        match self {
            ScalingMode::RowLatin => "rowlatin",
            ScalingMode::Linear => "linear",
        }
    }

    fn spec(self, n: usize, seed: u64) -> GeneratorSpec {
        let m = 2 * n - 1;
        match self {
            ScalingMode::RowLatin => GeneratorSpec::RandomRowLatin {
                m,
                n,
                k: 2 * n,
                seed,
            },
            ScalingMode::Linear => GeneratorSpec::RandomLinear {
                m,
                n,
                p: BENCH_PRIME,
                dim: n,
                seed,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub mode: ScalingMode,
    pub n: usize,
    pub trials: usize,
    pub mean_calls: f64,
    pub max_calls: u64,
    /// Every run's call count, in trial order.
    pub calls: Vec<u64>,
    pub mean_wall: Duration,
}

/// Runs the construction on random instances of both kinds for every `n`.
pub fn instrument_scaling(n_values: &[usize], trials: usize, seed: u64) -> Result<Vec<ScalingRow>> {
    let mut rows = instrument_scaling_for(ScalingMode::RowLatin, n_values, trials, seed)?;
    rows.extend(instrument_scaling_for(
        ScalingMode::Linear,
        n_values,
        trials,
        seed,
    )?);
    Ok(rows)
}

pub fn instrument_scaling_for(
    mode: ScalingMode,
    n_values: &[usize],
    trials: usize,
    seed: u64,
) -> Result<Vec<ScalingRow>> {
    let options = FindOptions {
        check_claims: false,
        trace: false,
    };
    let mut out = Vec::with_capacity(n_values.len());
    for &n in n_values {
        if n == 0 || n > MAX_BENCH_N {
            return Err(Error::TooLarge {
                what: "benchmark width",
                size: n,
                limit: MAX_BENCH_N,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
        let mut calls = Vec::with_capacity(trials);
        let mut wall = Duration::ZERO;
        for _ in 0..trials {
            let instance = gen_random(mode.spec(n, rng.gen()))?;
            let start = Instant::now();
            let outcome = find_it_with(&instance, &options)?;
            wall += start.elapsed();
            if !outcome.certificate.is_it() {
                return Err(Error::Contract("benchmark run returned a non-IT".into()));
            }
            calls.push(outcome.stats.base_calls);
        }
        let trials_f = trials.max(1) as f64;
        out.push(ScalingRow {
            mode,
            n,
            trials,
            mean_calls: calls.iter().sum::<u64>() as f64 / trials_f,
            max_calls: calls.iter().copied().max().unwrap_or(0),
            calls,
            mean_wall: wall / trials.max(1) as u32,
        });
    }
    Ok(out)
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// usable points.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let len = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    Some(sxy / sxx)
}
