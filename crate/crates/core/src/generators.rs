//! The extremal matrices R_{m,n} and T_n, the two small fixtures that are
//! not equivalent to them, and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::{AnyMatroid, ElementId, LinearMatroid, Matroid, PartitionMatroid};

const MAX_ROW_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    R {
        m: usize,
        n: usize,
    },
    T {
        n: usize,
    },
    Fig4(Side),
    RandomRowLatin {
        m: usize,
        n: usize,
        k: usize,
        seed: u64,
    },
    RandomLinear {
        m: usize,
        n: usize,
        p: u64,
        dim: usize,
        seed: u64,
    },
}

pub fn generate(spec: GeneratorSpec) -> Result<Instance> {
    match spec {
        GeneratorSpec::R { m, n } => gen_r(m, n),
        GeneratorSpec::T { n } => gen_t(n),
        GeneratorSpec::Fig4(side) => Ok(gen_fig4(side)),
        GeneratorSpec::RandomRowLatin { .. } | GeneratorSpec::RandomLinear { .. } => {
            gen_random(spec)
        }
    }
}

/// `m - (n - 1)` rows `1 2 .. n` followed by `n - 1` rows `2 3 .. n 1`.
pub fn gen_r(m: usize, n: usize) -> Result<Instance> {
    if n == 0 || m + 1 < n {
        return Err(Error::Parameters(format!(
            "R needs n >= 1 and m >= n - 1, got m={m}, n={n}"
        )));
    }
    let straight: Vec<usize> = (1..=n).collect();
    let shifted: Vec<usize> = (2..=n).chain(std::iter::once(1)).collect();
    let rows: Vec<Vec<usize>> = std::iter::repeat_n(straight, m + 1 - n)
        .chain(std::iter::repeat_n(shifted, n - 1))
        .collect();
    Instance::row_latin(n, &rows)
}

/// `n - 1` copies of each cyclic shift of `1 .. n+1`, with the last column dropped.
pub fn gen_t(n: usize) -> Result<Instance> {
    if n < 2 {
        return Err(Error::Parameters(format!("T needs n >= 2, got {n}")));
    }
    let k = n + 1;
    let rows: Vec<Vec<usize>> = (0..k)
        .flat_map(|shift| {
            let row: Vec<usize> = (0..n).map(|j| (shift + j) % k + 1).collect();
            std::iter::repeat_n(row, n - 1)
        })
        .collect();
    Instance::row_latin(k, &rows)
}

pub fn gen_fig4(side: Side) -> Instance {
    let rows: &[[usize; 3]] = match side {
        Side::Left => &[[1, 2, 3], [1, 2, 3], [2, 1, 3], [3, 2, 1]],
        Side::Right => &[
            [1, 2, 3],
            [1, 2, 3],
            [2, 3, 1],
            [2, 3, 1],
            [1, 3, 2],
            [1, 3, 2],
            [2, 1, 3],
            [2, 1, 3],
        ],
    };
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    Instance::row_latin(3, &rows).expect("fixture rows are valid")
}

/// Seeded random instance whose rows are all valid.
///
/// Row-latin rows are uniformly random arrangements of `n` distinct symbols
/// from `1..=k`. Linear instances give every cell its own random vector over
/// GF(p), redrawing a whole row until it is independent.
pub fn gen_random(spec: GeneratorSpec) -> Result<Instance> {
    match spec {
        GeneratorSpec::RandomRowLatin { m, n, k, seed } => {
            if k < n {
                return Err(Error::Parameters(format!("need k >= n, got k={k}, n={n}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut symbols: Vec<usize> = (1..=k).collect();
            let grid: Vec<usize> = (0..m)
                .flat_map(|_| symbols.partial_shuffle(&mut rng, n).0.to_vec())
                .map(|s| s - 1)
                .collect();
            Instance::new(m, n, grid, AnyMatroid::Partition(PartitionMatroid::free(k)))
        }
        GeneratorSpec::RandomLinear { m, n, p, dim, seed } => {
            if dim < n {
                return Err(Error::Parameters(format!(
                    "GF({p})^{dim} has no {n} independent vectors"
                )));
            }
            // Validates the field before sampling.
            LinearMatroid::new(p, dim, Vec::new())?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut vectors = Vec::with_capacity(m * n);
            for row in 0..m {
                let mut attempts = 0;
                loop {
                    let candidate: Vec<Vec<u64>> = (0..n)
                        .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
                        .collect();
                    let probe = LinearMatroid::new(p, dim, candidate.clone())?;
                    let ids: Vec<ElementId> = (0..n).map(ElementId).collect();
                    if probe.independent(&ids) {
                        vectors.extend(candidate);
                        break;
                    }
                    attempts += 1;
                    if attempts == MAX_ROW_ATTEMPTS {
                        return Err(Error::Parameters(format!(
                            "no independent row {} after {attempts} draws",
                            row + 1
                        )));
                    }
                }
            }
            let base = LinearMatroid::new(p, dim, vectors)?;
            Instance::new(m, n, (0..m * n).collect(), AnyMatroid::Linear(base))
        }
        other => generate(other),
    }
}
