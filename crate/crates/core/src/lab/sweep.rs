use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::row_multisets;
use super::{
    find_disjoint_transversals_with, find_nrow_decomposition_with, Certificate, CertificateRecord,
    Counterexample, SearchLimits, SearchReport,
};
use crate::error::{Error, Result};
use crate::generators::{gen_r, gen_random, GeneratorSpec};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// Row-latin, `m >= 2n - 1`: `m - n + 1` cell-disjoint transversals.
    Disjoint,
    /// Row-latin, `m >= n^2`: some `n` rows are a union of `n` transversals.
    Nrow,
    DisjointMatroid,
    NrowMatroid,
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Disjoint => "disjoint",
            Conjecture::Nrow => "nrow",
            Conjecture::DisjointMatroid => "disjoint-matroid",
            Conjecture::NrowMatroid => "nrow-matroid",
        }
    }

    fn is_matroid(self) -> bool {
        matches!(self, Conjecture::DisjointMatroid | Conjecture::NrowMatroid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// Every row multiset over `1..=k` (row-latin only).
    Exhaustive,
    Random {
        count: usize,
        seed: u64,
    },
    /// The single matrix R_{m,n}.
    RFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    pub conjecture: Conjecture,
    pub n: usize,
    pub m: usize,
    /// Alphabet size for row-latin instances.
    pub k: usize,
    /// Field and dimension for matroid instances.
    pub p: u64,
    pub dim: usize,
    pub sampler: Sampler,
    pub limits: SearchLimits,
}

/// Runs the conjecture's finder over every sampled instance. A search that
/// finds nothing is recorded as a counterexample; one that runs out of nodes
/// is recorded as unresolved and sets `budget_exceeded`.
pub fn sweep(params: &SweepParams) -> Result<SearchReport> {
    let start = Instant::now();
    let SweepParams {
        conjecture, n, m, ..
    } = *params;
    if n == 0 {
        return Err(Error::Parameters("n must be at least 1".into()));
    }
    match conjecture {
        Conjecture::Disjoint | Conjecture::DisjointMatroid if m + 1 < 2 * n => {
            return Err(Error::Parameters(format!(
                "hypothesis needs m >= 2n - 1, got m={m}, n={n}"
            )));
        }
        Conjecture::Nrow | Conjecture::NrowMatroid if m < n * n => {
            return Err(Error::Parameters(format!(
                "hypothesis needs m >= n^2, got m={m}, n={n}"
            )));
        }
        _ => {}
    }
    let mut report = SearchReport::new(format!("sweep-{}", conjecture.name()))
        .config("n", n)
        .config("m", m);
    report = if conjecture.is_matroid() {
        report.config("p", params.p).config("dim", params.dim)
    } else {
        report.config("k", params.k)
    };
    report = report.config("sampler", sampler_text(params.sampler));

    let (instances, truncated) = sample(params)?;
    report.budget_exceeded = truncated;
    report.instances_scanned = instances.len();
    let target = m + 1 - n;
    let outcomes: Vec<Result<Option<Certificate>>> = instances
        .par_iter()
        .map(|inst| match conjecture {
            Conjecture::Disjoint | Conjecture::DisjointMatroid => Ok(
                find_disjoint_transversals_with(inst, target, &params.limits)?
                    .map(Certificate::Packing),
            ),
            Conjecture::Nrow | Conjecture::NrowMatroid => {
                Ok(find_nrow_decomposition_with(inst, &params.limits)?
                    .map(Certificate::Decomposition))
            }
        })
        .collect();
    let missing = match conjecture {
        Conjecture::Disjoint | Conjecture::DisjointMatroid => {
            format!("no packing of {target} disjoint ITs")
        }
        Conjecture::Nrow | Conjecture::NrowMatroid => {
            "no decomposition of n rows into n ITs".to_string()
        }
    };
    for (index, (inst, outcome)) in instances.into_iter().zip(outcomes).enumerate() {
        match outcome {
            Ok(Some(certificate)) => report.certificates.push(CertificateRecord {
                index,
                instance: inst,
                certificate,
            }),
            Ok(None) => report.counterexamples.push(Counterexample {
                index,
                instance: inst,
                reason: missing.clone(),
            }),
            Err(Error::BudgetExceeded(_)) => {
                report.unresolved.push(index);
                report.budget_exceeded = true;
            }
            Err(e) => return Err(e),
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

fn sampler_text(sampler: Sampler) -> String {
    match sampler {
        Sampler::Exhaustive => "exhaustive".into(),
        Sampler::Random { count, seed } => format!("random(count={count},seed={seed})"),
        Sampler::RFamily => "r-family".into(),
    }
}

/// The instances to scan, and whether the list was cut at `max_instances`.
fn sample(params: &SweepParams) -> Result<(Vec<Instance>, bool)> {
    let SweepParams {
        conjecture,
        n,
        m,
        k,
        p,
        dim,
        sampler,
        limits,
    } = *params;
    let cap = limits.max_instances;
    match sampler {
        Sampler::RFamily => {
            if conjecture.is_matroid() {
                return Err(Error::Parameters("the R family is row-latin only".into()));
            }
            Ok((vec![gen_r(m, n)?], false))
        }
        Sampler::Exhaustive => {
            if conjecture.is_matroid() {
                return Err(Error::Parameters(
                    "exhaustive sampling is row-latin only".into(),
                ));
            }
            if k < n {
                return Err(Error::Parameters(format!("need k >= n, got k={k}, n={n}")));
            }
            let mut all = row_multisets(n, k, m);
            let truncated = all.len() > cap;
            all.truncate(cap);
            let instances = all
                .iter()
                .map(|rows| Instance::row_latin(k, rows))
                .collect::<Result<Vec<_>>>()?;
            Ok((instances, truncated))
        }
        Sampler::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let instances = (0..count.min(cap))
                .map(|_| {
                    let seed = rng.gen();
                    gen_random(if conjecture.is_matroid() {
                        GeneratorSpec::RandomLinear { m, n, p, dim, seed }
                    } else {
                        GeneratorSpec::RandomRowLatin { m, n, k, seed }
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((instances, count > cap))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(conjecture: Conjecture, n: usize, m: usize, sampler: Sampler) -> SweepParams {
        SweepParams {
            conjecture,
            n,
            m,
            k: n,
            p: 5,
            dim: n,
            sampler,
            limits: SearchLimits::default(),
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(sweep(&params(Conjecture::Disjoint, 3, 4, Sampler::RFamily)).is_err());
        assert!(sweep(&params(Conjecture::Nrow, 2, 3, Sampler::RFamily)).is_err());
        assert!(sweep(&params(Conjecture::NrowMatroid, 2, 4, Sampler::Exhaustive)).is_err());
    }

    #[test]
    fn r_family_disjoint() {
        let r = sweep(&params(Conjecture::Disjoint, 3, 6, Sampler::RFamily)).unwrap();
        assert_eq!(r.instances_scanned, 1);
        assert_eq!(r.certificates.len(), 1);
        assert_eq!(r.certificates[0].certificate.transversals().len(), 4);
        r.reverify().unwrap();
    }

    #[test]
    fn exhaustive_disjoint_small() {
        let mut p = params(Conjecture::Disjoint, 2, 3, Sampler::Exhaustive);
        p.k = 3;
        let r = sweep(&p).unwrap();
        assert_eq!(r.instances_scanned, row_multisets(2, 3, 3).len());
        r.reverify().unwrap();
        assert_eq!(
            r.certificates.len() + r.counterexamples.len(),
            r.instances_scanned
        );
    }

    #[test]
    fn random_sweeps_are_deterministic() {
        let p = params(
            Conjecture::NrowMatroid,
            2,
            4,
            Sampler::Random { count: 6, seed: 11 },
        );
        let a = sweep(&p).unwrap();
        let b = sweep(&p).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        a.reverify().unwrap();
    }
}
