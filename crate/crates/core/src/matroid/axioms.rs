use super::{ElementId, ElementSet, Oracle};
use crate::error::{Error, Result};

pub const DEFAULT_AXIOM_LIMIT: usize = 12;
const MAX_RECORDED: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptySetDependent,
    /// `subset` is dependent although `superset` is independent.
    Hereditary {
        superset: ElementSet,
        subset: ElementSet,
    },
    /// No element of `larger \ smaller` extends `smaller`.
    Exchange {
        smaller: ElementSet,
        larger: ElementSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub ground_size: usize,
    pub subsets_checked: usize,
    pub violation_count: usize,
    /// The first few violations found.
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    fn record(&mut self, v: AxiomViolation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED {
            self.violations.push(v);
        }
    }
}

pub fn verify_axioms(oracle: &Oracle<'_>) -> Result<AxiomReport> {
    verify_axioms_with_limit(oracle, DEFAULT_AXIOM_LIMIT)
}

/// Exhaustive check of the independence axioms over every subset of the ground set.
pub fn verify_axioms_with_limit(oracle: &Oracle<'_>, limit: usize) -> Result<AxiomReport> {
    let g = oracle.ground_size();
    if g > limit || g >= 32 {
        return Err(Error::TooLarge {
            what: "ground set",
            size: g,
            limit: limit.min(31),
        });
    }
    let total = 1usize << g;
    let mut independent = vec![false; total];
    for (mask, slot) in independent.iter_mut().enumerate() {
        let set: Vec<ElementId> = ElementSet::from_mask(mask as u64).into_vec();
        *slot = oracle.is_independent(&set)?;
    }

    let mut report = AxiomReport {
        ground_size: g,
        subsets_checked: total,
        violation_count: 0,
        violations: Vec::new(),
    };
    if !independent[0] {
        report.record(AxiomViolation::EmptySetDependent);
    }

    // Removing one element at a time covers every subset by induction.
    for mask in (0..total).filter(|&m| independent[m]) {
        for b in (0..g).filter(|b| mask >> b & 1 == 1) {
            let sub = mask & !(1 << b);
            if !independent[sub] {
                report.record(AxiomViolation::Hereditary {
                    superset: ElementSet::from_mask(mask as u64),
                    subset: ElementSet::from_mask(sub as u64),
                });
            }
        }
    }

    let mut augment = vec![0usize; total];
    for mask in (0..total).filter(|&m| independent[m]) {
        augment[mask] = (0..g)
            .filter(|b| mask >> b & 1 == 0 && independent[mask | 1 << b])
            .fold(0, |acc, b| acc | 1 << b);
    }
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); g + 1];
    for mask in (0..total).filter(|&m| independent[m]) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for small_size in 0..g {
        for &small in &by_size[small_size] {
            for large_group in &by_size[small_size + 1..] {
                for &large in large_group {
                    if large & !small & augment[small] == 0 {
                        report.record(AxiomViolation::Exchange {
                            smaller: ElementSet::from_mask(small as u64),
                            larger: ElementSet::from_mask(large as u64),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}
