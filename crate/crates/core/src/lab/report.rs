use std::fmt::Write as _;
use std::time::Duration;

use super::{
    find_disjoint_transversals, find_nrow_decomposition, DisjointPacking, RowDecomposition,
};
use crate::engine::brute_force_first;
use crate::error::{Error, Result};
use crate::instance::{classify_positions, Cell, Instance};

#[derive(Debug, Clone)]
pub struct Counterexample {
    /// Position of the instance in the sweep's generation order.
    pub index: usize,
    pub instance: Instance,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Packing(DisjointPacking),
    Decomposition(RowDecomposition),
}

impl Certificate {
    pub fn transversals(&self) -> &[Vec<Cell>] {
        match self {
            Certificate::Packing(p) => &p.transversals,
            Certificate::Decomposition(d) => &d.transversals,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CertificateRecord {
    pub index: usize,
    pub instance: Instance,
    pub certificate: Certificate,
}

/// Outcome of a sweep or an enumeration.
#[derive(Debug, Clone, Default)]
pub struct SearchReport {
    pub title: String,
    /// Echo of the parameters, in insertion order.
    pub config: Vec<(String, String)>,
    pub instances_scanned: usize,
    pub counterexamples: Vec<Counterexample>,
    pub certificates: Vec<CertificateRecord>,
    /// Instances with no transversal at all (uniqueness enumerations only).
    pub transversal_free: Vec<Instance>,
    /// Instance indices whose search ran out of nodes.
    pub unresolved: Vec<usize>,
    pub budget_exceeded: bool,
    pub wall_time: Duration,
}

impl SearchReport {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            ..Self::default()
        }
    }

    pub fn config(mut self, key: &str, value: impl ToString) -> Self {
        self.config.push((key.to_string(), value.to_string()));
        self
    }

    /// 2 if a counterexample was recorded, else 3 if a budget ran out, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            2
        } else if self.budget_exceeded {
            3
        } else {
            0
        }
    }

    /// Re-checks every recorded artifact from scratch.
    pub fn reverify(&self) -> Result<()> {
        for rec in &self.certificates {
            let cells: Vec<Cell> = rec.certificate.transversals().concat();
            let mut sorted = cells.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != cells.len() {
                return Err(Error::Contract(format!(
                    "certificate {} reuses a cell",
                    rec.index
                )));
            }
            for t in rec.certificate.transversals() {
                if !classify_positions(&rec.instance, t)?.is_it() {
                    return Err(Error::Contract(format!(
                        "certificate {} holds a non-IT",
                        rec.index
                    )));
                }
            }
            if let Certificate::Decomposition(d) = &rec.certificate {
                let n = rec.instance.n();
                if d.rows.len() != n
                    || cells.len() != n * n
                    || cells.iter().any(|c| !d.rows.contains(&c.row))
                {
                    return Err(Error::Contract(format!(
                        "certificate {} does not tile its rows",
                        rec.index
                    )));
                }
            }
        }
        for inst in &self.transversal_free {
            if brute_force_first(inst)?.is_some() {
                return Err(Error::Contract(
                    "a transversal-free instance has a transversal".into(),
                ));
            }
        }
        for ce in &self.counterexamples {
            let confirmed = if ce.reason.starts_with("no transversal") {
                brute_force_first(&ce.instance)?.is_none()
            } else if ce.reason.starts_with("no packing") {
                let target = ce.instance.m() + 1 - ce.instance.n();
                find_disjoint_transversals(&ce.instance, target)?.is_none()
            } else if ce.reason.starts_with("no decomposition") {
                find_nrow_decomposition(&ce.instance)?.is_none()
            } else {
                true
            };
            if !confirmed {
                return Err(Error::Contract(format!(
                    "counterexample {} does not reproduce",
                    ce.index
                )));
            }
        }
        Ok(())
    }

    /// Line-oriented rendering followed by a `[summary]` block of `key=value`
    /// lines. Wall time is left out so that output is reproducible.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report {}", self.title);
        for (k, v) in &self.config {
            let _ = writeln!(out, "config {k}={v}");
        }
        for inst in &self.transversal_free {
            let _ = writeln!(out, "transversal-free {}", compact(inst));
        }
        for ce in &self.counterexamples {
            let _ = writeln!(
                out,
                "counterexample {} {}: {}",
                ce.index,
                ce.reason,
                compact(&ce.instance)
            );
        }
        for rec in &self.certificates {
            let kind = match rec.certificate {
                Certificate::Packing(_) => "packing",
                Certificate::Decomposition(_) => "decomposition",
            };
            let body: Vec<String> = rec
                .certificate
                .transversals()
                .iter()
                .map(|t| {
                    t.iter()
                        .map(|c| format!("{},{}", c.row, c.col))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let _ = writeln!(
                out,
                "certificate {} {kind}: [{}]",
                rec.index,
                body.join("] [")
            );
        }
        for idx in &self.unresolved {
            let _ = writeln!(out, "unresolved {idx}");
        }
        let _ = writeln!(out, "[summary]");
        let _ = writeln!(out, "instances_scanned={}", self.instances_scanned);
        let _ = writeln!(out, "transversal_free={}", self.transversal_free.len());
        let _ = writeln!(out, "counterexamples={}", self.counterexamples.len());
        let _ = writeln!(out, "certificates={}", self.certificates.len());
        let _ = writeln!(out, "unresolved={}", self.unresolved.len());
        let _ = writeln!(out, "budget_exceeded={}", self.budget_exceeded);
        out
    }
}

/// Grid rows separated by ` / `.
fn compact(inst: &Instance) -> String {
    (1..=inst.m())
        .map(|r| {
            inst.row_labels(r)
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}
