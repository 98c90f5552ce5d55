use std::collections::BTreeMap;

use super::enumerate::permutations;
use super::SearchLimits;
use crate::error::{Error, Result};
use crate::instance::{Instance, Mode};

pub fn iso_equivalent(a: &Instance, b: &Instance) -> Result<bool> {
    iso_equivalent_with(a, b, &SearchLimits::default())
}

/// Whether permuting the rows and columns of `a` and renaming its symbols
/// injectively turns it into `b`.
///
/// For each column permutation, distinct rows of `b` are matched to
/// distinct rows of `a` with the same multiplicity, growing a symbol
/// bijection along the way.
pub fn iso_equivalent_with(a: &Instance, b: &Instance, limits: &SearchLimits) -> Result<bool> {
    for inst in [a, b] {
        let Mode::RowLatin { k } = inst.mode() else {
            return Err(Error::Precondition(
                "isomorphism is defined for row-latin instances".into(),
            ));
        };
        if inst.n() > limits.iso_max_n {
            return Err(Error::TooLarge {
                what: "column count",
                size: inst.n(),
                limit: limits.iso_max_n,
            });
        }
        if inst.m() > limits.iso_max_m {
            return Err(Error::TooLarge {
                what: "row count",
                size: inst.m(),
                limit: limits.iso_max_m,
            });
        }
        if k > limits.iso_max_symbols {
            return Err(Error::TooLarge {
                what: "alphabet",
                size: k,
                limit: limits.iso_max_symbols,
            });
        }
    }
    if (a.m(), a.n()) != (b.m(), b.n()) {
        return Ok(false);
    }
    if symbol_profile(a) != symbol_profile(b) || row_profile(a) != row_profile(b) {
        return Ok(false);
    }
    let rows_b = grouped_rows(b, None);
    let target: Vec<(Vec<usize>, usize)> = rows_b.into_iter().collect();
    for perm in permutations(a.n()) {
        let rows_a: Vec<(Vec<usize>, usize)> = grouped_rows(a, Some(&perm)).into_iter().collect();
        let mut matcher = Matcher {
            from: &rows_a,
            to: &target,
            taken: vec![false; rows_a.len()],
            forward: BTreeMap::new(),
            backward: BTreeMap::new(),
        };
        if matcher.assign(0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Sorted occurrence counts of the symbols that appear.
fn symbol_profile(inst: &Instance) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in 1..=inst.m() {
        for s in inst.row_labels(r) {
            *counts.entry(s).or_default() += 1;
        }
    }
    let mut v: Vec<usize> = counts.into_values().collect();
    v.sort_unstable();
    v
}

/// Sorted multiplicities of distinct rows.
fn row_profile(inst: &Instance) -> Vec<usize> {
    let mut v: Vec<usize> = grouped_rows(inst, None).into_values().collect();
    v.sort_unstable();
    v
}

fn grouped_rows(inst: &Instance, col_perm: Option<&[usize]>) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    for r in 1..=inst.m() {
        let labels = inst.row_labels(r);
        let row = match col_perm {
            Some(p) => p.iter().map(|&j| labels[j]).collect(),
            None => labels,
        };
        *out.entry(row).or_default() += 1;
    }
    out
}

struct Matcher<'a> {
    from: &'a [(Vec<usize>, usize)],
    to: &'a [(Vec<usize>, usize)],
    taken: Vec<bool>,
    forward: BTreeMap<usize, usize>,
    backward: BTreeMap<usize, usize>,
}

impl Matcher<'_> {
    fn assign(&mut self, i: usize) -> bool {
        if i == self.to.len() {
            return true;
        }
        let (target_row, mult) = &self.to[i];
        for j in 0..self.from.len() {
            let (row, m) = &self.from[j];
            if self.taken[j] || m != mult {
                continue;
            }
            let mut added = Vec::new();
            let consistent = row.iter().zip(target_row).all(|(&x, &y)| {
                match (self.forward.get(&x), self.backward.get(&y)) {
                    (Some(&fx), _) => fx == y,
                    (None, Some(_)) => false,
                    (None, None) => {
                        self.forward.insert(x, y);
                        self.backward.insert(y, x);
                        added.push(x);
                        true
                    }
                }
            });
            if consistent {
                self.taken[j] = true;
                if self.assign(i + 1) {
                    return true;
                }
                self.taken[j] = false;
            }
            for x in added {
                let y = self.forward.remove(&x).expect("inserted above");
                self.backward.remove(&y);
            }
        }
        false
    }
}
