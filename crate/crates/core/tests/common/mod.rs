//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the library's search code and use only grid access and the cell
//! matroid.

#![allow(dead_code)]

use matroid_transversal::instance::{Cell, Instance, Mode};
use matroid_transversal::matroid::{ElementId, Matroid};

/// All permutations of `0..n`, by insertion.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Injective maps from `0..n` into `0..m`.
pub fn injections(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..m)
                    .filter(|r| !p.contains(r))
                    .map(|r| {
                        let mut q = p.clone();
                        q.push(r);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn independent(inst: &Instance, cells: &[Cell]) -> bool {
    let elems: Vec<ElementId> = cells.iter().map(|&c| inst.element(c)).collect();
    inst.cell_matroid().independent(&elems)
}

/// Every IT, as cells listed by column.
pub fn all_its(inst: &Instance) -> Vec<Vec<Cell>> {
    injections(inst.n(), inst.m())
        .into_iter()
        .map(|rows| {
            rows.iter()
                .enumerate()
                .map(|(j, &r)| Cell::new(r + 1, j + 1))
                .collect::<Vec<_>>()
        })
        .filter(|cells| independent(inst, cells))
        .collect()
}

pub fn has_it(inst: &Instance) -> bool {
    !all_its(inst).is_empty()
}

/// `target` pairwise cell-disjoint ITs exist.
pub fn has_packing(inst: &Instance, target: usize) -> bool {
    fn go(its: &[Vec<Cell>], from: usize, left: usize, used: &mut Vec<Cell>) -> bool {
        if left == 0 {
            return true;
        }
        for i in from..its.len() {
            if its[i].iter().all(|c| !used.contains(c)) {
                let before = used.len();
                used.extend_from_slice(&its[i]);
                if go(its, i + 1, left - 1, used) {
                    return true;
                }
                used.truncate(before);
            }
        }
        false
    }
    go(&all_its(inst), 0, target, &mut Vec::new())
}

/// Some `n` rows are exactly covered by `n` disjoint ITs.
pub fn has_nrow(inst: &Instance) -> bool {
    let n = inst.n();
    let its = all_its(inst);
    fn go(its: &[&Vec<Cell>], from: usize, left: usize, used: &mut Vec<Cell>) -> bool {
        if left == 0 {
            return true;
        }
        (from..its.len()).any(|i| {
            if its[i].iter().any(|c| used.contains(c)) {
                return false;
            }
            let before = used.len();
            used.extend_from_slice(its[i]);
            let ok = go(its, i + 1, left - 1, used);
            used.truncate(before);
            ok
        })
    }
    injections(n, inst.m())
        .into_iter()
        .filter(|rows| rows.windows(2).all(|w| w[0] < w[1]))
        .any(|rows| {
            let inside: Vec<&Vec<Cell>> = its
                .iter()
                .filter(|t| t.iter().all(|c| rows.contains(&(c.row - 1))))
                .collect();
            go(&inside, 0, n, &mut Vec::new())
        })
}

fn symbols(inst: &Instance) -> usize {
    match inst.mode() {
        Mode::RowLatin { k } => k,
        Mode::Matroid => panic!("row-latin only"),
    }
}

/// Row, column and symbol permutations, enumerated in full.
pub fn iso_brute(a: &Instance, b: &Instance) -> bool {
    if (a.m(), a.n()) != (b.m(), b.n()) {
        return false;
    }
    let (m, n) = (a.m(), a.n());
    let k = symbols(a).max(symbols(b));
    let sym_perms = perms(k);
    for rp in perms(m) {
        for cp in perms(n) {
            for sp in &sym_perms {
                let same = (0..m).all(|i| {
                    (0..n).all(|j| {
                        let sa = a.label(Cell::new(i + 1, j + 1));
                        sp[sa - 1] + 1 == b.label(Cell::new(rp[i] + 1, cp[j] + 1))
                    })
                });
                if same {
                    return true;
                }
            }
        }
    }
    false
}

/// Every `m x n` row-latin matrix on `1..=k` with rows in non-decreasing
/// lexicographic order, built without the library's enumerators.
pub fn sorted_row_matrices(n: usize, k: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    let rows: Vec<Vec<usize>> = injections(n, k)
        .into_iter()
        .map(|r| r.into_iter().map(|s| s + 1).collect())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|mat: Vec<Vec<usize>>| {
                rows.iter()
                    .filter(|r| mat.last().is_none_or(|last| last <= *r))
                    .map(|r| {
                        let mut next = mat.clone();
                        next.push(r.clone());
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}
