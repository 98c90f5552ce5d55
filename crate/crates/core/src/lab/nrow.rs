use super::enumerate::{combinations, permutations};
use super::SearchLimits;
use crate::error::{Error, Result};
use crate::instance::{Cell, Instance};
use crate::matroid::{ElementId, Oracle};

/// `n` rows whose `n x n` sub-grid splits into `n` disjoint ITs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowDecomposition {
    /// 1-based, ascending.
    pub rows: Vec<usize>,
    /// Transversal `t` holds the cell of the first chosen row in column `t + 1`.
    pub transversals: Vec<Vec<Cell>>,
}

pub fn find_nrow_decomposition(instance: &Instance) -> Result<Option<RowDecomposition>> {
    find_nrow_decomposition_with(instance, &SearchLimits::default())
}

/// Tries every `n`-subset of rows in lexicographic order. Within a subset,
/// the ITs of the sub-grid are listed as row permutations and combined by
/// backtracking into `n` that never share a cell, which then tile the sub-grid.
pub fn find_nrow_decomposition_with(
    instance: &Instance,
    limits: &SearchLimits,
) -> Result<Option<RowDecomposition>> {
    let (m, n) = (instance.m(), instance.n());
    if n == 0 {
        return Err(Error::Precondition("instance has no columns".into()));
    }
    if n > limits.nrow_max_n {
        return Err(Error::TooLarge {
            what: "column count",
            size: n,
            limit: limits.nrow_max_n,
        });
    }
    if m < n {
        return Err(Error::Precondition(format!(
            "need at least n = {n} rows, found {m}"
        )));
    }
    let matroid = instance.cell_matroid();
    let oracle = Oracle::new(&matroid);
    let perms = permutations(n);
    let mut nodes = 0u64;
    for subset in combinations(m, n) {
        let rows: Vec<usize> = subset.iter().map(|r| r + 1).collect();
        // perm[j] = index into `rows` used in column j + 1
        let mut valid: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        for perm in &perms {
            let elems: Vec<ElementId> = perm
                .iter()
                .enumerate()
                .map(|(j, &i)| instance.element(Cell::new(rows[i], j + 1)))
                .collect();
            if oracle.is_independent(&elems)? {
                let owner = perm
                    .iter()
                    .position(|&i| i == 0)
                    .expect("perm covers row 0");
                valid[owner].push(perm.clone());
            }
        }
        if valid.iter().any(Vec::is_empty) {
            continue;
        }
        let mut chosen: Vec<&Vec<usize>> = Vec::with_capacity(n);
        if tile(&valid, &mut chosen, &mut nodes, limits.max_nodes)? {
            let transversals = chosen
                .iter()
                .map(|perm| {
                    perm.iter()
                        .enumerate()
                        .map(|(j, &i)| Cell::new(rows[i], j + 1))
                        .collect()
                })
                .collect();
            return Ok(Some(RowDecomposition { rows, transversals }));
        }
    }
    Ok(None)
}

fn tile<'p>(
    valid: &'p [Vec<Vec<usize>>],
    chosen: &mut Vec<&'p Vec<usize>>,
    nodes: &mut u64,
    max_nodes: u64,
) -> Result<bool> {
    let t = chosen.len();
    if t == valid.len() {
        return Ok(true);
    }
    for perm in &valid[t] {
        *nodes += 1;
        if *nodes > max_nodes {
            return Err(Error::BudgetExceeded(max_nodes));
        }
        let clash = chosen
            .iter()
            .any(|other| other.iter().zip(perm.iter()).any(|(a, b)| a == b));
        if clash {
            continue;
        }
        chosen.push(perm);
        if tile(valid, chosen, nodes, max_nodes)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}
