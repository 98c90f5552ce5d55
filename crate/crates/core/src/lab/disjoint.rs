use super::SearchLimits;
use crate::error::{Error, Result};
use crate::instance::{Cell, Instance};
use crate::matroid::{ElementId, Oracle};

/// Pairwise cell-disjoint independent transversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPacking {
    /// Each transversal sorted by column.
    pub transversals: Vec<Vec<Cell>>,
}

pub fn find_disjoint_transversals(
    instance: &Instance,
    target: usize,
) -> Result<Option<DisjointPacking>> {
    find_disjoint_transversals_with(instance, target, &SearchLimits::default())
}

/// Exhaustive search for `target` cell-disjoint ITs.
///
/// Transversals are built one at a time, column by column. They are
/// ordered by the row of their first-column cell, which removes the
/// `target!` relabellings of any packing.
pub fn find_disjoint_transversals_with(
    instance: &Instance,
    target: usize,
    limits: &SearchLimits,
) -> Result<Option<DisjointPacking>> {
    let (m, n) = (instance.m(), instance.n());
    if target == 0 {
        return Err(Error::Precondition("target must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("instance has no columns".into()));
    }
    if n > limits.packing_max_n {
        return Err(Error::TooLarge {
            what: "column count",
            size: n,
            limit: limits.packing_max_n,
        });
    }
    if target > m {
        return Ok(None);
    }
    let matroid = instance.cell_matroid();
    let mut search = Packer {
        instance,
        oracle: Oracle::new(&matroid),
        target,
        used: vec![vec![false; n + 1]; m + 1],
        free_in_col: vec![m; n + 1],
        done: Vec::new(),
        current: Vec::with_capacity(n),
        elems: Vec::with_capacity(n),
        row_busy: vec![false; m + 1],
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    if search.next_transversal(1)? {
        Ok(Some(DisjointPacking {
            transversals: search.done,
        }))
    } else {
        Ok(None)
    }
}

struct Packer<'a, 'm> {
    instance: &'a Instance,
    oracle: Oracle<'m>,
    target: usize,
    used: Vec<Vec<bool>>,
    free_in_col: Vec<usize>,
    done: Vec<Vec<Cell>>,
    current: Vec<Cell>,
    elems: Vec<ElementId>,
    row_busy: Vec<bool>,
    nodes: u64,
    max_nodes: u64,
}

impl Packer<'_, '_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(self.max_nodes));
        }
        Ok(())
    }

    fn set_used(&mut self, cells: &[Cell], value: bool) {
        for c in cells {
            self.used[c.row][c.col] = value;
            if value {
                self.free_in_col[c.col] -= 1;
            } else {
                self.free_in_col[c.col] += 1;
            }
        }
    }

    /// Starts a transversal whose first-column row is at least `min_row`.
    fn next_transversal(&mut self, min_row: usize) -> Result<bool> {
        let remaining = self.target - self.done.len();
        if remaining == 0 {
            return Ok(true);
        }
        if self.free_in_col[1..].iter().any(|&f| f < remaining) {
            return Ok(false);
        }
        let m = self.instance.m();
        for row in min_row..=m {
            if self.used[row][1] {
                continue;
            }
            let later = (row..=m).filter(|&r| !self.used[r][1]).count();
            if later < remaining {
                break;
            }
            if self.extend(Cell::new(row, 1))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Tries `cell` as the next entry of the current transversal.
    fn extend(&mut self, cell: Cell) -> Result<bool> {
        self.tick()?;
        let e = self.instance.element(cell);
        if !self.oracle.is_independent_with(&self.elems, e)? {
            return Ok(false);
        }
        self.current.push(cell);
        self.elems.push(e);
        self.row_busy[cell.row] = true;

        let found = if cell.col == self.instance.n() {
            let finished = std::mem::take(&mut self.current);
            let first_row = finished[0].row;
            self.set_used(&finished, true);
            self.done.push(finished);
            let saved = std::mem::take(&mut self.elems);
            let busy = std::mem::replace(&mut self.row_busy, vec![false; self.instance.m() + 1]);
            let found = self.next_transversal(first_row + 1)?;
            self.elems = saved;
            self.row_busy = busy;
            if !found {
                let finished = self.done.pop().expect("pushed above");
                self.set_used(&finished, false);
                self.current = finished;
            }
            found
        } else {
            let col = cell.col + 1;
            let mut found = false;
            for row in 1..=self.instance.m() {
                if !self.row_busy[row]
                    && !self.used[row][col]
                    && self.extend(Cell::new(row, col))?
                {
                    found = true;
                    break;
                }
            }
            found
        };
        if found {
            return Ok(true);
        }
        self.current.pop();
        self.elems.pop();
        self.row_busy[cell.row] = false;
        Ok(false)
    }
}
