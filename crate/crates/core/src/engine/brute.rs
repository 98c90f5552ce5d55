use crate::error::{Error, Result};
use crate::instance::{classify_positions, Cell, Instance, TransversalCertificate};
use crate::matroid::{ElementId, Oracle};

pub const DEFAULT_BRUTE_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteMode {
    First,
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteOutcome {
    First(Option<TransversalCertificate>),
    Count(u64),
}

pub fn brute_force_find(instance: &Instance, mode: BruteMode) -> Result<BruteOutcome> {
    brute_force_find_with_limit(instance, mode, DEFAULT_BRUTE_LIMIT)
}

/// Column-by-column backtracking over row choices, pruning as soon as the
/// chosen entries become dependent.
pub fn brute_force_find_with_limit(
    instance: &Instance,
    mode: BruteMode,
    max_n: usize,
) -> Result<BruteOutcome> {
    if instance.n() > max_n {
        return Err(Error::TooLarge {
            what: "column count",
            size: instance.n(),
            limit: max_n,
        });
    }
    let matroid = instance.cell_matroid();
    let mut search = Search {
        instance,
        oracle: Oracle::new(&matroid),
        used: vec![false; instance.m() + 1],
        cells: Vec::with_capacity(instance.n()),
        elems: Vec::with_capacity(instance.n()),
        stop_at_first: mode == BruteMode::First,
        count: 0,
    };
    let found = search.column(1)?;
    match mode {
        BruteMode::Count => Ok(BruteOutcome::Count(search.count)),
        BruteMode::First if found => Ok(BruteOutcome::First(Some(classify_positions(
            instance,
            &search.cells,
        )?))),
        BruteMode::First => Ok(BruteOutcome::First(None)),
    }
}

pub fn brute_force_first(instance: &Instance) -> Result<Option<TransversalCertificate>> {
    match brute_force_find(instance, BruteMode::First)? {
        BruteOutcome::First(c) => Ok(c),
        BruteOutcome::Count(_) => unreachable!(),
    }
}

pub fn brute_force_count(instance: &Instance) -> Result<u64> {
    match brute_force_find(instance, BruteMode::Count)? {
        BruteOutcome::Count(c) => Ok(c),
        BruteOutcome::First(_) => unreachable!(),
    }
}

struct Search<'a, 'm> {
    instance: &'a Instance,
    oracle: Oracle<'m>,
    used: Vec<bool>,
    cells: Vec<Cell>,
    elems: Vec<ElementId>,
    stop_at_first: bool,
    count: u64,
}

impl Search<'_, '_> {
    /// Returns true once a transversal is found in stop-at-first mode.
    fn column(&mut self, col: usize) -> Result<bool> {
        if col > self.instance.n() {
            self.count += 1;
            return Ok(self.stop_at_first);
        }
        for row in 1..=self.instance.m() {
            if self.used[row] {
                continue;
            }
            let cell = Cell::new(row, col);
            let e = self.instance.element(cell);
            if !self.oracle.is_independent_with(&self.elems, e)? {
                continue;
            }
            self.used[row] = true;
            self.cells.push(cell);
            self.elems.push(e);
            if self.column(col + 1)? {
                return Ok(true);
            }
            self.used[row] = false;
            self.cells.pop();
            self.elems.pop();
        }
        Ok(false)
    }
}
