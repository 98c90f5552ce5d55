//! Matrices whose entries are matroid elements.
//!
//! Each cell is its own ground element of the *cell matroid*: a set of cells
//! is independent when no two cells carry the same underlying element and the
//! underlying elements are independent. Repeated entries therefore behave as
//! parallel copies of one element.

mod classify;
mod text;
mod view;

use std::fmt;

pub use classify::{classify_positions, Classification, PositionSet, TransversalCertificate};
pub use text::{parse_certificate, CertificateLine};
pub use view::{logical_view, View};

use crate::error::{Error, Result};
use crate::matroid::{AnyMatroid, ElementId, Matroid, Oracle, PartitionMatroid};

/// A grid position, 1-based in both coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Entries are symbols `1..=k`; independence means distinct symbols.
    RowLatin { k: usize },
    /// Entries index the ground set of a linear, uniform or graphic matroid.
    Matroid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    /// Row-major underlying element ids, 0-based.
    grid: Vec<usize>,
    base: AnyMatroid,
}

impl Instance {
    /// Builds an instance over `base`; `grid` holds 0-based element ids in row-major order.
    pub fn new(m: usize, n: usize, grid: Vec<usize>, base: AnyMatroid) -> Result<Self> {
        if grid.len() != m * n {
            return Err(Error::Parameters(format!(
                "grid has {} entries, expected {m}x{n}",
                grid.len()
            )));
        }
        if let AnyMatroid::Partition(p) = &base {
            if (0..p.ground_size()).any(|i| p.class_of(ElementId(i)) != i) {
                return Err(Error::Parameters(
                    "partition matroids enter only as row-latin symbol alphabets".into(),
                ));
            }
        }
        let g = base.ground_size();
        if let Some(&bad) = grid.iter().find(|&&e| e >= g) {
            return Err(Error::InvalidElement {
                id: bad,
                ground_size: g,
            });
        }
        Ok(Self { m, n, grid, base })
    }

    /// A row-latin instance over symbols `1..=k`, given row by row.
    pub fn row_latin(k: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut grid = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parameters(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &s in row {
                if s == 0 || s > k {
                    return Err(Error::Parameters(format!(
                        "symbol {s} in row {} is outside 1..={k}",
                        i + 1
                    )));
                }
                grid.push(s - 1);
            }
        }
        Self::new(m, n, grid, AnyMatroid::Partition(PartitionMatroid::free(k)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &AnyMatroid {
        &self.base
    }

    pub fn mode(&self) -> Mode {
        match &self.base {
            AnyMatroid::Partition(p) => Mode::RowLatin { k: p.ground_size() },
            _ => Mode::Matroid,
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.m).contains(&cell.row) && (1..=self.n).contains(&cell.col)
    }

    pub fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                row: cell.row,
                col: cell.col,
                m: self.m,
                n: self.n,
            })
        }
    }

    /// Cell-matroid element of a cell.
    pub fn element(&self, cell: Cell) -> ElementId {
        debug_assert!(self.contains(cell));
        ElementId((cell.row - 1) * self.n + cell.col - 1)
    }

    pub fn cell_of(&self, e: ElementId) -> Cell {
        Cell::new(e.0 / self.n + 1, e.0 % self.n + 1)
    }

    /// Underlying 0-based element id at a cell.
    pub fn entry(&self, cell: Cell) -> usize {
        self.grid[(cell.row - 1) * self.n + cell.col - 1]
    }

    /// The entry as written in the text format: a symbol or a 1-based ground index.
    pub fn label(&self, cell: Cell) -> usize {
        self.entry(cell) + 1
    }

    pub fn row_labels(&self, row: usize) -> Vec<usize> {
        (1..=self.n)
            .map(|c| self.label(Cell::new(row, c)))
            .collect()
    }

    pub fn cell_matroid(&self) -> CellMatroid<'_> {
        CellMatroid { instance: self }
    }

    /// Rows (1-based) whose cells are not `n` distinct, jointly independent elements.
    pub fn validate_rows(&self) -> Vec<usize> {
        let cm = self.cell_matroid();
        let oracle = Oracle::new(&cm);
        (1..=self.m)
            .filter(|&r| {
                let row: Vec<ElementId> = (1..=self.n)
                    .map(|c| self.element(Cell::new(r, c)))
                    .collect();
                !oracle.is_independent(&row).unwrap_or(false)
            })
            .collect()
    }

    /// Reorders rows and columns: new row `i` is old row `row_perm[i]`, likewise for columns (0-based).
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        if !is_permutation(row_perm, self.m) || !is_permutation(col_perm, self.n) {
            return Err(Error::Parameters(
                "not a permutation of the rows/columns".into(),
            ));
        }
        let grid = row_perm
            .iter()
            .flat_map(|&r| col_perm.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.grid[r * self.n + c])
            .collect();
        Self::new(self.m, self.n, grid, self.base.clone())
    }

    /// Renames row-latin symbols: symbol `s` becomes `relabel[s - 1]`.
    pub fn relabel_symbols(&self, relabel: &[usize]) -> Result<Self> {
        let Mode::RowLatin { k } = self.mode() else {
            return Err(Error::Precondition(
                "symbol relabelling needs a row-latin instance".into(),
            ));
        };
        if !is_permutation(
            &relabel
                .iter()
                .map(|&s| s.wrapping_sub(1))
                .collect::<Vec<_>>(),
            k,
        ) {
            return Err(Error::Parameters(
                "relabelling is not a permutation of 1..=k".into(),
            ));
        }
        let grid = self.grid.iter().map(|&e| relabel[e] - 1).collect();
        Self::new(self.m, self.n, grid, self.base.clone())
    }

    /// Keeps the given rows (0-based, in the given order).
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        if let Some(&bad) = rows.iter().find(|&&r| r >= self.m) {
            return Err(Error::OutOfBounds {
                row: bad + 1,
                col: 1,
                m: self.m,
                n: self.n,
            });
        }
        let grid = rows
            .iter()
            .flat_map(|&r| self.grid[r * self.n..(r + 1) * self.n].iter().copied())
            .collect();
        Self::new(rows.len(), self.n, grid, self.base.clone())
    }
}

fn is_permutation(p: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    p.len() == len
        && p.iter()
            .all(|&x| x < len && !std::mem::replace(&mut seen[x], true))
}

/// The blown-up matroid on the cells of an instance.
pub struct CellMatroid<'a> {
    instance: &'a Instance,
}

impl Matroid for CellMatroid<'_> {
    fn ground_size(&self) -> usize {
        self.instance.m * self.instance.n
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        let mut underlying: Vec<ElementId> = set
            .iter()
            .map(|e| ElementId(self.instance.grid[e.0]))
            .collect();
        underlying.sort_unstable();
        if underlying.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.instance.base.independent(&underlying)
    }
}
