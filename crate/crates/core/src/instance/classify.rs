use std::fmt;

use super::{Cell, Instance};
use crate::error::Result;
use crate::matroid::{ElementId, Oracle};

/// Cells with pairwise distinct rows and pairwise distinct columns, sorted by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositionSet(Vec<Cell>);

impl PositionSet {
    /// `None` if two cells share a row or a column.
    pub fn new(mut cells: Vec<Cell>) -> Option<Self> {
        cells.sort_by_key(|c| (c.col, c.row));
        let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
        rows.sort_unstable();
        let distinct_rows = rows.windows(2).all(|w| w[0] != w[1]);
        let distinct_cols = cells.windows(2).all(|w| w[0].col != w[1].col);
        (distinct_rows && distinct_cols).then_some(Self(cells))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Classification {
    /// Two cells share a row or a column.
    NotPartial,
    /// Partial transversal.
    Partial,
    /// Independent partial transversal.
    IndependentPartial,
    /// Independent transversal: one independent cell in every column.
    Independent,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NotPartial => "none",
            Classification::Partial => "PT",
            Classification::IndependentPartial => "IPT",
            Classification::Independent => "IT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCertificate {
    /// Sorted by column, then row.
    pub positions: Vec<Cell>,
    pub classification: Classification,
}

impl TransversalCertificate {
    pub fn is_it(&self) -> bool {
        self.classification == Classification::Independent
    }
}

/// Classifies a set of cells as (independent) partial transversal or transversal.
pub fn classify_positions(instance: &Instance, cells: &[Cell]) -> Result<TransversalCertificate> {
    for &c in cells {
        instance.check_cell(c)?;
    }
    let mut positions = cells.to_vec();
    positions.sort_by_key(|c| (c.col, c.row));
    let Some(set) = PositionSet::new(positions.clone()) else {
        return Ok(TransversalCertificate {
            positions,
            classification: Classification::NotPartial,
        });
    };
    let cm = instance.cell_matroid();
    let elements: Vec<ElementId> = set.cells().iter().map(|&c| instance.element(c)).collect();
    let independent = Oracle::new(&cm).is_independent(&elements)?;
    let classification = match (independent, set.len() == instance.n()) {
        (false, _) => Classification::Partial,
        (true, false) => Classification::IndependentPartial,
        (true, true) => Classification::Independent,
    };
    Ok(TransversalCertificate {
        positions,
        classification,
    })
}

impl From<PositionSet> for Vec<Cell> {
    fn from(p: PositionSet) -> Self {
        p.0
    }
}
