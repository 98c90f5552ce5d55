use super::{Cell, Instance};
use crate::error::{Error, Result};
use crate::matroid::ElementId;

/// A sub-matrix on a subset of rows and columns, addressed locally but
/// reporting cells in the instance's coordinates. Rows and columns keep
/// their original relative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct View<'a> {
    instance: &'a Instance,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

/// The view of `instance` without the given rows and columns (1-based).
pub fn logical_view<'a>(
    instance: &'a Instance,
    excluded_rows: &[usize],
    excluded_cols: &[usize],
) -> Result<View<'a>> {
    View::full(instance).exclude(excluded_rows, excluded_cols)
}

impl<'a> View<'a> {
    pub fn full(instance: &'a Instance) -> Self {
        Self {
            instance,
            rows: (1..=instance.m()).collect(),
            cols: (1..=instance.n()).collect(),
        }
    }

    pub fn instance(&self) -> &'a Instance {
        self.instance
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    /// Original row numbers, ascending.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Original column numbers, ascending.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Original cell at local (0-based) position.
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        Cell::new(self.rows[i], self.cols[j])
    }

    pub fn element(&self, i: usize, j: usize) -> ElementId {
        self.instance.element(self.cell(i, j))
    }

    /// Removes further rows and columns, given in original coordinates.
    pub fn exclude(&self, rows: &[usize], cols: &[usize]) -> Result<View<'a>> {
        let (m, n) = (self.instance.m(), self.instance.n());
        if let Some(&r) = rows.iter().find(|&&r| !(1..=m).contains(&r)) {
            return Err(Error::OutOfBounds {
                row: r,
                col: 1,
                m,
                n,
            });
        }
        if let Some(&c) = cols.iter().find(|&&c| !(1..=n).contains(&c)) {
            return Err(Error::OutOfBounds {
                row: 1,
                col: c,
                m,
                n,
            });
        }
        let view = View {
            instance: self.instance,
            rows: self
                .rows
                .iter()
                .copied()
                .filter(|r| !rows.contains(r))
                .collect(),
            cols: self
                .cols
                .iter()
                .copied()
                .filter(|c| !cols.contains(c))
                .collect(),
        };
        if view.rows.is_empty() || view.cols.is_empty() {
            return Err(Error::EmptyView);
        }
        Ok(view)
    }

    /// Keeps only the first `count` rows of the view.
    pub fn first_rows(&self, count: usize) -> View<'a> {
        View {
            instance: self.instance,
            rows: self.rows[..count.min(self.rows.len())].to_vec(),
            cols: self.cols.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r53() -> Instance {
        Instance::row_latin(
            3,
            &[
                vec![1, 2, 3],
                vec![1, 2, 3],
                vec![1, 2, 3],
                vec![2, 3, 1],
                vec![2, 3, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn drop_two_rows_and_a_column() {
        let inst = r53();
        let v = logical_view(&inst, &[1, 2], &[1]).unwrap();
        assert_eq!((v.m(), v.n()), (3, 2));
        assert_eq!(v.cell(0, 0), Cell::new(3, 2));
        assert_eq!(inst.label(v.cell(1, 1)), 1);
    }

    #[test]
    fn excluding_nothing_is_identity() {
        let inst = r53();
        assert_eq!(logical_view(&inst, &[], &[]).unwrap(), View::full(&inst));
    }

    #[test]
    fn views_compose() {
        let inst = r53();
        let twice = logical_view(&inst, &[2], &[3])
            .unwrap()
            .exclude(&[4], &[1])
            .unwrap();
        assert_eq!(twice, logical_view(&inst, &[2, 4], &[1, 3]).unwrap());
    }

    #[test]
    fn errors() {
        let inst = r53();
        assert!(matches!(
            logical_view(&inst, &[], &[1, 2, 3]),
            Err(Error::EmptyView)
        ));
        assert!(matches!(
            logical_view(&inst, &[6], &[]),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(matches!(
            logical_view(&inst, &[], &[4]),
            Err(Error::OutOfBounds { .. })
        ));
    }
}
