use super::{ElementId, Matroid};

/// Partition matroid with capacity one per class: a set is independent
/// when no two of its elements share a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    classes: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(classes: Vec<usize>) -> Self {
        Self { classes }
    }

    /// The free matroid on `size` elements: every element is its own class.
    pub fn free(size: usize) -> Self {
        Self::new((0..size).collect())
    }

    pub fn class_of(&self, id: ElementId) -> usize {
        self.classes[id.0]
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.classes.len()
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        let mut seen: Vec<usize> = set.iter().map(|&e| self.classes[e.0]).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}
