use super::{ElementId, Matroid};

/// The uniform matroid U_{r,g}: every set of at most `rank` elements is independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    rank: usize,
    size: usize,
}

impl UniformMatroid {
    pub fn new(rank: usize, size: usize) -> Self {
        Self { rank, size }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.size
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        set.len() <= self.rank
    }
}
