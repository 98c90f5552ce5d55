//! Matroids accessed through an independence oracle.
//!
//! Every concrete matroid implements [`Matroid`], which answers a single
//! question: is this set of ground elements independent? All derived
//! queries (rank, span membership, fundamental circuits, parallelism) live
//! on [`Oracle`], which also counts how many base queries were issued.

mod axioms;
mod graphic;
mod linear;
mod oracle;
mod partition;
mod uniform;

use std::fmt;

pub use axioms::{
    verify_axioms, verify_axioms_with_limit, AxiomReport, AxiomViolation, DEFAULT_AXIOM_LIMIT,
};
pub use graphic::{GraphicMatroid, UnionFind};
pub use linear::LinearMatroid;
pub use oracle::Oracle;
pub use partition::PartitionMatroid;
pub use uniform::UniformMatroid;

/// Index of an element in a matroid's ground set `0..ground_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A sorted list of distinct elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(Vec<ElementId>);

impl ElementSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        match self.0.binary_search(&id) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, id);
                true
            }
        }
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ElementId> {
        self.0
    }

    /// Builds the set of elements whose indices are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        Self(
            (0..64)
                .filter(|b| mask >> b & 1 == 1)
                .map(ElementId)
                .collect(),
        )
    }
}

impl std::ops::Deref for ElementSet {
    type Target = [ElementId];

    fn deref(&self) -> &[ElementId] {
        &self.0
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut v: Vec<ElementId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().map(ElementId).collect()
    }
}

/// A matroid given by its independence predicate.
///
/// Implementations may assume `set` holds distinct, in-range ids; the
/// [`Oracle`] wrapper checks both before delegating.
pub trait Matroid: Send + Sync {
    fn ground_size(&self) -> usize;

    fn independent(&self, set: &[ElementId]) -> bool;
}

/// The four shipped matroid families behind one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatroid {
    Partition(PartitionMatroid),
    Linear(LinearMatroid),
    Uniform(UniformMatroid),
    Graphic(GraphicMatroid),
}

impl AnyMatroid {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyMatroid::Partition(_) => "partition",
            AnyMatroid::Linear(_) => "linear",
            AnyMatroid::Uniform(_) => "uniform",
            AnyMatroid::Graphic(_) => "graphic",
        }
    }
}

impl Matroid for AnyMatroid {
    fn ground_size(&self) -> usize {
        match self {
            AnyMatroid::Partition(m) => m.ground_size(),
            AnyMatroid::Linear(m) => m.ground_size(),
            AnyMatroid::Uniform(m) => m.ground_size(),
            AnyMatroid::Graphic(m) => m.ground_size(),
        }
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        match self {
            AnyMatroid::Partition(m) => m.independent(set),
            AnyMatroid::Linear(m) => m.independent(set),
            AnyMatroid::Uniform(m) => m.independent(set),
            AnyMatroid::Graphic(m) => m.independent(set),
        }
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        (**self).independent(set)
    }
}
