use std::cell::Cell;

use super::{ElementId, ElementSet, Matroid};
use crate::error::{Error, Result};

/// Counted access to a matroid.
///
/// Each logical task owns its own `Oracle`; the matroid itself is shared
/// immutably. `calls` counts base independence queries only. Derived
/// queries document their own budget in base queries.
pub struct Oracle<'m> {
    matroid: &'m dyn Matroid,
    calls: Cell<u64>,
}

impl<'m> Oracle<'m> {
    pub fn new(matroid: &'m dyn Matroid) -> Self {
        Self {
            matroid,
            calls: Cell::new(0),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.matroid.ground_size()
    }

    /// Number of base independence queries issued so far.
    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    fn check_id(&self, id: ElementId) -> Result<()> {
        let ground_size = self.matroid.ground_size();
        if id.0 >= ground_size {
            return Err(Error::InvalidElement {
                id: id.0,
                ground_size,
            });
        }
        Ok(())
    }

    /// One base query. A slice that repeats an element is a dependent multiset.
    pub fn is_independent(&self, set: &[ElementId]) -> Result<bool> {
        for &id in set {
            self.check_id(id)?;
        }
        self.calls.set(self.calls.get() + 1);
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(false);
        }
        Ok(self.matroid.independent(&sorted))
    }

    /// Tests `set + extra` without the caller building the union.
    pub fn is_independent_with(&self, set: &[ElementId], extra: ElementId) -> Result<bool> {
        let mut v = Vec::with_capacity(set.len() + 1);
        v.extend_from_slice(set);
        v.push(extra);
        self.is_independent(&v)
    }

    /// Greedy maximal independent subset of `set`, in input order. Uses `|set|` queries.
    pub fn basis_of(&self, set: &[ElementId]) -> Result<Vec<ElementId>> {
        let mut basis = Vec::with_capacity(set.len());
        for &x in set {
            if self.is_independent_with(&basis, x)? {
                basis.push(x);
            }
        }
        Ok(basis)
    }

    /// Rank by one greedy scan: at most `|set|` queries.
    pub fn rank(&self, set: &[ElementId]) -> Result<usize> {
        Ok(self.basis_of(set)?.len())
    }

    /// Whether `x` lies in the closure of `set`. Uses at most `|set| + 1` queries.
    pub fn in_span(&self, set: &[ElementId], x: ElementId) -> Result<bool> {
        self.check_id(x)?;
        if set.contains(&x) {
            return Ok(true);
        }
        let basis = self.basis_of(set)?;
        Ok(!self.is_independent_with(&basis, x)?)
    }

    /// Span membership when `set` is already known to be independent: one query.
    pub fn in_span_of_independent(&self, set: &[ElementId], x: ElementId) -> Result<bool> {
        self.check_id(x)?;
        if set.contains(&x) {
            return Ok(true);
        }
        Ok(!self.is_independent_with(set, x)?)
    }

    /// The unique circuit inside `independent + e`.
    ///
    /// Requires `independent` to be independent and `independent + e`
    /// dependent. Uses `|independent| + 1` queries.
    pub fn fundamental_circuit(
        &self,
        independent: &[ElementId],
        e: ElementId,
    ) -> Result<ElementSet> {
        self.check_id(e)?;
        if independent.contains(&e) || self.is_independent_with(independent, e)? {
            return Err(Error::Contract(format!(
                "fundamental circuit of {e} requested but the set plus {e} is independent"
            )));
        }
        let mut circuit = ElementSet::new();
        circuit.insert(e);
        let mut trial = Vec::with_capacity(independent.len());
        for (i, &x) in independent.iter().enumerate() {
            trial.clear();
            trial.extend(
                independent
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &y)| y),
            );
            trial.push(e);
            if self.is_independent(&trial)? {
                circuit.insert(x);
            }
        }
        Ok(circuit)
    }

    /// Parallel test used by the column scan. An element is parallel to itself.
    pub fn are_parallel(&self, x: ElementId, y: ElementId) -> Result<bool> {
        self.check_id(x)?;
        self.check_id(y)?;
        if x == y {
            return Ok(true);
        }
        if self.is_independent(&[x, y])? {
            return Ok(false);
        }
        Ok(self.is_independent(&[x])? && self.is_independent(&[y])?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{LinearMatroid, PartitionMatroid, UniformMatroid};

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    fn gf2_triangle() -> LinearMatroid {
        LinearMatroid::new(2, 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn empty_set_is_independent_and_counted() {
        let m = UniformMatroid::new(0, 3);
        let o = Oracle::new(&m);
        assert!(o.is_independent(&[]).unwrap());
        assert_eq!(o.calls(), 1);
    }

    #[test]
    fn invalid_element_is_rejected() {
        let m = UniformMatroid::new(2, 3);
        let o = Oracle::new(&m);
        assert!(matches!(
            o.is_independent(&ids(&[0, 3])),
            Err(Error::InvalidElement {
                id: 3,
                ground_size: 3
            })
        ));
        assert_eq!(o.calls(), 0);
    }

    #[test]
    fn repeated_element_is_dependent() {
        let m = UniformMatroid::new(3, 3);
        let o = Oracle::new(&m);
        assert!(!o.is_independent(&ids(&[1, 1])).unwrap());
    }

    #[test]
    fn rank_examples() {
        let p = PartitionMatroid::new(vec![0, 1, 2]);
        assert_eq!(Oracle::new(&p).rank(&[]).unwrap(), 0);
        assert_eq!(Oracle::new(&p).rank(&ids(&[0, 1, 2])).unwrap(), 3);
        let g = gf2_triangle();
        let o = Oracle::new(&g);
        assert_eq!(o.rank(&ids(&[0, 1, 2])).unwrap(), 2);
        assert_eq!(o.calls(), 3);
    }

    #[test]
    fn span_examples() {
        let u = UniformMatroid::new(2, 4);
        let o = Oracle::new(&u);
        assert!(o.in_span(&ids(&[0, 1]), ElementId(0)).unwrap());
        assert!(o.in_span(&ids(&[0, 1]), ElementId(2)).unwrap());
        let gf3 = LinearMatroid::new(3, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let o = Oracle::new(&gf3);
        assert!(!o.in_span(&ids(&[0]), ElementId(1)).unwrap());
        let before = o.calls();
        assert!(!o.in_span_of_independent(&ids(&[0]), ElementId(1)).unwrap());
        assert_eq!(o.calls(), before + 1);
    }

    #[test]
    fn circuit_examples() {
        let p = PartitionMatroid::new(vec![1, 2, 1]);
        let o = Oracle::new(&p);
        let c = o.fundamental_circuit(&ids(&[0, 1]), ElementId(2)).unwrap();
        assert_eq!(c, ElementSet::from([0, 2]));
        assert!(o.calls() <= 3);

        let u = UniformMatroid::new(2, 4);
        let c = Oracle::new(&u)
            .fundamental_circuit(&ids(&[0, 1]), ElementId(2))
            .unwrap();
        assert_eq!(c, ElementSet::from([0, 1, 2]));

        let g = gf2_triangle();
        let c = Oracle::new(&g)
            .fundamental_circuit(&ids(&[0, 1]), ElementId(2))
            .unwrap();
        assert_eq!(c, ElementSet::from([0, 1, 2]));
    }

    #[test]
    fn circuit_of_independent_extension_is_a_contract_error() {
        let u = UniformMatroid::new(3, 4);
        let o = Oracle::new(&u);
        assert!(matches!(
            o.fundamental_circuit(&ids(&[0, 1]), ElementId(2)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn parallel_examples() {
        let p = PartitionMatroid::new(vec![1, 1, 2]);
        let o = Oracle::new(&p);
        assert!(o.are_parallel(ElementId(0), ElementId(1)).unwrap());
        assert!(!o.are_parallel(ElementId(0), ElementId(2)).unwrap());
        assert!(o.are_parallel(ElementId(2), ElementId(2)).unwrap());
        let u = UniformMatroid::new(1, 3);
        let o = Oracle::new(&u);
        assert!(o.are_parallel(ElementId(0), ElementId(2)).unwrap());
        // loops are never parallel to anything distinct
        let loops = UniformMatroid::new(0, 2);
        assert!(!Oracle::new(&loops)
            .are_parallel(ElementId(0), ElementId(1))
            .unwrap());
    }
}
