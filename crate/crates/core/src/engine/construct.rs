use crate::error::{Error, Result};
use crate::instance::{
    classify_positions, Cell, Instance, PositionSet, TransversalCertificate, View,
};
use crate::matroid::{ElementId, Oracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FindOptions {
    /// Re-check the loop invariants of the construction after every step.
    /// Uses a separate oracle, so `base_calls` is unaffected.
    pub check_claims: bool,
    /// Record the role assignments of every step.
    pub trace: bool,
}

impl Default for FindOptions {
    fn default() -> Self {
        Self {
            check_claims: cfg!(debug_assertions),
            trace: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleStats {
    pub base_calls: u64,
    pub recursion_depth: usize,
    pub n: usize,
}

#[derive(Debug, Clone)]
pub struct FindOutcome {
    pub certificate: TransversalCertificate,
    pub stats: OracleStats,
    pub trace: Vec<String>,
}

pub fn find_it(instance: &Instance) -> Result<FindOutcome> {
    find_it_with(instance, &FindOptions::default())
}

/// Constructs an independent transversal of an instance with `m >= 2n - 1`
/// independent rows, using only its first `2n - 1` rows.
pub fn find_it_with(instance: &Instance, options: &FindOptions) -> Result<FindOutcome> {
    let (m, n) = (instance.m(), instance.n());
    if n == 0 {
        return Err(Error::Precondition("instance has no columns".into()));
    }
    if m < 2 * n - 1 {
        return Err(Error::Precondition(format!(
            "{m} rows is fewer than 2n - 1 = {}",
            2 * n - 1
        )));
    }
    let bad = instance.validate_rows();
    if !bad.is_empty() {
        return Err(Error::InvalidRows { rows: bad });
    }

    let matroid = instance.cell_matroid();
    let mut solver = Solver {
        instance,
        oracle: Oracle::new(&matroid),
        checker: Oracle::new(&matroid),
        options,
        trace: Vec::new(),
        max_depth: 0,
    };
    let view = View::full(instance).first_rows(2 * n - 1);
    let cells = solver.solve(&view, 1)?;

    let certificate = classify_positions(instance, &cells)?;
    if !certificate.is_it() {
        return Err(Error::Contract(format!(
            "construction returned a {} instead of an IT",
            certificate.classification
        )));
    }
    Ok(FindOutcome {
        certificate,
        stats: OracleStats {
            base_calls: solver.oracle.calls(),
            recursion_depth: solver.max_depth,
            n,
        },
        trace: solver.trace,
    })
}

/// The nonparallel pair and circuit representatives of one recursion level.
#[derive(Debug, Clone, Copy)]
struct Roles {
    b1: Cell,
    b2: Cell,
    /// Lies on the circuit of `b1`; swapping it for `b1` keeps independence.
    c1: Cell,
    /// Lies on the circuit of `b2`.
    c2: Cell,
}

struct Solver<'a, 'm> {
    instance: &'a Instance,
    oracle: Oracle<'m>,
    checker: Oracle<'m>,
    options: &'a FindOptions,
    trace: Vec<String>,
    max_depth: usize,
}

impl Solver<'_, '_> {
    fn elements(&self, cells: &[Cell]) -> Vec<ElementId> {
        cells.iter().map(|&c| self.instance.element(c)).collect()
    }

    fn independent_with(&self, cells: &[Cell], extra: Cell) -> Result<bool> {
        let elems = self.elements(cells);
        self.oracle
            .is_independent_with(&elems, self.instance.element(extra))
    }

    fn note(&mut self, depth: usize, msg: impl FnOnce() -> String) {
        if self.options.trace {
            let line = format!(
                "{:indent$}depth {depth}: {}",
                "",
                msg(),
                indent = 2 * (depth - 1)
            );
            self.trace.push(line);
        }
    }

    /// `view` has exactly `2n - 1` rows.
    fn solve(&mut self, view: &View<'_>, depth: usize) -> Result<Vec<Cell>> {
        self.max_depth = self.max_depth.max(depth);
        let n = view.n();
        if n == 1 {
            let cell = view.cell(0, 0);
            self.note(depth, || format!("single column, take {cell}"));
            return Ok(vec![cell]);
        }

        let Some((col, r1, r2)) = self.nonparallel_pair(view)? else {
            let diagonal: Vec<Cell> = (0..n).map(|i| view.cell(i, i)).collect();
            self.note(depth, || {
                "every column is a parallel class, take the diagonal".into()
            });
            return Ok(diagonal);
        };
        let (b1, b2) = (view.cell(r1, col), view.cell(r2, col));
        self.note(depth, || format!("b1={b1} b2={b2}"));

        let rest = view.exclude(&[b1.row, b2.row], &[b1.col])?;
        let chain = self.solve(&rest, depth + 1)?;

        for b in [b1, b2] {
            if self.independent_with(&chain, b)? {
                self.note(depth, || format!("chain extends by {b}"));
                return Ok(with(&chain, b));
            }
        }

        let chain_elems = self.elements(&chain);
        let circuit1 = self
            .oracle
            .fundamental_circuit(&chain_elems, self.instance.element(b1))?;
        let circuit2 = self
            .oracle
            .fundamental_circuit(&chain_elems, self.instance.element(b2))?;
        let on = |circuit: &crate::matroid::ElementSet| -> Vec<Cell> {
            chain
                .iter()
                .copied()
                .filter(|&c| circuit.contains(self.instance.element(c)))
                .collect()
        };
        let (c1, c2) = pick_representatives(&on(&circuit1), &on(&circuit2)).ok_or_else(|| {
            Error::Contract(format!(
                "circuits of {b1} and {b2} meet the chain in a single element, \
                 so the two are parallel"
            ))
        })?;
        let roles = Roles { b1, b2, c1, c2 };
        self.note(depth, || format!("c1={c1} c2={c2}"));
        self.extend_family(view, depth, chain, roles)
    }

    /// First column, scanned left to right, holding an entry not parallel
    /// to the column's top entry. Rows are valid, so no entry is a loop and
    /// a dependent pair of distinct cells is a parallel pair.
    fn nonparallel_pair(&self, view: &View<'_>) -> Result<Option<(usize, usize, usize)>> {
        let rows = 2 * view.n() - 1;
        for j in 0..view.n() {
            let top = view.element(0, j);
            for i in 1..rows {
                if self.oracle.is_independent(&[top, view.element(i, j)])? {
                    return Ok(Some((j, 0, i)));
                }
            }
        }
        Ok(None)
    }

    /// Grows the family P_1, P_2, ... one fresh row at a time until some
    /// member (or a swapped variant) extends to a full transversal.
    ///
    /// Invariants after step k: every member contains `common`, which has
    /// n - k cells, is independent, and spans the intersection of the
    /// members' spans; every member P, P - c1 + b1 and P - c2 + b2 is an
    /// independent partial transversal of length n - 1, all three with the
    /// same span.
    fn extend_family(
        &mut self,
        view: &View<'_>,
        depth: usize,
        chain: Vec<Cell>,
        roles: Roles,
    ) -> Result<Vec<Cell>> {
        let n = view.n();
        let Roles { b1, b2, c1, c2 } = roles;
        let used: Vec<usize> = chain
            .iter()
            .map(|c| c.row)
            .chain([b1.row, b2.row])
            .collect();
        let fresh: Vec<usize> = view
            .rows()
            .iter()
            .copied()
            .filter(|r| !used.contains(r))
            .collect();
        debug_assert_eq!(fresh.len(), n - 2);

        let mut common = chain.clone();
        let mut family = vec![chain];
        self.check_claims(&roles, &family, &common)?;

        for (k, &row) in (1..=n - 2).zip(&fresh) {
            let mut candidates: Vec<usize> = common.iter().map(|c| c.col).chain([b1.col]).collect();
            candidates.sort_unstable();
            let mut x = None;
            for &col in &candidates {
                let cell = Cell::new(row, col);
                if self.independent_with(&common, cell)? {
                    x = Some(cell);
                    break;
                }
            }
            let x = x.ok_or_else(|| {
                Error::Contract(format!(
                    "row {row} has {} candidate entries inside a span of rank {}",
                    candidates.len(),
                    common.len()
                ))
            })?;

            let mut chosen = None;
            for (t, member) in family.iter().enumerate() {
                if self.independent_with(member, x)? {
                    chosen = Some(t);
                    break;
                }
            }
            let t = chosen.ok_or_else(|| {
                Error::Contract(format!("{x} lies in the span of every family member"))
            })?;
            let member = &family[t];
            self.note(depth, || {
                let step = if x.col == b1.col {
                    "completes P".to_string()
                } else if x.col == c1.col {
                    "completes P - c1 + b1".to_string()
                } else if x.col == c2.col {
                    "completes P - c2 + b2".to_string()
                } else {
                    format!("replaces column {} to form P{}", x.col, family.len() + 1)
                };
                format!("k={k}: x={x} escapes P{}, {step}", t + 1)
            });
            if x.col == b1.col {
                return Ok(with(member, x));
            }
            if x.col == c1.col {
                return Ok(with(&swap(member, c1, b1), x));
            }
            if x.col == c2.col {
                return Ok(with(&swap(member, c2, b2), x));
            }

            let next: Vec<Cell> = member
                .iter()
                .map(|&c| if c.col == x.col { x } else { c })
                .collect();
            for b in [b1, b2] {
                if self.independent_with(&next, b)? {
                    self.note(depth, || format!("P{} extends by {b}", k + 1));
                    return Ok(with(&next, b));
                }
            }
            common.retain(|c| c.col != x.col);
            family.push(next);
            self.check_claims(&roles, &family, &common)?;
        }
        Err(Error::Contract(
            "every fresh row used without reaching a transversal".into(),
        ))
    }

    fn check_claims(&self, roles: &Roles, family: &[Vec<Cell>], common: &[Cell]) -> Result<()> {
        if !self.options.check_claims {
            return Ok(());
        }
        let fail = |what: String| Err(Error::Contract(format!("loop invariant: {what}")));
        let oracle = &self.checker;
        let common_elems = self.elements(common);
        if !oracle.is_independent(&common_elems)? {
            return fail("common set is dependent".into());
        }
        if !common.contains(&roles.c1) || !common.contains(&roles.c2) {
            return fail("circuit representatives left the common set".into());
        }
        let len = family[0].len();
        for (t, member) in family.iter().enumerate() {
            if !common.iter().all(|c| member.contains(c)) {
                return fail(format!("P{} does not contain the common set", t + 1));
            }
            let base = self.elements(member);
            let variants = [
                member.clone(),
                swap(member, roles.c1, roles.b1),
                swap(member, roles.c2, roles.b2),
            ];
            for v in &variants {
                let elems = self.elements(v);
                if v.len() != len || PositionSet::new(v.clone()).is_none() {
                    return fail(format!(
                        "a variant of P{} is not a partial transversal",
                        t + 1
                    ));
                }
                if !oracle.is_independent(&elems)? {
                    return fail(format!("a variant of P{} is dependent", t + 1));
                }
                for &e in &elems {
                    if !oracle.in_span_of_independent(&base, e)? {
                        return fail(format!("a variant of P{} changes the span", t + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Representatives on the two circuits, distinct from each other: the first
/// chain element on the second circuit, then the first other one on the
/// first circuit; failing that, the same in the opposite order.
fn pick_representatives(on1: &[Cell], on2: &[Cell]) -> Option<(Cell, Cell)> {
    if let Some(&c2) = on2.first() {
        if let Some(&c1) = on1.iter().find(|&&c| c != c2) {
            return Some((c1, c2));
        }
    }
    let &c1 = on1.first()?;
    let &c2 = on2.iter().find(|&&c| c != c1)?;
    Some((c1, c2))
}

fn with(cells: &[Cell], extra: Cell) -> Vec<Cell> {
    let mut v = cells.to_vec();
    v.push(extra);
    v.sort_by_key(|c| c.col);
    v
}

fn swap(cells: &[Cell], out: Cell, into: Cell) -> Vec<Cell> {
    let mut v: Vec<Cell> = cells
        .iter()
        .map(|&c| if c == out { into } else { c })
        .collect();
    v.sort_by_key(|c| c.col);
    v
}
