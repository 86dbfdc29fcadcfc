use std::collections::BTreeSet;

use super::PeriodicGraph;
use crate::error::{input, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssignmentKind {
    /// Values are colors of cell vertices.
    VertexColoring,
    /// Values per spec: 0 orients `(u, i) → (v, i+d)`, 1 the reverse.
    Orientation,
    /// Values per spec: 1 if the lift edge is selected.
    EdgeSubset,
    /// Values are colors of lift edges, per spec.
    EdgeColoring,
}

impl AssignmentKind {
    pub fn on_vertices(self) -> bool {
        matches!(self, AssignmentKind::VertexColoring)
    }
}

/// A decoration of a lift that is invariant under the `period`-fold shift.
///
/// The value of item `x` (a cell vertex or a spec index) on cell `i` is
/// stored once per residue `i mod period`, so shift invariance holds by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicAssignment {
    kind: AssignmentKind,
    period: usize,
    items: usize,
    values: Vec<usize>,
}

impl PeriodicAssignment {
    /// `values[r * items + x]` is the value of item `x` on residue `r`.
    pub fn new(kind: AssignmentKind, period: usize, items: usize, values: Vec<usize>) -> Result<Self> {
        if period == 0 {
            return input("period must be positive");
        }
        if values.len() != period * items {
            return input(format!(
                "assignment table has {} entries, expected {} x {}",
                values.len(),
                period,
                items
            ));
        }
        if matches!(kind, AssignmentKind::Orientation | AssignmentKind::EdgeSubset)
            && values.iter().any(|&x| x > 1)
        {
            return input("orientation and edge-subset values must be 0 or 1");
        }
        Ok(PeriodicAssignment {
            kind,
            period,
            items,
            values,
        })
    }

    /// Builds a table from a closure over `(item, residue)`.
    pub fn from_fn(
        kind: AssignmentKind,
        period: usize,
        items: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let values = (0..period)
            .flat_map(|r| (0..items).map(move |x| (x, r)))
            .map(|(x, r)| f(x, r))
            .collect();
        Self::new(kind, period, items, values)
    }

    pub fn kind(&self) -> AssignmentKind {
        self.kind
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn items(&self) -> usize {
        self.items
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value of `item` on lift cell `cell` (any integer).
    pub fn at(&self, item: usize, cell: i64) -> usize {
        let r = cell.rem_euclid(self.period as i64) as usize;
        self.values[r * self.items + item]
    }

    /// Distinct values in use.
    pub fn distinct_values(&self) -> BTreeSet<usize> {
        self.values.iter().copied().collect()
    }

    /// Restates the same infinite object with a smaller period when the
    /// table repeats; the smallest divisor of the period that works is used.
    pub fn minimize_period(&self) -> PeriodicAssignment {
        let p = self.period;
        for q in (1..=p).filter(|q| p % q == 0) {
            let repeats = (0..p).all(|r| {
                let base = (r % q) * self.items;
                self.values[r * self.items..(r + 1) * self.items] == self.values[base..base + self.items]
            });
            if repeats {
                return PeriodicAssignment {
                    kind: self.kind,
                    period: q,
                    items: self.items,
                    values: self.values[..q * self.items].to_vec(),
                };
            }
        }
        unreachable!("q = period always repeats")
    }

    /// Same infinite object, stated with period `period * factor`.
    pub fn repeat(&self, factor: usize) -> PeriodicAssignment {
        PeriodicAssignment {
            kind: self.kind,
            period: self.period * factor,
            items: self.items,
            values: self.values.repeat(factor.max(1)),
        }
    }

    pub(crate) fn check_shape(&self, pg: &PeriodicGraph, kind: AssignmentKind) -> Result<()> {
        if self.kind != kind {
            return input(format!("expected a {kind:?} assignment, got {:?}", self.kind));
        }
        let expected = if kind.on_vertices() {
            pg.cell_size()
        } else {
            pg.specs().len()
        };
        if self.items != expected {
            return input(format!(
                "assignment covers {} items but the graph has {expected}",
                self.items
            ));
        }
        Ok(())
    }

    /// Number of cells checked by the window validators: three periods plus
    /// enough cells for every spec instance starting there to fit.
    fn check_span(&self, pg: &PeriodicGraph) -> i64 {
        (3 * self.period + pg.max_offset()) as i64
    }

    /// True iff no lift edge inside a three-period window joins equal colors.
    pub fn is_proper_coloring_of(&self, pg: &PeriodicGraph) -> Result<bool> {
        self.check_shape(pg, AssignmentKind::VertexColoring)?;
        let span = self.check_span(pg);
        Ok((0..span).all(|cell| {
            pg.specs().iter().all(|s| {
                cell + s.d as i64 >= span || self.at(s.u, cell) != self.at(s.v, cell + s.d as i64)
            })
        }))
    }

    /// True iff every lift vertex in a three-period window is incident to
    /// exactly `k` selected edges.
    pub fn is_k_factor_of(&self, pg: &PeriodicGraph, k: usize) -> Result<bool> {
        self.check_shape(pg, AssignmentKind::EdgeSubset)?;
        let span = self.check_span(pg);
        Ok((0..span).all(|cell| {
            (0..pg.cell_size()).all(|v| {
                let mut selected = 0;
                for (idx, s) in pg.specs().iter().enumerate() {
                    if s.u == v {
                        selected += self.at(idx, cell);
                    }
                    if s.v == v {
                        selected += self.at(idx, cell - s.d as i64);
                    }
                }
                selected == k
            })
        }))
    }

    /// True iff any two lift edges sharing an endpoint inside a
    /// three-period window have distinct colors.
    pub fn is_proper_edge_coloring_of(&self, pg: &PeriodicGraph) -> Result<bool> {
        self.check_shape(pg, AssignmentKind::EdgeColoring)?;
        let span = self.check_span(pg);
        Ok((0..span).all(|cell| {
            (0..pg.cell_size()).all(|v| {
                let mut colors = BTreeSet::new();
                let mut incident = 0;
                for (idx, s) in pg.specs().iter().enumerate() {
                    if s.u == v {
                        colors.insert(self.at(idx, cell));
                        incident += 1;
                    }
                    if s.v == v {
                        colors.insert(self.at(idx, cell - s.d as i64));
                        incident += 1;
                    }
                }
                colors.len() == incident
            })
        }))
    }

    /// Orientations are total by construction; this only checks the shape.
    pub fn is_orientation_of(&self, pg: &PeriodicGraph) -> Result<bool> {
        self.check_shape(pg, AssignmentKind::Orientation)?;
        Ok(true)
    }
}
