//! Periodic solutions on Z-periodic lifts: colorings with exactly the
//! chromatic number (by transfer-digraph cycles and, independently, by the
//! strip pigeonhole splice), orientations, edge-colorings, perfect matchings
//! and k-factors, color reduction, and periodic points of one-dimensional
//! subshifts of finite type.
//!
//! Existence of a solution on the infinite lift is identified with the
//! existence of a cycle in a finite transfer digraph: restricting any lift
//! solution to consecutive cells gives a bi-infinite walk, and a finite
//! digraph carrying a bi-infinite walk contains a cycle, which repeats into
//! a periodic solution.

mod coloring;
mod edges;
mod factor;
mod reduce;
mod sft;
mod transfer;

pub use coloring::{
    chromatic_number_periodic, periodic_coloring_pigeonhole, periodic_coloring_transfer,
};
pub use edges::{periodic_edge_coloring, periodic_orientation};
pub use factor::{build_transfer_factor, periodic_k_factor, periodic_perfect_matching};
pub use reduce::{
    reduce_colors_periodic, reduce_nontrivial_to_2, reduce_nontrivial_to_2_periodic, ColorReduction,
};
pub use sft::{build_transfer_sft, sft_periodic_point, SftSpec};
pub use transfer::{build_transfer_coloring, find_cycle, find_cycle_without_self_loops, TransferSystem};

use crate::periodic::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

/// Resource bounds shared by the transfer-based solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of transfer states (transitions are capped at 16x).
    pub state_cap: usize,
}

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

/// Re-reads a vertex assignment of `pg.normalize_nearest_neighbor()` on the
/// original cells. New cell `a`, vertex `r*n + v` is old `(v, a*m + r)`.
pub(crate) fn ungroup_vertices(pg: &PeriodicGraph, grouped: &PeriodicAssignment) -> PeriodicAssignment {
    let (n, m) = (pg.cell_size(), pg.grouping_factor());
    PeriodicAssignment::from_fn(grouped.kind(), grouped.period() * m, n, |v, j| {
        grouped.at((j % m) * n + v, (j / m) as i64)
    })
    .expect("table shape matches")
}

/// Re-reads a per-spec assignment of the normalized graph on the original
/// specs. Orientation flags are flipped where normalization swapped the
/// endpoints of a spec.
pub(crate) fn ungroup_edges(
    pg: &PeriodicGraph,
    normalized: &PeriodicGraph,
    grouped: &PeriodicAssignment,
) -> PeriodicAssignment {
    let m = pg.grouping_factor();
    PeriodicAssignment::from_fn(grouped.kind(), grouped.period() * m, pg.specs().len(), |idx, j| {
        let (spec, flipped) = pg.grouped_spec(&pg.specs()[idx], j % m);
        let at = normalized.spec_index(&spec).expect("normalized spec exists");
        let value = grouped.at(at, (j / m) as i64);
        if flipped && grouped.kind() == AssignmentKind::Orientation {
            1 - value
        } else {
            value
        }
    })
    .expect("table shape matches")
}
