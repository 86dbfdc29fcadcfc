use super::coloring::chromatic_number_periodic;
use super::{ungroup_edges, Limits};
use crate::error::Result;
use crate::periodic::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

/// Every spec `(u, v, d)` oriented `u → v` on every cell. The unit shift
/// maps each lift edge to a different lift edge with the same direction, so
/// this orientation has period 1.
pub fn periodic_orientation(pg: &PeriodicGraph) -> PeriodicAssignment {
    PeriodicAssignment::from_fn(AssignmentKind::Orientation, 1, pg.specs().len(), |_, _| 0)
        .expect("table shape matches")
}

/// Proper edge-coloring of the lift with the fewest colors, computed as a
/// vertex coloring of the periodic line graph. A lift without edges gets
/// `0` colors.
pub fn periodic_edge_coloring(
    pg: &PeriodicGraph,
    limits: &Limits,
) -> Result<(usize, PeriodicAssignment)> {
    if pg.specs().is_empty() {
        let empty = PeriodicAssignment::new(AssignmentKind::EdgeColoring, 1, 0, Vec::new())?;
        return Ok((0, empty));
    }
    let normalized = pg.normalize_nearest_neighbor();
    let line = normalized.line_graph_periodic()?;
    let (k, coloring) = chromatic_number_periodic(&line, limits)?;
    let grouped = PeriodicAssignment::new(
        AssignmentKind::EdgeColoring,
        coloring.period(),
        coloring.items(),
        coloring.values().to_vec(),
    )?;
    let colored = ungroup_edges(pg, &normalized, &grouped).minimize_period();
    assert!(
        colored.is_proper_edge_coloring_of(pg)?,
        "edge coloring failed window validation"
    );
    Ok((k, colored))
}
