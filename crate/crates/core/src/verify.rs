//! Exhaustive checks of finite coloring and symmetry facts, and preserved
//! orientations built from a group action.
//!
//! A group of automorphisms preserves some orientation of every edge iff
//! none of its elements inverts an edge: fixing one direction per edge
//! orbit and transporting it along the group is well defined exactly when
//! no element maps an edge onto itself reversed.

use std::collections::VecDeque;

use crate::error::{input, Result};
use crate::graph::{
    automorphism_group, edge, edge_orbits, find_coloring, find_coloring_with, vertex_orbits, ColoringConstraints,
    Edge, FiniteGraph, GroupGenerators, Orientation, Permutation, VertexColoring,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcedDistinction {
    /// Every proper `k`-coloring separates the two vertices. `vacuous` is
    /// set when the graph has no proper `k`-coloring at all.
    Forced { vacuous: bool },
    /// A proper `k`-coloring giving both vertices the same color.
    Witness(VertexColoring),
}

/// Decides whether every proper `k`-coloring of `g` colors `a` and `b`
/// differently, by searching for a coloring with `c(a) = c(b)`.
pub fn forced_color_distinction(g: &FiniteGraph, a: usize, b: usize, k: usize) -> Result<ForcedDistinction> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return input("the two vertices must differ");
    }
    if find_coloring(g, k)?.is_none() {
        return Ok(ForcedDistinction::Forced { vacuous: true });
    }
    let same = ColoringConstraints {
        same: vec![(a, b)],
        ..Default::default()
    };
    Ok(match find_coloring_with(g, k, &same)? {
        Some(c) => ForcedDistinction::Witness(c),
        None => ForcedDistinction::Forced { vacuous: false },
    })
}

/// First element of the group (in breadth-first closure order) that
/// exchanges the endpoints of some edge, with the first such edge.
pub fn edge_inversion_witness(
    g: &FiniteGraph,
    group: &GroupGenerators,
    cap: usize,
) -> Result<Option<(Permutation, Edge)>> {
    group.check_acts_on(g)?;
    let inverted = |p: &Permutation| g.edges().find(|&e| p.inverts(e));
    let found = group.for_each_element(cap, |p| inverted(p).is_some())?;
    Ok(found.map(|p| {
        let e = inverted(&p).expect("element was chosen for inverting an edge");
        (p, e)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationOutcome {
    Oriented(Orientation),
    Inversion(Permutation, Edge),
}

/// An orientation of `g` preserved by every element of the group, or an
/// element inverting an edge when none exists. The smallest edge of each
/// edge orbit is oriented from its lower to its higher endpoint and the
/// rest of the orbit follows by applying generators.
pub fn orientation_from_group(g: &FiniteGraph, group: &GroupGenerators, cap: usize) -> Result<OrientationOutcome> {
    if let Some((p, e)) = edge_inversion_witness(g, group, cap)? {
        return Ok(OrientationOutcome::Inversion(p, e));
    }
    let mut o = Orientation::new();
    for orbit in edge_orbits(group, g)? {
        let rep = orbit[0];
        o.set(rep.0, rep.1);
        let mut queue = VecDeque::from([rep]);
        while let Some((t, h)) = queue.pop_front() {
            for p in &group.generators {
                let (a, b) = (p.apply(t), p.apply(h));
                if o.direction(edge(a, b)).is_none() {
                    o.set(a, b);
                    queue.push_back((a, b));
                }
            }
        }
    }
    assert!(
        group.generators.iter().all(|p| o.is_preserved_by(p)),
        "transported orientation is not preserved"
    );
    Ok(OrientationOutcome::Oriented(o))
}

/// Number of vertex orbits under the automorphisms of `g` that preserve
/// the coloring `c` (any existing vertex labels are ignored).
pub fn count_color_orbits(g: &FiniteGraph, c: &VertexColoring) -> Result<usize> {
    c.check_total(g)?;
    let mut colored = FiniteGraph::from_edges(g.vertex_count(), g.edges())?;
    for v in 0..g.vertex_count() {
        colored.set_vertex_label(v, c.color(v).to_string())?;
    }
    let group = automorphism_group(&colored, true, false);
    Ok(vertex_orbits(&group, &colored)?.len())
}
