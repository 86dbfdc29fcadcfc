//! Small named graphs used as inputs and in tests.

use super::FiniteGraph;

pub fn complete(n: usize) -> FiniteGraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    FiniteGraph::from_edges(n, edges).expect("valid")
}

pub fn path(n: usize) -> FiniteGraph {
    FiniteGraph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> FiniteGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    FiniteGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid")
}

/// `K(1, leaves)` with the center at vertex 0.
pub fn star(leaves: usize) -> FiniteGraph {
    FiniteGraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> FiniteGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    FiniteGraph::from_edges(10, edges).expect("valid")
}
