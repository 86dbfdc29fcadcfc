//! Finite-radius pieces of the counterexample constructions: balls in the
//! in-2/out-1 orientation of the 3-regular tree and the graphs built on
//! them, the port gadget assembly, and path gadgets that pin labelled
//! digraph automorphisms.

mod assembly;
mod tree;

pub use assembly::{assemble_gadgets, default_gadget, fig3_graph, GadgetSpec};
pub use tree::{fig1_graph, fig1_layout, fig2_layout, fig2_tree, oriented_tree_ball, OrientedTreeBall, TreeLayout};

use std::collections::BTreeSet;

use crate::error::{input, Result};
use crate::graph::{FiniteGraph, Permutation};

/// A digraph with positive arc labels. Parallel arcs with distinct labels
/// are allowed; self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    vertex_count: usize,
    arcs: BTreeSet<(usize, usize, usize)>,
}

impl LabeledDigraph {
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<_> = arcs.into_iter().collect();
        for &(t, h, l) in &arcs {
            if t >= vertex_count || h >= vertex_count {
                return input(format!("arc ({t}, {h}) leaves the {vertex_count} vertices"));
            }
            if t == h {
                return input(format!("self-loop arc at {t}"));
            }
            if l == 0 {
                return input("arc labels start at 1");
            }
        }
        Ok(LabeledDigraph { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Arcs as `(tail, head, label)` in increasing order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, tail: usize, head: usize, label: usize) -> bool {
        self.arcs.contains(&(tail, head, label))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    /// Largest label in use (0 without arcs).
    pub fn label_count(&self) -> usize {
        self.arcs.iter().map(|a| a.2).max().unwrap_or(0)
    }

    /// Simple undirected graph on the same vertices.
    pub fn underlying(&self) -> FiniteGraph {
        let mut g = FiniteGraph::new(self.vertex_count);
        for &(t, h, _) in &self.arcs {
            g.add_edge(t, h).expect("arc endpoints are in range");
        }
        g
    }

    /// True iff `p` maps arcs onto arcs with the same label and direction.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.len() == self.vertex_count
            && self.arcs.iter().all(|&(t, h, l)| self.arcs.contains(&(p.apply(t), p.apply(h), l)))
    }
}

/// Cayley digraph of `Z/n` for the given generators: arcs
/// `(g, g + s mod n)` labelled by the rank of `s` among the generators
/// (the smallest generator gets label 1).
pub fn cyclic_cayley(n: usize, generators: &[usize]) -> Result<LabeledDigraph> {
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return input("duplicate generator");
    }
    if let Some(&s) = sorted.iter().find(|&&s| s == 0 || s >= n) {
        return input(format!("generator {s} is not a nonzero residue mod {n}"));
    }
    let arcs = sorted
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| (0..n).map(move |g| (g, (g + s) % n, i + 1)));
    LabeledDigraph::new(n, arcs)
}

/// Undirected graph that remembers arc labels and directions through its
/// shape: the underlying simple graph of `d`, plus for every arc labelled
/// `i` a fresh path `v0 = tail, v1, .., v3i = head` of `3i` edges with a
/// pendant vertex hanging from `v(3i-1)`.
///
/// Original vertices keep their indices; the new vertices of each arc
/// follow in arc order (internal path vertices, then the pendant).
pub fn attach_generator_gadgets(d: &LabeledDigraph) -> FiniteGraph {
    let mut g = d.underlying();
    for v in 0..d.vertex_count() {
        g.set_vertex_label(v, "vertex").expect("in range");
    }
    for (t, h, label) in d.arcs() {
        let len = 3 * label;
        let mut prev = t;
        let mut near_head = t;
        for step in 1..len {
            let x = g.add_vertex();
            g.set_vertex_label(x, format!("path{label}")).expect("in range");
            g.add_edge(prev, x).expect("fresh vertex");
            prev = x;
            if step == len - 1 {
                near_head = x;
            }
        }
        g.add_edge(prev, h).expect("fresh vertex");
        let pendant = g.add_vertex();
        g.set_vertex_label(pendant, format!("pendant{label}")).expect("in range");
        g.add_edge(near_head, pendant).expect("fresh vertex");
    }
    g
}
