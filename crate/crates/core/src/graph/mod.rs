//! Finite simple graphs and the exact machinery built on them: proper
//! colorings, automorphism groups, orbits, line graphs and the
//! series-parallel (treewidth at most 2) test.

mod automorphism;
mod coloring;
pub mod families;
mod treewidth;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{input, Error, Result};

pub use automorphism::{automorphism_group, edge_orbits, orbits, vertex_orbits, OrbitDomain};
pub use coloring::{
    chromatic_number_finite, chromatic_number_with_witness, find_coloring, find_coloring_with,
    greedy_clique_number, ColoringConstraints,
};
pub use treewidth::is_treewidth_at_most_2;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

pub(crate) fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on vertices `0..vertex_count`, with
/// optional role tokens on vertices and edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<Edge>,
    vertex_labels: BTreeMap<usize, String>,
    edge_labels: BTreeMap<Edge, String>,
}

impl FiniteGraph {
    pub fn new(vertex_count: usize) -> Self {
        FiniteGraph {
            adj: vec![BTreeSet::new(); vertex_count],
            ..Default::default()
        }
    }

    /// Builds a graph from an edge list. Duplicates and loops are errors.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = FiniteGraph::new(vertex_count);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return input(format!("duplicate edge {{{u}, {v}}}"));
            }
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Inserts `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return input(format!("edge {{{u}, {v}}} out of range for {n} vertices"));
        }
        if u == v {
            return input(format!("self-loop at vertex {u}"));
        }
        if !self.edges.insert(edge(u, v)) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(true)
    }

    pub fn set_vertex_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        if v >= self.vertex_count() {
            return input(format!("label on missing vertex {v}"));
        }
        self.vertex_labels.insert(v, label.into());
        Ok(())
    }

    pub fn set_edge_label(&mut self, u: usize, v: usize, label: impl Into<String>) -> Result<()> {
        if !self.has_edge(u, v) {
            return input(format!("label on missing edge {{{u}, {v}}}"));
        }
        self.edge_labels.insert(edge(u, v), label.into());
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(&v)
    }

    pub fn vertex_label(&self, v: usize) -> Option<&str> {
        self.vertex_labels.get(&v).map(String::as_str)
    }

    pub fn edge_label(&self, u: usize, v: usize) -> Option<&str> {
        self.edge_labels.get(&edge(u, v)).map(String::as_str)
    }

    pub fn vertex_labels(&self) -> &BTreeMap<usize, String> {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &BTreeMap<Edge, String> {
        &self.edge_labels
    }

    /// Vertices carrying exactly this label, ascending.
    pub fn vertices_labelled(&self, label: &str) -> Vec<usize> {
        self.vertex_labels
            .iter()
            .filter(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Line graph: vertex `i` is the `i`-th edge in lexicographic order, and
    /// two such vertices are adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> FiniteGraph {
        let edges: Vec<Edge> = self.edges().collect();
        let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut lg = FiniteGraph::new(edges.len());
        for v in 0..self.vertex_count() {
            let incident: Vec<usize> = self.neighbors(v).map(|w| index[&edge(v, w)]).collect();
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    lg.add_edge(a, b).expect("line graph indices are in range");
                }
            }
        }
        lg
    }

    /// Replaces every vertex by a clique of size `k` and every edge by a
    /// complete bipartite graph `K_{k,k}`. Vertex `v` becomes
    /// `v*k .. v*k + k`, and labels are copied onto every clone.
    pub fn blowup(&self, k: usize) -> Result<FiniteGraph> {
        if k == 0 {
            return input("blowup factor must be positive");
        }
        let mut out = FiniteGraph::new(self.vertex_count() * k);
        for v in 0..self.vertex_count() {
            for a in 0..k {
                for b in a + 1..k {
                    out.add_edge(v * k + a, v * k + b)?;
                }
                if let Some(l) = self.vertex_label(v) {
                    out.set_vertex_label(v * k + a, l)?;
                }
            }
        }
        for (u, v) in self.edges() {
            for a in 0..k {
                for b in 0..k {
                    out.add_edge(u * k + a, v * k + b)?;
                    if let Some(l) = self.edge_label(u, v) {
                        out.set_edge_label(u * k + a, v * k + b, l)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return input(format!("vertex {v} out of range for {} vertices", self.vertex_count()));
        }
        Ok(())
    }
}

/// A total vertex coloring; `colors[v]` is the color of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        VertexColoring { colors }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors that actually occur.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub(crate) fn check_total(&self, g: &FiniteGraph) -> Result<()> {
        if self.colors.len() != g.vertex_count() {
            return input(format!(
                "coloring has {} entries but the graph has {} vertices",
                self.colors.len(),
                g.vertex_count()
            ));
        }
        Ok(())
    }
}

/// True iff no edge of `g` joins two vertices of the same color.
pub fn is_proper(g: &FiniteGraph, c: &VertexColoring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// An orientation: each edge mapped to an ordered pair of its endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Orientation {
    directions: BTreeMap<Edge, (usize, usize)>,
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, tail: usize, head: usize) {
        self.directions.insert(edge(tail, head), (tail, head));
    }

    pub fn direction(&self, e: Edge) -> Option<(usize, usize)> {
        self.directions.get(&edge(e.0, e.1)).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.directions.values().copied()
    }

    /// Total on `g` and consistent with its edges.
    pub fn is_total_for(&self, g: &FiniteGraph) -> bool {
        self.directions.len() == g.edge_count()
            && self.directions.iter().all(|(&e, &(t, h))| g.has_edge(t, h) && edge(t, h) == e)
    }

    /// True iff `perm` maps every arc of this orientation onto an arc of it.
    pub fn is_preserved_by(&self, perm: &Permutation) -> bool {
        self.arcs().all(|(t, h)| {
            let (pt, ph) = (perm.apply(t), perm.apply(h));
            self.direction((pt, ph)) == Some((pt, ph))
        })
    }
}

/// A bijection on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Input(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The permutation exchanging the listed pairs and fixing everything else.
    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for &(a, b) in swaps {
            if a >= n || b >= n {
                return input(format!("swap ({a}, {b}) out of range"));
            }
            images[a] = b;
            images[b] = a;
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`: x ↦ self(other(x)).
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Preserves adjacency, and optionally vertex and edge labels.
    pub fn is_automorphism(&self, g: &FiniteGraph, vertex_labels: bool, edge_labels: bool) -> bool {
        if self.len() != g.vertex_count() {
            return false;
        }
        if vertex_labels
            && (0..g.vertex_count()).any(|v| g.vertex_label(v) != g.vertex_label(self.apply(v)))
        {
            return false;
        }
        g.edges().all(|(u, v)| {
            let (a, b) = (self.apply(u), self.apply(v));
            g.has_edge(a, b) && (!edge_labels || g.edge_label(u, v) == g.edge_label(a, b))
        })
    }

    /// True iff this permutation exchanges the endpoints of `e`.
    pub fn inverts(&self, e: Edge) -> bool {
        self.apply(e.0) == e.1 && self.apply(e.1) == e.0
    }
}

/// Generators of a permutation group acting on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupGenerators {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub cached_order: Option<u128>,
}

/// Default bound on the number of group elements a closure may enumerate.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

impl GroupGenerators {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = generators.iter().find(|p| p.len() != degree) {
            return input(format!("generator of length {} on {degree} points", p.len()));
        }
        Ok(GroupGenerators {
            degree,
            generators,
            cached_order: None,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GroupGenerators {
            degree,
            generators: Vec::new(),
            cached_order: Some(1),
        }
    }

    pub(crate) fn check_acts_on(&self, g: &FiniteGraph) -> Result<()> {
        if self.degree != g.vertex_count() {
            return input(format!(
                "group acts on {} points but the graph has {} vertices",
                self.degree,
                g.vertex_count()
            ));
        }
        for (i, p) in self.generators.iter().enumerate() {
            if !p.is_automorphism(g, false, false) {
                return input(format!("generator {i} is not an automorphism"));
            }
        }
        Ok(())
    }

    /// Every element of the generated group, breadth-first from the
    /// identity with generators applied in order.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let mut found = Vec::new();
        self.for_each_element(cap, |p| {
            found.push(p.clone());
            false
        })?;
        Ok(found)
    }

    /// Visits group elements in breadth-first order until `visit` returns
    /// true; returns the element that stopped the walk.
    pub fn for_each_element(
        &self,
        cap: usize,
        mut visit: impl FnMut(&Permutation) -> bool,
    ) -> Result<Option<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            if visit(&p) {
                return Ok(Some(p));
            }
            for g in &self.generators {
                let q = g.after(&p);
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(Error::ResourceCap {
                            what: "group elements",
                            count: seen.len() + 1,
                            cap,
                        });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(None)
    }

    /// Group order, from the cache or by enumerating the closure.
    pub fn order(&self, cap: usize) -> Result<u128> {
        match self.cached_order {
            Some(o) => Ok(o),
            None => Ok(self.elements(cap)?.len() as u128),
        }
    }
}
