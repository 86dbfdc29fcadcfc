//! Z-periodic graphs presented by a finite cell and integer offsets.
//!
//! A spec `(u, v, d)` stands for the edges `{(u, i), (v, i + d)}` of the
//! infinite lift, one for every integer `i`. The unit shift `(v, i) ↦ (v, i+1)`
//! is an automorphism of every lift, and when the lift is connected it has
//! exactly two ends. After [`PeriodicGraph::normalize_nearest_neighbor`]
//! every edge joins a cell to itself or to the next one, so the boundary
//! between consecutive cells separates the two ends.

mod assignment;
mod bipartite;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{input, Error, Result};
use crate::graph::FiniteGraph;

pub use assignment::{AssignmentKind, PeriodicAssignment};
pub use bipartite::bipartite_2coloring;

/// One orbit of lift edges under the shift, in canonical form: `d >= 0`,
/// and `u < v` when `d == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSpec {
    pub u: usize,
    pub v: usize,
    pub d: usize,
}

impl EdgeSpec {
    /// Canonical form of the raw triple, or `None` for a loop.
    pub fn canonical(u: usize, v: usize, d: i64) -> Option<EdgeSpec> {
        let (u, v, d) = if d < 0 { (v, u, -d) } else { (u, v, d) };
        let d = d as usize;
        match (d, u.cmp(&v)) {
            (0, std::cmp::Ordering::Equal) => None,
            (0, std::cmp::Ordering::Greater) => Some(EdgeSpec { u: v, v: u, d }),
            _ => Some(EdgeSpec { u, v, d }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicGraph {
    cell_size: usize,
    specs: Vec<EdgeSpec>,
}

/// Report produced by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    /// Raw specs that were not in canonical form, or duplicated one another.
    pub violations: Vec<String>,
    pub max_degree: usize,
    pub connected: bool,
    pub quotient_components: usize,
}

/// A connected component of the quotient multigraph together with the
/// offset structure of its lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientComponent {
    pub vertices: Vec<usize>,
    /// `potential[v]`: cell offset of `v` along a spanning tree from the
    /// component's smallest vertex; meaningful only for members.
    pub potential: BTreeMap<usize, i64>,
    /// gcd of the offsets of all cycles; 0 when the lift splits into
    /// finite copies.
    pub offset_gcd: u64,
}

impl QuotientComponent {
    /// Identifier of the lift component containing `(v, cell)`. Lift
    /// components of this quotient component are indexed by
    /// `(cell - potential[v]) mod offset_gcd` (unreduced when the gcd is 0).
    pub fn lift_class(&self, v: usize, cell: i64) -> i64 {
        let shifted = cell - self.potential[&v];
        if self.offset_gcd == 0 {
            shifted
        } else {
            shifted.rem_euclid(self.offset_gcd as i64)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks a raw presentation and reports its lift's degree and connectivity.
pub fn validate(cell_size: usize, raw: &[(usize, usize, i64)]) -> Result<Diagnostics> {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    for &(u, v, d) in raw {
        let spec = EdgeSpec::canonical(u, v, d)
            .ok_or_else(|| Error::Input(format!("loop spec ({u}, {v}, {d})")))?;
        if (spec.u, spec.v, spec.d as i64) != (u, v, d) {
            violations.push(format!(
                "({u}, {v}, {d}) is not canonical; stored as ({}, {}, {})",
                spec.u, spec.v, spec.d
            ));
        }
        if !seen.insert(spec) {
            violations.push(format!("({u}, {v}, {d}) duplicates an earlier spec"));
        }
    }
    let pg = PeriodicGraph::new(cell_size, seen.into_iter().map(|s| (s.u, s.v, s.d as i64)))?;
    let comps = pg.quotient_components();
    Ok(Diagnostics {
        violations,
        max_degree: pg.max_degree(),
        connected: pg.is_connected(),
        quotient_components: comps.len(),
    })
}

impl PeriodicGraph {
    /// Canonicalizes every triple. Loops, out-of-range vertices and
    /// duplicate specs are rejected.
    pub fn new(cell_size: usize, raw: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        if cell_size == 0 {
            return input("cell size must be positive");
        }
        let mut specs = BTreeSet::new();
        for (u, v, d) in raw {
            if u >= cell_size || v >= cell_size {
                return input(format!("spec ({u}, {v}, {d}) out of range for cell size {cell_size}"));
            }
            let spec = EdgeSpec::canonical(u, v, d)
                .ok_or_else(|| Error::Input(format!("loop spec ({u}, {v}, {d})")))?;
            if !specs.insert(spec) {
                return input(format!("duplicate spec ({u}, {v}, {d})"));
            }
        }
        Ok(PeriodicGraph {
            cell_size,
            specs: specs.into_iter().collect(),
        })
    }

    pub(crate) fn from_canonical(cell_size: usize, specs: BTreeSet<EdgeSpec>) -> Self {
        PeriodicGraph {
            cell_size,
            specs: specs.into_iter().collect(),
        }
    }

    pub fn cell_size(&self) -> usize {
        self.cell_size
    }

    /// Specs in canonical sorted order; positions are stable spec indices.
    pub fn specs(&self) -> &[EdgeSpec] {
        &self.specs
    }

    pub fn spec_index(&self, spec: &EdgeSpec) -> Option<usize> {
        self.specs.binary_search(spec).ok()
    }

    pub fn max_offset(&self) -> usize {
        self.specs.iter().map(|s| s.d).max().unwrap_or(0)
    }

    pub fn is_nearest_neighbor(&self) -> bool {
        self.max_offset() <= 1
    }

    /// Degree of `(v, i)` in the lift; independent of `i`.
    pub fn degree(&self, v: usize) -> usize {
        self.specs
            .iter()
            .map(|s| usize::from(s.u == v) + usize::from(s.v == v))
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.cell_size).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Lift neighbors of `(v, cell)` as `(vertex, cell)` pairs, one entry per
    /// incident lift edge, with the spec index that produced it.
    pub fn lift_neighbors(&self, v: usize, cell: i64) -> Vec<(usize, i64, usize)> {
        let mut out = Vec::new();
        for (idx, s) in self.specs.iter().enumerate() {
            if s.u == v {
                out.push((s.v, cell + s.d as i64, idx));
            }
            if s.v == v {
                out.push((s.u, cell - s.d as i64, idx));
            }
        }
        out
    }

    /// Components of the quotient multigraph with cycle-offset data.
    pub fn quotient_components(&self) -> Vec<QuotientComponent> {
        let n = self.cell_size;
        let mut arcs: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for s in &self.specs {
            arcs[s.u].push((s.v, s.d as i64));
            arcs[s.v].push((s.u, -(s.d as i64)));
        }
        let mut potential: Vec<Option<i64>> = vec![None; n];
        let mut comps = Vec::new();
        for root in 0..n {
            if potential[root].is_some() {
                continue;
            }
            potential[root] = Some(0);
            let mut members = vec![root];
            let mut queue = VecDeque::from([root]);
            let mut g = 0u64;
            while let Some(x) = queue.pop_front() {
                let px = potential[x].expect("visited");
                for &(y, d) in &arcs[x] {
                    match potential[y] {
                        None => {
                            potential[y] = Some(px + d);
                            members.push(y);
                            queue.push_back(y);
                        }
                        Some(py) => g = gcd(g, (px + d - py).unsigned_abs()),
                    }
                }
            }
            members.sort_unstable();
            comps.push(QuotientComponent {
                potential: members.iter().map(|&v| (v, potential[v].expect("visited"))).collect(),
                vertices: members,
                offset_gcd: g,
            });
        }
        comps
    }

    /// The lift is connected iff the quotient is connected and the cycle
    /// offsets generate all of Z.
    pub fn is_connected(&self) -> bool {
        let comps = self.quotient_components();
        comps.len() == 1 && comps[0].offset_gcd == 1
    }

    /// Grouping factor used by [`Self::normalize_nearest_neighbor`].
    pub fn grouping_factor(&self) -> usize {
        self.max_offset().max(1)
    }

    /// Groups `m = max(1, max offset)` consecutive cells into one, so that
    /// every offset becomes 0 or 1. New cell vertex `r * n + v` stands for
    /// old lift vertex `(v, i*m + r)` of new cell `i`.
    pub fn normalize_nearest_neighbor(&self) -> PeriodicGraph {
        let m = self.grouping_factor();
        if m == 1 {
            return self.clone();
        }
        let mut specs = BTreeSet::new();
        for s in &self.specs {
            for r in 0..m {
                specs.insert(self.grouped_spec(s, r).0);
            }
        }
        PeriodicGraph::from_canonical(self.cell_size * m, specs)
    }

    /// The normalized spec carrying the instance of `s` whose tail sits at
    /// old cell `a*m + r`; that instance starts at new cell `a`. The flag is
    /// true when the normalized spec lists the endpoints in swapped order.
    pub(crate) fn grouped_spec(&self, s: &EdgeSpec, r: usize) -> (EdgeSpec, bool) {
        let (n, m) = (self.cell_size, self.grouping_factor());
        let tail = r * n + s.u;
        let head = ((r + s.d) % m) * n + s.v;
        let jump = (r + s.d) / m;
        if jump == 0 && tail > head {
            (EdgeSpec { u: head, v: tail, d: 0 }, true)
        } else {
            (EdgeSpec { u: tail, v: head, d: jump }, false)
        }
    }

    /// Finite induced subgraph of the lift on cells `origin .. origin+span`.
    pub fn window(&self, origin: i64, span: usize) -> Result<Window> {
        if span == 0 {
            return input("window span must be positive");
        }
        let n = self.cell_size;
        let mut graph = FiniteGraph::new(n * span);
        let embedding: Vec<(usize, i64)> = (0..span)
            .flat_map(|c| (0..n).map(move |v| (v, origin + c as i64)))
            .collect();
        for s in &self.specs {
            for c in 0..span {
                if c + s.d < span {
                    graph.add_edge(c * n + s.u, (c + s.d) * n + s.v)?;
                }
            }
        }
        Ok(Window {
            graph,
            origin,
            span,
            embedding,
        })
    }

    /// Periodic presentation of the line graph of the lift. Requires
    /// nearest-neighbor form; cell vertex `i` is spec `i`.
    pub fn line_graph_periodic(&self) -> Result<PeriodicGraph> {
        if !self.is_nearest_neighbor() {
            return input("line graph needs a nearest-neighbor presentation; normalize first");
        }
        let ends = |s: &EdgeSpec, shift: i64| [(s.u, shift), (s.v, shift + s.d as i64)];
        let mut specs = BTreeSet::new();
        for (a, sa) in self.specs.iter().enumerate() {
            for (b, sb) in self.specs.iter().enumerate() {
                for delta in 0..=1i64 {
                    if delta == 0 && a >= b {
                        continue;
                    }
                    let ea = ends(sa, 0);
                    let eb = ends(sb, delta);
                    if ea.iter().any(|x| eb.contains(x)) {
                        specs.insert(EdgeSpec {
                            u: a,
                            v: b,
                            d: delta as usize,
                        });
                    }
                }
            }
        }
        Ok(PeriodicGraph::from_canonical(self.specs.len(), specs))
    }

    /// Every cell vertex becomes a `k`-clique and every spec a `K_{k,k}`.
    /// Cell vertex `v` becomes `v*k .. v*k + k`.
    pub fn blowup(&self, k: usize) -> Result<PeriodicGraph> {
        if k == 0 {
            return input("blowup factor must be positive");
        }
        let mut specs = BTreeSet::new();
        for v in 0..self.cell_size {
            for a in 0..k {
                for b in a + 1..k {
                    specs.insert(EdgeSpec { u: v * k + a, v: v * k + b, d: 0 });
                }
            }
        }
        for s in &self.specs {
            for a in 0..k {
                for b in 0..k {
                    let spec = EdgeSpec::canonical(s.u * k + a, s.v * k + b, s.d as i64)
                        .expect("blowup never creates loops");
                    specs.insert(spec);
                }
            }
        }
        Ok(PeriodicGraph::from_canonical(self.cell_size * k, specs))
    }
}

/// A finite window of a lift with the map back to lift vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub graph: FiniteGraph,
    pub origin: i64,
    pub span: usize,
    /// `embedding[x] = (cell vertex, cell index)` of window vertex `x`.
    pub embedding: Vec<(usize, i64)>,
}

impl Window {
    pub fn vertex(&self, cell_vertex: usize, cell: i64) -> Option<usize> {
        let n = self.embedding.len() / self.span;
        let c = cell - self.origin;
        (cell_vertex < n && (0..self.span as i64).contains(&c)).then(|| c as usize * n + cell_vertex)
    }
}

/// A few named presentations used throughout tests and examples.
pub mod examples {
    use super::PeriodicGraph;

    /// The bi-infinite path.
    pub fn path() -> PeriodicGraph {
        PeriodicGraph::new(1, [(0, 0, 1)]).expect("valid")
    }

    /// The infinite ladder: two rails joined by rungs.
    pub fn ladder() -> PeriodicGraph {
        PeriodicGraph::new(2, [(0, 1, 0), (0, 0, 1), (1, 1, 1)]).expect("valid")
    }

    /// Strip of triangles: a ladder with one diagonal per square.
    pub fn triangular_strip() -> PeriodicGraph {
        PeriodicGraph::new(2, [(0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 0, 1)]).expect("valid")
    }

    /// The 4-regular square of the path: `i ~ i±1, i±2`.
    pub fn four_regular_line() -> PeriodicGraph {
        PeriodicGraph::new(1, [(0, 0, 1), (0, 0, 2)]).expect("valid")
    }
}
