//! Automorphism groups by individualization and color refinement.
//!
//! The search fixes a base `b_1, .., b_m` along the leftmost branch of the
//! refinement tree. At level `i` it looks for automorphisms fixing
//! `b_1, .., b_{i-1}` and moving `b_i` to each other vertex of its cell,
//! skipping targets already reached by the generators found so far. The
//! group order is the product of the resulting basic orbit lengths.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Edge, FiniteGraph, GroupGenerators, Permutation};
use crate::error::{Error, Result};

struct Refiner<'a> {
    g: &'a FiniteGraph,
    initial: Vec<u32>,
    edge_label: Option<BTreeMap<Edge, u32>>,
}

/// An equitable partition as a color per vertex, plus the sequence of
/// signature tables seen while refining it (an isomorphism invariant).
#[derive(Clone)]
struct Cells {
    color: Vec<u32>,
    trace: Vec<Vec<(u32, Vec<(u32, u32)>, usize)>>,
}

impl Cells {
    /// Smallest-colored cell with more than one vertex, as its color.
    fn target_cell(&self) -> Option<u32> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &self.color {
            *count.entry(c).or_default() += 1;
        }
        count.into_iter().find(|&(_, n)| n > 1).map(|(c, _)| c)
    }

    fn members(&self, c: u32) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }
}

impl<'a> Refiner<'a> {
    fn new(g: &'a FiniteGraph, vertex_labels: bool, edge_labels: bool) -> Self {
        let initial = if vertex_labels {
            let tokens: BTreeSet<Option<&str>> =
                (0..g.vertex_count()).map(|v| g.vertex_label(v)).collect();
            let ids: BTreeMap<Option<&str>, u32> =
                tokens.into_iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
            (0..g.vertex_count()).map(|v| ids[&g.vertex_label(v)]).collect()
        } else {
            vec![0; g.vertex_count()]
        };
        let edge_label = edge_labels.then(|| {
            let tokens: BTreeSet<Option<&str>> =
                g.edges().map(|(u, v)| g.edge_label(u, v)).collect();
            let ids: BTreeMap<Option<&str>, u32> =
                tokens.into_iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
            g.edges().map(|(u, v)| ((u, v), ids[&g.edge_label(u, v)])).collect()
        });
        Refiner {
            g,
            initial,
            edge_label,
        }
    }

    fn root(&self) -> Cells {
        self.refine(Cells {
            color: self.initial.clone(),
            trace: Vec::new(),
        })
    }

    fn edge_id(&self, u: usize, v: usize) -> u32 {
        match &self.edge_label {
            Some(ids) => ids[&super::edge(u, v)],
            None => 0,
        }
    }

    /// 1-dimensional Weisfeiler-Leman refinement to a stable partition.
    /// New colors are ranks of sorted signatures, so corresponding
    /// partitions under an isomorphism receive identical colors.
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.g.vertex_count();
        loop {
            let before = cells.color.iter().collect::<BTreeSet<_>>().len();
            let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(u32, u32)> = self
                        .g
                        .neighbors(v)
                        .map(|w| (cells.color[w], self.edge_id(v, w)))
                        .collect();
                    nb.sort_unstable();
                    (cells.color[v], nb)
                })
                .collect();
            let mut table: BTreeMap<&(u32, Vec<(u32, u32)>), usize> = BTreeMap::new();
            for s in &sigs {
                *table.entry(s).or_default() += 1;
            }
            let rank: BTreeMap<&(u32, Vec<(u32, u32)>), u32> =
                table.keys().enumerate().map(|(i, &s)| (s, i as u32)).collect();
            cells.trace.push(
                table
                    .iter()
                    .map(|(s, &count)| (s.0, s.1.clone(), count))
                    .collect(),
            );
            cells.color = sigs.iter().map(|s| rank[s]).collect();
            if table.len() == before {
                return cells;
            }
        }
    }

    fn individualize(&self, cells: &Cells, v: usize) -> Cells {
        let fresh = cells.color.iter().max().map_or(0, |&c| c + 1);
        let mut next = cells.clone();
        next.color[v] = fresh;
        next.trace.push(vec![(fresh, Vec::new(), 1)]);
        self.refine(next)
    }

    /// Depth-first search for an automorphism mapping the left partition
    /// onto the right one, cell by cell.
    fn extend(&self, left: &Cells, right: &Cells, vl: bool, el: bool) -> Option<Permutation> {
        if left.trace != right.trace {
            return None;
        }
        let Some(cell) = left.target_cell() else {
            let mut by_color = vec![0usize; left.color.len()];
            for (v, &c) in right.color.iter().enumerate() {
                by_color[c as usize] = v;
            }
            let images = left.color.iter().map(|&c| by_color[c as usize]).collect();
            let p = Permutation::new(images).ok()?;
            return p.is_automorphism(self.g, vl, el).then_some(p);
        };
        let v = left.members(cell)[0];
        let left_next = self.individualize(left, v);
        for w in right.members(cell) {
            let right_next = self.individualize(right, w);
            if let Some(p) = self.extend(&left_next, &right_next, vl, el) {
                return Some(p);
            }
        }
        None
    }
}

fn orbit_of(point: usize, gens: &[Permutation]) -> BTreeSet<usize> {
    let mut orbit = BTreeSet::from([point]);
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if orbit.insert(y) {
                queue.push_back(y);
            }
        }
    }
    orbit
}

/// Generators and exact order of the automorphism group of `g`, optionally
/// restricted to automorphisms preserving vertex and/or edge labels.
pub fn automorphism_group(
    g: &FiniteGraph,
    respect_vertex_labels: bool,
    respect_edge_labels: bool,
) -> GroupGenerators {
    let n = g.vertex_count();
    let refiner = Refiner::new(g, respect_vertex_labels, respect_edge_labels);

    // Leftmost branch: partitions[i] is the state after fixing base[..i].
    let mut partitions = vec![refiner.root()];
    let mut base = Vec::new();
    while let Some(cell) = partitions.last().and_then(Cells::target_cell) {
        let last = partitions.last().expect("non-empty");
        let b = last.members(cell)[0];
        let next = refiner.individualize(last, b);
        base.push(b);
        partitions.push(next);
    }

    // generators[i] fix base[..i]
    let mut by_level: Vec<Vec<Permutation>> = vec![Vec::new(); base.len()];
    let mut order: u128 = 1;
    for level in (0..base.len()).rev() {
        let b = base[level];
        let parent = &partitions[level];
        let candidates = parent.members(parent.color[b]);
        let mut gens: Vec<Permutation> = by_level[level..].concat();
        let mut orbit = orbit_of(b, &gens);
        for w in candidates {
            if orbit.contains(&w) {
                continue;
            }
            let right = refiner.individualize(parent, w);
            if let Some(p) = refiner.extend(
                &partitions[level + 1],
                &right,
                respect_vertex_labels,
                respect_edge_labels,
            ) {
                by_level[level].push(p.clone());
                gens.push(p);
                orbit = orbit_of(b, &gens);
            }
        }
        order = order.saturating_mul(orbit.len() as u128);
    }

    GroupGenerators {
        degree: n,
        generators: by_level.into_iter().flatten().collect(),
        cached_order: Some(order),
    }
}

/// Which objects an orbit partition is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitDomain {
    Vertices,
    /// Items are indices into the lexicographic edge list of the graph.
    Edges,
}

/// Orbit partition under the generated group. Each orbit is sorted and the
/// orbits are ordered by their smallest member.
pub fn orbits(group: &GroupGenerators, domain: OrbitDomain, g: &FiniteGraph) -> Result<Vec<Vec<usize>>> {
    match domain {
        OrbitDomain::Vertices => vertex_orbits(group, g),
        OrbitDomain::Edges => {
            let index: BTreeMap<Edge, usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
            Ok(edge_orbits(group, g)?
                .into_iter()
                .map(|orbit| orbit.iter().map(|e| index[e]).collect())
                .collect())
        }
    }
}

pub fn vertex_orbits(group: &GroupGenerators, g: &FiniteGraph) -> Result<Vec<Vec<usize>>> {
    group.check_acts_on(g)?;
    let mut assigned = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        if assigned[v] {
            continue;
        }
        let orbit = orbit_of(v, &group.generators);
        for &x in &orbit {
            assigned[x] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    Ok(out)
}

pub fn edge_orbits(group: &GroupGenerators, g: &FiniteGraph) -> Result<Vec<Vec<Edge>>> {
    group.check_acts_on(g)?;
    let mut assigned: BTreeSet<Edge> = BTreeSet::new();
    let mut out = Vec::new();
    for e in g.edges() {
        if assigned.contains(&e) {
            continue;
        }
        let mut orbit = BTreeSet::from([e]);
        let mut queue = VecDeque::from([e]);
        while let Some((u, v)) = queue.pop_front() {
            for p in &group.generators {
                let image = super::edge(p.apply(u), p.apply(v));
                if !g.has_edge(image.0, image.1) {
                    return Err(Error::Input("generator maps an edge to a non-edge".into()));
                }
                if orbit.insert(image) {
                    queue.push_back(image);
                }
            }
        }
        assigned.extend(orbit.iter().copied());
        out.push(orbit.into_iter().collect());
    }
    Ok(out)
}
