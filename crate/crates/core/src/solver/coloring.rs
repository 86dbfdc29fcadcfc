use std::collections::HashMap;

use super::transfer::{build_transfer_coloring, cell_colorings, find_cycle};
use super::{ungroup_vertices, Limits};
use crate::error::{input, Result};
use crate::periodic::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

fn finish(pg: &PeriodicGraph, grouped: PeriodicAssignment) -> PeriodicAssignment {
    let coloring = ungroup_vertices(pg, &grouped).minimize_period();
    assert!(
        coloring.is_proper_coloring_of(pg).expect("shape matches"),
        "periodic coloring failed window validation"
    );
    coloring
}

/// Periodic proper `k`-coloring from a shortest cycle of the coloring
/// transfer system, or `None` if the lift has no proper `k`-coloring.
pub fn periodic_coloring_transfer(
    pg: &PeriodicGraph,
    k: usize,
    limits: &Limits,
) -> Result<Option<PeriodicAssignment>> {
    let normalized = pg.normalize_nearest_neighbor();
    let ts = build_transfer_coloring(&normalized, k, limits)?;
    let Some(cycle) = find_cycle(&ts) else {
        return Ok(None);
    };
    let n = normalized.cell_size();
    let grouped = PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, cycle.len(), n, |v, r| {
        ts.states()[cycle[r]][v]
    })?;
    Ok(Some(finish(pg, grouped)))
}

/// Periodic proper `k`-coloring by coloring a finite strip and splicing.
///
/// With `S` admissible cell colorings, any proper coloring of a strip of
/// `S + 1` consecutive cells repeats some cell coloring at cells `i < j`;
/// repeating cells `i .. j` then colors the whole lift. The strip is an
/// induced subgraph of the lift, so an uncolorable strip means the lift is
/// uncolorable.
pub fn periodic_coloring_pigeonhole(
    pg: &PeriodicGraph,
    k: usize,
    limits: &Limits,
) -> Result<Option<PeriodicAssignment>> {
    if k == 0 {
        return input("number of colors must be positive");
    }
    let normalized = pg.normalize_nearest_neighbor();
    let admissible = cell_colorings(&normalized, k, limits.state_cap)?.len();
    let strip = StripSearch::new(&normalized, k, admissible + 1);
    let Some((cells, i, j)) = strip.run() else {
        return Ok(None);
    };
    let n = normalized.cell_size();
    let grouped = PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, j - i, n, |v, r| {
        cells[(i + r) * n + v]
    })?;
    Ok(Some(finish(pg, grouped)))
}

/// Exact backtracking over the strip's vertices in cell-major order with
/// two refinements: a completed cell coloring already present earlier on
/// the current branch closes a period at once, and a completed cell
/// coloring whose subtree was exhausted at depth `i` is skipped at every
/// depth `<= i` (it cannot be extended by more cells there either).
struct StripSearch {
    n: usize,
    k: usize,
    cells: usize,
    /// earlier vertices of the same cell each vertex must differ from
    inner: Vec<Vec<usize>>,
    /// vertices of the previous cell each vertex must differ from
    crossing: Vec<Vec<usize>>,
}

impl StripSearch {
    fn new(pg: &PeriodicGraph, k: usize, cells: usize) -> Self {
        let n = pg.cell_size();
        let mut inner = vec![Vec::new(); n];
        let mut crossing = vec![Vec::new(); n];
        for s in pg.specs() {
            match s.d {
                0 => inner[s.v].push(s.u),
                _ => crossing[s.v].push(s.u),
            }
        }
        StripSearch {
            n,
            k,
            cells,
            inner,
            crossing,
        }
    }

    fn fits(&self, colors: &[usize], t: usize, c: usize) -> bool {
        let (cell, v) = (t / self.n, t % self.n);
        let base = cell * self.n;
        self.inner[v].iter().all(|&u| colors[base + u] != c)
            && (cell == 0 || self.crossing[v].iter().all(|&u| colors[base - self.n + u] != c))
    }

    /// Returns the strip colors and a repeated pair of cells `i < j`.
    fn run(&self) -> Option<(Vec<usize>, usize, usize)> {
        let (n, total) = (self.n, self.n * self.cells);
        let mut colors: Vec<usize> = Vec::with_capacity(total);
        let mut next = vec![0usize; total];
        let mut on_branch: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut dead: HashMap<Vec<usize>, usize> = HashMap::new();
        loop {
            let t = colors.len();
            if t == total {
                return repeated_cells(&colors, n, self.cells).map(|(i, j)| (colors, i, j));
            }
            let mut placed = false;
            while next[t] < self.k {
                let c = next[t];
                next[t] += 1;
                if !self.fits(&colors, t, c) {
                    continue;
                }
                colors.push(c);
                if t % n == n - 1 {
                    let cell = t / n;
                    let key = colors[cell * n..].to_vec();
                    if let Some(&i) = on_branch.get(&key) {
                        return Some((colors, i, cell));
                    }
                    if dead.get(&key).is_some_and(|&d| cell <= d) {
                        colors.pop();
                        continue;
                    }
                    on_branch.insert(key, cell);
                }
                placed = true;
                break;
            }
            if placed {
                if t + 1 < total {
                    next[t + 1] = 0;
                }
                continue;
            }
            // exhausted at t: retreat
            if t == 0 {
                return None;
            }
            if t % n == 0 {
                let cell = t / n - 1;
                let key = colors[cell * n..].to_vec();
                on_branch.remove(&key);
                let depth = dead.entry(key).or_insert(cell);
                *depth = (*depth).max(cell);
            }
            colors.pop();
        }
    }
}

fn repeated_cells(colors: &[usize], n: usize, cells: usize) -> Option<(usize, usize)> {
    let mut first: HashMap<&[usize], usize> = HashMap::new();
    for c in 0..cells {
        let key = &colors[c * n..(c + 1) * n];
        if let Some(&i) = first.get(key) {
            return Some((i, c));
        }
        first.insert(key, c);
    }
    None
}

/// Smallest `k` for which the lift has a proper `k`-coloring, with a
/// periodic witness from the transfer route.
pub fn chromatic_number_periodic(
    pg: &PeriodicGraph,
    limits: &Limits,
) -> Result<(usize, PeriodicAssignment)> {
    for k in 1..=pg.max_degree() + 1 {
        if let Some(c) = periodic_coloring_transfer(pg, k, limits)? {
            return Ok((k, c));
        }
    }
    unreachable!("greedy coloring shows max degree + 1 colors always suffice")
}
