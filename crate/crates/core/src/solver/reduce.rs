use std::collections::BTreeMap;

use crate::error::{input, Result};
use crate::graph::{FiniteGraph, VertexColoring};
use crate::periodic::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorReduction {
    pub coloring: PeriodicAssignment,
    /// Number of color classes eliminated.
    pub iterations: usize,
}

/// Brings a proper periodic coloring down to at most `Δ + 1` colors without
/// changing its period.
///
/// While `N > Δ + 1` colors are in use, the colors are first renamed to
/// `0 .. N` in increasing order, then every vertex of color `N - 1` takes
/// the smallest color missing from its lift neighborhood. That class is
/// independent, so all of its vertices may move at once, and each move
/// lands below `Δ + 1`. A coloring already within the bound is returned
/// unchanged.
pub fn reduce_colors_periodic(pg: &PeriodicGraph, c: &PeriodicAssignment) -> Result<ColorReduction> {
    if !c.is_proper_coloring_of(pg)? {
        return input("input coloring is not proper");
    }
    let bound = pg.max_degree() + 1;
    let (p, n) = (c.period(), pg.cell_size());
    let neighbors: Vec<Vec<(usize, i64)>> = (0..p)
        .flat_map(|r| (0..n).map(move |v| (v, r)))
        .map(|(v, r)| pg.lift_neighbors(v, r as i64).into_iter().map(|(w, cell, _)| (w, cell)).collect())
        .collect();
    let mut current = c.clone();
    let mut iterations = 0;
    loop {
        let used = current.distinct_values();
        if used.len() <= bound {
            break;
        }
        let rank: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let compact = PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, p, n, |v, r| {
            rank[&current.at(v, r as i64)]
        })?;
        let top = used.len() - 1;
        current = PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, p, n, |v, r| {
            let own = compact.at(v, r as i64);
            if own != top {
                return own;
            }
            let taken: Vec<usize> = neighbors[r * n + v].iter().map(|&(w, cell)| compact.at(w, cell)).collect();
            (0..).find(|x| !taken.contains(x)).expect("some color is free")
        })?;
        iterations += 1;
    }
    Ok(ColorReduction {
        coloring: current,
        iterations,
    })
}

/// Collapses a coloring to colors 1 and 2 per connected component: the
/// smallest color present in the component becomes 1 and every other color
/// 2. Any automorphism preserving the input preserves the output.
pub fn reduce_nontrivial_to_2(g: &FiniteGraph, c: &VertexColoring) -> Result<VertexColoring> {
    c.check_total(g)?;
    let mut out = vec![0; g.vertex_count()];
    let mut nontrivial = false;
    for comp in g.components() {
        let low = comp.iter().map(|&v| c.color(v)).min().expect("components are non-empty");
        nontrivial |= comp.iter().any(|&v| c.color(v) != low);
        for &v in &comp {
            out[v] = if c.color(v) == low { 1 } else { 2 };
        }
    }
    if !nontrivial {
        return input("coloring is constant on every component");
    }
    Ok(VertexColoring::new(out))
}

/// Periodic version of [`reduce_nontrivial_to_2`] over the components of
/// the lift; the period is kept.
pub fn reduce_nontrivial_to_2_periodic(pg: &PeriodicGraph, c: &PeriodicAssignment) -> Result<PeriodicAssignment> {
    c.check_shape(pg, AssignmentKind::VertexColoring)?;
    let p = c.period();
    // lift components that meet residue r at v are those with
    // (r - potential[v]) fixed modulo gcd(offset gcd, p)
    let mut key = vec![(0usize, 0i64); pg.cell_size()];
    let mut modulus = Vec::new();
    for (i, comp) in pg.quotient_components().into_iter().enumerate() {
        let g = comp.offset_gcd as usize;
        modulus.push(gcd(if g == 0 { p } else { g }, p) as i64);
        for &v in &comp.vertices {
            key[v] = (i, comp.potential[&v]);
        }
    }
    let class = |v: usize, r: usize| {
        let (i, pot) = key[v];
        (i, (r as i64 - pot).rem_euclid(modulus[i]))
    };
    let mut colors: BTreeMap<(usize, i64), (usize, usize)> = BTreeMap::new();
    for r in 0..p {
        for v in 0..pg.cell_size() {
            let x = c.at(v, r as i64);
            let e = colors.entry(class(v, r)).or_insert((x, x));
            e.0 = e.0.min(x);
            e.1 = e.1.max(x);
        }
    }
    if colors.values().all(|&(lo, hi)| lo == hi) {
        return input("coloring is constant on every lift component");
    }
    PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, p, pg.cell_size(), |v, r| {
        if c.at(v, r as i64) == colors[&class(v, r)].0 {
            1
        } else {
            2
        }
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
