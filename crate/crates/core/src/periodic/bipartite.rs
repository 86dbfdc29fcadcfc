//! Periodic 2-colorings by a potential computation over GF(2).
//!
//! Each quotient component lifts to `g` isomorphic lift components (`g` the
//! gcd of its cycle offsets), and each of those is a connected periodic
//! graph under the shift by `g`. In a lift component, write a vertex as
//! `(v, t)` with `t = floor((i - potential(v)) / g)`; a spec `(u, v, d)`
//! then joins `t` to `t + d'` with `d' = (d + potential(u) - potential(v)) / g`.
//! A connected bipartite lift has exactly two proper 2-colorings and the
//! shift either fixes or swaps them, so the coloring has the form
//! `c(v, t) = φ(v) + α·t (mod 2)`, and a spec is satisfied iff
//! `φ(u) + φ(v) + α·d' = 1`. Solving that system per quotient component
//! decides bipartiteness exactly. When `g = 0` the lift components are
//! finite copies of the quotient component and `t` plays no role.

use std::collections::VecDeque;

use super::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A proper 2-coloring, or `None` if the lift has an odd cycle. The period
/// is the lcm over quotient components of 1 (when the shift fixes the
/// coloring) or `2g`.
pub fn bipartite_2coloring(pg: &PeriodicGraph) -> Option<PeriodicAssignment> {
    let n = pg.cell_size();
    // φ(v) = phi0[v] + alpha * phi1[v]
    let mut phi0 = vec![0u8; n];
    let mut phi1 = vec![0u8; n];
    let mut alpha = vec![0u8; n];
    let mut step = vec![0i64; n];
    let mut potential = vec![0i64; n];
    let mut seen = vec![false; n];
    let comps = pg.quotient_components();
    for comp in &comps {
        for &v in &comp.vertices {
            potential[v] = comp.potential[&v];
            step[v] = comp.offset_gcd as i64;
        }
    }
    let mut incident: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
    for s in pg.specs() {
        let g = step[s.u];
        let d = if g == 0 {
            0
        } else {
            (s.d as i64 + potential[s.u] - potential[s.v]) / g
        };
        let d = d.rem_euclid(2) as u8;
        incident[s.u].push((s.v, d));
        incident[s.v].push((s.u, d));
    }
    let mut period = 1;
    for comp in &comps {
        let root = comp.vertices[0];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        // constraints c0 + a * c1 = 1 from every non-tree spec
        let mut fixed_alpha: Option<u8> = None;
        let mut free_constraints = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &(y, d) in &incident[x] {
                if !seen[y] {
                    seen[y] = true;
                    phi0[y] = 1 ^ phi0[x];
                    phi1[y] = phi1[x] ^ d;
                    queue.push_back(y);
                } else {
                    free_constraints.push((phi0[x] ^ phi0[y], phi1[x] ^ phi1[y] ^ d));
                }
            }
        }
        for (c0, c1) in free_constraints {
            match (c1, fixed_alpha) {
                (0, _) if c0 != 1 => return None,
                (0, _) => {}
                (_, None) => fixed_alpha = Some(1 ^ c0),
                (_, Some(a)) if a != 1 ^ c0 => return None,
                _ => {}
            }
        }
        let a = fixed_alpha.unwrap_or(0);
        for &v in &comp.vertices {
            alpha[v] = a;
        }
        if a == 1 {
            let p = 2 * comp.offset_gcd as usize;
            period = period / gcd(period, p) * p;
        }
    }
    let coloring = PeriodicAssignment::from_fn(AssignmentKind::VertexColoring, period, n, |v, r| {
        let a = alpha[v];
        let t = if step[v] == 0 {
            0
        } else {
            (r as i64 - potential[v]).div_euclid(step[v])
        };
        usize::from((phi0[v] ^ (a & phi1[v]) ^ (a & t.rem_euclid(2) as u8)) & 1)
    })
    .expect("table shape matches");
    Some(coloring)
}
