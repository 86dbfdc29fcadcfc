use super::{FiniteGraph, VertexColoring};
use crate::error::{input, Result};

/// Extra constraints layered on top of properness: pairs forced to share a
/// color and non-adjacent pairs forced apart.
#[derive(Debug, Clone, Default)]
pub struct ColoringConstraints {
    pub same: Vec<(usize, usize)>,
    pub different: Vec<(usize, usize)>,
}

/// Exact search for a proper coloring with colors `0..k`.
///
/// Variables are visited in descending degree, ties broken by vertex index,
/// so the result is a deterministic function of the input.
pub fn find_coloring(g: &FiniteGraph, k: usize) -> Result<Option<VertexColoring>> {
    find_coloring_with(g, k, &ColoringConstraints::default())
}

pub fn find_coloring_with(
    g: &FiniteGraph,
    k: usize,
    constraints: &ColoringConstraints,
) -> Result<Option<VertexColoring>> {
    if k == 0 {
        return input("number of colors must be positive");
    }
    let n = g.vertex_count();
    for &(a, b) in constraints.same.iter().chain(&constraints.different) {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
    }

    // Merge `same` pairs; each class becomes one variable.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in &constraints.same {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            // keep the smaller vertex as representative
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    let rep: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for v in 0..n {
        if rep[v] == v {
            class_of[v] = reps.len();
            reps.push(v);
        }
    }
    let class: Vec<usize> = (0..n).map(|v| class_of[rep[v]]).collect();
    let m = reps.len();
    let mut adj = vec![std::collections::BTreeSet::new(); m];
    let conflicts = g.edges().chain(constraints.different.iter().copied());
    for (u, v) in conflicts {
        let (a, b) = (class[u], class[v]);
        if a == b {
            return Ok(None);
        }
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| adj[b].len().cmp(&adj[a].len()).then(reps[a].cmp(&reps[b])));

    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    let class_colors = if k > max_deg {
        greedy(&adj, &order)
    } else {
        if k > 64 {
            return input(format!("exact search supports at most 64 colors, got {k}"));
        }
        match Search::new(&adj, &order, k).run() {
            Some(c) => c,
            None => return Ok(None),
        }
    };
    Ok(Some(VertexColoring::new(
        (0..n).map(|v| class_colors[class[v]]).collect(),
    )))
}

fn greedy(adj: &[Vec<usize>], order: &[usize]) -> Vec<usize> {
    let mut color = vec![usize::MAX; adj.len()];
    for &v in order {
        let mut c = 0;
        while adj[v].iter().any(|&w| color[w] == c) {
            c += 1;
        }
        color[v] = c;
    }
    color
}

/// Backtracking with forward checking over bitmask domains. Colors are
/// interchangeable, so a variable may open at most one new color.
struct Search<'a> {
    adj: &'a [Vec<usize>],
    order: &'a [usize],
    domain: Vec<u64>,
    color: Vec<usize>,
    trail: Vec<(usize, u64)>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], order: &'a [usize], k: usize) -> Self {
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Search {
            adj,
            order,
            domain: vec![full; adj.len()],
            color: vec![usize::MAX; adj.len()],
            trail: Vec::new(),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.assign(0, 0) {
            Some(self.color)
        } else {
            None
        }
    }

    fn assign(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let limit = (used + 1).min(64);
        let allowed = self.domain[v] & if limit == 64 { u64::MAX } else { (1u64 << limit) - 1 };
        let mut bits = allowed;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mark = self.trail.len();
            self.color[v] = c;
            if self.prune(v, c) && self.assign(depth + 1, used.max(c + 1)) {
                return true;
            }
            self.undo(mark);
            self.color[v] = usize::MAX;
        }
        false
    }

    fn prune(&mut self, v: usize, c: usize) -> bool {
        let bit = 1u64 << c;
        for &w in &self.adj[v] {
            if self.color[w] == usize::MAX && self.domain[w] & bit != 0 {
                self.trail.push((w, self.domain[w]));
                self.domain[w] &= !bit;
                if self.domain[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (w, d) = self.trail.pop().expect("non-empty");
            self.domain[w] = d;
        }
    }
}

/// Size of a clique found greedily from every vertex; a lower bound on χ.
pub fn greedy_clique_number(g: &FiniteGraph) -> usize {
    let mut best = usize::from(g.vertex_count() > 0);
    for v in 0..g.vertex_count() {
        let mut cands: Vec<usize> = g.neighbors(v).collect();
        cands.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        let mut clique = vec![v];
        for c in cands {
            if clique.iter().all(|&x| g.has_edge(x, c)) {
                clique.push(c);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Smallest `k` admitting a proper coloring, with that coloring.
pub fn chromatic_number_with_witness(g: &FiniteGraph) -> Result<(usize, VertexColoring)> {
    if g.vertex_count() == 0 {
        return input("chromatic number of the empty graph is undefined");
    }
    // every k below the clique bound is infeasible
    for k in greedy_clique_number(g)..=g.max_degree() + 1 {
        if let Some(c) = find_coloring(g, k)? {
            return Ok((k, c));
        }
    }
    unreachable!("greedy coloring always succeeds with max degree + 1 colors")
}

pub fn chromatic_number_finite(g: &FiniteGraph) -> Result<usize> {
    chromatic_number_with_witness(g).map(|(k, _)| k)
}
