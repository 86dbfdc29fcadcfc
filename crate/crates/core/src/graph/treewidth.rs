use std::collections::BTreeSet;

use super::FiniteGraph;

/// Series-parallel reduction: delete vertices of degree at most 1 and
/// suppress vertices of degree 2, collapsing parallel edges. The graph
/// reduces to nothing iff it has no K4 minor, i.e. treewidth at most 2.
pub fn is_treewidth_at_most_2(g: &FiniteGraph) -> bool {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).rev().collect();
    while let Some(x) = stack.pop() {
        if !alive[x] || adj[x].len() > 2 {
            continue;
        }
        alive[x] = false;
        let nbrs: Vec<usize> = std::mem::take(&mut adj[x]).into_iter().collect();
        for &y in &nbrs {
            adj[y].remove(&x);
        }
        if let [a, b] = nbrs[..] {
            // a != b in a simple graph; a parallel edge simply merges
            adj[a].insert(b);
            adj[b].insert(a);
        }
        stack.extend(nbrs);
    }
    alive.iter().all(|&a| !a)
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn k4_is_not_series_parallel() {
        assert!(!is_treewidth_at_most_2(&complete(4)));
        assert!(!is_treewidth_at_most_2(&complete(5)));
        assert!(!is_treewidth_at_most_2(&petersen()));
    }

    #[test]
    fn trees_cycles_and_k4_minus_edge() {
        assert!(is_treewidth_at_most_2(&path(7)));
        assert!(is_treewidth_at_most_2(&star(5)));
        assert!(is_treewidth_at_most_2(&cycle(6)));
        let diamond = FiniteGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_treewidth_at_most_2(&diamond));
        assert!(is_treewidth_at_most_2(&FiniteGraph::new(0)));
    }

    #[test]
    fn subdivided_k4_still_has_the_minor() {
        // K4 with every edge subdivided once
        let mut g = FiniteGraph::new(4);
        for (u, v) in complete(4).edges() {
            let m = g.add_vertex();
            g.add_edge(u, m).unwrap();
            g.add_edge(m, v).unwrap();
        }
        assert!(!is_treewidth_at_most_2(&g));
    }
}
