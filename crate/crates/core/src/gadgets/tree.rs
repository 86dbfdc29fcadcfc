use std::collections::{BTreeSet, VecDeque};

use super::LabeledDigraph;
use crate::error::{input, Result};
use crate::graph::{FiniteGraph, Permutation};

/// Ball of radius `depth` around `root` in the orientation of the
/// 3-regular tree where every vertex has one out-neighbor and two
/// in-neighbors. Vertices are numbered in breadth-first order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedTreeBall {
    pub graph: LabeledDigraph,
    pub root: usize,
    pub depth: usize,
    pub boundary: BTreeSet<usize>,
    parent: Vec<Option<usize>>,
    distance: Vec<usize>,
}

impl OrientedTreeBall {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn distance(&self, v: usize) -> usize {
        self.distance[v]
    }

    /// Neighbors further from the root, in increasing order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&w| self.parent[w] == Some(v)).collect()
    }

    /// The out-neighbor, if it lies in the ball.
    pub fn out_neighbor(&self, v: usize) -> Option<usize> {
        self.graph.arcs().find(|a| a.0 == v).map(|a| a.1)
    }

    /// In-neighbors inside the ball, in increasing order.
    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.graph.arcs().filter(|a| a.1 == v).map(|a| a.0).collect()
    }
}

pub fn oriented_tree_ball(r: usize) -> OrientedTreeBall {
    let mut parent = vec![None];
    let mut distance = vec![0];
    let mut arcs = Vec::new();
    // whether each vertex was reached from its out-neighbor
    let mut via_out = vec![false];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        if distance[x] == r {
            continue;
        }
        let ins_needed = match (parent[x], via_out[x]) {
            (None, _) => {
                let y = parent.len();
                arcs.push((x, y, 1));
                via_out.push(false);
                parent.push(Some(x));
                distance.push(distance[x] + 1);
                queue.push_back(y);
                2
            }
            (Some(_), true) => 2,
            (Some(_), false) => {
                let y = parent.len();
                arcs.push((x, y, 1));
                via_out.push(false);
                parent.push(Some(x));
                distance.push(distance[x] + 1);
                queue.push_back(y);
                1
            }
        };
        for _ in 0..ins_needed {
            let y = parent.len();
            arcs.push((y, x, 1));
            via_out.push(true);
            parent.push(Some(x));
            distance.push(distance[x] + 1);
            queue.push_back(y);
        }
    }
    let boundary = (0..parent.len()).filter(|&v| distance[v] == r).collect();
    OrientedTreeBall {
        graph: LabeledDigraph::new(parent.len(), arcs).expect("tree arcs are valid"),
        root: 0,
        depth: r,
        boundary,
        parent,
        distance,
    }
}

/// A graph built on a tree ball together with where each ball vertex and
/// each arc went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLayout {
    pub graph: FiniteGraph,
    pub ball: OrientedTreeBall,
    /// Per ball vertex: the vertex attached toward the out-neighbor and
    /// those attached toward the lower and higher in-neighbor. All three
    /// coincide when ball vertices are kept whole.
    pub corners: Vec<[usize; 3]>,
    /// Per arc `(tail, head)` in increasing order: the vertices `r`, `s`, `t`
    /// of the path `tail - r - s - head` with `t` pendant at `s`.
    pub arc_paths: Vec<((usize, usize), [usize; 3])>,
}

impl TreeLayout {
    fn build(r: usize, triangles: bool) -> Result<TreeLayout> {
        if r == 0 {
            return input("radius must be at least 1");
        }
        let ball = oriented_tree_ball(r);
        let mut graph = FiniteGraph::new(0);
        let mut corners = Vec::with_capacity(ball.vertex_count());
        for _ in 0..ball.vertex_count() {
            if triangles {
                let c = [graph.add_vertex(), graph.add_vertex(), graph.add_vertex()];
                for (i, &x) in c.iter().enumerate() {
                    graph.set_vertex_label(x, format!("u{}", i + 1))?;
                    graph.add_edge(x, c[(i + 1) % 3])?;
                }
                corners.push(c);
            } else {
                let x = graph.add_vertex();
                graph.set_vertex_label(x, "u")?;
                corners.push([x; 3]);
            }
        }
        let mut arc_paths = Vec::new();
        for (tail, head, _) in ball.graph.arcs() {
            let from = corners[tail][0];
            let slot = 1 + ball.in_neighbors(head).iter().position(|&x| x == tail).expect("arc head");
            let to = corners[head][slot];
            let path = [graph.add_vertex(), graph.add_vertex(), graph.add_vertex()];
            for (&x, name) in path.iter().zip(["r", "s", "t"]) {
                graph.set_vertex_label(x, name)?;
            }
            graph.add_edge(from, path[0])?;
            graph.add_edge(path[0], path[1])?;
            graph.add_edge(path[1], to)?;
            graph.add_edge(path[1], path[2])?;
            arc_paths.push(((tail, head), path));
        }
        Ok(TreeLayout {
            graph,
            ball,
            corners,
            arc_paths,
        })
    }

    /// The automorphism exchanging the two in-subtrees of `u`, lifted to
    /// the graph. It exists when `u` is an interior ball vertex whose two
    /// in-neighbors both lie further from the root; on triangles it
    /// exchanges the corners of `u` toward those in-neighbors.
    pub fn in_subtree_swap(&self, u: usize) -> Option<Permutation> {
        let ball = &self.ball;
        let ins = ball.in_neighbors(u);
        if ins.len() != 2 || ins.iter().any(|&x| ball.parent(x) != Some(u)) {
            return None;
        }
        let mut sigma: Vec<usize> = (0..ball.vertex_count()).collect();
        let mut stack = vec![(ins[0], ins[1])];
        while let Some((a, b)) = stack.pop() {
            sigma[a] = b;
            sigma[b] = a;
            let (ca, cb) = (ball.children(a), ball.children(b));
            if ca.len() != cb.len() {
                return None;
            }
            stack.extend(ca.into_iter().zip(cb));
        }
        let mut images: Vec<usize> = (0..self.graph.vertex_count()).collect();
        for x in 0..ball.vertex_count() {
            let slots = if x == u { [0, 2, 1] } else { [0, 1, 2] };
            for (i, &j) in slots.iter().enumerate() {
                images[self.corners[x][i]] = self.corners[sigma[x]][j];
            }
        }
        for &((t, h), path) in &self.arc_paths {
            let target = (sigma[t], sigma[h]);
            let (_, image) = self.arc_paths.iter().find(|(arc, _)| *arc == target)?;
            for i in 0..3 {
                images[path[i]] = image[i];
            }
        }
        let p = Permutation::new(images).ok()?;
        p.is_automorphism(&self.graph, false, false).then_some(p)
    }
}

/// Ball vertices become triangles and arcs become paths with a pendant.
pub fn fig1_layout(r: usize) -> Result<TreeLayout> {
    TreeLayout::build(r, true)
}

/// Labels: `u1`/`u2`/`u3` on triangle corners (`u1` toward the
/// out-neighbor), `r`/`s`/`t` on arc paths.
pub fn fig1_graph(r: usize) -> Result<FiniteGraph> {
    fig1_layout(r).map(|l| l.graph)
}

/// Like [`fig1_layout`] with ball vertices kept whole; the result is a tree.
pub fn fig2_layout(r: usize) -> Result<TreeLayout> {
    TreeLayout::build(r, false)
}

pub fn fig2_tree(r: usize) -> Result<FiniteGraph> {
    fig2_layout(r).map(|l| l.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge, is_treewidth_at_most_2};

    #[test]
    fn ball_sizes_and_degrees() {
        let sizes: Vec<usize> = (0..4).map(|r| oriented_tree_ball(r).vertex_count()).collect();
        assert_eq!(sizes, vec![1, 4, 10, 22]);
        let ball = oriented_tree_ball(2);
        assert_eq!(ball.graph.arc_count(), 9);
        for v in 0..ball.vertex_count() {
            if ball.boundary.contains(&v) {
                assert_eq!(ball.distance(v), 2);
                assert_eq!(ball.graph.out_degree(v) + ball.graph.in_degree(v), 1);
            } else {
                assert_eq!((ball.graph.out_degree(v), ball.graph.in_degree(v)), (1, 2));
            }
        }
        assert!(ball.graph.underlying().is_connected());
    }

    #[test]
    fn fig1_counts_and_treewidth() {
        let l = fig1_layout(1).unwrap();
        assert_eq!(l.graph.vertex_count(), 21);
        assert_eq!(l.graph.edge_count(), 4 * 3 + 3 * 4);
        assert!(is_treewidth_at_most_2(&l.graph));
        assert!(is_treewidth_at_most_2(&fig1_graph(2).unwrap()));
        // u1 of the root sits on the path to its out-neighbor
        let out = l.ball.out_neighbor(0).unwrap();
        let (_, path) = l.arc_paths.iter().find(|(a, _)| *a == (0, out)).unwrap();
        assert!(l.graph.has_edge(l.corners[0][0], path[0]));
    }

    #[test]
    fn fig2_is_a_tree() {
        for r in 1..=3 {
            let g = fig2_tree(r).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.edge_count() + 1, g.vertex_count());
        }
        assert_eq!(fig2_tree(1).unwrap().vertex_count(), 13);
        assert!(fig1_graph(0).is_err());
    }

    #[test]
    fn contracting_triangles_gives_fig2() {
        for r in 1..=2 {
            let (f1, f2) = (fig1_layout(r).unwrap(), fig2_layout(r).unwrap());
            let mut map = vec![0; f1.graph.vertex_count()];
            for (c1, c2) in f1.corners.iter().zip(&f2.corners) {
                for &x in c1 {
                    map[x] = c2[0];
                }
            }
            for ((_, p1), (_, p2)) in f1.arc_paths.iter().zip(&f2.arc_paths) {
                for i in 0..3 {
                    map[p1[i]] = p2[i];
                }
            }
            let contracted: BTreeSet<_> = f1
                .graph
                .edges()
                .filter(|&(a, b)| map[a] != map[b])
                .map(|(a, b)| edge(map[a], map[b]))
                .collect();
            assert_eq!(contracted, f2.graph.edges().collect());
        }
    }

    #[test]
    fn in_subtree_swaps_invert_the_triangle_edge() {
        let l = fig1_layout(2).unwrap();
        for u in [0, 2, 3] {
            let p = l.in_subtree_swap(u).unwrap();
            let [_, u2, u3] = l.corners[u];
            assert_eq!((p.apply(u2), p.apply(u3)), (u3, u2));
            assert!(p.inverts((u2, u3)));
        }
        // the root's out-neighbor has the root as an in-neighbor
        assert_eq!(l.in_subtree_swap(1), None);
        let t = fig2_layout(1).unwrap();
        let p = t.in_subtree_swap(0).unwrap();
        let ins = t.ball.in_neighbors(0);
        let near = |x: usize| t.arc_paths.iter().find(|(a, _)| *a == (x, 0)).unwrap().1[1];
        assert_eq!(p.apply(near(ins[0])), near(ins[1]));
        assert_eq!(p.apply(0), 0);
    }
}
