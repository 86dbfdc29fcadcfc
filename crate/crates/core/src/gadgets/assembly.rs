use super::{oriented_tree_ball, LabeledDigraph};
use crate::error::{input, Result};
use crate::graph::FiniteGraph;

/// A finite graph with one out-port and two in-ports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub graph: FiniteGraph,
    pub port_out: usize,
    pub port_in1: usize,
    pub port_in2: usize,
}

impl GadgetSpec {
    /// Ports must be distinct. Ports may have degree at most 3 and other
    /// vertices at most 4, so that assemblies have maximum degree 4.
    pub fn new(graph: FiniteGraph, port_out: usize, port_in1: usize, port_in2: usize) -> Result<Self> {
        let ports = [port_out, port_in1, port_in2];
        for &p in &ports {
            graph.check_vertex(p)?;
        }
        if port_out == port_in1 || port_out == port_in2 || port_in1 == port_in2 {
            return input("gadget ports must be distinct");
        }
        for v in 0..graph.vertex_count() {
            let bound = if ports.contains(&v) { 3 } else { 4 };
            if graph.degree(v) > bound {
                return input(format!("gadget vertex {v} has degree {} above {bound}", graph.degree(v)));
            }
        }
        Ok(GadgetSpec {
            graph,
            port_out,
            port_in1,
            port_in2,
        })
    }
}

/// Ten-vertex gadget. Each in-port `a` spans a diamond `a, x, y, m` with
/// `x - y` as the shared edge, so `a` and `m` agree in every 3-coloring;
/// the two diamond tips `m1 - m2` are adjacent, which forces the in-ports
/// apart. A vertex `w` joined to both tips carries the out-port as a leaf.
///
/// Vertices: `in1 x1 y1 m1 in2 x2 y2 m2 w out` as `0 .. 10`.
pub fn default_gadget() -> GadgetSpec {
    let mut edges = Vec::new();
    for base in [0, 4] {
        let (a, x, y, m) = (base, base + 1, base + 2, base + 3);
        edges.extend([(a, x), (a, y), (x, y), (x, m), (y, m)]);
    }
    edges.extend([(3, 7), (3, 8), (7, 8), (8, 9)]);
    let mut graph = FiniteGraph::from_edges(10, edges).expect("valid gadget edges");
    let names = ["in1", "x1", "y1", "m1", "in2", "x2", "y2", "m2", "w", "out"];
    for (v, name) in names.iter().enumerate() {
        graph.set_vertex_label(v, *name).expect("in range");
    }
    GadgetSpec::new(graph, 9, 0, 4).expect("default gadget satisfies its contract")
}

/// One copy of `h` per vertex of `d`; copy `c` occupies vertices
/// `c*|h| .. (c+1)*|h|` in the order of `h`. Each arc `(t, h)` joins the
/// out-port of copy `t` to an in-port of copy `h`: the lower-numbered tail
/// gets `port_in1`. Vertex labels read `copy.role`, with roles `out`,
/// `in1`, `in2`, or the gadget's own label (else the gadget index).
pub fn assemble_gadgets(d: &LabeledDigraph, h: &GadgetSpec) -> Result<FiniteGraph> {
    let size = h.graph.vertex_count();
    let mut tails: Vec<Vec<usize>> = vec![Vec::new(); d.vertex_count()];
    for (t, head, _) in d.arcs() {
        tails[head].push(t);
    }
    for v in 0..d.vertex_count() {
        tails[v].sort_unstable();
        tails[v].dedup();
        if d.out_degree(v) > 1 {
            return input(format!("vertex {v} has more than one out-arc; the out-port is shared"));
        }
        if tails[v].len() > 2 {
            return input(format!("vertex {v} has more than two in-arcs; only two in-ports exist"));
        }
    }
    let mut g = FiniteGraph::new(size * d.vertex_count());
    for c in 0..d.vertex_count() {
        for (a, b) in h.graph.edges() {
            g.add_edge(c * size + a, c * size + b)?;
        }
        for v in 0..size {
            let role = match v {
                _ if v == h.port_out => "out".to_string(),
                _ if v == h.port_in1 => "in1".to_string(),
                _ if v == h.port_in2 => "in2".to_string(),
                _ => h.graph.vertex_label(v).map_or_else(|| v.to_string(), str::to_string),
            };
            g.set_vertex_label(c * size + v, format!("{c}.{role}"))?;
        }
    }
    for (head, ts) in tails.iter().enumerate() {
        for (&t, port) in ts.iter().zip([h.port_in1, h.port_in2]) {
            g.add_edge(t * size + h.port_out, head * size + port)?;
        }
    }
    Ok(g)
}

/// Gadget copies assembled along the radius-`r` tree ball.
pub fn fig3_graph(r: usize, h: &GadgetSpec) -> Result<FiniteGraph> {
    if r == 0 {
        return input("radius must be at least 1");
    }
    assemble_gadgets(&oriented_tree_ball(r).graph, h)
}
