//! Levi (bipartite incidence) graphs of linear systems, exact girth, and
//! the girth-based edge bound that certifies non-planarity.
//!
//! For a graph of girth k, planarity forces |E| ≤ k(|V|−2)/(k−2); an edge
//! count above that bound is a one-sided certificate that the graph — and
//! hence any straight-line realization of the source system — cannot be
//! planar. The converse certifies nothing.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::system::LinearSystem;

/// The incidence graph: one vertex per point, one per line, one edge per
/// incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteIncidenceGraph {
    pub point_vertices: usize,
    pub line_vertices: usize,
    /// (point index, line index) pairs, ascending; no multi-edges.
    pub edges: Vec<(usize, usize)>,
}

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// The edge bound k(|V|−2)/(k−2) evaluated with k = girth (|V|−1 for
/// acyclic graphs), kept as an exact rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityBoundReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub girth: Girth,
    pub bound_value: Ratio<u64>,
    /// True iff edge_count > bound_value, which proves non-planarity.
    pub certified_nonplanar: bool,
}

/// Builds the Levi graph; the edge count equals the sum of line sizes.
pub fn levi_graph(ls: &LinearSystem) -> BipartiteIncidenceGraph {
    let mut edges = Vec::new();
    for l in 0..ls.num_lines() {
        for p in ls.line(l) {
            edges.push((p, l));
        }
    }
    edges.sort_unstable();
    BipartiteIncidenceGraph {
        point_vertices: ls.num_points(),
        line_vertices: ls.num_lines(),
        edges,
    }
}

/// Adjacency lists over the unified vertex set: points first, then lines.
fn adjacency(g: &BipartiteIncidenceGraph) -> Vec<Vec<usize>> {
    let n = g.point_vertices + g.line_vertices;
    let mut adj = vec![Vec::new(); n];
    for &(p, l) in &g.edges {
        let lv = g.point_vertices + l;
        adj[p].push(lv);
        adj[lv].push(p);
    }
    adj
}

/// Exact girth by breadth-first search from every vertex: a non-tree edge
/// (u, w) seen from root r closes a cycle of length dist(u) + dist(w) + 1,
/// and the minimum over all roots and edges is the girth.
pub fn girth(g: &BipartiteIncidenceGraph) -> Girth {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Evaluates the girth-based planarity bound for the graph.
pub fn planarity_bound(g: &BipartiteIncidenceGraph) -> PlanarityBoundReport {
    let vertex_count = g.point_vertices + g.line_vertices;
    let edge_count = g.edges.len();
    let girth = girth(g);
    let bound_value = match girth {
        Girth::Infinite => Ratio::from_integer(vertex_count.saturating_sub(1) as u64),
        Girth::Finite(k) => {
            // a cycle of length k needs at least k vertices, so the
            // numerator is nonnegative and the denominator positive
            Ratio::new((k * (vertex_count - 2)) as u64, (k - 2) as u64)
        }
    };
    let certified_nonplanar = Ratio::from_integer(edge_count as u64) > bound_value;
    PlanarityBoundReport {
        vertex_count,
        edge_count,
        girth,
        bound_value,
        certified_nonplanar,
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the graph as deterministic Graphviz DOT text (UTF-8, LF):
/// points as ellipses, lines as boxes, edges in sorted order.
pub fn export_dot(
    g: &BipartiteIncidenceGraph,
    point_labels: &[String],
    line_labels: &[String],
) -> Result<String> {
    if point_labels.len() != g.point_vertices {
        return Err(Error::LabelCountMismatch {
            given: point_labels.len(),
            expected: g.point_vertices,
        });
    }
    if line_labels.len() != g.line_vertices {
        return Err(Error::LabelCountMismatch {
            given: line_labels.len(),
            expected: g.line_vertices,
        });
    }
    let mut out = String::from("graph levi {\n");
    out.push_str("  node [shape=ellipse];\n");
    for (i, label) in point_labels.iter().enumerate() {
        out.push_str(&format!("  p{i} [label=\"{}\"];\n", escape(label)));
    }
    out.push_str("  node [shape=box];\n");
    for (i, label) in line_labels.iter().enumerate() {
        out.push_str(&format!("  l{i} [label=\"{}\"];\n", escape(label)));
    }
    for &(p, l) in &g.edges {
        out.push_str(&format!("  p{p} -- l{l};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
