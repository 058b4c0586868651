//! Instance transformations: edge subdivision and line graphs.

use super::Graph;

/// Replaces every edge of `g` by a path with `s` internal vertices.
///
/// Original vertices keep their ids; the internal vertices of the i-th edge
/// (in canonical edge order) are `n + i*s .. n + (i+1)*s`. The result has
/// `n + s*m` vertices and `(s+1)*m` edges.
pub fn subdivide_edges(g: &Graph, s: usize) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::with_capacity((s + 1) * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        if s == 0 {
            out.push((u, v));
            continue;
        }
        let first = n + i * s;
        out.push((u, first));
        for k in 1..s {
            out.push((first + k - 1, first + k));
        }
        out.push((first + s - 1, v));
    }
    Graph::from_edges(n + s * edges.len(), out).unwrap()
}

/// Line graph of `g`, plus the map from line-graph vertex to original edge.
///
/// Vertex `i` of the result is edge `map[i]` of `g`; two vertices are
/// adjacent iff the corresponding edges share an endpoint.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = g.edges();
    let mut index = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u].push(i);
        index[v].push(i);
    }
    let mut out = Vec::new();
    for incident in &index {
        for (a, &i) in incident.iter().enumerate() {
            for &j in &incident[a + 1..] {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    (Graph::from_edges(edges.len(), out).unwrap(), edges)
}
