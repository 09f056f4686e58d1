use super::{Diagram, Edge, Vertex};

/// Connectivity hierarchy of a diagram.
///
/// `edge_connected ⇒ odd_edge_connected ⇒ one_connected ⇒ connected` always
/// holds. The empty diagram counts as connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub one_connected: bool,
    pub edge_connected: bool,
    pub odd_edge_connected: bool,
    /// Vertices whose removal increases the number of components.
    pub cut_vertices: Vec<Vertex>,
    /// Edges `[st]` whose removal, together with `s` and `t`, increases the
    /// number of components (bridges are included, which only matters when
    /// the edge is a whole component).
    pub disconnecting_edges: Vec<Edge>,
    pub disconnecting_odd_edges: Vec<Edge>,
}

/// Number of connected components of the graph restricted to `alive`
/// vertices, ignoring `skip` if given.
pub(crate) fn component_count(d: &Diagram, alive: &[bool], skip: Option<(Vertex, Vertex)>) -> usize {
    let n = d.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if !alive[start] || seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if !alive[u] || seen[u] || !d.adjacent(v, u) {
                    continue;
                }
                if let Some((a, b)) = skip {
                    if (v, u) == (a, b) || (u, v) == (a, b) {
                        continue;
                    }
                }
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    count
}

/// Components of the subgraph induced on `alive`, each sorted, ordered by
/// least member.
pub(crate) fn components(d: &Diagram, alive: &[bool]) -> Vec<Vec<Vertex>> {
    let n = d.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if !alive[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for u in 0..n {
                if alive[u] && !seen[u] && d.adjacent(v, u) {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn connectivity_profile(d: &Diagram) -> ConnectivityProfile {
    let n = d.len();
    let mut alive = vec![true; n];
    let base = component_count(d, &alive, None);
    let connected = base <= 1;

    let mut cut_vertices = Vec::new();
    for v in 0..n {
        alive[v] = false;
        if component_count(d, &alive, None) > base {
            cut_vertices.push(v);
        }
        alive[v] = true;
    }

    let mut disconnecting_edges = Vec::new();
    for e in d.edges() {
        let bridge = component_count(d, &alive, Some((e.a, e.b))) > base;
        alive[e.a] = false;
        alive[e.b] = false;
        let separates = component_count(d, &alive, None) > base;
        alive[e.a] = true;
        alive[e.b] = true;
        if bridge || separates {
            disconnecting_edges.push(e);
        }
    }
    let disconnecting_odd_edges: Vec<Edge> = disconnecting_edges
        .iter()
        .copied()
        .filter(|e| e.label % 2 == 1)
        .collect();

    let one_connected = connected && cut_vertices.is_empty();
    ConnectivityProfile {
        connected,
        one_connected,
        edge_connected: one_connected && disconnecting_edges.is_empty(),
        odd_edge_connected: one_connected && disconnecting_odd_edges.is_empty(),
        cut_vertices,
        disconnecting_edges,
        disconnecting_odd_edges,
    }
}
