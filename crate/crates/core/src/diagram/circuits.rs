use super::{Diagram, Vertex};

/// All achordal (chordless) circuits of length ≥ 3.
///
/// Each circuit is listed once, as its lexicographically least rotation or
/// reflection: it starts at its smallest vertex and continues towards the
/// smaller of that vertex's two circuit neighbours. The list is sorted.
pub fn achordal_circuits(d: &Diagram) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; d.len()];
    for root in d.vertices() {
        path.clear();
        path.push(root);
        on_path[root] = true;
        extend(d, root, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
    }
    out.sort();
    out
}

// `path` is an induced path starting at `root`, with every vertex after
// `root` greater than it and only `path[1]` adjacent to `root`.
fn extend(d: &Diagram, root: Vertex, path: &mut Vec<Vertex>, on_path: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
    let last = *path.last().unwrap();
    for x in d.neighbors(last) {
        if x <= root || on_path[x] {
            continue;
        }
        // x may touch only `last` among the interior vertices
        let interior = if path.len() > 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if interior.iter().any(|&p| d.adjacent(p, x)) {
            continue;
        }
        let closes = path.len() >= 2 && d.adjacent(root, x);
        if closes {
            // record each circuit from one orientation only
            if path[1] < x {
                let mut circuit = path.clone();
                circuit.push(x);
                out.push(circuit);
            }
            continue;
        }
        path.push(x);
        on_path[x] = true;
        extend(d, root, path, on_path, out);
        on_path[x] = false;
        path.pop();
    }
}
