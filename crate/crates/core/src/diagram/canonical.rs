//! Canonical labelling of edge-labelled graphs.
//!
//! Colour refinement on (label, neighbour colour) multisets, then
//! individualization of one vertex of the first non-singleton cell and
//! recursion. Every leaf of the search tree is a vertex order; the canonical
//! form is the least encoding over all leaves. Twin vertices (whose
//! transposition is an automorphism) are only individualized once per cell.

use std::fmt;

use super::{Diagram, Vertex};
use crate::error::{CoxError, Result};

pub const DEFAULT_CANONICAL_CAP: usize = 12;

/// Name-free encoding of a diagram; equal iff the diagrams are isomorphic as
/// edge-labelled graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(d: &Diagram, cap: usize) -> Result<CanonicalForm> {
    Ok(CanonicalForm(encode(d, &canonical_order(d, cap)?)))
}

pub fn are_isomorphic(a: &Diagram, b: &Diagram, cap: usize) -> Result<bool> {
    if a.len() != b.len() || a.label_multiset() != b.label_multiset() {
        return Ok(false);
    }
    Ok(canonical_form(a, cap)? == canonical_form(b, cap)?)
}

/// Vertex order realising the canonical form: position `i` holds a vertex of
/// `d`.
pub(crate) fn canonical_order(d: &Diagram, cap: usize) -> Result<Vec<Vertex>> {
    let n = d.len();
    if n > cap {
        return Err(CoxError::CanonicalizationCap { vertices: n, cap });
    }
    let colors = refine(d, vec![0; n]);
    let mut best: Option<(Vec<u8>, Vec<Vertex>)> = None;
    search(d, colors, &mut best);
    Ok(best.map(|(_, order)| order).unwrap_or_default())
}

fn encode(d: &Diagram, order: &[Vertex]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(4 + 2 * n * n);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for i in 0..n {
        for j in i + 1..n {
            let m = d.label(order[i], order[j]).unwrap_or(0);
            out.extend_from_slice(&m.to_be_bytes());
        }
    }
    out
}

/// Iterated colour refinement. Colours are dense ranks and the new order
/// refines the old one.
fn refine(d: &Diagram, mut colors: Vec<u32>) -> Vec<u32> {
    let n = d.len();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(u32, u32)> = d.neighbors(v).map(|u| (d.label(v, u).unwrap(), colors[u])).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<(u32, u32)>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = signatures
            .iter()
            .map(|sig| sorted.binary_search(&sig).unwrap() as u32)
            .collect();
        let now = sorted.len();
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn twins(d: &Diagram, v: Vertex, w: Vertex) -> bool {
    d.vertices()
        .filter(|&x| x != v && x != w)
        .all(|x| d.label(v, x) == d.label(w, x))
}

fn search(d: &Diagram, colors: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<Vertex>)>) {
    let n = d.len();
    // first non-singleton cell, by colour
    let mut cell_color = None;
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    for (c, &k) in counts.iter().enumerate() {
        if k > 1 {
            cell_color = Some(c as u32);
            break;
        }
    }
    let Some(target) = cell_color else {
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let code = encode(d, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&w| twins(d, v, w)) {
            continue;
        }
        tried.push(v);
        let individualized: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
            .collect();
        search(d, refine(d, individualized), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renaming_does_not_matter() {
        let a = Diagram::from_edges(&["a", "b"], &[("a", "b", 5)]).unwrap();
        let b = Diagram::from_edges(&["x", "y"], &[("y", "x", 5)]).unwrap();
        let c = Diagram::from_edges(&["x", "y"], &[("x", "y", 7)]).unwrap();
        assert!(are_isomorphic(&a, &b, 12).unwrap());
        assert!(!are_isomorphic(&a, &c, 12).unwrap());
    }

    #[test]
    fn star_is_not_path() {
        let star = Diagram::from_edges(
            &["t", "u1", "u2", "c"],
            &[("t", "u1", 5), ("c", "u1", 5), ("u1", "u2", 3)],
        )
        .unwrap();
        let path = Diagram::from_edges(
            &["c", "u1", "u2", "t"],
            &[("c", "u1", 5), ("u1", "u2", 3), ("u2", "t", 5)],
        )
        .unwrap();
        assert!(!are_isomorphic(&star, &path, 12).unwrap());
        assert_eq!(star.label_multiset(), path.label_multiset());
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        let names: Vec<String> = (0..12).map(|i| format!("v{i}")).collect();
        let empty = Diagram::new(&names).unwrap();
        assert_eq!(canonical_form(&empty, 12).unwrap().as_bytes().len(), 4 + 66 * 4);
        let mut complete = empty.clone();
        for a in 0..12 {
            for b in a + 1..12 {
                complete.set_label(a, b, Some(3));
            }
        }
        canonical_form(&complete, 12).unwrap();
        assert!(matches!(
            canonical_form(&complete, 11),
            Err(CoxError::CanonicalizationCap { vertices: 12, cap: 11 })
        ));
    }

    #[test]
    fn order_is_a_permutation() {
        let d = crate::diagram::tests::pentagon();
        let mut order = canonical_order(&d, 12).unwrap();
        order.sort_unstable();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
    }
}
