use std::collections::BTreeMap;

use super::{Reducer, Word};
use crate::diagram::Vertex;
use crate::error::{CoxError, Result};

fn alternating(a: Vertex, b: Vertex, len: usize) -> Word {
    (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

impl Reducer<'_> {
    fn edge_label(&self, s: Vertex, t: Vertex) -> Result<u32> {
        let d = self.diagram;
        d.check_vertex(s)?;
        d.check_vertex(t)?;
        d.label(s, t)
            .ok_or_else(|| CoxError::NoEdge(d.name(s).into(), d.name(t).into()))
    }

    /// `(st)^k` for an odd label `2k+1`; conjugates `s` to `t`.
    pub fn v_word(&self, s: Vertex, t: Vertex) -> Result<Word> {
        let m = self.edge_label(s, t)?;
        if m % 2 == 0 {
            return Err(self.parity_error(s, t, m, "an odd"));
        }
        Ok(alternating(s, t, (m - 1) as usize))
    }

    /// `(st)^(k-1) s` for an even label `2k`; commutes with `t`.
    pub fn u_word(&self, s: Vertex, t: Vertex) -> Result<Word> {
        let m = self.edge_label(s, t)?;
        if m % 2 == 1 {
            return Err(self.parity_error(s, t, m, "an even"));
        }
        Ok(alternating(s, t, (m - 1) as usize))
    }

    fn parity_error(&self, s: Vertex, t: Vertex, label: u32, expected: &'static str) -> CoxError {
        CoxError::WrongParity {
            a: self.diagram.name(s).into(),
            b: self.diagram.name(t).into(),
            label,
            expected,
        }
    }

    fn require_spherical(&self, subset: &[Vertex]) -> Result<Vec<Vertex>> {
        let d = self.diagram;
        if !d.is_spherical(subset)? {
            return Err(CoxError::NotSpherical(d.format_subset(subset)));
        }
        let mut set = subset.to_vec();
        set.sort_unstable();
        set.dedup();
        Ok(set)
    }

    /// Longest element of the finite parabolic on `subset`, by greedy ascent:
    /// right-multiply by the first generator (in declaration order) that
    /// lengthens the word, until none does.
    pub fn longest_element(&self, subset: &[Vertex]) -> Result<Word> {
        let set = self.require_spherical(subset)?;
        let mut w: Vec<Vertex> = Vec::new();
        'ascend: loop {
            for &t in &set {
                let next = self.geodesic_times(&w, &[t])?;
                if next.len() > w.len() {
                    w = next;
                    continue 'ascend;
                }
            }
            break;
        }
        self.normalize(w)
    }

    /// The permutation `t ↦ Δ t Δ` of `subset`, where `Δ` is its longest
    /// element.
    pub fn delta_conjugation(&self, subset: &[Vertex]) -> Result<BTreeMap<Vertex, Vertex>> {
        let set = self.require_spherical(subset)?;
        let delta = self.longest_element(&set)?;
        let mut map = BTreeMap::new();
        for &t in &set {
            let image = self.reduce(&delta.conjugate(&Word::letter(t)))?;
            match image.letters() {
                [u] if set.contains(u) => {
                    map.insert(t, *u);
                }
                _ => {
                    return Err(CoxError::Internal(format!(
                        "longest element conjugates {} to {}",
                        self.diagram.name(t),
                        image.display(self.diagram)
                    )))
                }
            }
        }
        let mut images: Vec<Vertex> = map.values().copied().collect();
        images.sort_unstable();
        if images != set {
            return Err(CoxError::Internal(
                "conjugation by the longest element is not a bijection".into(),
            ));
        }
        Ok(map)
    }
}
