use std::collections::BTreeSet;
use std::fmt;

use super::{Reducer, Word};
use crate::diagram::Vertex;
use crate::error::{CoxError, Result};

/// Which element of an edge stabilizer a word represents, for `w` with
/// `{w s w⁻¹, w t w⁻¹} = {s, t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerTag {
    Identity,
    S,
    T,
    /// `st`, only for label 2.
    St,
    /// The longest element of the edge, only for labels above 2.
    Delta,
    NotStabilizer,
}

impl fmt::Display for StabilizerTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilizerTag::Identity => "identity",
            StabilizerTag::S => "s",
            StabilizerTag::T => "t",
            StabilizerTag::St => "st",
            StabilizerTag::Delta => "delta",
            StabilizerTag::NotStabilizer => "not_stabilizer",
        })
    }
}

/// Edge-stabilizer verdict. `diagnostic` is set when `w` permutes `{s, t}`
/// but is none of the expected elements, which can only happen outside the
/// two-dimensional setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeStabilizer {
    pub tag: StabilizerTag,
    pub diagnostic: Option<String>,
}

impl Reducer<'_> {
    /// Whether `w` is conjugate to a generator, i.e. has a palindromic
    /// geodesic. Peels matching letters off both ends: if `s` starts a
    /// geodesic of a reflection `t ≠ s`, then `s t s` is a reflection two
    /// letters shorter.
    pub fn is_reflection(&self, w: &Word) -> Result<bool> {
        let mut g = self.geodesic(w)?;
        loop {
            match g.len() {
                1 => return Ok(true),
                n if n % 2 == 0 => return Ok(false),
                n => {
                    let s = g[0];
                    let inner = self.geodesic_times(&g[1..], &[s])?;
                    if inner.len() != n - 2 {
                        return Ok(false);
                    }
                    g = inner;
                }
            }
        }
    }

    /// Normal forms of all `w s w⁻¹` with `s` a generator and `w` of length at
    /// most `max_len`, sorted. Fails once more than `cap` elements `w` are
    /// needed.
    pub fn reflections_up_to(&self, max_len: usize) -> Result<Vec<Word>> {
        let gens: Vec<Vertex> = self.diagram.vertices().collect();
        let mut levels = Vec::new();
        if !self.spheres(&gens, max_len, self.cap, &mut levels)? {
            return Err(CoxError::StateCapExceeded { cap: self.cap });
        }
        let mut out = BTreeSet::new();
        for w in levels.iter().flatten() {
            for &s in &gens {
                out.insert(self.reduce(&w.conjugate(&Word::letter(s)))?);
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Identifies `w` inside the stabilizer of the edge `{s, t}`.
    pub fn edge_stabilizer_classify(&self, s: Vertex, t: Vertex, w: &Word) -> Result<EdgeStabilizer> {
        let d = self.diagram;
        d.check_vertex(s)?;
        d.check_vertex(t)?;
        let m = d
            .label(s, t)
            .ok_or_else(|| CoxError::NoEdge(d.name(s).into(), d.name(t).into()))?;
        let (ls, lt) = (Word::letter(s), Word::letter(t));
        let ws = w.conjugate(&ls);
        let wt = w.conjugate(&lt);
        let fixes = self.are_equal(&ws, &ls)? && self.are_equal(&wt, &lt)?;
        let swaps = self.are_equal(&ws, &lt)? && self.are_equal(&wt, &ls)?;
        if !fixes && !swaps {
            return Ok(EdgeStabilizer {
                tag: StabilizerTag::NotStabilizer,
                diagnostic: None,
            });
        }
        let candidates: Vec<(StabilizerTag, Word)> = if m == 2 {
            vec![
                (StabilizerTag::Identity, Word::identity()),
                (StabilizerTag::S, ls.clone()),
                (StabilizerTag::T, lt.clone()),
                (StabilizerTag::St, Word::new(vec![s, t])),
            ]
        } else {
            vec![
                (StabilizerTag::Identity, Word::identity()),
                (StabilizerTag::Delta, self.longest_element(&[s, t])?),
            ]
        };
        for (tag, candidate) in candidates {
            if self.are_equal(w, &candidate)? {
                return Ok(EdgeStabilizer { tag, diagnostic: None });
            }
        }
        Ok(EdgeStabilizer {
            tag: StabilizerTag::NotStabilizer,
            diagnostic: Some(format!(
                "{} permutes {{{}, {}}} but is not in the expected list; the diagram is not two-dimensional",
                w.display(d),
                d.name(s),
                d.name(t)
            )),
        })
    }
}
