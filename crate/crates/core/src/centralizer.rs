//! Generators for the centralizer `C(s)` of a generator `s`.
//!
//! Odd-labelled edges conjugate their endpoints into each other, so the odd
//! component of `s` (in the diagram with even edges removed) carries all
//! conjugates of `s` among the generators. The generating set is `{s}`, one
//! element `v·u·v⁻¹` per odd-component vertex `x` and even edge `[t x]`
//! (with `v` transporting `x` to `s` along a tree path and `u` the even
//! dihedral word fixing `x`), and one loop word per fundamental cycle of the
//! odd component.

use std::collections::{BTreeMap, VecDeque};

use crate::diagram::{Diagram, Vertex};
use crate::error::Result;
use crate::words::{Reducer, Word};

/// Tree path from the base to one vertex of its odd component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPath {
    /// `base, s_1, …, x`
    pub vertices: Vec<Vertex>,
    /// `v_{s_1 base} · v_{s_2 s_1} ⋯`, which conjugates `x` to the base.
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPathTable {
    pub base: Vertex,
    pub paths: BTreeMap<Vertex, OddPath>,
    // BFS parent of every non-base vertex of the component
    parent: BTreeMap<Vertex, Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopBasis {
    pub base: Vertex,
    /// Closed walks `base, …, base`.
    pub loops: Vec<Vec<Vertex>>,
}

/// Where a centralizer generator came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Base,
    /// Conjugated even-edge word for the edge `[t x]`.
    EvenEdge {
        x: Vertex,
        t: Vertex,
    },
    Loop {
        walk: Vec<Vertex>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerGenerator {
    pub kind: GeneratorKind,
    pub word: Word,
}

/// Word of a walk `p_0, p_1, …, p_n` along odd edges:
/// `v_{p_1 p_0} · v_{p_2 p_1} ⋯ v_{p_n p_{n-1}}`.
fn walk_word(r: &Reducer<'_>, walk: &[Vertex]) -> Result<Word> {
    let mut letters = Vec::new();
    for pair in walk.windows(2) {
        letters.extend_from_slice(r.v_word(pair[1], pair[0])?.letters());
    }
    Ok(Word::new(letters))
}

pub fn odd_path_table(d: &Diagram, s: Vertex) -> Result<OddPathTable> {
    d.check_vertex(s)?;
    let odd = d.odd_subdiagram();
    let r = Reducer::new(d);
    let mut parent = BTreeMap::new();
    let mut order = vec![s];
    let mut queue = VecDeque::from([s]);
    let mut seen = vec![false; d.len()];
    seen[s] = true;
    while let Some(v) = queue.pop_front() {
        for u in odd.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent.insert(u, v);
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    let mut paths = BTreeMap::new();
    for &x in &order {
        let mut vertices = vec![x];
        let mut cur = x;
        while let Some(&p) = parent.get(&cur) {
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        let word = walk_word(&r, &vertices)?;
        paths.insert(x, OddPath { vertices, word });
    }
    Ok(OddPathTable { base: s, paths, parent })
}

impl OddPathTable {
    /// Vertices of the odd component of the base, in declaration order.
    pub fn component(&self) -> Vec<Vertex> {
        self.paths.keys().copied().collect()
    }
}

pub fn loop_basis(d: &Diagram, s: Vertex) -> Result<LoopBasis> {
    let table = odd_path_table(d, s)?;
    let r = Reducer::new(d);
    let comp = table.component();
    let mut loops = Vec::new();
    for (i, &x) in comp.iter().enumerate() {
        for &y in &comp[i + 1..] {
            let odd_edge = d.label(x, y).is_some_and(|m| m % 2 == 1);
            let tree_edge = table.parent.get(&x) == Some(&y) || table.parent.get(&y) == Some(&x);
            if !odd_edge || tree_edge {
                continue;
            }
            let mut walk = table.paths[&x].vertices.clone();
            walk.extend(table.paths[&y].vertices.iter().rev());
            let mut reversed = walk.clone();
            reversed.reverse();
            if walk_word(&r, &reversed)? < walk_word(&r, &walk)? {
                walk = reversed;
            }
            loops.push(walk);
        }
    }
    Ok(LoopBasis { base: s, loops })
}

/// First Betti number `E − V + 1` of the odd component of `s`.
pub fn odd_betti_number(d: &Diagram, s: Vertex) -> Result<usize> {
    let comp = odd_path_table(d, s)?.component();
    let mut edges = 0;
    for (i, &x) in comp.iter().enumerate() {
        for &y in &comp[i + 1..] {
            if d.label(x, y).is_some_and(|m| m % 2 == 1) {
                edges += 1;
            }
        }
    }
    Ok(edges + 1 - comp.len())
}

pub fn centralizer_generators(d: &Diagram, s: Vertex) -> Result<Vec<CentralizerGenerator>> {
    let table = odd_path_table(d, s)?;
    let basis = loop_basis(d, s)?;
    let r = Reducer::new(d);
    let mut out = vec![CentralizerGenerator {
        kind: GeneratorKind::Base,
        word: Word::letter(s),
    }];
    for (&x, path) in &table.paths {
        for t in d.vertices() {
            if !d.label(t, x).is_some_and(|m| m % 2 == 0) {
                continue;
            }
            let u = r.u_word(t, x)?;
            out.push(CentralizerGenerator {
                kind: GeneratorKind::EvenEdge { x, t },
                word: path.word.conjugate(&u),
            });
        }
    }
    for walk in basis.loops {
        let word = walk_word(&r, &walk)?;
        out.push(CentralizerGenerator {
            kind: GeneratorKind::Loop { walk },
            word,
        });
    }
    Ok(out)
}

/// Whether `w s w⁻¹ s` is trivial.
pub fn verify_centralizes(d: &Diagram, s: Vertex, w: &Word) -> Result<bool> {
    let r = Reducer::new(d);
    let ls = Word::letter(s);
    r.is_identity(&w.conjugate(&ls).then(&ls))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: &Diagram, text: &str) -> Word {
        Word::parse(d, text).unwrap()
    }

    fn chain() -> Diagram {
        Diagram::from_edges(&["s", "a", "b"], &[("s", "a", 3), ("a", "b", 4)]).unwrap()
    }

    fn odd_triangle() -> Diagram {
        Diagram::from_edges(&["s", "t", "r"], &[("s", "t", 3), ("t", "r", 3), ("s", "r", 3)]).unwrap()
    }

    #[test]
    fn path_tables() {
        let d = chain();
        let table = odd_path_table(&d, 0).unwrap();
        assert_eq!(table.component(), vec![0, 1]);
        assert_eq!(table.paths[&1].word, w(&d, "a s"));

        let lone = Diagram::new(&["s", "x"]).unwrap();
        let table = odd_path_table(&lone, 0).unwrap();
        assert_eq!(table.component(), vec![0]);
        assert!(table.paths[&0].word.is_empty());
        assert_eq!(table.paths[&0].vertices, vec![0]);

        let d = odd_triangle();
        let table = odd_path_table(&d, 0).unwrap();
        assert_eq!(table.component(), vec![0, 1, 2]);
        let r = Reducer::new(&d);
        for (&x, path) in &table.paths {
            let conj = r.reduce(&path.word.conjugate(&Word::letter(x))).unwrap();
            assert_eq!(conj, Word::letter(0));
            assert_eq!(path.vertices.len(), if x == 0 { 1 } else { 2 });
        }
    }

    #[test]
    fn loop_bases() {
        assert!(loop_basis(&chain(), 0).unwrap().loops.is_empty());
        let basis = loop_basis(&odd_triangle(), 0).unwrap();
        assert_eq!(basis.loops, vec![vec![0, 1, 2, 0]]);
        let glued = Diagram::from_edges(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("a", "c", 3),
                ("b", "d", 5),
                ("c", "d", 3),
            ],
        )
        .unwrap();
        assert_eq!(loop_basis(&glued, 0).unwrap().loops.len(), 2);
        assert_eq!(odd_betti_number(&glued, 0).unwrap(), 2);
    }

    #[test]
    fn generator_examples() {
        let d = chain();
        let gens: Vec<Word> = centralizer_generators(&d, 0)
            .unwrap()
            .into_iter()
            .map(|g| g.word)
            .collect();
        assert_eq!(gens, vec![w(&d, "s"), w(&d, "a s b a b s a")]);

        let lone = Diagram::new(&["s"]).unwrap();
        assert_eq!(centralizer_generators(&lone, 0).unwrap().len(), 1);

        let d = odd_triangle();
        let gens = centralizer_generators(&d, 0).unwrap();
        assert!(gens.iter().any(|g| g.word == w(&d, "t s r t s r")));
        for g in &gens {
            assert!(verify_centralizes(&d, 0, &g.word).unwrap());
        }
    }

    #[test]
    fn centralizing_checks() {
        let d = Diagram::from_edges(&["s", "t"], &[("s", "t", 3)]).unwrap();
        assert!(verify_centralizes(&d, 0, &w(&d, "s")).unwrap());
        assert!(!verify_centralizes(&d, 0, &w(&d, "t")).unwrap());
        let d = Diagram::from_edges(&["s", "t"], &[("s", "t", 2)]).unwrap();
        assert!(verify_centralizes(&d, 0, &w(&d, "t")).unwrap());
    }
}
