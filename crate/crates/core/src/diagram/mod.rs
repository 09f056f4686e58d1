//! Coxeter diagrams: edge-labelled graphs on the generating set.
//!
//! A pair of generators with no edge generates an infinite dihedral group;
//! there is no explicit infinity label anywhere in the data model.

mod canonical;
mod circuits;
mod connectivity;
mod spherical;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm, DEFAULT_CANONICAL_CAP};
pub use circuits::achordal_circuits;
pub(crate) use connectivity::components;
pub use connectivity::{connectivity_profile, ConnectivityProfile};
pub use spherical::{finite_type, FiniteType};

use std::fmt;

use crate::error::{CoxError, Result};

/// Index of a generator inside its diagram (declaration order).
pub type Vertex = usize;

/// A validated generator name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(String);

impl GeneratorId {
    pub fn new(name: &str) -> Result<Self> {
        let ok = !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
        if ok {
            Ok(GeneratorId(name.to_string()))
        } else {
            Err(CoxError::InvalidName(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite-label edge, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: Vertex,
    pub b: Vertex,
    pub label: u32,
}

/// Coxeter diagram. Vertices keep their declaration order, which is also the
/// order used for every tie-break in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    names: Vec<GeneratorId>,
    // row-major n*n; 0 means no edge
    labels: Vec<u32>,
}

impl Diagram {
    /// Diagram with the given vertices and no edges.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut ids: Vec<GeneratorId> = Vec::with_capacity(names.len());
        for name in names {
            let id = GeneratorId::new(name.as_ref())?;
            if ids.contains(&id) {
                return Err(CoxError::DuplicateVertex { line: 0, name: id.0 });
            }
            ids.push(id);
        }
        let n = ids.len();
        Ok(Diagram {
            names: ids,
            labels: vec![0; n * n],
        })
    }

    /// Convenience constructor used throughout the tests and examples.
    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(&str, &str, u32)]) -> Result<Self> {
        let mut d = Diagram::new(names)?;
        for &(a, b, m) in edges {
            let (i, j) = (d.vertex(a)?, d.vertex(b)?);
            if i == j {
                return Err(CoxError::Syntax {
                    line: 0,
                    message: format!("self-loop on `{a}`"),
                });
            }
            if d.label(i, j).is_some() {
                return Err(CoxError::DuplicateEdge {
                    line: 0,
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
            if m < 2 {
                return Err(CoxError::LabelTooSmall {
                    line: 0,
                    a: a.to_string(),
                    b: b.to_string(),
                    label: m as u64,
                });
            }
            d.set_label(i, j, Some(m));
        }
        Ok(d)
    }

    pub(crate) fn from_parts(names: Vec<GeneratorId>, labels: Vec<u32>) -> Self {
        debug_assert_eq!(labels.len(), names.len() * names.len());
        Diagram { names, labels }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[GeneratorId] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        self.names[v].as_str()
    }

    /// Looks a vertex up by name.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.names
            .iter()
            .position(|id| id.as_str() == name)
            .ok_or_else(|| CoxError::UnknownVertex(name.to_string()))
    }

    pub fn vertices_of(&self, names: &[&str]) -> Result<Vec<Vertex>> {
        names.iter().map(|n| self.vertex(n)).collect()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(CoxError::UnknownVertex(format!("#{v}")))
        }
    }

    pub(crate) fn check_subset(&self, subset: &[Vertex]) -> Result<()> {
        subset.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// The label `m(a, b)`, or `None` when the product has infinite order.
    /// Diagonal entries are `None`.
    #[inline]
    pub fn label(&self, a: Vertex, b: Vertex) -> Option<u32> {
        match self.labels[a * self.names.len() + b] {
            0 => None,
            m => Some(m),
        }
    }

    #[inline]
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.labels[a * self.names.len() + b] != 0
    }

    pub(crate) fn set_label(&mut self, a: Vertex, b: Vertex, m: Option<u32>) {
        let n = self.names.len();
        let m = m.unwrap_or(0);
        self.labels[a * n + b] = m;
        self.labels[b * n + a] = m;
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(move |&u| self.adjacent(v, u))
    }

    /// All edges sorted by `(a, b)`.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if let Some(label) = self.label(a, b) {
                    out.push(Edge { a, b, label });
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.labels.iter().filter(|&&m| m != 0).count() / 2
    }

    /// Sorted multiset of edge labels.
    pub fn label_multiset(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self.edges().iter().map(|e| e.label).collect();
        labels.sort_unstable();
        labels
    }

    /// Full subdiagram on `subset`, keeping declaration order.
    pub fn induced_subdiagram(&self, subset: &[Vertex]) -> Result<Diagram> {
        self.check_subset(subset)?;
        let mut keep: Vec<Vertex> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let k = keep.len();
        let mut labels = vec![0; k * k];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                labels[i * k + j] = self.labels[a * self.len() + b];
            }
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        Ok(Diagram::from_parts(names, labels))
    }

    /// The diagram with every even-labelled edge removed.
    pub fn odd_subdiagram(&self) -> Diagram {
        let labels = self.labels.iter().map(|&m| if m % 2 == 1 { m } else { 0 }).collect();
        Diagram::from_parts(self.names.clone(), labels)
    }

    /// `{s}` together with every vertex joined to `s` by an edge labelled 2.
    pub fn two_star(&self, s: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(s)?;
        Ok(self
            .vertices()
            .filter(|&t| t == s || self.label(s, t) == Some(2))
            .collect())
    }

    /// Whether the standard parabolic subgroup on `subset` is finite.
    pub fn is_spherical(&self, subset: &[Vertex]) -> Result<bool> {
        self.check_subset(subset)?;
        Ok(spherical::is_spherical(self, subset))
    }

    /// True iff no three distinct generators generate a finite subgroup.
    pub fn is_two_dimensional(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                if !self.adjacent(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if spherical::is_spherical(self, &[a, b, c]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every spherical subset (including the empty set), each sorted.
    pub fn spherical_subsets(&self, max_rank: usize) -> Vec<Vec<Vertex>> {
        let mut all = vec![Vec::new()];
        let mut layer: Vec<Vec<Vertex>> = vec![Vec::new()];
        for _ in 0..max_rank {
            let mut next = Vec::new();
            for set in &layer {
                let start = set.last().map_or(0, |&v| v + 1);
                for v in start..self.len() {
                    // spherical subsets are cliques
                    if set.iter().any(|&u| !self.adjacent(u, v)) {
                        continue;
                    }
                    let mut bigger = set.clone();
                    bigger.push(v);
                    if spherical::is_spherical(self, &bigger) {
                        next.push(bigger);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    /// Spherical subsets not properly contained in another spherical subset.
    pub fn maximal_spherical_simplices(&self) -> Vec<Vec<Vertex>> {
        let all = self.spherical_subsets(self.len());
        let is_subset = |small: &[Vertex], big: &[Vertex]| small.iter().all(|v| big.contains(v));
        let mut out: Vec<Vec<Vertex>> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect();
        out.sort();
        // the empty set only survives for the empty diagram
        out.retain(|s| !s.is_empty());
        out
    }

    pub fn format_subset(&self, subset: &[Vertex]) -> String {
        subset.iter().map(|&v| self.name(v)).collect::<Vec<_>>().join(" ")
    }

    /// Serialized text form; see [`Diagram::parse`].
    pub fn serialize(&self) -> String {
        let mut out = String::from("gens:");
        for name in &self.names {
            out.push(' ');
            out.push_str(name.as_str());
        }
        out.push('\n');
        for e in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", self.name(e.a), self.name(e.b), e.label));
        }
        out
    }

    /// Parses the line-oriented diagram format:
    ///
    /// ```text
    /// # comment
    /// gens: s t u
    /// edge s t 3
    /// edge t u 2
    /// ```
    ///
    /// Pairs without an `edge` line have infinite order.
    pub fn parse(text: &str) -> Result<Diagram> {
        let mut diagram: Option<Diagram> = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("gens:") {
                if diagram.is_some() {
                    return Err(syntax(line, "second `gens:` line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                diagram = Some(Diagram::new(&names).map_err(|e| match e {
                    CoxError::DuplicateVertex { name, .. } => CoxError::DuplicateVertex { line, name },
                    CoxError::InvalidName(name) => syntax(line, &format!("invalid generator name `{name}`")),
                    other => other,
                })?);
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens[0] != "edge" {
                return Err(syntax(line, &format!("unexpected `{}`", tokens[0])));
            }
            let d = diagram
                .as_mut()
                .ok_or_else(|| syntax(line, "`edge` before the `gens:` line"))?;
            if tokens.len() != 4 {
                return Err(syntax(line, "expected `edge <a> <b> <m>`"));
            }
            let (a, b) = (tokens[1], tokens[2]);
            let label: u64 = tokens[3]
                .parse()
                .map_err(|_| syntax(line, &format!("bad label `{}`", tokens[3])))?;
            let undeclared = |name: &str| CoxError::UndeclaredVertex {
                line,
                name: name.to_string(),
            };
            let i = d.vertex(a).map_err(|_| undeclared(a))?;
            let j = d.vertex(b).map_err(|_| undeclared(b))?;
            if i == j {
                return Err(syntax(line, &format!("self-loop on `{a}`")));
            }
            if label < 2 {
                return Err(CoxError::LabelTooSmall {
                    line,
                    a: a.to_string(),
                    b: b.to_string(),
                    label,
                });
            }
            let label = u32::try_from(label).map_err(|_| syntax(line, "label too large"))?;
            if d.adjacent(i, j) {
                return Err(CoxError::DuplicateEdge {
                    line,
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
            d.set_label(i, j, Some(label));
        }
        diagram.ok_or_else(|| syntax(last_line.max(1), "missing `gens:` line"))
    }
}

fn syntax(line: usize, message: &str) -> CoxError {
    CoxError::Syntax {
        line,
        message: message.to_string(),
    }
}

impl std::str::FromStr for Diagram {
    type Err = CoxError;

    fn from_str(s: &str) -> Result<Self> {
        Diagram::parse(s)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    #[test]
    fn parse_single_edge() {
        let d = Diagram::parse("gens: s t\nedge s t 3").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.edges(), vec![Edge { a: 0, b: 1, label: 3 }]);
    }

    #[test]
    fn parse_rejects_label_one() {
        let err = Diagram::parse("gens: s t\nedge s t 1").unwrap_err();
        assert!(matches!(err, CoxError::LabelTooSmall { line: 2, label: 1, .. }));
    }

    #[test]
    fn parse_triangle() {
        let d = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        assert_eq!(d.label_multiset(), vec![2, 2, 3]);
        assert_eq!(d.label(0, 2), Some(3));
        assert_eq!(d.label(2, 0), Some(3));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let cases = [
            (
                "gens: s s",
                CoxError::DuplicateVertex {
                    line: 1,
                    name: "s".into(),
                },
            ),
            (
                "# c\ngens: s t\nedge s t 3\nedge t s 4",
                CoxError::DuplicateEdge {
                    line: 4,
                    a: "t".into(),
                    b: "s".into(),
                },
            ),
            (
                "gens: s t\n\nedge s x 3",
                CoxError::UndeclaredVertex {
                    line: 3,
                    name: "x".into(),
                },
            ),
        ];
        for (text, want) in cases {
            assert_eq!(Diagram::parse(text).unwrap_err(), want, "{text:?}");
        }
        for text in [
            "",
            "edge s t 3",
            "gens: s t\nedge s t",
            "gens: s t\nedge s t x",
            "gens: a\ngens: b",
            "gens: s t\nfoo",
            "gens: s\nedge s s 3",
            "gens: s-t",
        ] {
            assert!(matches!(Diagram::parse(text), Err(CoxError::Syntax { .. })), "{text:?}");
        }
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(Diagram::new::<&str>(&[]).unwrap().serialize(), "gens:\n");
        let edge = Diagram::from_edges(&["s", "t"], &[("s", "t", 3)]).unwrap();
        assert_eq!(edge.serialize(), "gens: s t\nedge s t 3\n");
        let tri = Diagram::parse("gens: s t u\nedge t u 2\nedge s u 3\nedge s t 2").unwrap();
        assert_eq!(tri.serialize(), "gens: s t u\nedge s t 2\nedge s u 3\nedge t u 2\n");
        assert_eq!(Diagram::parse(&tri.serialize()).unwrap(), tri);
    }

    #[test]
    fn names_allow_primes_and_underscores() {
        let d = Diagram::parse("gens: s' t_1 U2").unwrap();
        assert_eq!(d.vertex("s'").unwrap(), 0);
        assert_eq!(d.vertex("t_1").unwrap(), 1);
    }

    #[test]
    fn induced_subdiagrams() {
        let tri = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        let st = tri.induced_subdiagram(&[0, 1]).unwrap();
        assert_eq!(st.serialize(), "gens: s t\nedge s t 2\n");
        assert!(tri.induced_subdiagram(&[]).unwrap().is_empty());
        assert!(tri.induced_subdiagram(&[7]).is_err());

        let pentagon = pentagon();
        let path = pentagon.induced_subdiagram(&[0, 1, 2]).unwrap();
        assert_eq!(path.edge_count(), 2);
    }

    #[test]
    fn odd_subdiagrams() {
        let even = Diagram::from_edges(&["s", "t"], &[("s", "t", 4)]).unwrap();
        assert_eq!(even.odd_subdiagram().edge_count(), 0);
        let odd = Diagram::from_edges(&["s", "t"], &[("s", "t", 3)]).unwrap();
        assert_eq!(odd.odd_subdiagram(), odd);
        let affine = Diagram::from_edges(&["a", "b", "c"], &[("a", "b", 2), ("b", "c", 3), ("a", "c", 6)]).unwrap();
        let o = affine.odd_subdiagram();
        assert_eq!(o.edges(), vec![Edge { a: 1, b: 2, label: 3 }]);
        assert_eq!(o.neighbors(0).count(), 0);
    }

    #[test]
    fn two_stars() {
        let p = pentagon();
        for s in p.vertices() {
            assert_eq!(p.two_star(s).unwrap(), vec![s]);
        }
        let tri = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        assert_eq!(tri.two_star(1).unwrap(), vec![0, 1, 2]);
        let e = Diagram::from_edges(&["s", "t"], &[("s", "t", 2)]).unwrap();
        assert_eq!(e.two_star(0).unwrap(), vec![0, 1]);
        assert!(e.two_star(5).is_err());
    }

    #[test]
    fn sphericality_examples() {
        let e6 = Diagram::from_edges(&["s", "t"], &[("s", "t", 6)]).unwrap();
        assert!(e6.is_spherical(&[0, 1]).unwrap());
        let t333 = Diagram::from_edges(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap();
        assert!(!t333.is_spherical(&[0, 1, 2]).unwrap());
        let t223 = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        assert!(t223.is_spherical(&[0, 1, 2]).unwrap());
        assert!(t223.is_spherical(&[]).unwrap());
        assert!(t223.is_spherical(&[9]).is_err());
    }

    #[test]
    fn two_dimensionality_examples() {
        assert!(pentagon().is_two_dimensional());
        let t223 = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        assert!(!t223.is_two_dimensional());
        let t244 = Diagram::from_edges(&["a", "b", "c"], &[("a", "b", 2), ("b", "c", 4), ("a", "c", 4)]).unwrap();
        assert!(t244.is_two_dimensional());
    }

    #[test]
    fn maximal_simplices() {
        let p = pentagon();
        let simplices = p.maximal_spherical_simplices();
        assert_eq!(simplices.len(), 5);
        assert!(simplices.iter().all(|s| s.len() == 2));

        let two = Diagram::new(&["a", "b"]).unwrap();
        assert_eq!(two.maximal_spherical_simplices(), vec![vec![0], vec![1]]);

        let t223 = Diagram::parse("gens: s t u\nedge s t 2\nedge t u 2\nedge s u 3").unwrap();
        assert_eq!(t223.maximal_spherical_simplices(), vec![vec![0, 1, 2]]);

        assert!(Diagram::new::<&str>(&[])
            .unwrap()
            .maximal_spherical_simplices()
            .is_empty());
    }

    pub(crate) fn pentagon() -> Diagram {
        Diagram::from_edges(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 5),
                ("b", "c", 5),
                ("c", "d", 5),
                ("d", "e", 5),
                ("e", "a", 5),
            ],
        )
        .unwrap()
    }
}
