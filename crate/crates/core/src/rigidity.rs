//! Sufficient conditions for rigidity of two-dimensional Coxeter systems.
//!
//! Every flag here is a sufficiency verdict: `true` means the hypotheses of
//! the corresponding rigidity theorem hold, `false` only means they could not
//! be established. Nothing in this module ever concludes that a group is not
//! rigid.

use std::fmt;

use crate::diagram::{components, connectivity_profile, ConnectivityProfile, Diagram, Edge, Vertex};

/// Why some rigidity hypothesis failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Three vertices generating a finite subgroup.
    SphericalTriangle([Vertex; 3]),
    /// Two vertices in different components.
    Disconnected(Vertex, Vertex),
    CutVertex(Vertex),
    DisconnectingOddEdge(Edge),
    DisconnectingEvenEdge(Edge),
    /// Removing the 2-star of `s` separates `t1` from `t2`.
    SeparatingTwoStar {
        s: Vertex,
        t1: Vertex,
        t2: Vertex,
    },
    TooFewVertices(usize),
    /// Reflection independence was not assumed.
    IndependenceNotAssumed,
}

impl Witness {
    pub fn describe(&self, d: &Diagram) -> String {
        match self {
            Witness::SphericalTriangle(t) => {
                format!("spherical triangle {}", d.format_subset(t))
            }
            Witness::Disconnected(a, b) => {
                format!(
                    "disconnected: {} and {} lie in different components",
                    d.name(*a),
                    d.name(*b)
                )
            }
            Witness::CutVertex(v) => format!("cut vertex {}", d.name(*v)),
            Witness::DisconnectingOddEdge(e) => {
                format!("disconnecting odd edge {} {} {}", d.name(e.a), d.name(e.b), e.label)
            }
            Witness::DisconnectingEvenEdge(e) => {
                format!("disconnecting edge {} {} {}", d.name(e.a), d.name(e.b), e.label)
            }
            Witness::SeparatingTwoStar { s, t1, t2 } => format!(
                "removing the 2-star of {} separates {} from {}",
                d.name(*s),
                d.name(*t1),
                d.name(*t2)
            ),
            Witness::TooFewVertices(n) => format!("only {n} vertices"),
            Witness::IndependenceNotAssumed => "reflection independence not assumed".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub two_dimensional: bool,
    pub connectivity: ConnectivityProfile,
    /// Two-dimensional and odd-edge-connected.
    pub reflection_rigid: bool,
    /// Two-dimensional.
    pub reflection_rigid_up_to_twist: bool,
    /// Two-dimensional, edge-connected, at least three vertices, no separating
    /// 2-star, and reflection independence assumed by the caller.
    pub strongly_rigid_conditional: bool,
    pub witnesses: Vec<Witness>,
}

/// How a flag is reported to people.
pub struct Verdict(pub bool);

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 {
            "hypotheses hold"
        } else {
            "hypotheses not established"
        })
    }
}

/// Every vertex `s` whose 2-star separates the rest of the diagram, with
/// the least vertex of each of the first two remaining components.
pub fn two_star_separation_witnesses(d: &Diagram) -> Vec<(Vertex, Vertex, Vertex)> {
    let mut out = Vec::new();
    for s in d.vertices() {
        let mut alive = vec![true; d.len()];
        alive[s] = false;
        for t in d.vertices() {
            if d.label(s, t) == Some(2) {
                alive[t] = false;
            }
        }
        let comps = components(d, &alive);
        if comps.len() >= 2 {
            out.push((s, comps[0][0], comps[1][0]));
        }
    }
    out
}

fn spherical_triangle(d: &Diagram) -> Option<[Vertex; 3]> {
    d.spherical_subsets(3)
        .into_iter()
        .find(|t| t.len() == 3)
        .map(|t| [t[0], t[1], t[2]])
}

pub fn classify(d: &Diagram, assume_reflection_independent: bool) -> RigidityReport {
    let two_dimensional = d.is_two_dimensional();
    let connectivity = connectivity_profile(d);
    let separations = two_star_separation_witnesses(d);

    let reflection_rigid_up_to_twist = two_dimensional;
    let reflection_rigid = two_dimensional && connectivity.odd_edge_connected;
    let strongly_rigid_conditional = assume_reflection_independent
        && two_dimensional
        && d.len() >= 3
        && connectivity.edge_connected
        && separations.is_empty();

    let mut witnesses = Vec::new();
    if !two_dimensional {
        if let Some(t) = spherical_triangle(d) {
            witnesses.push(Witness::SphericalTriangle(t));
        }
    }
    if !reflection_rigid || !strongly_rigid_conditional {
        if !connectivity.connected {
            let comps = components(d, &vec![true; d.len()]);
            witnesses.push(Witness::Disconnected(comps[0][0], comps[1][0]));
        }
        witnesses.extend(connectivity.cut_vertices.iter().map(|&v| Witness::CutVertex(v)));
        witnesses.extend(
            connectivity
                .disconnecting_odd_edges
                .iter()
                .map(|&e| Witness::DisconnectingOddEdge(e)),
        );
    }
    if !strongly_rigid_conditional {
        witnesses.extend(
            connectivity
                .disconnecting_edges
                .iter()
                .filter(|e| e.label % 2 == 0)
                .map(|&e| Witness::DisconnectingEvenEdge(e)),
        );
        witnesses.extend(
            separations
                .iter()
                .map(|&(s, t1, t2)| Witness::SeparatingTwoStar { s, t1, t2 }),
        );
        if d.len() < 3 {
            witnesses.push(Witness::TooFewVertices(d.len()));
        }
        if !assume_reflection_independent {
            witnesses.push(Witness::IndependenceNotAssumed);
        }
    }

    RigidityReport {
        two_dimensional,
        connectivity,
        reflection_rigid,
        reflection_rigid_up_to_twist,
        strongly_rigid_conditional,
        witnesses,
    }
}
