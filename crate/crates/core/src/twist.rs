//! Diagram twisting.
//!
//! A twist is given by disjoint vertex sets `T` and `U` with `U` spherical,
//! such that every vertex outside `T ∪ U` that touches `T` is joined to all of
//! `U` by edges labelled 2. It redirects each edge `[t u]` (`t ∈ T`, `u ∈ U`)
//! to `[t σ(u)]`, where `σ(u) = Δ_U u Δ_U`, and replaces each generator
//! `t ∈ T` by `Δ_U t Δ_U`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::diagram::{canonical_form, components, CanonicalForm, Diagram, Vertex, DEFAULT_CANONICAL_CAP};
use crate::error::{CoxError, Result};
use crate::words::{Reducer, Word, DEFAULT_STATE_CAP};

/// Limits for twist enumeration and verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistConfig {
    /// Braid-orbit cap for every word computation.
    pub state_cap: usize,
    /// Largest spherical `U` considered on diagrams that are not
    /// two-dimensional (two-dimensional diagrams only have rank ≤ 2).
    pub max_pivot_rank: usize,
    /// Maximum number of moves `legal_twists` may produce.
    pub move_cap: usize,
    pub canonical_cap: usize,
    /// Non-edges are checked for `(x'y')^n ≠ 1` with `n` up to this bound.
    pub nonedge_bound: usize,
}

impl Default for TwistConfig {
    fn default() -> Self {
        TwistConfig {
            state_cap: DEFAULT_STATE_CAP,
            max_pivot_rank: 3,
            move_cap: 100_000,
            canonical_cap: DEFAULT_CANONICAL_CAP,
            nonedge_bound: 10,
        }
    }
}

/// A twist `(T, U, σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistMove {
    /// The twisted set `T`, sorted.
    pub twisted: Vec<Vertex>,
    /// The spherical set `U`, sorted.
    pub pivot: Vec<Vertex>,
    /// Conjugation action of `Δ_U` on `U`.
    pub sigma: BTreeMap<Vertex, Vertex>,
}

impl TwistMove {
    pub fn describe(&self, d: &Diagram) -> String {
        let sigma: Vec<String> = self
            .sigma
            .iter()
            .filter(|(a, b)| a != b)
            .map(|(&a, &b)| format!("{}->{}", d.name(a), d.name(b)))
            .collect();
        format!(
            "T={{{}}} U={{{}}} sigma=[{}]",
            d.format_subset(&self.twisted),
            d.format_subset(&self.pivot),
            sigma.join(" ")
        )
    }
}

/// Vertices outside `pivot` joined to every vertex of `pivot` by label 2.
fn label_two_neighbours(d: &Diagram, pivot: &[Vertex]) -> Vec<Vertex> {
    d.vertices()
        .filter(|v| !pivot.contains(v))
        .filter(|&v| pivot.iter().all(|&u| d.label(v, u) == Some(2)))
        .collect()
}

/// Checks disjointness, sphericality of `U`, the label-2 condition, and that
/// `σ` is an involutive permutation of `U`. Does not compare `σ` with `Δ_U`.
pub fn check_structure(d: &Diagram, mv: &TwistMove) -> Result<()> {
    d.check_subset(&mv.twisted)?;
    d.check_subset(&mv.pivot)?;
    if mv.twisted.iter().any(|t| mv.pivot.contains(t)) {
        return Err(CoxError::IllegalMove("T and U intersect".into()));
    }
    if !d.is_spherical(&mv.pivot)? {
        return Err(CoxError::IllegalMove(format!(
            "U = {{{}}} is not spherical",
            d.format_subset(&mv.pivot)
        )));
    }
    let z = label_two_neighbours(d, &mv.pivot);
    for v in d.vertices() {
        if mv.twisted.contains(&v) || mv.pivot.contains(&v) || z.contains(&v) {
            continue;
        }
        if let Some(&t) = mv.twisted.iter().find(|&&t| d.adjacent(t, v)) {
            return Err(CoxError::IllegalMove(format!(
                "{} is adjacent to {} in T but not joined to all of U by label 2",
                d.name(v),
                d.name(t)
            )));
        }
    }
    let keys: Vec<Vertex> = mv.sigma.keys().copied().collect();
    let mut values: Vec<Vertex> = mv.sigma.values().copied().collect();
    values.sort_unstable();
    if keys != mv.pivot || values != mv.pivot {
        return Err(CoxError::IllegalMove("sigma is not a permutation of U".into()));
    }
    if mv.sigma.iter().any(|(a, b)| mv.sigma[b] != *a) {
        return Err(CoxError::IllegalMove("sigma is not an involution".into()));
    }
    Ok(())
}

/// Full legality: structure plus `σ` equal to conjugation by `Δ_U`.
pub fn check_legal(d: &Diagram, mv: &TwistMove, state_cap: usize) -> Result<()> {
    check_structure(d, mv)?;
    let sigma = Reducer::with_cap(d, state_cap).delta_conjugation(&mv.pivot)?;
    if sigma != mv.sigma {
        return Err(CoxError::IllegalMove(
            "sigma differs from conjugation by the longest element of U".into(),
        ));
    }
    Ok(())
}

/// Rewrites the `T`–`U` edges by `σ` without checking `σ` against `Δ_U`.
pub fn apply_twist_unchecked(d: &Diagram, mv: &TwistMove) -> Result<Diagram> {
    check_structure(d, mv)?;
    let mut out = d.clone();
    for &t in &mv.twisted {
        for &u in &mv.pivot {
            out.set_label(t, u, None);
        }
    }
    for &t in &mv.twisted {
        for &u in &mv.pivot {
            if let Some(m) = d.label(t, u) {
                let target = mv.sigma[&u];
                if out.adjacent(t, target) {
                    return Err(CoxError::Internal(format!(
                        "twist collides on edge {}-{}",
                        d.name(t),
                        d.name(target)
                    )));
                }
                out.set_label(t, target, Some(m));
            }
        }
    }
    Ok(out)
}

pub fn apply_twist(d: &Diagram, mv: &TwistMove) -> Result<Diagram> {
    check_legal(d, mv, DEFAULT_STATE_CAP)?;
    apply_twist_unchecked(d, mv)
}

/// All twists that change the diagram.
pub fn legal_twists(d: &Diagram, config: &TwistConfig) -> Result<Vec<TwistMove>> {
    let reducer = Reducer::with_cap(d, config.state_cap);
    let max_rank = if d.is_two_dimensional() {
        2
    } else {
        config.max_pivot_rank
    };
    let mut moves = Vec::new();
    for pivot in d.spherical_subsets(max_rank) {
        if pivot.len() < 2 {
            continue;
        }
        let sigma = reducer.delta_conjugation(&pivot)?;
        if sigma.iter().all(|(a, b)| a == b) {
            continue;
        }
        let z = label_two_neighbours(d, &pivot);
        let alive: Vec<bool> = d.vertices().map(|v| !pivot.contains(&v) && !z.contains(&v)).collect();
        let comps = components(d, &alive);
        if comps.len() >= usize::BITS as usize - 1 || (1usize << comps.len()) > config.move_cap {
            return Err(CoxError::MoveCapExceeded { cap: config.move_cap });
        }
        for mask in 1usize..(1 << comps.len()) {
            let mut twisted: Vec<Vertex> = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            twisted.sort_unstable();
            // skip unless some T–U edge actually moves
            let moves_edge = twisted
                .iter()
                .any(|&t| pivot.iter().any(|&u| d.label(t, u) != d.label(t, sigma[&u])));
            if !moves_edge {
                continue;
            }
            if moves.len() >= config.move_cap {
                return Err(CoxError::MoveCapExceeded { cap: config.move_cap });
            }
            moves.push(TwistMove {
                twisted,
                pivot: pivot.clone(),
                sigma: sigma.clone(),
            });
        }
    }
    Ok(moves)
}

/// New generators `t ↦ Δ_U t Δ_U` for `t ∈ T`, as normal forms over the old
/// generators.
pub fn twisted_generators(d: &Diagram, mv: &TwistMove) -> Result<BTreeMap<Vertex, Word>> {
    check_legal(d, mv, DEFAULT_STATE_CAP)?;
    twisted_words(&Reducer::new(d), mv)
}

fn twisted_words(r: &Reducer<'_>, mv: &TwistMove) -> Result<BTreeMap<Vertex, Word>> {
    let delta = r.longest_element(&mv.pivot)?;
    mv.twisted
        .iter()
        .map(|&t| Ok((t, r.reduce(&delta.conjugate(&Word::letter(t)))?)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// The word computation hit the state cap.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub pair: (Vertex, Vertex),
    pub label: u32,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedCheck {
    pub pair: (Vertex, Vertex),
    pub bound: usize,
    pub outcome: CheckOutcome,
}

/// Per-pair results of checking that the twisted generators satisfy the
/// relations of the twisted diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistVerification {
    pub relation_checks: Vec<RelationCheck>,
    pub bounded_infinite_checks: Vec<BoundedCheck>,
}

impl TwistVerification {
    pub fn passed(&self) -> bool {
        self.relation_checks.iter().all(|c| c.outcome == CheckOutcome::Pass)
    }

    pub fn nonedges_passed(&self) -> bool {
        self.bounded_infinite_checks
            .iter()
            .all(|c| c.outcome == CheckOutcome::Pass)
    }
}

/// Checks the twisted generating set against the twisted diagram: for every
/// edge `[x y]` labelled `m`, `x'y'` has order exactly `m`; for every
/// non-edge, `(x'y')^n ≠ 1` for `1 ≤ n ≤ nonedge_bound`.
///
/// The diagram side uses `mv.sigma` as given, while the generators come from
/// `Δ_U`; a wrong `σ` therefore shows up as failed checks.
pub fn verify_twist(d: &Diagram, mv: &TwistMove, config: &TwistConfig) -> Result<TwistVerification> {
    let twisted_diagram = apply_twist_unchecked(d, mv)?;
    let r = Reducer::with_cap(d, config.state_cap);
    let mut gens: Vec<Word> = d.vertices().map(Word::letter).collect();
    for (t, word) in twisted_words(&r, mv)? {
        gens[t] = word;
    }
    let mut relation_checks = Vec::new();
    let mut bounded_infinite_checks = Vec::new();
    for x in d.vertices() {
        for y in x + 1..d.len() {
            let product = gens[x].then(&gens[y]);
            match twisted_diagram.label(x, y) {
                Some(m) => {
                    let outcome = first_trivial_power(&r, &product, m as usize).map(|k| {
                        if k == Some(m as usize) {
                            CheckOutcome::Pass
                        } else {
                            CheckOutcome::Fail
                        }
                    });
                    relation_checks.push(RelationCheck {
                        pair: (x, y),
                        label: m,
                        outcome: outcome.unwrap_or(CheckOutcome::Indeterminate),
                    });
                }
                None => {
                    let outcome = first_trivial_power(&r, &product, config.nonedge_bound).map(|k| {
                        if k.is_none() {
                            CheckOutcome::Pass
                        } else {
                            CheckOutcome::Fail
                        }
                    });
                    bounded_infinite_checks.push(BoundedCheck {
                        pair: (x, y),
                        bound: config.nonedge_bound,
                        outcome: outcome.unwrap_or(CheckOutcome::Indeterminate),
                    });
                }
            }
        }
    }
    Ok(TwistVerification {
        relation_checks,
        bounded_infinite_checks,
    })
}

/// Smallest `1 ≤ k ≤ bound` with `w^k = 1`, if any.
fn first_trivial_power(r: &Reducer<'_>, w: &Word, bound: usize) -> Result<Option<usize>> {
    let base = r.geodesic(w)?;
    let mut acc: Vec<Vertex> = Vec::new();
    for k in 1..=bound {
        acc = r.geodesic_times(&acc, &base)?;
        if acc.is_empty() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The closure of a diagram under twisting, keyed by canonical form.
#[derive(Clone, Debug)]
pub struct TwistClass {
    /// One representative diagram per canonical form.
    pub members: BTreeMap<CanonicalForm, Diagram>,
}

impl TwistClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.contains_key(form)
    }
}

/// Breadth-first search over twists from `d`, stopping early once `stop`
/// returns true for a newly reached canonical form.
fn explore(
    d: &Diagram,
    cap: usize,
    config: &TwistConfig,
    mut stop: impl FnMut(&CanonicalForm) -> bool,
) -> Result<(TwistClass, bool)> {
    let mut members = BTreeMap::new();
    let mut queue = VecDeque::new();
    let start = canonical_form(d, config.canonical_cap)?;
    let hit = stop(&start);
    members.insert(start, d.clone());
    if hit {
        return Ok((TwistClass { members }, true));
    }
    queue.push_back(d.clone());
    while let Some(current) = queue.pop_front() {
        for mv in legal_twists(&current, config)? {
            let next = apply_twist_unchecked(&current, &mv)?;
            let form = canonical_form(&next, config.canonical_cap)?;
            if members.contains_key(&form) {
                continue;
            }
            if members.len() >= cap {
                return Err(CoxError::ClassCapExceeded { cap });
            }
            let hit = stop(&form);
            members.insert(form, next.clone());
            if hit {
                return Ok((TwistClass { members }, true));
            }
            queue.push_back(next);
        }
    }
    Ok((TwistClass { members }, false))
}

pub fn twist_class(d: &Diagram, cap: usize, config: &TwistConfig) -> Result<TwistClass> {
    explore(d, cap, config, |_| false).map(|(class, _)| class)
}

/// Three-valued answer; `Unknown` means a cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    Unknown,
}

impl std::fmt::Display for Equivalence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Equivalence::Equivalent => "true",
            Equivalence::NotEquivalent => "false",
            Equivalence::Unknown => "unknown",
        })
    }
}

pub fn are_twist_equivalent(a: &Diagram, b: &Diagram, cap: usize, config: &TwistConfig) -> Result<Equivalence> {
    if a.len() != b.len() || a.label_multiset() != b.label_multiset() {
        return Ok(Equivalence::NotEquivalent);
    }
    let target = canonical_form(b, config.canonical_cap)?;
    match explore(a, cap, config, |f| *f == target) {
        Ok((_, true)) => Ok(Equivalence::Equivalent),
        Ok((_, false)) => Ok(Equivalence::NotEquivalent),
        Err(
            CoxError::ClassCapExceeded { .. } | CoxError::StateCapExceeded { .. } | CoxError::MoveCapExceeded { .. },
        ) => Ok(Equivalence::Unknown),
        Err(e) => Err(e),
    }
}

/// Vertices named in a set, for building moves by hand.
pub fn vertex_set(d: &Diagram, names: &[&str]) -> Result<Vec<Vertex>> {
    let set: BTreeSet<Vertex> = d.vertices_of(names)?.into_iter().collect();
    Ok(set.into_iter().collect())
}
