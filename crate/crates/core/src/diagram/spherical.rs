//! Finiteness of standard parabolic subgroups.
//!
//! Rank ≤ 3 is decided directly from the labels. Higher rank goes through the
//! classification of finite Coxeter groups: every irreducible component of
//! the Coxeter graph (edges with label ≥ 3) must be one of the types below.

use std::fmt;

use super::{Diagram, Vertex};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Rank-two dihedral type with the given label.
    I2(u32),
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

pub(crate) fn is_spherical(d: &Diagram, subset: &[Vertex]) -> bool {
    let mut set = subset.to_vec();
    set.sort_unstable();
    set.dedup();
    match set.len() {
        0 | 1 => true,
        2 => d.adjacent(set[0], set[1]),
        3 => {
            let (Some(p), Some(q), Some(r)) = (
                d.label(set[0], set[1]),
                d.label(set[1], set[2]),
                d.label(set[0], set[2]),
            ) else {
                return false;
            };
            let (p, q, r) = (p as u64, q as u64, r as u64);
            // 1/p + 1/q + 1/r > 1
            q * r + p * r + p * q > p * q * r
        }
        _ => {
            for (i, &a) in set.iter().enumerate() {
                for &b in &set[i + 1..] {
                    if !d.adjacent(a, b) {
                        return false;
                    }
                }
            }
            coxeter_components(d, &set)
                .iter()
                .all(|comp| classify_component(d, comp).is_some())
        }
    }
}

/// Type of the parabolic on `subset` when it is finite and irreducible.
pub fn finite_type(d: &Diagram, subset: &[Vertex]) -> Option<FiniteType> {
    let mut set = subset.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || !is_spherical(d, &set) {
        return None;
    }
    let comps = coxeter_components(d, &set);
    if comps.len() != 1 {
        return None;
    }
    classify_component(d, &comps[0])
}

/// Components of the graph on `set` whose edges are the labels ≥ 3.
fn coxeter_components(d: &Diagram, set: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; set.len()];
    let mut comps = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(i) = stack.pop() {
            comp.push(set[i]);
            for j in 0..set.len() {
                if !seen[j] && d.label(set[i], set[j]).is_some_and(|m| m >= 3) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn classify_component(d: &Diagram, comp: &[Vertex]) -> Option<FiniteType> {
    let k = comp.len();
    let bond = |a: Vertex, b: Vertex| d.label(a, b).filter(|&m| m >= 3);
    match k {
        1 => return Some(FiniteType::A(1)),
        2 => return Some(FiniteType::I2(bond(comp[0], comp[1])?)),
        _ => {}
    }
    let neighbors = |v: Vertex| -> Vec<Vertex> {
        comp.iter()
            .copied()
            .filter(|&u| u != v && bond(v, u).is_some())
            .collect()
    };
    let edge_count: usize = comp.iter().map(|&v| neighbors(v).len()).sum::<usize>() / 2;
    if edge_count != k - 1 {
        return None;
    }
    let degree = |v: Vertex| neighbors(v).len();
    if comp.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let branch: Vec<Vertex> = comp.iter().copied().filter(|&v| degree(v) == 3).collect();
    match branch.len() {
        0 => {
            let end = *comp.iter().find(|&&v| degree(v) == 1)?;
            let mut labels = Vec::with_capacity(k - 1);
            let (mut prev, mut cur) = (usize::MAX, end);
            loop {
                let next = neighbors(cur).into_iter().find(|&u| u != prev);
                match next {
                    Some(n) => {
                        labels.push(bond(cur, n)?);
                        prev = cur;
                        cur = n;
                    }
                    None => break,
                }
            }
            if labels.first() > labels.last() {
                labels.reverse();
            }
            // labels now read from the end carrying the larger label last
            let non_three: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, m)| m != 3).collect();
            let last = labels.len() - 1;
            match non_three.as_slice() {
                [] => Some(FiniteType::A(k)),
                [(i, 4)] if *i == last => Some(FiniteType::B(k)),
                [(1, 4)] if k == 4 => Some(FiniteType::F4),
                [(i, 5)] if *i == last && (k == 3 || k == 4) => Some(FiniteType::H(k)),
                _ => None,
            }
        }
        1 => {
            let center = branch[0];
            let all_simple = comp
                .iter()
                .all(|&v| neighbors(v).iter().all(|&u| bond(v, u) == Some(3)));
            if !all_simple {
                return None;
            }
            let mut arms: Vec<usize> = neighbors(center)
                .into_iter()
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (center, first, 1);
                    while let Some(n) = neighbors(cur).into_iter().find(|&u| u != prev) {
                        prev = cur;
                        cur = n;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(FiniteType::D(k)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(FiniteType::E(k)),
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[u32]) -> Diagram {
        let n = labels.len() + 1;
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut d = Diagram::new(&names).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                d.set_label(a, b, Some(2));
            }
        }
        for (i, &m) in labels.iter().enumerate() {
            d.set_label(i, i + 1, Some(m));
        }
        d
    }

    fn all(d: &Diagram) -> Vec<Vertex> {
        d.vertices().collect()
    }

    #[test]
    fn classifies_paths() {
        let cases: Vec<(Vec<u32>, Option<FiniteType>)> = vec![
            (vec![3, 3, 3], Some(FiniteType::A(4))),
            (vec![4, 3, 3], Some(FiniteType::B(4))),
            (vec![3, 3, 4], Some(FiniteType::B(4))),
            (vec![3, 4, 3], Some(FiniteType::F4)),
            (vec![5, 3, 3], Some(FiniteType::H(4))),
            (vec![3, 3, 5], Some(FiniteType::H(4))),
            (vec![5, 3], Some(FiniteType::H(3))),
            (vec![4, 4], None),
            (vec![3, 5, 3], None),
            (vec![5, 3, 3, 3], None),
            (vec![4, 3, 4], None),
            (vec![3, 6], None),
        ];
        for (labels, want) in cases {
            let d = path(&labels);
            assert_eq!(finite_type(&d, &all(&d)), want, "{labels:?}");
            assert_eq!(is_spherical(&d, &all(&d)), want.is_some(), "{labels:?}");
        }
    }

    #[test]
    fn classifies_branched_trees() {
        // centre 0 with arms of the given lengths, all labels 3
        let star = |arms: &[usize]| {
            let n = 1 + arms.iter().sum::<usize>();
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut d = Diagram::new(&names).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    d.set_label(a, b, Some(2));
                }
            }
            let mut next = 1;
            for &len in arms {
                let mut prev = 0;
                for _ in 0..len {
                    d.set_label(prev, next, Some(3));
                    prev = next;
                    next += 1;
                }
            }
            d
        };
        let cases: Vec<(Vec<usize>, Option<FiniteType>)> = vec![
            (vec![1, 1, 1], Some(FiniteType::D(4))),
            (vec![1, 1, 3], Some(FiniteType::D(6))),
            (vec![1, 2, 2], Some(FiniteType::E(6))),
            (vec![1, 2, 3], Some(FiniteType::E(7))),
            (vec![1, 2, 4], Some(FiniteType::E(8))),
            (vec![1, 2, 5], None),
            (vec![2, 2, 2], None),
            (vec![1, 1, 1, 1], None),
        ];
        for (arms, want) in cases {
            let d = star(&arms);
            assert_eq!(finite_type(&d, &all(&d)), want, "{arms:?}");
        }
    }

    #[test]
    fn reducible_and_infinite_sets() {
        // A2 x A2 is finite but not irreducible
        let d = Diagram::from_edges(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 3),
                ("c", "d", 3),
                ("a", "c", 2),
                ("a", "d", 2),
                ("b", "c", 2),
                ("b", "d", 2),
            ],
        )
        .unwrap();
        assert!(is_spherical(&d, &[0, 1, 2, 3]));
        assert_eq!(finite_type(&d, &[0, 1, 2, 3]), None);
        // a missing pair means infinite order
        let mut e = d.clone();
        e.set_label(0, 3, None);
        assert!(!is_spherical(&e, &[0, 1, 2, 3]));
        // cycle of 3's
        let c = Diagram::from_edges(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("c", "d", 3),
                ("d", "a", 3),
                ("a", "c", 2),
                ("b", "d", 2),
            ],
        )
        .unwrap();
        assert!(!is_spherical(&c, &[0, 1, 2, 3]));
    }

    #[test]
    fn rank_three_formula() {
        let tri = |p: u32, q: u32, r: u32| {
            Diagram::from_edges(&["a", "b", "c"], &[("a", "b", p), ("b", "c", q), ("a", "c", r)]).unwrap()
        };
        assert!(is_spherical(&tri(2, 3, 5), &[0, 1, 2]));
        assert!(is_spherical(&tri(2, 2, 100), &[0, 1, 2]));
        assert!(!is_spherical(&tri(2, 3, 6), &[0, 1, 2]));
        assert!(!is_spherical(&tri(2, 4, 4), &[0, 1, 2]));
        assert!(!is_spherical(&tri(3, 3, 3), &[0, 1, 2]));
        assert_eq!(finite_type(&tri(2, 3, 5), &[0, 1, 2]), Some(FiniteType::H(3)));
    }
}
