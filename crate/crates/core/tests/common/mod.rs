//! Oracles shared by the integration tests. None of them use the braid-move
//! machinery: group elements are matrices of the geometric representation,
//! where `B(e_i, e_j) = -cos(π / m_ij)` (and `-1` for a missing edge).
#![allow(dead_code)]

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::f64::consts::PI;

use coxtwist::{Diagram, Vertex};
use rand::Rng;

const EPS: f64 = 1e-7;

pub struct Geometric {
    n: usize,
    form: Vec<f64>,
}

pub type Matrix = Vec<f64>;

impl Geometric {
    pub fn new(d: &Diagram) -> Self {
        let n = d.len();
        let mut form = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                form[i * n + j] = if i == j {
                    1.0
                } else {
                    match d.label(i, j) {
                        Some(m) => -(PI / m as f64).cos(),
                        None => -1.0,
                    }
                };
            }
        }
        Geometric { n, form }
    }

    /// `v ↦ v − 2 B(e_s, v) e_s`
    pub fn reflect(&self, s: Vertex, v: &mut [f64]) {
        let b: f64 = (0..self.n).map(|j| self.form[s * self.n + j] * v[j]).sum();
        v[s] -= 2.0 * b;
    }

    pub fn identity(&self) -> Matrix {
        let mut m = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1.0;
        }
        m
    }

    /// Matrix of `w`, acting on column vectors.
    pub fn matrix(&self, w: &[Vertex]) -> Matrix {
        let mut m = self.identity();
        for &s in w {
            self.times_generator(&mut m, s);
        }
        m
    }

    /// `m ← m · s`
    pub fn times_generator(&self, m: &mut Matrix, s: Vertex) {
        let n = self.n;
        // s = I − 2 e_s B_s^T, so m·s = m − 2 (m e_s) B_s^T
        let col: Vec<f64> = (0..n).map(|i| m[i * n + s]).collect();
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] -= 2.0 * col[i] * self.form[s * n + j];
            }
        }
    }

    /// Whether `u` and `v` have the same matrix, up to a tolerance relative
    /// to the size of the entries (which grow exponentially in hyperbolic
    /// groups).
    pub fn same_element(&self, u: &[Vertex], v: &[Vertex]) -> bool {
        let (a, b) = (self.matrix(u), self.matrix(v));
        let scale = a.iter().chain(&b).fold(1.0f64, |acc, x| acc.max(x.abs()));
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-9 * scale)
    }

    /// `w = 1` iff its first half equals the inverse of its second half.
    pub fn is_identity(&self, w: &[Vertex]) -> bool {
        let (head, tail) = w.split_at(w.len() / 2);
        let back: Vec<Vertex> = tail.iter().rev().copied().collect();
        self.same_element(head, &back)
    }

    /// A word is reduced iff each letter `s_i` sends the prefix before it to a
    /// positive root: `s_1 ⋯ s_{i-1}(e_{s_i}) > 0`.
    pub fn is_reduced(&self, w: &[Vertex]) -> bool {
        for i in 0..w.len() {
            let mut v = vec![0.0; self.n];
            v[w[i]] = 1.0;
            for &s in w[..i].iter().rev() {
                self.reflect(s, &mut v);
            }
            if v.iter().any(|&x| x < -EPS) {
                return false;
            }
        }
        true
    }

    pub fn key(m: &Matrix) -> Vec<i64> {
        m.iter().map(|x| (x * 1e6).round() as i64).collect()
    }
}

/// Word lengths of every element within `depth` of the identity, by
/// breadth-first search of the Cayley graph.
pub struct CayleyOracle {
    geo: Geometric,
    lengths: HashMap<Vec<i64>, usize>,
    depth: usize,
}

impl CayleyOracle {
    pub fn new(d: &Diagram, depth: usize) -> Self {
        let geo = Geometric::new(d);
        let mut lengths = HashMap::new();
        let start = geo.identity();
        lengths.insert(Geometric::key(&start), 0);
        let mut queue = VecDeque::from([(start, 0)]);
        while let Some((m, len)) = queue.pop_front() {
            if len == depth {
                continue;
            }
            for s in 0..d.len() {
                let mut next = m.clone();
                geo.times_generator(&mut next, s);
                if let Entry::Vacant(slot) = lengths.entry(Geometric::key(&next)) {
                    slot.insert(len + 1);
                    queue.push_back((next, len + 1));
                }
            }
        }
        CayleyOracle { geo, lengths, depth }
    }

    pub fn element_count(&self) -> usize {
        self.lengths.len()
    }

    /// Geodesic length of `w`; the word must not be longer than the depth.
    pub fn length(&self, w: &[Vertex]) -> usize {
        assert!(w.len() <= self.depth);
        self.lengths[&Geometric::key(&self.geo.matrix(w))]
    }
}

/// Chordless cycles found by checking every vertex subset, each written from
/// its least vertex towards its smaller neighbour.
pub fn brute_force_circuits(d: &Diagram) -> Vec<Vec<Vertex>> {
    let n = d.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let nbrs = |v: Vertex| -> Vec<Vertex> { set.iter().copied().filter(|&u| u != v && d.adjacent(u, v)).collect() };
        if set.iter().any(|&v| nbrs(v).len() != 2) {
            continue;
        }
        // walk the 2-regular induced subgraph; it is a cycle iff connected
        let start = set[0];
        let first = nbrs(start);
        let mut cycle = vec![start, first[0].min(first[1])];
        while cycle.len() < set.len() {
            let cur = *cycle.last().unwrap();
            let prev = cycle[cycle.len() - 2];
            let next = nbrs(cur).into_iter().find(|&u| u != prev).unwrap();
            if next == start {
                break;
            }
            cycle.push(next);
        }
        if cycle.len() == set.len() {
            out.insert(cycle);
        }
    }
    out.into_iter().collect()
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

/// Diagram on `g0 … g{n-1}` from the upper-triangle labels, row by row.
pub fn from_upper(n: usize, upper: &[Option<u32>]) -> Diagram {
    let mut text = format!("gens: {}\n", names(n).join(" "));
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = upper[k] {
                text.push_str(&format!("edge g{i} g{j} {m}\n"));
            }
            k += 1;
        }
    }
    Diagram::parse(&text).unwrap()
}

/// The same diagram with vertex `perm[i]` of the result playing the role of
/// vertex `i` of `d`.
pub fn relabel(d: &Diagram, perm: &[usize]) -> Diagram {
    let n = d.len();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut upper = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            upper.push(d.label(inv[a], inv[b]));
        }
    }
    from_upper(n, &upper)
}

pub fn random_diagram(rng: &mut impl Rng, n: usize, labels: &[Option<u32>]) -> Diagram {
    let upper: Vec<Option<u32>> = (0..n * (n.saturating_sub(1)) / 2)
        .map(|_| labels[rng.gen_range(0..labels.len())])
        .collect();
    from_upper(n, &upper)
}

pub fn edge(m: u32) -> Diagram {
    Diagram::from_edges(&["s", "t"], &[("s", "t", m)]).unwrap()
}

pub fn star() -> Diagram {
    Diagram::from_edges(
        &["t", "u1", "u2", "c"],
        &[("t", "u1", 5), ("c", "u1", 5), ("u1", "u2", 3)],
    )
    .unwrap()
}

pub fn path() -> Diagram {
    Diagram::from_edges(
        &["t", "u1", "u2", "c"],
        &[("t", "u2", 5), ("c", "u1", 5), ("u1", "u2", 3)],
    )
    .unwrap()
}

pub fn pentagon() -> Diagram {
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

pub fn triangle(p: u32, q: u32, r: u32) -> Diagram {
    Diagram::from_edges(&["a", "b", "c"], &[("a", "b", p), ("b", "c", q), ("a", "c", r)]).unwrap()
}
