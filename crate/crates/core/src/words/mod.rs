//! Group elements as words over a diagram, and the word problem.
//!
//! Reduction works by braid moves (replacing an alternating subword
//! `s t s …` of length `m(s,t)` by `t s t …`) plus cancellation of equal
//! adjacent letters. By Tits' solution of the word problem this reaches a
//! geodesic, and any two geodesics for the same element are joined by braid
//! moves alone, so the lexicographically least word of the final braid orbit
//! is a normal form.
//!
//! Words are reduced letter by letter. Deciding whether the next letter
//! cancels only needs the braid moves that reach the right end of the word,
//! which keeps long words tractable even when their braid orbits are huge.

mod ball;
mod reflection;
mod special;

pub use ball::Ball;
pub use reflection::StabilizerTag;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::diagram::{Diagram, Vertex};
use crate::error::{CoxError, Result};

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// A finite sequence of generators, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Vertex>);

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(v: Vertex) -> Self {
        Word(vec![v])
    }

    /// Parses whitespace-separated generator names; the empty string is the
    /// identity.
    pub fn parse(d: &Diagram, text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|name| d.vertex(name))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse element: generators are involutions, so this is the reversal.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Concatenation.
    pub fn then(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// `self · x · self⁻¹`
    pub fn conjugate(&self, x: &Word) -> Word {
        self.then(x).then(&self.inverse())
    }

    pub fn display<'a>(&'a self, d: &'a Diagram) -> WordDisplay<'a> {
        WordDisplay { word: self, diagram: d }
    }
}

impl From<Vec<Vertex>> for Word {
    fn from(v: Vec<Vertex>) -> Self {
        Word(v)
    }
}

impl FromIterator<Vertex> for Word {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    diagram: &'a Diagram,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.diagram.name(v))?;
        }
        Ok(())
    }
}

/// Match found by an orbit search, if any, and every word visited.
type OrbitSearch = (Option<Vec<Vertex>>, HashSet<Vec<Vertex>>);

/// Letters known not to be right descents of `base[..k]`, indexed by `k`.
#[derive(Default)]
struct FailedDescents(Vec<Vec<Vertex>>);

impl FailedDescents {
    fn knows(&self, k: usize, x: Vertex) -> bool {
        self.0.get(k).is_some_and(|xs| xs.contains(&x))
    }

    fn record(&mut self, k: usize, x: Vertex) {
        if self.0.len() <= k {
            self.0.resize_with(k + 1, Vec::new);
        }
        self.0[k].push(x);
    }

    /// Forgets everything about prefixes longer than `k`, after the word
    /// changed beyond position `k`.
    fn keep_prefixes(&mut self, k: usize) {
        self.0.truncate(k + 1);
    }
}

/// Word-problem engine over one diagram.
#[derive(Clone, Copy, Debug)]
pub struct Reducer<'d> {
    diagram: &'d Diagram,
    cap: usize,
}

impl<'d> Reducer<'d> {
    pub fn new(diagram: &'d Diagram) -> Self {
        Reducer {
            diagram,
            cap: DEFAULT_STATE_CAP,
        }
    }

    /// `cap` bounds the recursive descent checks made for any single letter
    /// and the size of explicit braid-orbit searches (and, for the
    /// enumeration helpers, the number of elements produced).
    pub fn with_cap(diagram: &'d Diagram, cap: usize) -> Self {
        Reducer { diagram, cap }
    }

    pub fn diagram(&self) -> &'d Diagram {
        self.diagram
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, w: &Word) -> Result<()> {
        w.0.iter().try_for_each(|&v| self.diagram.check_vertex(v))
    }

    /// Every word one braid move away from `w`.
    fn braid_neighbors(&self, w: &[Vertex], mut visit: impl FnMut(Vec<Vertex>)) {
        let d = self.diagram;
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a == b {
                continue;
            }
            let Some(m) = d.label(a, b) else { continue };
            let m = m as usize;
            if i + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
            if !alternates {
                continue;
            }
            let mut next = w.to_vec();
            for k in 0..m {
                next[i + k] = if k % 2 == 0 { b } else { a };
            }
            visit(next);
        }
    }

    /// Breadth-first search of the braid orbit of `start`, stopping at the
    /// first word satisfying `goal`. Returns the whole orbit as second value
    /// when nothing matched.
    fn search_orbit(&self, start: &[Vertex], mut goal: impl FnMut(&[Vertex]) -> bool) -> Result<OrbitSearch> {
        let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.to_vec());
        queue.push_back(start.to_vec());
        while let Some(w) = queue.pop_front() {
            if goal(&w) {
                return Ok((Some(w), seen));
            }
            let mut overflow = false;
            self.braid_neighbors(&w, |next| {
                if !seen.contains(&next) {
                    if seen.len() >= self.cap {
                        overflow = true;
                        return;
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            });
            if overflow {
                return Err(CoxError::StateCapExceeded { cap: self.cap });
            }
        }
        Ok((None, seen))
    }

    /// The braid orbit of a word.
    pub fn braid_orbit(&self, w: &Word) -> Result<Vec<Word>> {
        self.check(w)?;
        let (_, seen) = self.search_orbit(&w.0, |_| false)?;
        let mut out: Vec<Word> = seen.into_iter().map(Word).collect();
        out.sort();
        Ok(out)
    }

    /// If `x` is a right descent of the geodesic `base[..k]·tail`, a geodesic
    /// for its product with `x`, returned as `base[..j]·new_tail`.
    ///
    /// With `y` the last letter, both `x` and `y` are descents iff the word
    /// has a geodesic ending in the longest element of `⟨x, y⟩`, i.e. iff
    /// the letters `y, x, y, …` (`m(x,y)` of them) can be stripped from the
    /// right one after another. Each strip is the same question on a shorter
    /// word, so this explores only the braid moves that reach the end. The
    /// untouched part of the word stays borrowed from `base`, and `failed`
    /// remembers which prefixes of `base` lack which descents.
    fn descend(
        &self,
        base: &[Vertex],
        k: usize,
        tail: &[Vertex],
        x: Vertex,
        budget: &mut usize,
        failed: &mut FailedDescents,
    ) -> Result<Option<(usize, Vec<Vertex>)>> {
        let on_base = tail.is_empty();
        if on_base && failed.knows(k, x) {
            return Ok(None);
        }
        if *budget == 0 {
            return Err(CoxError::StateCapExceeded { cap: self.cap });
        }
        *budget -= 1;
        let (y, hk, htail) = match tail.split_last() {
            Some((&y, t)) => (y, k, t),
            None if k > 0 => (base[k - 1], k - 1, tail),
            None => return Ok(None),
        };
        if y == x {
            return Ok(Some((hk, htail.to_vec())));
        }
        let mut found = None;
        // descent sets are spherical
        if let Some(m) = self.diagram.label(x, y).map(|m| m as usize) {
            if k + tail.len() >= m {
                found = self.strip_alternating(base, (hk, htail.to_vec()), x, y, m, budget, failed)?;
            }
        }
        if found.is_none() && on_base {
            failed.record(k, x);
        }
        Ok(found)
    }

    /// Strips `x, y, x, …` (`m − 1` letters) from a word that has just lost
    /// its final `y`, then appends `Δ·x`, the alternating word of length
    /// `m − 1` ending in `y`.
    #[allow(clippy::too_many_arguments)]
    fn strip_alternating(
        &self,
        base: &[Vertex],
        start: (usize, Vec<Vertex>),
        x: Vertex,
        y: Vertex,
        m: usize,
        budget: &mut usize,
        failed: &mut FailedDescents,
    ) -> Result<Option<(usize, Vec<Vertex>)>> {
        let (mut k, mut tail) = start;
        let mut want = x;
        for _ in 1..m {
            match self.descend(base, k, &tail, want, budget, failed)? {
                Some(next) => (k, tail) = next,
                None => return Ok(None),
            }
            want = if want == x { y } else { x };
        }
        let len = m - 1;
        tail.extend((0..len).map(|i| if (len - 1 - i).is_multiple_of(2) { y } else { x }));
        Ok(Some((k, tail)))
    }

    /// Right-multiplies the geodesic `r` by `x`, keeping it geodesic.
    fn push(&self, r: &mut Vec<Vertex>, x: Vertex, failed: &mut FailedDescents) -> Result<()> {
        let mut budget = self.cap;
        match self.descend(r, r.len(), &[], x, &mut budget, failed)? {
            Some((k, tail)) => {
                r.truncate(k);
                r.extend_from_slice(&tail);
                failed.keep_prefixes(k);
            }
            None => r.push(x),
        }
        Ok(())
    }

    /// Some geodesic for `w` (not normalised).
    pub(crate) fn geodesic(&self, w: &Word) -> Result<Vec<Vertex>> {
        self.check(w)?;
        self.geodesic_times(&[], &w.0)
    }

    /// Right-multiplies an already geodesic word.
    pub(crate) fn geodesic_times(&self, reduced: &[Vertex], tail: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut r = reduced.to_vec();
        let mut failed = FailedDescents::default();
        for &x in tail {
            self.push(&mut r, x, &mut failed)?;
        }
        Ok(r)
    }

    /// Lexicographically least word in the braid orbit of a geodesic, built
    /// greedily: the next letter is always the least left descent of what
    /// remains.
    pub(crate) fn normalize(&self, geodesic: Vec<Vertex>) -> Result<Word> {
        // kept reversed, so left descents of the remainder are right descents
        let mut rest = geodesic;
        rest.reverse();
        let mut out = Vec::with_capacity(rest.len());
        let mut failed = FailedDescents::default();
        while let Some(&first) = rest.last() {
            let mut chosen = None;
            for s in 0..first {
                if !self.diagram.adjacent(s, first) {
                    continue;
                }
                let mut budget = self.cap;
                if let Some(found) = self.descend(&rest, rest.len(), &[], s, &mut budget, &mut failed)? {
                    chosen = Some((s, found));
                    break;
                }
            }
            match chosen {
                Some((s, (k, tail))) => {
                    out.push(s);
                    rest.truncate(k);
                    rest.extend_from_slice(&tail);
                    failed.keep_prefixes(k);
                }
                None => {
                    out.push(first);
                    rest.pop();
                    failed.keep_prefixes(rest.len());
                }
            }
        }
        Ok(Word(out))
    }

    /// Normal form: the lexicographically least geodesic representing `w`.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        let g = self.geodesic(w)?;
        self.normalize(g)
    }

    /// Normal form of the product `a · b`.
    pub fn multiply(&self, a: &Word, b: &Word) -> Result<Word> {
        self.reduce(&a.then(b))
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool> {
        Ok(self.geodesic(w)?.is_empty())
    }

    pub fn are_equal(&self, a: &Word, b: &Word) -> Result<bool> {
        self.is_identity(&a.then(&b.inverse()))
    }

    pub fn geodesic_length(&self, w: &Word) -> Result<usize> {
        Ok(self.geodesic(w)?.len())
    }

    /// Whether `w` is already a geodesic.
    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        Ok(self.geodesic_length(w)? == w.len())
    }
}
