use std::collections::HashSet;

use super::{Reducer, Word};
use crate::diagram::Vertex;
use crate::error::Result;

/// Outcome of a bounded Cayley-graph enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ball {
    /// Every element, as normal forms sorted by length then lexicographically.
    Closed(Vec<Word>),
    Exceeded,
}

impl Ball {
    pub fn elements(&self) -> Option<&[Word]> {
        match self {
            Ball::Closed(v) => Some(v),
            Ball::Exceeded => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.elements().map(|e| e.len())
    }
}

impl Reducer<'_> {
    /// Breadth-first closure of the parabolic on `subset` under right
    /// multiplication by its generators. Stops with [`Ball::Exceeded`] once
    /// more than `cap` elements are known.
    pub fn cayley_ball(&self, subset: &[Vertex], cap: usize) -> Result<Ball> {
        self.diagram.check_subset(subset)?;
        let mut gens = subset.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let mut levels = Vec::new();
        let complete = self.spheres(&gens, usize::MAX, cap, &mut levels)?;
        if !complete {
            return Ok(Ball::Exceeded);
        }
        Ok(Ball::Closed(levels.into_iter().flatten().collect()))
    }

    /// Fills `levels[k]` with the normal forms of length `k` in the parabolic
    /// on `gens`, up to `max_len`. Returns false if more than `cap` elements
    /// would be needed.
    pub(crate) fn spheres(
        &self,
        gens: &[Vertex],
        max_len: usize,
        cap: usize,
        levels: &mut Vec<Vec<Word>>,
    ) -> Result<bool> {
        levels.clear();
        levels.push(vec![Word::identity()]);
        let mut total = 1;
        if total > cap {
            return Ok(false);
        }
        while levels.len() <= max_len {
            let current = levels.last().unwrap();
            let mut seen: HashSet<Word> = HashSet::new();
            let mut next = Vec::new();
            for w in current {
                for &x in gens {
                    let g = self.geodesic_times(w.letters(), &[x])?;
                    if g.len() <= w.len() {
                        continue;
                    }
                    let nf = self.normalize(g)?;
                    if seen.insert(nf.clone()) {
                        total += 1;
                        if total > cap {
                            return Ok(false);
                        }
                        next.push(nf);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            levels.push(next);
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Diagram;

    #[test]
    fn dihedral_and_trivial_balls() {
        let d = Diagram::from_edges(&["s", "t"], &[("s", "t", 6)]).unwrap();
        let r = Reducer::new(&d);
        assert_eq!(r.cayley_ball(&[0, 1], 10_000).unwrap().order(), Some(12));
        assert_eq!(r.cayley_ball(&[0], 10).unwrap().order(), Some(2));
        assert_eq!(r.cayley_ball(&[], 10).unwrap().order(), Some(1));
        assert_eq!(r.cayley_ball(&[0, 1], 5).unwrap(), Ball::Exceeded);
    }

    #[test]
    fn affine_triangle_does_not_close() {
        let d = Diagram::from_edges(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap();
        assert_eq!(Reducer::new(&d).cayley_ball(&[0, 1, 2], 500).unwrap(), Ball::Exceeded);
    }
}
