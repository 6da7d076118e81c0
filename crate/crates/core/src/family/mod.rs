//! Independent Family problems: pick sets whose union covers no forbidden
//! set.
//!
//! The multicoloured variant selects one set from each of `k` lists; the
//! single-coloured variant selects `k` sets from one list. Both come with
//! exhaustive solvers and with the parameter-preserving translations between
//! them. [`circuit`] and [`formula`] hold the weft-3 circuit construction and
//! the antimonotone formula encoding; [`dump`] the text format.

pub mod circuit;
pub mod dump;
pub mod formula;

use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

/// `k` colour lists plus a forbidden system over a named universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiColouredInstance {
    universe: Vec<String>,
    colours: Vec<Vec<VertexSet>>,
    forbidden: Vec<VertexSet>,
}

/// Candidate list, forbidden system and selection size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleColouredInstance {
    universe: Vec<String>,
    candidates: Vec<VertexSet>,
    forbidden: Vec<VertexSet>,
    k: usize,
}

/// How `k` sets may be drawn from a single candidate list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// `k` pairwise distinct list positions. This is the reading under which
    /// the colour translations and the circuit/formula encodings agree.
    #[default]
    Distinct,
    /// Any multiset of `k` positions.
    WithRepetition,
}

fn check_sets(universe: usize, sets: &[VertexSet]) -> Result<()> {
    match sets.iter().find(|s| s.universe() != universe) {
        Some(s) => Err(Error::UniverseMismatch {
            left: s.universe(),
            right: universe,
        }),
        None => Ok(()),
    }
}

fn covers_forbidden(union: &VertexSet, forbidden: &[VertexSet]) -> bool {
    forbidden.iter().any(|t| t.is_subset(union))
}

/// Appends `count` fresh names built from `stem(i)`, avoiding collisions.
fn fresh_names(universe: &mut Vec<String>, count: usize, stem: impl Fn(usize) -> String) {
    let mut taken: std::collections::HashSet<String> = universe.iter().cloned().collect();
    for i in 0..count {
        let mut name = stem(i);
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        universe.push(name);
    }
}

impl MultiColouredInstance {
    pub fn new(
        universe: Vec<String>,
        colours: Vec<Vec<VertexSet>>,
        forbidden: Vec<VertexSet>,
    ) -> Result<Self> {
        if colours.is_empty() {
            return Err(Error::InvalidInstance(
                "at least one colour is required".into(),
            ));
        }
        let n = universe.len();
        for c in &colours {
            check_sets(n, c)?;
        }
        check_sets(n, &forbidden)?;
        Ok(MultiColouredInstance {
            universe,
            colours,
            forbidden,
        })
    }

    /// A fixed instance with the given answer: one colour holding `∅`, and
    /// `∅` forbidden exactly when the answer is `false`.
    pub fn constant(answer: bool) -> Self {
        let forbidden = if answer {
            vec![]
        } else {
            vec![VertexSet::empty(0)]
        };
        MultiColouredInstance {
            universe: vec![],
            colours: vec![vec![VertexSet::empty(0)]],
            forbidden,
        }
    }

    pub fn k(&self) -> usize {
        self.colours.len()
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn colours(&self) -> &[Vec<VertexSet>] {
        &self.colours
    }

    pub fn forbidden(&self) -> &[VertexSet] {
        &self.forbidden
    }

    /// Exhaustive search over `S_1 × ... × S_k`. Returns the chosen position
    /// within each colour list for the first admissible selection.
    pub fn solve_bruteforce(&self) -> Option<Vec<usize>> {
        if self.colours.iter().any(Vec::is_empty) {
            return None;
        }
        let k = self.k();
        let mut digits = vec![0usize; k];
        loop {
            let mut union = VertexSet::empty(self.universe.len());
            for (list, &d) in self.colours.iter().zip(&digits) {
                union.union_with(&list[d]);
            }
            if !covers_forbidden(&union, &self.forbidden) {
                return Some(digits);
            }
            // odometer, last colour fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.colours[i].len() {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Whether picking `selection[i]` from colour `i` is admissible.
    pub fn is_admissible(&self, selection: &[usize]) -> bool {
        if selection.len() != self.k() {
            return false;
        }
        let mut union = VertexSet::empty(self.universe.len());
        for (list, &d) in self.colours.iter().zip(selection) {
            match list.get(d) {
                Some(s) => union.union_with(s),
                None => return false,
            }
        }
        !covers_forbidden(&union, &self.forbidden)
    }

    /// Pools all colours into one list. Every set `S` of colour `i` is tagged
    /// with a fresh element `x[S,i]`, and each pair of tags of the same colour
    /// becomes forbidden, so any admissible selection takes one set per
    /// colour. Tags follow the original universe, colour-major.
    pub fn to_single_coloured(&self) -> SingleColouredInstance {
        let base = self.universe.len();
        let total: usize = self.colours.iter().map(Vec::len).sum();
        let mut universe = self.universe.clone();
        let offsets: Vec<usize> = self
            .colours
            .iter()
            .scan(0, |acc, c| {
                let o = *acc;
                *acc += c.len();
                Some(o)
            })
            .collect();
        let labels: Vec<(usize, usize)> = self
            .colours
            .iter()
            .enumerate()
            .flat_map(|(i, c)| (0..c.len()).map(move |j| (i, j)))
            .collect();
        fresh_names(&mut universe, total, |t| {
            let (i, j) = labels[t];
            format!("x[{},{}]", j + 1, i + 1)
        });
        let n = universe.len();

        let mut candidates = Vec::with_capacity(total);
        for (i, c) in self.colours.iter().enumerate() {
            for (j, s) in c.iter().enumerate() {
                let mut t = s.widen(n);
                t.insert(VertexId(base + offsets[i] + j));
                candidates.push(t);
            }
        }
        let mut forbidden: Vec<VertexSet> = self.forbidden.iter().map(|t| t.widen(n)).collect();
        for (i, c) in self.colours.iter().enumerate() {
            for a in 0..c.len() {
                for b in a + 1..c.len() {
                    forbidden.push(VertexSet::from_indices(
                        n,
                        [base + offsets[i] + a, base + offsets[i] + b],
                    ));
                }
            }
        }
        SingleColouredInstance {
            universe,
            candidates,
            forbidden,
            k: self.k(),
        }
    }
}

impl SingleColouredInstance {
    pub fn new(
        universe: Vec<String>,
        candidates: Vec<VertexSet>,
        forbidden: Vec<VertexSet>,
        k: usize,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInstance("k must be positive".into()));
        }
        check_sets(universe.len(), &candidates)?;
        check_sets(universe.len(), &forbidden)?;
        Ok(SingleColouredInstance {
            universe,
            candidates,
            forbidden,
            k,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn candidates(&self) -> &[VertexSet] {
        &self.candidates
    }

    pub fn forbidden(&self) -> &[VertexSet] {
        &self.forbidden
    }

    pub fn solve_bruteforce(&self) -> Option<Vec<usize>> {
        self.solve_bruteforce_with(Selection::Distinct)
    }

    /// Exhaustive search over all `k`-selections (as non-decreasing, or with
    /// [`Selection::Distinct`] strictly increasing, position tuples).
    pub fn solve_bruteforce_with(&self, mode: Selection) -> Option<Vec<usize>> {
        let m = self.candidates.len();
        let k = self.k;
        let step = usize::from(mode == Selection::Distinct);
        if m == 0 || (mode == Selection::Distinct && k > m) {
            return None;
        }
        let mut pos: Vec<usize> = (0..k).map(|i| i * step).collect();
        loop {
            if self.is_admissible(&pos) {
                return Some(pos);
            }
            // next tuple in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                let limit = m - (k - 1 - i) * step;
                if pos[i] + 1 < limit {
                    pos[i] += 1;
                    for j in i + 1..k {
                        pos[j] = pos[j - 1] + step;
                    }
                    break;
                }
            }
        }
    }

    /// Whether the union of the candidates at `positions` avoids covering
    /// every forbidden set.
    pub fn is_admissible(&self, positions: &[usize]) -> bool {
        let mut union = VertexSet::empty(self.universe.len());
        for &p in positions {
            match self.candidates.get(p) {
                Some(s) => union.union_with(s),
                None => return false,
            }
        }
        !covers_forbidden(&union, &self.forbidden)
    }

    /// Makes `k` tagged copies of the candidate list; choosing the same
    /// candidate in two copies covers the forbidden tag pair
    /// `{x[S,i], x[S,j]}`.
    pub fn to_multi_coloured(&self) -> MultiColouredInstance {
        let base = self.universe.len();
        let m = self.candidates.len();
        let k = self.k;
        let mut universe = self.universe.clone();
        fresh_names(&mut universe, k * m, |t| {
            format!("x[{},{}]", t % m + 1, t / m + 1)
        });
        let n = universe.len();
        let tag = |copy: usize, s: usize| base + copy * m + s;

        let colours = (0..k)
            .map(|i| {
                self.candidates
                    .iter()
                    .enumerate()
                    .map(|(s, set)| {
                        let mut t = set.widen(n);
                        t.insert(VertexId(tag(i, s)));
                        t
                    })
                    .collect()
            })
            .collect();
        let mut forbidden: Vec<VertexSet> = self.forbidden.iter().map(|t| t.widen(n)).collect();
        for s in 0..m {
            for i in 0..k {
                for j in i + 1..k {
                    forbidden.push(VertexSet::from_indices(n, [tag(i, s), tag(j, s)]));
                }
            }
        }
        MultiColouredInstance {
            universe,
            colours,
            forbidden,
        }
    }
}
