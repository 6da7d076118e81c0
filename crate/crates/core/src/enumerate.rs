//! Lexicographic enumeration of all minimal transversals.
//!
//! The search walks the binary decision tree whose level `d` decides vertex
//! `d`: left child puts it into `X`, right child into `Y`. A child is entered
//! only when the extension oracle says some minimal transversal lies below
//! it, so every entered subtree produces output and leaves come out in
//! pre-order, i.e. lexicographically ascending.
//!
//! The recursion is unrolled into an explicit stack so that [`Enumeration`]
//! can hand out one solution per `next()` call and stop at any point.
//!
//! Node accounting follows the traversal argument for the delay bound: a
//! node is *visited* when it is entered from its parent and again when the
//! walk comes back from its left child (both times an oracle call is made).
//! Coming back from the right child just passes through. After a leaf the
//! next leaf is reached within `2n - 1` visits.

use std::borrow::Cow;

use serde::Serialize;

use crate::hypergraph::OrderedHypergraph;
use crate::oracle::{extend_decide, ExtensionQuery};
use crate::set::{VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    Enter,
    AfterLeft,
    AfterRight,
}

/// Counters describing one traversal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub vertex_count: usize,
    pub outputs: u64,
    pub nodes_visited: u64,
    /// Visits since the previous output (or since the start).
    pub nodes_since_last_output: u64,
    /// Visits up to and including the first output leaf.
    pub nodes_before_first_output: Option<u64>,
    /// Largest number of visits between two consecutive outputs.
    pub max_delay_nodes: Option<u64>,
    pub oracle_calls: u64,
    pub tuples_examined: u64,
    /// Largest `|X|` handed to the oracle.
    pub max_include_size_queried: usize,
    /// Largest output size seen so far.
    pub observed_kstar: Option<usize>,
    /// Oracle calls whose systems broke the disjointness or tuple budget.
    pub budget_violations: u64,
    pub finished: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BoundViolation {
    #[error("{found} nodes between consecutive outputs, bound is {bound}")]
    Delay { found: u64, bound: u64 },
    #[error("{found} nodes before the first output, bound is {bound}")]
    FirstDelay { found: u64, bound: u64 },
    #[error("oracle queried with |X| = {found}, but the largest output has size {kstar}")]
    IncludeSize { found: usize, kstar: usize },
    #[error("{0} oracle calls broke a budget invariant")]
    Budget(u64),
    #[error("no output, yet {0} nodes were visited past the root")]
    EmptyRun(u64),
}

impl EnumerationStats {
    /// `2n - 1`, the bound on visits between consecutive outputs.
    pub fn delay_bound(&self) -> u64 {
        (2 * self.vertex_count as u64).saturating_sub(1)
    }

    /// Checks the instrumented bounds. The size bound is only meaningful for
    /// a finished run.
    pub fn check_bounds(&self) -> Result<(), BoundViolation> {
        if let Some(found) = self.max_delay_nodes {
            if found > self.delay_bound() {
                return Err(BoundViolation::Delay {
                    found,
                    bound: self.delay_bound(),
                });
            }
        }
        if let Some(found) = self.nodes_before_first_output {
            let bound = self.vertex_count as u64 + 1;
            if found > bound {
                return Err(BoundViolation::FirstDelay { found, bound });
            }
        }
        if self.budget_violations > 0 {
            return Err(BoundViolation::Budget(self.budget_violations));
        }
        if self.finished {
            let kstar = self.observed_kstar.unwrap_or(0);
            if self.max_include_size_queried > kstar + 1 {
                return Err(BoundViolation::IncludeSize {
                    found: self.max_include_size_queried,
                    kstar,
                });
            }
            if self.outputs == 0 && self.nodes_visited > 1 {
                return Err(BoundViolation::EmptyRun(self.nodes_visited - 1));
            }
        }
        Ok(())
    }
}

/// Lazy producer of minimal transversals in ascending lexicographic order.
///
/// Holds `O(n)` state besides the hypergraph and does no work beyond the
/// last requested item.
#[derive(Clone, Debug)]
pub struct Enumeration<'h> {
    hypergraph: Cow<'h, OrderedHypergraph>,
    /// For re-ordered runs: position `i` of the search order is original
    /// vertex `original[i]`.
    original: Option<Vec<VertexId>>,
    include: VertexSet,
    exclude: VertexSet,
    stack: Vec<Stage>,
    stats: EnumerationStats,
}

impl<'h> Enumeration<'h> {
    pub fn new(hypergraph: &'h OrderedHypergraph) -> Self {
        Self::start(Cow::Borrowed(hypergraph), None)
    }

    fn start(hypergraph: Cow<'h, OrderedHypergraph>, original: Option<Vec<VertexId>>) -> Self {
        let n = hypergraph.vertex_count();
        Enumeration {
            include: VertexSet::empty(n),
            exclude: VertexSet::empty(n),
            stack: vec![Stage::Enter],
            stats: EnumerationStats {
                vertex_count: n,
                ..EnumerationStats::default()
            },
            hypergraph,
            original,
        }
    }

    pub fn stats(&self) -> &EnumerationStats {
        &self.stats
    }

    /// Drains the remaining solutions and returns the final counters.
    pub fn finish(mut self) -> EnumerationStats {
        for _ in self.by_ref() {}
        self.stats
    }

    fn visit(&mut self) {
        self.stats.nodes_visited += 1;
        self.stats.nodes_since_last_output += 1;
    }

    fn extendable(&mut self, include: VertexSet, exclude: VertexSet) -> bool {
        self.stats.oracle_calls += 1;
        self.stats.max_include_size_queried =
            self.stats.max_include_size_queried.max(include.len());
        let q =
            ExtensionQuery::new(&self.hypergraph, include, exclude).expect("X and Y stay disjoint");
        let d = extend_decide(&q);
        self.stats.tuples_examined += d.stats.tuples_examined;
        if d.stats.check_budgets().is_err() {
            self.stats.budget_violations += 1;
        }
        d.answer
    }

    fn emit(&mut self) -> VertexSet {
        let s = &mut self.stats;
        let delay = s.nodes_since_last_output;
        if s.outputs == 0 {
            s.nodes_before_first_output = Some(delay);
        } else {
            s.max_delay_nodes = Some(s.max_delay_nodes.map_or(delay, |m| m.max(delay)));
        }
        s.outputs += 1;
        s.nodes_since_last_output = 0;
        let size = self.include.len();
        s.observed_kstar = Some(s.observed_kstar.map_or(size, |k| k.max(size)));
        match &self.original {
            None => self.include.clone(),
            Some(original) => VertexSet::from_indices(
                original.len(),
                self.include.iter().map(|v| original[v.0].0),
            ),
        }
    }

    /// Tries the right child of the node at `depth`; pops the node otherwise.
    fn try_right(&mut self, depth: usize) {
        let v = VertexId(depth);
        if self.extendable(self.include.clone(), self.exclude.with(v)) {
            self.exclude.insert(v);
            self.stack[depth] = Stage::AfterRight;
            self.stack.push(Stage::Enter);
        } else {
            self.stack.pop();
        }
    }
}

impl Iterator for Enumeration<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.hypergraph.vertex_count();
        while let Some(&stage) = self.stack.last() {
            let depth = self.stack.len() - 1;
            let v = VertexId(depth);
            match stage {
                Stage::Enter => {
                    self.visit();
                    if depth == n {
                        self.stack.pop();
                        // a root leaf (n = 0) has not been vetted by the oracle
                        if n == 0 && !self.hypergraph.is_hitting_set(&self.include) {
                            continue;
                        }
                        return Some(self.emit());
                    }
                    if self.extendable(self.include.with(v), self.exclude.clone()) {
                        self.include.insert(v);
                        self.stack[depth] = Stage::AfterLeft;
                        self.stack.push(Stage::Enter);
                    } else {
                        self.try_right(depth);
                    }
                }
                Stage::AfterLeft => {
                    self.visit();
                    self.include.remove(v);
                    self.try_right(depth);
                }
                Stage::AfterRight => {
                    self.exclude.remove(v);
                    self.stack.pop();
                }
            }
        }
        self.stats.finished = true;
        None
    }
}

pub fn enumerate(h: &OrderedHypergraph) -> Enumeration<'_> {
    Enumeration::new(h)
}

/// Enumerates under the order `order[0] ≺ order[1] ≺ ...`; solutions are
/// reported in the original vertex ids.
pub fn enumerate_under_order(
    h: &OrderedHypergraph,
    order: &[VertexId],
) -> crate::Result<Enumeration<'static>> {
    let reordered = h.reorder(order)?;
    Ok(Enumeration::start(
        Cow::Owned(reordered),
        Some(order.to_vec()),
    ))
}

/// The first solution in lexicographic order, if any.
pub fn lex_smallest(h: &OrderedHypergraph) -> Option<VertexSet> {
    enumerate(h).next()
}

/// The lexicographically largest minimal transversal: start from `V` and
/// drop expendable vertices, highest precedence (index 0) first.
pub fn lex_largest_greedy(h: &OrderedHypergraph) -> Option<VertexSet> {
    if h.has_empty_edge() {
        return None;
    }
    let mut s = h.all_vertices();
    for v in (0..h.vertex_count()).map(VertexId) {
        s.remove(v);
        if !h.is_hitting_set(&s) {
            s.insert(v);
        }
    }
    Some(s)
}
