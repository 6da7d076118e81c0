//! Ordered hypergraphs, the text format they are read from, and the basic
//! hitting-set predicates.
//!
//! The vertex order is the order of the `vertices:` header. Throughout the
//! crate a *smaller* vertex index means *higher* precedence, so the
//! lexicographically smallest set is the one that contains the earliest
//! vertex in which two sets differ.
//!
//! ```text
//! # two overlapping edges
//! vertices: a b c
//! edge: a b
//! edge: b c
//! edge:            # the empty edge (no hitting set exists)
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedHypergraph {
    names: Vec<String>,
    edges: Vec<VertexSet>,
}

/// A minimal transversal together with one witness edge per member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalRecord {
    pub set: VertexSet,
    /// `(member, edge index)` pairs; `edges[i] ∩ set = {member}`.
    pub witnesses: Vec<(VertexId, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityFailure {
    /// The set misses this edge.
    NotHitting { edge: usize },
    /// The vertex has no witness edge and can be dropped.
    Expendable { vertex: VertexId },
}

/// Result of [`OrderedHypergraph::restrict`]: the reduced hypergraph and,
/// for every new vertex id, the id it had before.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub hypergraph: OrderedHypergraph,
    pub original: Vec<VertexId>,
}

impl Restriction {
    pub fn lift(&self, set: &VertexSet, universe: usize) -> VertexSet {
        VertexSet::from_indices(universe, set.iter().map(|v| self.original[v.0].0))
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

impl OrderedHypergraph {
    /// Builds a hypergraph, dropping repeated edges (first occurrence wins).
    pub fn new(names: Vec<String>, edges: Vec<VertexSet>) -> Result<Self> {
        let n = names.len();
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate vertex name `{name}`"
                )));
            }
        }
        for e in &edges {
            if e.universe() != n {
                return Err(Error::UniverseMismatch {
                    left: e.universe(),
                    right: n,
                });
            }
        }
        Ok(Self::from_parts(names, edges))
    }

    fn from_parts(names: Vec<String>, edges: Vec<VertexSet>) -> Self {
        let mut seen = HashSet::with_capacity(edges.len());
        let edges = edges
            .into_iter()
            .filter(|e| seen.insert(e.clone()))
            .collect();
        OrderedHypergraph { names, edges }
    }

    /// Convenience constructor with vertices named `v0, v1, ...`.
    pub fn from_edge_lists<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let edges = edges
            .into_iter()
            .map(|e| VertexSet::try_from_indices(n, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(default_names(n), edges)
    }

    /// Builds from vertex names and edges given by name.
    pub fn from_named(vertices: &[&str], edges: &[&[&str]]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let edges = edges
            .iter()
            .map(|e| {
                let mut set = VertexSet::empty(names.len());
                for name in *e {
                    let i = *index
                        .get(name)
                        .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
                    set.insert(VertexId(i));
                }
                Ok(set)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, edges)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| {
                Error::parse(line_no, format!("expected `key: ...`, found `{line}`"))
            })?;
            match (key.trim(), names.as_ref()) {
                ("vertices", None) => {
                    let mut list = Vec::new();
                    for tok in rest.split_whitespace() {
                        if index.insert(tok.to_string(), list.len()).is_some() {
                            return Err(Error::parse(line_no, format!("duplicate vertex `{tok}`")));
                        }
                        list.push(tok.to_string());
                    }
                    names = Some(list);
                }
                ("vertices", Some(_)) => {
                    return Err(Error::parse(line_no, "`vertices:` may appear only once"));
                }
                ("edge", Some(list)) => {
                    let mut e = VertexSet::empty(list.len());
                    for tok in rest.split_whitespace() {
                        let &i = index.get(tok).ok_or_else(|| {
                            Error::parse(line_no, format!("unknown vertex `{tok}`"))
                        })?;
                        e.insert(VertexId(i));
                    }
                    edges.push(e);
                }
                ("edge", None) => {
                    return Err(Error::parse(
                        line_no,
                        "`edge:` before the `vertices:` header",
                    ));
                }
                (other, _) => {
                    return Err(Error::parse(
                        line_no,
                        format!("unknown directive `{other}`"),
                    ));
                }
            }
        }
        let names = names.ok_or_else(|| {
            Error::parse(text.lines().count().max(1), "missing `vertices:` header")
        })?;
        Ok(Self::from_parts(names, edges))
    }

    /// Serializes back into the text format accepted by [`parse`](Self::parse).
    pub fn to_text(&self) -> String {
        let mut out = String::from("vertices:");
        for name in &self.names {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str("edge:");
            for v in e {
                let _ = write!(out, " {}", self.names[v.0]);
            }
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).map(VertexId)
    }

    /// Resolves a list of vertex names into a set.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        let mut set = VertexSet::empty(self.vertex_count());
        for name in names {
            let name = name.as_ref();
            let v = self
                .vertex(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Member names in precedence order.
    pub fn labels(&self, set: &VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.name(v)).collect()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(VertexSet::is_empty)
    }

    /// Maximum edge cardinality; `0` for a hypergraph without edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn is_hitting_set(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(s))
    }

    /// Witness-based minimality test: a hitting set is minimal iff every
    /// member has an edge meeting the set in that member alone.
    pub fn check_minimal(&self, s: &VertexSet) -> Result<TransversalRecord, MinimalityFailure> {
        if let Some(edge) = self.edges.iter().position(|e| !e.intersects(s)) {
            return Err(MinimalityFailure::NotHitting { edge });
        }
        let mut witnesses = Vec::with_capacity(s.len());
        for x in s {
            let witness = self
                .edges
                .iter()
                .position(|e| e.contains(x) && e.intersection_len(s) == 1)
                .ok_or(MinimalityFailure::Expendable { vertex: x })?;
            witnesses.push((x, witness));
        }
        Ok(TransversalRecord {
            set: s.clone(),
            witnesses,
        })
    }

    pub fn is_minimal_transversal(&self, s: &VertexSet) -> bool {
        self.check_minimal(s).is_ok()
    }

    /// Deletes the vertices of `y`: the result lives on `V \ Y` with edges
    /// `E \ Y` (emptied edges are kept, repeats merged). Vertex ids are
    /// re-densified in their original relative order.
    pub fn restrict(&self, y: &VertexSet) -> Restriction {
        let n = self.vertex_count();
        let mut map = vec![None; n];
        let mut original = Vec::new();
        let mut names = Vec::new();
        for (v, slot) in map.iter_mut().enumerate() {
            if !y.contains(VertexId(v)) {
                *slot = Some(VertexId(original.len()));
                original.push(VertexId(v));
                names.push(self.names[v].clone());
            }
        }
        let k = original.len();
        let edges = self.edges.iter().map(|e| e.remap(k, &map)).collect();
        Restriction {
            hypergraph: Self::from_parts(names, edges),
            original,
        }
    }

    /// Re-indexes the vertices so that `order[i]` becomes vertex `i`.
    pub fn reorder(&self, order: &[VertexId]) -> Result<Self> {
        let n = self.vertex_count();
        if order.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "expected {n} vertices, got {}",
                order.len()
            )));
        }
        let mut map = vec![None; n];
        for (new, &old) in order.iter().enumerate() {
            if old.0 >= n || map[old.0].is_some() {
                return Err(Error::InvalidPermutation(format!(
                    "vertex {old} repeated or out of range"
                )));
            }
            map[old.0] = Some(VertexId(new));
        }
        let names = order.iter().map(|v| self.names[v.0].clone()).collect();
        let edges = self.edges.iter().map(|e| e.remap(n, &map)).collect();
        Ok(Self::from_parts(names, edges))
    }

    /// Removes every edge that strictly contains another edge. The minimal
    /// transversals are unchanged.
    pub fn drop_superset_edges(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .filter(|e| !self.edges.iter().any(|f| f != *e && f.is_subset(e)))
            .cloned()
            .collect();
        OrderedHypergraph {
            names: self.names.clone(),
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> OrderedHypergraph {
        OrderedHypergraph::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap()
    }

    fn s(h: &OrderedHypergraph, names: &[&str]) -> VertexSet {
        h.set_of(names).unwrap()
    }

    #[test]
    fn hitting_examples() {
        let h = path();
        assert!(h.is_hitting_set(&s(&h, &["b"])));
        let empty_edge = OrderedHypergraph::from_named(&["a", "b", "c"], &[&[]]).unwrap();
        assert!(!empty_edge.is_hitting_set(&empty_edge.all_vertices()));
        let none = OrderedHypergraph::from_named(&["a", "b", "c"], &[]).unwrap();
        assert!(none.is_hitting_set(&none.empty_set()));
    }

    #[test]
    fn minimality_examples() {
        let h = path();
        let rec = h.check_minimal(&s(&h, &["b"])).unwrap();
        assert_eq!(rec.witnesses.len(), 1);
        let (x, e) = rec.witnesses[0];
        assert_eq!(
            h.edges()[e].intersection(&rec.set),
            VertexSet::from_indices(3, [x.0])
        );

        assert_eq!(
            h.check_minimal(&s(&h, &["a", "b"])),
            Err(MinimalityFailure::Expendable {
                vertex: VertexId(0)
            })
        );
        assert_eq!(
            h.check_minimal(&s(&h, &["a"])),
            Err(MinimalityFailure::NotHitting { edge: 1 })
        );

        let none = OrderedHypergraph::from_named(&["a"], &[]).unwrap();
        let rec = none.check_minimal(&none.empty_set()).unwrap();
        assert!(rec.witnesses.is_empty());
    }

    #[test]
    fn restrict_examples() {
        let h = path();
        let r = h.restrict(&s(&h, &["b"]));
        assert_eq!(r.hypergraph.names(), &["a", "c"]);
        assert_eq!(
            r.hypergraph.edges(),
            &[
                VertexSet::from_indices(2, [0]),
                VertexSet::from_indices(2, [1])
            ]
        );
        assert_eq!(r.original, vec![VertexId(0), VertexId(2)]);

        let single = OrderedHypergraph::from_named(&["a"], &[&["a"]]).unwrap();
        let r = single.restrict(&single.all_vertices());
        assert_eq!(r.hypergraph.edges(), &[VertexSet::empty(0)]);

        let fork =
            OrderedHypergraph::from_named(&["a", "b", "c"], &[&["a", "b"], &["a", "c"]]).unwrap();
        let r = fork.restrict(&s(&fork, &["b", "c"]));
        assert_eq!(r.hypergraph.edges(), &[VertexSet::from_indices(1, [0])]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(path().rank(), 2);
        assert_eq!(
            OrderedHypergraph::from_named(&["a"], &[]).unwrap().rank(),
            0
        );
        assert_eq!(
            OrderedHypergraph::from_named(&["a"], &[&[], &["a"]])
                .unwrap()
                .rank(),
            1
        );
    }

    #[test]
    fn parse_and_print() {
        let text =
            "# comment\n\nvertices: a b c   # trailing\nedge: a b\nedge: b c\nedge: b a\nedge:\n";
        let h = OrderedHypergraph::parse(text).unwrap();
        assert_eq!(h.vertex_count(), 3);
        // `b a` repeats `a b`
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_empty_edge());
        assert_eq!(OrderedHypergraph::parse(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = OrderedHypergraph::parse("vertices: a b\n# x\nedge: a z\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "unknown vertex `z`"));
        assert!(matches!(
            OrderedHypergraph::parse("edge: a\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            OrderedHypergraph::parse("vertices: a a\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            OrderedHypergraph::parse("vertices: a\nnode: a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(OrderedHypergraph::parse("# nothing\n").is_err());
    }

    #[test]
    fn zero_vertices_allowed() {
        let h = OrderedHypergraph::parse("vertices:\nedge:\n").unwrap();
        assert_eq!(h.vertex_count(), 0);
        assert!(h.has_empty_edge());
    }

    #[test]
    fn reorder_rejects_non_permutations() {
        let h = path();
        assert!(h.reorder(&[VertexId(0), VertexId(0), VertexId(1)]).is_err());
        assert!(h.reorder(&[VertexId(0)]).is_err());
        let r = h.reorder(&[VertexId(1), VertexId(0), VertexId(2)]).unwrap();
        assert_eq!(r.names(), &["b", "a", "c"]);
        assert_eq!(r.edges()[0], VertexSet::from_indices(3, [0, 1]));
    }

    #[test]
    fn superset_edges_dropped() {
        let h = OrderedHypergraph::from_named(
            &["a", "b", "c"],
            &[&["a", "b", "c"], &["a"], &["b", "c"]],
        )
        .unwrap();
        assert_eq!(h.drop_superset_edges().edge_count(), 2);
    }
}
