//! The extension oracle: does `X` extend to a minimal hitting set that
//! avoids `Y`?
//!
//! Every member `x` of `X` needs a witness, and the only edges that can play
//! that role are those meeting `X` exactly in `{x}`. Collecting those edges
//! (with `Y` removed) per `x`, and the `Y`-reduced edges disjoint from `X` as
//! forbidden sets, turns the question into a Multicoloured Independent Family
//! instance: pick one candidate witness per `x` so that their union swallows
//! no forbidden set. The oracle brute-forces the product of the candidate
//! lists, which costs `O((m/|X|)^|X| · m · n)`.

use crate::error::{Error, Result};
use crate::family::MultiColouredInstance;
use crate::hypergraph::OrderedHypergraph;
use crate::set::{VertexId, VertexSet};

/// An extension question `(H, X, Y)` with `X ∩ Y = ∅`.
#[derive(Clone, Debug)]
pub struct ExtensionQuery<'h> {
    hypergraph: &'h OrderedHypergraph,
    include: VertexSet,
    exclude: VertexSet,
}

impl<'h> ExtensionQuery<'h> {
    pub fn new(
        hypergraph: &'h OrderedHypergraph,
        include: VertexSet,
        exclude: VertexSet,
    ) -> Result<Self> {
        let n = hypergraph.vertex_count();
        for s in [&include, &exclude] {
            if s.universe() != n {
                return Err(Error::UniverseMismatch {
                    left: s.universe(),
                    right: n,
                });
            }
        }
        if let Some(v) = include.intersection(&exclude).first() {
            return Err(Error::OverlappingQuery(hypergraph.name(v).to_string()));
        }
        Ok(ExtensionQuery {
            hypergraph,
            include,
            exclude,
        })
    }

    /// Resolves vertex names.
    pub fn named<S: AsRef<str>>(
        hypergraph: &'h OrderedHypergraph,
        include: &[S],
        exclude: &[S],
    ) -> Result<Self> {
        Self::new(
            hypergraph,
            hypergraph.set_of(include)?,
            hypergraph.set_of(exclude)?,
        )
    }

    pub fn hypergraph(&self) -> &'h OrderedHypergraph {
        self.hypergraph
    }

    pub fn include(&self) -> &VertexSet {
        &self.include
    }

    pub fn exclude(&self) -> &VertexSet {
        &self.exclude
    }
}

/// Candidate witnesses per member of `X`, plus the forbidden sets.
///
/// All sets live in the original universe with the `Y` vertices cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSystems {
    /// Members of `X` in precedence order; `systems[i]` belongs to `members[i]`.
    pub members: Vec<VertexId>,
    pub systems: Vec<Vec<VertexSet>>,
    /// Index into the hypergraph's edge list for every entry of `systems`.
    pub system_origins: Vec<Vec<usize>>,
    pub forbidden: Vec<VertexSet>,
    pub forbidden_origins: Vec<usize>,
}

impl WitnessSystems {
    pub fn system_sizes(&self) -> Vec<usize> {
        self.systems.iter().map(Vec::len).collect()
    }

    /// `Σ|S_x| + |T|`, which never exceeds `m` since each edge lands in at
    /// most one system.
    pub fn budget_used(&self) -> usize {
        self.systems.iter().map(Vec::len).sum::<usize>() + self.forbidden.len()
    }
}

/// Why preprocessing settled the question without a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarlyVerdict {
    /// `X = ∅` and `V \ Y` is a hitting set.
    EmptyIncludeHitting,
    /// `X = ∅` and `V \ Y` misses some edge.
    EmptyIncludeNotHitting,
    /// This member of `X` has no candidate witness.
    MissingWitness(VertexId),
    /// There are no forbidden sets, so any selection works.
    NoForbidden,
}

impl EarlyVerdict {
    pub fn answer(self) -> bool {
        matches!(
            self,
            EarlyVerdict::EmptyIncludeHitting | EarlyVerdict::NoForbidden
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preprocessed {
    /// `None` only for `X = ∅`.
    pub systems: Option<WitnessSystems>,
    /// `None` when the product search is required.
    pub verdict: Option<EarlyVerdict>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub tuples_examined: u64,
    pub system_sizes: Vec<usize>,
    pub forbidden_size: usize,
    /// Number of edges of the queried hypergraph.
    pub edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BudgetViolation {
    #[error("systems hold {used} edges but the hypergraph has only {edges}")]
    Disjointness { used: usize, edges: usize },
    #[error("examined {examined} tuples, more than the product {product}")]
    Tuples { examined: u64, product: u128 },
}

impl OracleStats {
    /// `Π |S_x|`, saturating.
    pub fn product_bound(&self) -> u128 {
        self.system_sizes
            .iter()
            .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
    }

    pub fn budget_used(&self) -> usize {
        self.system_sizes.iter().sum::<usize>() + self.forbidden_size
    }

    pub fn check_budgets(&self) -> Result<(), BudgetViolation> {
        if self.budget_used() > self.edge_count {
            return Err(BudgetViolation::Disjointness {
                used: self.budget_used(),
                edges: self.edge_count,
            });
        }
        if !self.system_sizes.is_empty() && u128::from(self.tuples_examined) > self.product_bound()
        {
            return Err(BudgetViolation::Tuples {
                examined: self.tuples_examined,
                product: self.product_bound(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub stats: OracleStats,
}

/// Whether witness sets keep their own member `x` or drop it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WitnessForm {
    /// `E \ Y`, as searched by the oracle.
    #[default]
    Unpunctured,
    /// `E \ Y \ {x}`; same answers, and onto every multicoloured instance.
    Punctured,
}

fn classify(q: &ExtensionQuery<'_>, form: WitnessForm) -> Preprocessed {
    let h = q.hypergraph;
    let x = &q.include;
    let y = &q.exclude;
    if x.is_empty() {
        let rest = y.complement();
        let verdict = if h.is_hitting_set(&rest) {
            EarlyVerdict::EmptyIncludeHitting
        } else {
            EarlyVerdict::EmptyIncludeNotHitting
        };
        return Preprocessed {
            systems: None,
            verdict: Some(verdict),
        };
    }

    let members: Vec<VertexId> = x.iter().collect();
    let mut slot = vec![usize::MAX; h.vertex_count()];
    for (i, v) in members.iter().enumerate() {
        slot[v.0] = i;
    }
    let mut systems = vec![Vec::new(); members.len()];
    let mut system_origins = vec![Vec::new(); members.len()];
    let mut forbidden = Vec::new();
    let mut forbidden_origins = Vec::new();

    for (idx, e) in h.edges().iter().enumerate() {
        let hit = e.intersection(x);
        match hit.len() {
            0 => {
                forbidden.push(e.difference(y));
                forbidden_origins.push(idx);
            }
            1 => {
                let v = hit.first().expect("one member");
                let mut w = e.difference(y);
                if form == WitnessForm::Punctured {
                    w.remove(v);
                }
                systems[slot[v.0]].push(w);
                system_origins[slot[v.0]].push(idx);
            }
            _ => {} // meets X at least twice: witnesses nobody
        }
    }

    let verdict = if let Some(i) = systems.iter().position(Vec::is_empty) {
        Some(EarlyVerdict::MissingWitness(members[i]))
    } else if forbidden.is_empty() {
        Some(EarlyVerdict::NoForbidden)
    } else {
        None
    };
    Preprocessed {
        systems: Some(WitnessSystems {
            members,
            systems,
            system_origins,
            forbidden,
            forbidden_origins,
        }),
        verdict,
    }
}

/// Preprocessing: the `X = ∅` shortcut, edge classification by `|E ∩ X|`,
/// and the two cheap verdicts.
pub fn build_witness_systems(q: &ExtensionQuery<'_>) -> Preprocessed {
    classify(q, WitnessForm::Unpunctured)
}

/// Decides the query, stopping at the first admissible witness tuple.
pub fn extend_decide(q: &ExtensionQuery<'_>) -> Decision {
    let pre = build_witness_systems(q);
    let mut stats = OracleStats {
        edge_count: q.hypergraph.edge_count(),
        ..OracleStats::default()
    };
    if let Some(sys) = &pre.systems {
        stats.system_sizes = sys.system_sizes();
        stats.forbidden_size = sys.forbidden.len();
    }
    if let Some(v) = pre.verdict {
        return Decision {
            answer: v.answer(),
            stats,
        };
    }
    let sys = pre.systems.expect("searched instances have systems");
    let answer = search_product(&sys, &mut stats.tuples_examined);
    debug_assert!(stats.check_budgets().is_ok());
    Decision { answer, stats }
}

/// Odometer over `S_1 × ... × S_k`, last list fastest, each list in edge
/// order. `prefix[i]` caches the union of the first `i + 1` choices.
fn search_product(sys: &WitnessSystems, tuples: &mut u64) -> bool {
    let k = sys.systems.len();
    let mut digits = vec![0usize; k];
    let mut prefix: Vec<VertexSet> = Vec::with_capacity(k);
    for (i, list) in sys.systems.iter().enumerate() {
        let u = match prefix.last() {
            Some(p) => p.union(&list[0]),
            None => list[0].clone(),
        };
        debug_assert_eq!(prefix.len(), i);
        prefix.push(u);
    }
    loop {
        *tuples += 1;
        let union = &prefix[k - 1];
        if sys.forbidden.iter().all(|t| !t.is_subset(union)) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < sys.systems[i].len() {
                break;
            }
            digits[i] = 0;
        }
        for j in i..k {
            let chosen = &sys.systems[j][digits[j]];
            prefix[j] = if j == 0 {
                chosen.clone()
            } else {
                prefix[j - 1].union(chosen)
            };
        }
    }
}

/// Output of [`reduce_to_mcif`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McifReduction {
    pub instance: MultiColouredInstance,
    /// Set when the instance is one of the fixed true/false instances
    /// rather than the witness systems of the query.
    pub constant: Option<bool>,
}

/// The parameter-preserving reduction to Multicoloured Independent Family
/// over the universe `V \ Y` (ids re-densified, names kept). `X = ∅` and a
/// member without candidate witnesses yield a fixed instance.
pub fn reduce_to_mcif(q: &ExtensionQuery<'_>, form: WitnessForm) -> McifReduction {
    let pre = classify(q, form);
    let constant = match pre.verdict {
        Some(EarlyVerdict::EmptyIncludeHitting) => Some(true),
        Some(EarlyVerdict::EmptyIncludeNotHitting) | Some(EarlyVerdict::MissingWitness(_)) => {
            Some(false)
        }
        _ => None,
    };
    if let Some(answer) = constant {
        return McifReduction {
            instance: MultiColouredInstance::constant(answer),
            constant,
        };
    }
    let sys = pre.systems.expect("non-empty X");
    let h = q.hypergraph;
    let mut map = vec![None; h.vertex_count()];
    let mut names = Vec::new();
    for (v, slot) in map.iter_mut().enumerate() {
        if !q.exclude.contains(VertexId(v)) {
            *slot = Some(VertexId(names.len()));
            names.push(h.names()[v].clone());
        }
    }
    let n = names.len();
    let colours = sys
        .systems
        .iter()
        .map(|list| list.iter().map(|s| s.remap(n, &map)).collect())
        .collect();
    let forbidden = sys.forbidden.iter().map(|t| t.remap(n, &map)).collect();
    McifReduction {
        instance: MultiColouredInstance::new(names, colours, forbidden)
            .expect("well-formed reduction"),
        constant: None,
    }
}

/// The converse direction: a hypergraph and include set whose punctured
/// reduction is `inst` again. One fresh vertex `x_i` per colour; edges are
/// the forbidden sets and every `S ∪ {x_i}` with `S` of colour `i`.
pub fn mcif_to_extension(inst: &MultiColouredInstance) -> (OrderedHypergraph, VertexSet) {
    let base = inst.universe().len();
    let k = inst.k();
    let mut names = inst.universe().to_vec();
    let taken: std::collections::HashSet<String> = names.iter().cloned().collect();
    for i in 0..k {
        let mut name = format!("x{}", i + 1);
        while taken.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let n = names.len();
    let mut edges: Vec<VertexSet> = inst.forbidden().iter().map(|t| t.widen(n)).collect();
    for (i, colour) in inst.colours().iter().enumerate() {
        for s in colour {
            edges.push(s.widen(n).with(VertexId(base + i)));
        }
    }
    let h = OrderedHypergraph::new(names, edges).expect("fresh names are unique");
    let include = VertexSet::from_indices(n, base..n);
    (h, include)
}

/// Whether the lexicographically smallest minimal transversal, under an
/// order that puts `X` first, contains `X`. Agrees with
/// `extend_decide(h, X, ∅)`.
pub fn lex_smallest_contains(h: &OrderedHypergraph, x: &VertexSet) -> bool {
    let order: Vec<VertexId> = x.iter().chain(x.complement().iter()).collect();
    let reordered = h.reorder(&order).expect("valid permutation");
    let front = VertexSet::from_indices(h.vertex_count(), 0..x.len());
    match crate::enumerate::lex_smallest(&reordered) {
        Some(first) => front.is_subset(&first),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> OrderedHypergraph {
        OrderedHypergraph::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap()
    }

    fn decide(h: &OrderedHypergraph, x: &[&str], y: &[&str]) -> bool {
        extend_decide(&ExtensionQuery::named(h, x, y).unwrap()).answer
    }

    #[test]
    fn overlapping_query_rejected() {
        let h = path();
        assert_eq!(
            ExtensionQuery::named(&h, &["a"], &["a"]).unwrap_err(),
            Error::OverlappingQuery("a".into())
        );
        assert!(ExtensionQuery::named(&h, &["q"], &[]).is_err());
    }

    #[test]
    fn preprocessing_examples() {
        let empty_edge = OrderedHypergraph::from_named(&["a"], &[&[]]).unwrap();
        let q = ExtensionQuery::named::<&str>(&empty_edge, &[], &[]).unwrap();
        assert_eq!(
            build_witness_systems(&q).verdict,
            Some(EarlyVerdict::EmptyIncludeNotHitting)
        );

        let h = path();
        let q = ExtensionQuery::named(&h, &["a", "b"], &[]).unwrap();
        let pre = build_witness_systems(&q);
        assert_eq!(pre.verdict, Some(EarlyVerdict::MissingWitness(VertexId(0))));
        assert_eq!(pre.systems.unwrap().system_sizes(), vec![0, 1]);

        let q = ExtensionQuery::named(&h, &["b"], &[]).unwrap();
        let pre = build_witness_systems(&q);
        assert_eq!(pre.verdict, Some(EarlyVerdict::NoForbidden));
        let sys = pre.systems.unwrap();
        assert_eq!(sys.systems, vec![h.edges().to_vec()]);
        assert!(sys.forbidden.is_empty());
    }

    #[test]
    fn decision_examples() {
        let h = path();
        assert!(!decide(&h, &["a"], &["c"]));
        assert!(decide(&h, &["a"], &[]));
        let triangle = OrderedHypergraph::from_named(
            &["a", "b", "c"],
            &[&["a", "b"], &["a", "c"], &["b", "c"]],
        )
        .unwrap();
        assert!(!decide(&triangle, &["a", "b", "c"], &[]));
        assert!(decide(&triangle, &["a", "b"], &[]));
    }

    #[test]
    fn emptied_forbidden_edge_forces_false() {
        // {c} minus Y={c} becomes ∅ and is covered by any union
        let h = OrderedHypergraph::from_named(&["a", "b", "c"], &[&["a", "b"], &["c"]]).unwrap();
        let q = ExtensionQuery::named(&h, &["a"], &["c"]).unwrap();
        let d = extend_decide(&q);
        assert!(!d.answer);
        assert_eq!(d.stats.tuples_examined, 1);
    }

    #[test]
    fn stats_respect_budgets() {
        let h = OrderedHypergraph::from_edge_lists(
            5,
            [vec![0, 2], vec![0, 3], vec![1, 4], vec![1, 2], vec![3, 4]],
        )
        .unwrap();
        let q = ExtensionQuery::new(&h, VertexSet::from_indices(5, [0, 1]), VertexSet::empty(5))
            .unwrap();
        let d = extend_decide(&q);
        assert!(d.stats.check_budgets().is_ok());
        assert_eq!(d.stats.system_sizes, vec![2, 2]);
        assert_eq!(d.stats.forbidden_size, 1);
    }

    #[test]
    fn reduction_examples() {
        let none = OrderedHypergraph::from_named(&["a"], &[]).unwrap();
        let r = reduce_to_mcif(
            &ExtensionQuery::named::<&str>(&none, &[], &[]).unwrap(),
            WitnessForm::default(),
        );
        assert_eq!(r.constant, Some(true));
        assert_eq!(r.instance, MultiColouredInstance::constant(true));

        let h = path();
        let r = reduce_to_mcif(
            &ExtensionQuery::named(&h, &["b"], &[]).unwrap(),
            WitnessForm::default(),
        );
        assert_eq!(r.constant, None);
        assert_eq!(r.instance.k(), 1);
        assert_eq!(r.instance.colours()[0], h.edges().to_vec());
        assert!(r.instance.forbidden().is_empty());
        assert!(r.instance.solve_bruteforce().is_some());

        let h2 = OrderedHypergraph::from_named(&["a", "b", "c"], &[&["a", "b"], &["c"]]).unwrap();
        let r = reduce_to_mcif(
            &ExtensionQuery::named(&h2, &["a"], &[]).unwrap(),
            WitnessForm::default(),
        );
        assert_eq!(r.instance.colours()[0], vec![h2.edges()[0].clone()]);
        assert_eq!(r.instance.forbidden(), &[h2.edges()[1].clone()]);
        assert!(r.instance.solve_bruteforce().is_some());
    }

    #[test]
    fn reduction_drops_excluded_vertices() {
        let h = path();
        let r = reduce_to_mcif(
            &ExtensionQuery::named(&h, &["a"], &["c"]).unwrap(),
            WitnessForm::Punctured,
        );
        assert_eq!(r.instance.universe(), &["a", "b"]);
        assert_eq!(
            r.instance.colours()[0],
            vec![VertexSet::from_indices(2, [1])]
        );
        assert_eq!(r.instance.forbidden(), &[VertexSet::from_indices(2, [1])]);
        assert!(r.instance.solve_bruteforce().is_none());
    }

    #[test]
    fn converse_reduction_recovers_instance() {
        let n = 3;
        let set = |xs: &[usize]| VertexSet::from_indices(n, xs.iter().copied());
        let names: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        let inst = MultiColouredInstance::new(
            names,
            vec![vec![set(&[0]), set(&[1, 2])], vec![set(&[2])]],
            vec![set(&[0, 2]), set(&[1])],
        )
        .unwrap();
        let (h, x) = mcif_to_extension(&inst);
        let q = ExtensionQuery::new(&h, x, h.empty_set()).unwrap();
        let back = reduce_to_mcif(&q, WitnessForm::Punctured);
        let widened: Vec<Vec<VertexSet>> = inst
            .colours()
            .iter()
            .map(|c| c.iter().map(|s| s.widen(5)).collect())
            .collect();
        assert_eq!(
            back.instance
                .colours()
                .iter()
                .map(|c| c.to_vec())
                .collect::<Vec<_>>(),
            widened
        );
        assert_eq!(extend_decide(&q).answer, inst.solve_bruteforce().is_some());
    }

    #[test]
    fn lex_smallest_contains_examples() {
        let h = path();
        assert!(lex_smallest_contains(&h, &h.set_of(&["b"]).unwrap()));
        assert!(!lex_smallest_contains(&h, &h.set_of(&["a", "b"]).unwrap()));
        let none = OrderedHypergraph::from_named(&["a", "b"], &[]).unwrap();
        assert!(lex_smallest_contains(&none, &none.empty_set()));
    }
}
