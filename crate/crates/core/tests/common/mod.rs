#![allow(dead_code)]

use lexhit::{MultiColouredInstance, OrderedHypergraph, SingleColouredInstance, VertexSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn from_masks(n: usize, masks: &[u64]) -> OrderedHypergraph {
    let edges = masks
        .iter()
        .map(|&m| (0..n).filter(move |i| m >> i & 1 == 1));
    OrderedHypergraph::from_edge_lists(n, edges).unwrap()
}

/// Random hypergraph with `n` vertices and up to `m` edges, mostly of size
/// 2 to 4; occasional singletons and empty edges keep those corners covered.
pub fn random_hypergraph(rng: &mut impl Rng, n: usize, m: usize) -> OrderedHypergraph {
    let masks: Vec<u64> = (0..m)
        .map(|_| {
            if n == 0 || rng.gen_bool(0.01) {
                return 0;
            }
            let size = if n == 1 || rng.gen_bool(0.1) {
                1
            } else {
                rng.gen_range(2..=n.min(4))
            };
            rand::seq::index::sample(rng, n, size)
                .iter()
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();
    from_masks(n, &masks)
}

pub fn curated() -> Vec<(&'static str, OrderedHypergraph)> {
    let named = |v: &[&str], e: &[&[&str]]| OrderedHypergraph::from_named(v, e).unwrap();
    vec![
        ("path", named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]])),
        ("empty edge", named(&["a", "b"], &[&["a"], &[]])),
        ("only the empty edge", named(&["a"], &[&[]])),
        ("zero edges", named(&["a", "b", "c"], &[])),
        ("zero vertices", named(&[], &[])),
        ("zero vertices, empty edge", named(&[], &[&[]])),
        (
            "isolated vertices",
            named(&["a", "b", "c", "d"], &[&["b"], &["b", "d"]]),
        ),
        (
            "duplicate edges",
            named(&["a", "b", "c"], &[&["a", "b"], &["a", "b"], &["c"]]),
        ),
        (
            "single full edge",
            named(&["a", "b", "c", "d"], &[&["a", "b", "c", "d"]]),
        ),
        (
            "singletons",
            named(&["a", "b", "c"], &[&["a"], &["b"], &["c"]]),
        ),
        (
            "triangle",
            named(&["a", "b", "c"], &[&["a", "b"], &["a", "c"], &["b", "c"]]),
        ),
        (
            "nested edges",
            named(
                &["a", "b", "c", "d"],
                &[&["a", "b", "c"], &["b"], &["c", "d"], &["a", "b", "c", "d"]],
            ),
        ),
        (
            "matching",
            named(
                &["a", "b", "c", "d", "e", "f"],
                &[&["a", "b"], &["c", "d"], &["e", "f"]],
            ),
        ),
    ]
}

/// Criterion-1 style corpus: curated cases plus `count` random ones with
/// `n <= 12`, `m <= 15`.
pub fn random_corpus(seed: u64, count: usize) -> Vec<OrderedHypergraph> {
    let mut r = rng(seed);
    let mut out: Vec<OrderedHypergraph> = curated().into_iter().map(|(_, h)| h).collect();
    for _ in 0..count {
        let n = r.gen_range(1..=12);
        let m = r.gen_range(1..=15);
        out.push(random_hypergraph(&mut r, n, m));
    }
    out
}

/// Every `r`-subset of `0..pool`, in lexicographic index order.
pub fn combinations(pool: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, pool: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..pool {
            cur.push(i);
            go(i + 1, pool, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, pool, r, &mut Vec::new(), &mut out);
    out
}

/// Edge families over `n` vertices written as bitmasks over the `2^n`
/// possible edges: every family with at most `max_edges` members.
pub fn all_edge_families(n: usize, max_edges: usize) -> impl Iterator<Item = u64> {
    let edges = 1usize << n;
    (0..=max_edges.min(edges)).flat_map(move |r| {
        combinations(edges, r)
            .into_iter()
            .map(|c| c.iter().fold(0u64, |acc, &e| acc | 1 << e))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Families from [`all_edge_families`], keeping only the smallest member
/// of each isomorphism class under vertex relabelling.
pub fn edge_family_classes(n: usize, max_edges: usize) -> Vec<u64> {
    assert!(n <= 5, "families are packed into a u64 over 2^n edges");
    let edges = 1usize << n;
    // perm_edge[p][e]: edge e with its vertices relabelled by permutation p
    let perm_edge: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| {
            (0..edges)
                .map(|e| {
                    (0..n)
                        .filter(|&i| e >> i & 1 == 1)
                        .fold(0, |acc, i| acc | 1 << p[i])
                })
                .collect()
        })
        .collect();
    all_edge_families(n, max_edges)
        .filter(|&fam| {
            perm_edge.iter().all(|pe| {
                let mut img = 0u64;
                let mut rest = fam;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    img |= 1 << pe[e];
                }
                img >= fam
            })
        })
        .collect()
}

pub fn family_to_hypergraph(n: usize, fam: u64) -> OrderedHypergraph {
    let masks: Vec<u64> = (0..1u64 << n).filter(|e| fam >> e & 1 == 1).collect();
    from_masks(n, &masks)
}

/// All disjoint pairs `(X, Y)` over `n` vertices (`3^n` of them).
pub fn disjoint_pairs(n: usize) -> Vec<(VertexSet, VertexSet)> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let (mut x, mut y, mut c) = (VertexSet::empty(n), VertexSet::empty(n), code);
        for i in 0..n {
            match c % 3 {
                1 => {
                    x.insert(lexhit::VertexId(i));
                }
                2 => {
                    y.insert(lexhit::VertexId(i));
                }
                _ => {}
            }
            c /= 3;
        }
        out.push((x, y));
    }
    out
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("u{i}")).collect()
}

pub fn random_set(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for i in 0..n {
        if rng.gen_bool(p) {
            s.insert(lexhit::VertexId(i));
        }
    }
    s
}

pub fn random_mcif(rng: &mut impl Rng, max_universe: usize, max_k: usize) -> MultiColouredInstance {
    let u = rng.gen_range(1..=max_universe);
    let k = rng.gen_range(1..=max_k);
    let colours = (0..k)
        .map(|_| {
            (0..rng.gen_range(0..=3))
                .map(|_| random_set(rng, u, 0.35))
                .collect()
        })
        .collect();
    let forbidden = (0..rng.gen_range(0..=4))
        .map(|_| random_set(rng, u, 0.4))
        .collect();
    MultiColouredInstance::new(names(u), colours, forbidden).unwrap()
}

pub fn random_if(rng: &mut impl Rng, max_universe: usize, max_k: usize) -> SingleColouredInstance {
    let u = rng.gen_range(1..=max_universe);
    let k = rng.gen_range(1..=max_k);
    let candidates = (0..rng.gen_range(0..=6))
        .map(|_| random_set(rng, u, 0.35))
        .collect();
    let forbidden = (0..rng.gen_range(0..=4))
        .map(|_| random_set(rng, u, 0.4))
        .collect();
    SingleColouredInstance::new(names(u), candidates, forbidden, k).unwrap()
}

/// Families of subsets of a `u`-element universe, one per bitmask over the
/// `2^u` possible members.
pub fn set_families(u: usize) -> Vec<Vec<VertexSet>> {
    let members = 1u64 << u;
    (0..1u64 << members)
        .map(|fam| {
            (0..members)
                .filter(|m| fam >> m & 1 == 1)
                .map(|m| VertexSet::from_mask(u, m))
                .collect()
        })
        .collect()
}
