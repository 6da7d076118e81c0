//! Naive exhaustive oracles used as ground truth.
//!
//! Nothing here calls into the oracle, the enumerator or the circuit
//! evaluator: hypergraphs are flattened into `u64` masks and every question
//! is answered by scanning all subsets.

use crate::error::{Error, Result};
use crate::family::circuit::{Circuit, GateKind};
use crate::family::formula::Antimonotone3NFormula;
use crate::hypergraph::OrderedHypergraph;
use crate::set::VertexSet;

/// Environment variable overriding [`BruteForce::DEFAULT_CAP`].
pub const CAP_ENV: &str = "LEXHIT_BF_CAP";

/// Masks are `u64`, and `2^n` scans beyond this are hopeless anyway.
const HARD_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            cap: Self::DEFAULT_CAP,
        }
    }
}

fn masks(h: &OrderedHypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, v| m | 1 << v.0))
        .collect()
}

fn to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0u64, |m, v| m | 1 << v.0)
}

fn hits_all(edges: &[u64], s: u64) -> bool {
    edges.iter().all(|&e| e & s != 0)
}

/// Hitting, and no single vertex can be dropped (hitting is monotone, so
/// this rules out every proper subset).
fn minimal(edges: &[u64], s: u64) -> bool {
    if !hits_all(edges, s) {
        return false;
    }
    let mut rest = s;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        if hits_all(edges, s ^ bit) {
            return false;
        }
    }
    true
}

/// Reverses the low `n` bits so that ascending integer order on the result
/// matches descending lexicographic order on sets.
fn lex_key(mask: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - n)
    }
}

impl BruteForce {
    pub const DEFAULT_CAP: usize = 20;

    pub fn with_cap(cap: usize) -> Self {
        BruteForce { cap }
    }

    /// Default cap, overridden by `LEXHIT_BF_CAP` if it parses.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::with_cap)
            .unwrap_or_default()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn guard(&self, n: usize) -> Result<()> {
        let cap = self.cap.min(HARD_CAP);
        if n > cap {
            Err(Error::CapExceeded { n, cap })
        } else {
            Ok(())
        }
    }

    /// All minimal transversals, sorted ascending lexicographically.
    pub fn all_minimal_transversals(&self, h: &OrderedHypergraph) -> Result<Vec<VertexSet>> {
        let n = h.vertex_count();
        self.guard(n)?;
        let edges = masks(h);
        let mut found: Vec<u64> = (0..1u64 << n).filter(|&s| minimal(&edges, s)).collect();
        // lexicographically smaller = contains the earliest differing vertex
        // = larger reversed key
        found.sort_by_key(|&s| std::cmp::Reverse(lex_key(s, n)));
        Ok(found
            .into_iter()
            .map(|s| VertexSet::from_mask(n, s))
            .collect())
    }

    /// Whether some minimal transversal contains `x` and avoids `y`.
    pub fn extension(&self, h: &OrderedHypergraph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        let n = h.vertex_count();
        self.guard(n)?;
        let edges = masks(h);
        let (xm, ym) = (to_mask(x), to_mask(y));
        Ok((0..1u64 << n).any(|s| s & xm == xm && s & ym == 0 && minimal(&edges, s)))
    }

    /// [`extension`](Self::extension) answered from a precomputed list of
    /// all minimal transversals.
    pub fn extension_in(transversals: &[VertexSet], x: &VertexSet, y: &VertexSet) -> bool {
        transversals
            .iter()
            .any(|t| x.is_subset(t) && t.is_disjoint(y))
    }

    /// Whether exactly `k` true inputs can satisfy the circuit.
    pub fn weight_k_circuit(&self, c: &Circuit, k: usize) -> Result<bool> {
        let inputs: Vec<usize> = c
            .gates()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind == GateKind::Input)
            .map(|(i, _)| i)
            .collect();
        self.guard(inputs.len())?;
        Ok(weight_k_masks(inputs.len(), k).any(|m| {
            let mut memo = vec![None; c.gates().len()];
            let on = |gate: usize| {
                inputs
                    .iter()
                    .position(|&i| i == gate)
                    .is_some_and(|p| m >> p & 1 == 1)
            };
            eval_gate(c, c.output(), &on, &mut memo)
        }))
    }

    /// Whether some assignment with exactly `k` true variables satisfies `f`.
    pub fn weight_k_formula(&self, f: &Antimonotone3NFormula, k: usize) -> Result<bool> {
        let n = f.variable_count();
        self.guard(n)?;
        Ok(weight_k_masks(n, k).any(|m| {
            f.subformulas().iter().all(|terms| {
                terms
                    .iter()
                    .any(|term| term.iter().all(|&x| m >> x & 1 == 0))
            })
        }))
    }
}

fn weight_k_masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0..1u64 << n).filter(move |m| m.count_ones() as usize == k)
}

fn eval_gate(
    c: &Circuit,
    id: usize,
    on: &dyn Fn(usize) -> bool,
    memo: &mut Vec<Option<bool>>,
) -> bool {
    if let Some(v) = memo[id] {
        return v;
    }
    let g = &c.gates()[id];
    let v = match g.kind {
        GateKind::Input => on(id),
        GateKind::Not => !eval_gate(c, g.inputs[0], on, memo),
        GateKind::Or => {
            let mut any = false;
            for &i in &g.inputs {
                any |= eval_gate(c, i, on, memo);
            }
            any
        }
        GateKind::And => {
            let mut all = true;
            for &i in &g.inputs {
                all &= eval_gate(c, i, on, memo);
            }
            all
        }
    };
    memo[id] = Some(v);
    v
}

/// Convenience: `true` iff `s` is one of the brute-force minimal
/// transversals (only used to cross-check witness-based tests).
pub fn is_minimal_by_scan(h: &OrderedHypergraph, s: &VertexSet) -> bool {
    minimal(&masks(h), to_mask(s))
}
