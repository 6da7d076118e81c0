//! Antimonotone 3-normalised formulas: a conjunction of DNFs over negative
//! literals, and their encoding as a single-coloured instance.

use super::SingleColouredInstance;
use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

/// `AND_h OR_i AND_j (NOT x[h,i,j])`.
///
/// `subformulas[h][i]` lists the variables of term `i` in subformula `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antimonotone3NFormula {
    variables: Vec<String>,
    subformulas: Vec<Vec<Vec<usize>>>,
}

impl Antimonotone3NFormula {
    pub fn new(variables: Vec<String>, subformulas: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let n = variables.len();
        for term in subformulas.iter().flatten() {
            if let Some(&x) = term.iter().find(|&&x| x >= n) {
                return Err(Error::OutOfUniverse {
                    element: x,
                    universe: n,
                });
            }
        }
        Ok(Antimonotone3NFormula {
            variables,
            subformulas,
        })
    }

    /// Variables named `x1, x2, ...`; `subformulas` use 0-based indices.
    pub fn with_numbered_variables(
        count: usize,
        subformulas: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("x{i}")).collect(), subformulas)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn subformulas(&self) -> &[Vec<Vec<usize>>] {
        &self.subformulas
    }

    /// A term holds iff none of its variables is true.
    pub fn evaluate(&self, true_vars: &VertexSet) -> bool {
        self.subformulas.iter().all(|terms| {
            terms
                .iter()
                .any(|term| term.iter().all(|&x| !true_vars.contains(VertexId(x))))
        })
    }

    /// Universe = the terms, `S_x` = terms mentioning `x`, and one forbidden
    /// set `T_h` per subformula holding all its terms. A selection of `k`
    /// variable sets avoids covering every `T_h` iff setting those variables
    /// true satisfies the formula.
    pub fn to_independent_family(&self, k: usize) -> Result<SingleColouredInstance> {
        let mut universe = Vec::new();
        let mut term_id = Vec::with_capacity(self.subformulas.len());
        for (h, terms) in self.subformulas.iter().enumerate() {
            let ids: Vec<usize> = (0..terms.len())
                .map(|i| {
                    universe.push(format!("t{}_{}", h + 1, i + 1));
                    universe.len() - 1
                })
                .collect();
            term_id.push(ids);
        }
        let n = universe.len();
        let mut candidates = vec![VertexSet::empty(n); self.variables.len()];
        for (h, terms) in self.subformulas.iter().enumerate() {
            for (i, term) in terms.iter().enumerate() {
                for &x in term {
                    candidates[x].insert(VertexId(term_id[h][i]));
                }
            }
        }
        let forbidden = term_id
            .iter()
            .map(|ids| VertexSet::from_indices(n, ids.iter().copied()))
            .collect();
        SingleColouredInstance::new(universe, candidates, forbidden, k)
    }
}
