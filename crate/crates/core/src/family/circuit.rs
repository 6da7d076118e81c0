//! Boolean circuits as topologically ordered gate lists, and the weft-3
//! circuit that decides a single-coloured instance.
//!
//! Layout of [`Circuit::from_instance`]:
//!
//! ```text
//! inputs        one per candidate set S
//! OR  layer     one per element u, fed by every S containing u
//! AND layer     one per forbidden set T, fed by the OR gates of its elements
//! OR            fed by every AND gate
//! NOT           output
//! ```
//!
//! Setting exactly the inputs of a selection to true makes the circuit true
//! iff the union of the selected sets contains no forbidden set.

use std::collections::BTreeSet;

use serde::Serialize;

use super::SingleColouredInstance;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    Input,
    Or,
    And,
    Not,
}

impl GateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GateKind::Input => "input",
            GateKind::Or => "or",
            GateKind::And => "and",
            GateKind::Not => "not",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "input" => GateKind::Input,
            "or" => GateKind::Or,
            "and" => GateKind::And,
            "not" => GateKind::Not,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub inputs: Vec<usize>,
}

impl Gate {
    /// A gate is large when its fan-in exceeds two.
    pub fn is_large(&self) -> bool {
        self.inputs.len() > 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: usize,
}

impl Circuit {
    /// Validates topological order (every wire points backwards), gate arity
    /// and the output id.
    pub fn new(gates: Vec<Gate>, output: usize) -> Result<Self> {
        if output >= gates.len() {
            return Err(Error::InvalidInstance(format!(
                "output gate {output} does not exist"
            )));
        }
        for (id, g) in gates.iter().enumerate() {
            if let Some(&bad) = g.inputs.iter().find(|&&i| i >= id) {
                return Err(Error::InvalidInstance(format!(
                    "gate {id} reads gate {bad}, which does not precede it"
                )));
            }
            match g.kind {
                GateKind::Input if !g.inputs.is_empty() => {
                    return Err(Error::InvalidInstance(format!(
                        "input gate {id} has inputs"
                    )));
                }
                GateKind::Not if g.inputs.len() != 1 => {
                    return Err(Error::InvalidInstance(format!(
                        "NOT gate {id} needs exactly one input"
                    )));
                }
                _ => {}
            }
        }
        Ok(Circuit { gates, output })
    }

    /// The weft-3 construction for `inst`. Input gate `i` stands for
    /// candidate `i`.
    pub fn from_instance(inst: &SingleColouredInstance) -> Self {
        let inputs = inst.candidates().len();
        let mut gates: Vec<Gate> = (0..inputs)
            .map(|_| Gate {
                kind: GateKind::Input,
                inputs: vec![],
            })
            .collect();

        // elements occurring in some candidate or forbidden set
        let n = inst.universe().len();
        let mut element_gate = vec![None; n];
        for (u, slot) in element_gate.iter_mut().enumerate() {
            let v = crate::set::VertexId(u);
            let occurs = inst
                .candidates()
                .iter()
                .chain(inst.forbidden())
                .any(|s| s.contains(v));
            if occurs {
                *slot = Some(gates.len());
                gates.push(Gate {
                    kind: GateKind::Or,
                    inputs: (0..inputs)
                        .filter(|&i| inst.candidates()[i].contains(v))
                        .collect(),
                });
            }
        }
        let and_gates: Vec<usize> = inst
            .forbidden()
            .iter()
            .map(|t| {
                let id = gates.len();
                gates.push(Gate {
                    kind: GateKind::And,
                    inputs: t
                        .iter()
                        .map(|u| element_gate[u.0].expect("element gate"))
                        .collect(),
                });
                id
            })
            .collect();
        let top = gates.len();
        gates.push(Gate {
            kind: GateKind::Or,
            inputs: and_gates,
        });
        let output = gates.len();
        gates.push(Gate {
            kind: GateKind::Not,
            inputs: vec![top],
        });
        Circuit { gates, output }
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Ids of the input gates, in gate order.
    pub fn input_ids(&self) -> Vec<usize> {
        self.gates
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind == GateKind::Input)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn input_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| g.kind == GateKind::Input)
            .count()
    }

    /// Evaluates with the inputs at the given input positions (not gate ids)
    /// set to true. Positions index [`Circuit::input_ids`].
    pub fn evaluate(&self, true_inputs: &[usize]) -> bool {
        let ids = self.input_ids();
        let mut value = vec![false; self.gates.len()];
        for &p in true_inputs {
            value[ids[p]] = true;
        }
        for (id, g) in self.gates.iter().enumerate() {
            value[id] = match g.kind {
                GateKind::Input => value[id],
                GateKind::Or => g.inputs.iter().any(|&i| value[i]),
                GateKind::And => g.inputs.iter().all(|&i| value[i]),
                GateKind::Not => !value[g.inputs[0]],
            };
        }
        value[self.output]
    }

    /// Maximum number of large gates on any input-to-output path, or `None`
    /// if no input reaches the output.
    pub fn weft(&self) -> Option<usize> {
        let mut best: Vec<Option<usize>> = vec![None; self.gates.len()];
        for (id, g) in self.gates.iter().enumerate() {
            best[id] = match g.kind {
                GateKind::Input => Some(0),
                _ => g
                    .inputs
                    .iter()
                    .filter_map(|&i| best[i])
                    .max()
                    .map(|w| w + usize::from(g.is_large())),
            };
        }
        best[self.output]
    }

    /// The distinct sequences of gate kinds met along input-to-output paths,
    /// input excluded.
    pub fn path_shapes(&self) -> BTreeSet<Vec<GateKind>> {
        let mut shapes: Vec<BTreeSet<Vec<GateKind>>> = vec![BTreeSet::new(); self.gates.len()];
        for (id, g) in self.gates.iter().enumerate() {
            let mut here = BTreeSet::new();
            if g.kind == GateKind::Input {
                here.insert(vec![]);
            } else {
                for &i in &g.inputs {
                    for s in &shapes[i] {
                        let mut s = s.clone();
                        s.push(g.kind);
                        here.insert(s);
                    }
                }
            }
            shapes[id] = here;
        }
        std::mem::take(&mut shapes[self.output])
    }

    /// Structural check for the weft-3 layout: no path has more than three
    /// large gates, and every path runs through exactly one gate of each
    /// layer `OR, AND, OR` before the final `NOT`.
    pub fn is_weft3_layered(&self) -> bool {
        let layered = vec![GateKind::Or, GateKind::And, GateKind::Or, GateKind::Not];
        self.weft().is_none_or(|w| w <= 3) && self.path_shapes().iter().all(|p| *p == layered)
    }
}
