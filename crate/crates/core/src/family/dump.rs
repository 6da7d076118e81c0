//! Line-oriented text dumps for instances and circuits.
//!
//! Instance grammar (`#` comments and blank lines are ignored):
//!
//! ```text
//! universe: <name>*
//! k: <int>                 # single-coloured only, before `candidates:`
//! colour <i>:              # multicoloured, i = 1, 2, ... in order
//! candidates:              # single-coloured
//! forbidden:
//! set: <name>*             # a member of the most recent stanza
//! ```
//!
//! Circuit grammar:
//!
//! ```text
//! gate <id> <input|or|and|not> <input id>*
//! output: <id>
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use super::circuit::{Circuit, Gate, GateKind};
use super::{MultiColouredInstance, SingleColouredInstance};
use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceDump {
    Multi(MultiColouredInstance),
    Single(SingleColouredInstance),
}

fn write_set(out: &mut String, universe: &[String], set: &VertexSet) {
    out.push_str("set:");
    for v in set {
        let _ = write!(out, " {}", universe[v.0]);
    }
    out.push('\n');
}

fn write_universe(out: &mut String, universe: &[String]) {
    out.push_str("universe:");
    for name in universe {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
}

pub fn write_multi(inst: &MultiColouredInstance) -> String {
    let mut out = String::from("# multicoloured independent family\n");
    write_universe(&mut out, inst.universe());
    for (i, colour) in inst.colours().iter().enumerate() {
        let _ = writeln!(out, "colour {}:", i + 1);
        for s in colour {
            write_set(&mut out, inst.universe(), s);
        }
    }
    out.push_str("forbidden:\n");
    for t in inst.forbidden() {
        write_set(&mut out, inst.universe(), t);
    }
    out
}

pub fn write_single(inst: &SingleColouredInstance) -> String {
    let mut out = String::from("# independent family\n");
    write_universe(&mut out, inst.universe());
    let _ = writeln!(out, "k: {}", inst.k());
    out.push_str("candidates:\n");
    for s in inst.candidates() {
        write_set(&mut out, inst.universe(), s);
    }
    out.push_str("forbidden:\n");
    for t in inst.forbidden() {
        write_set(&mut out, inst.universe(), t);
    }
    out
}

pub fn write_circuit(c: &Circuit) -> String {
    let mut out = String::from("# circuit\n");
    for (id, g) in c.gates().iter().enumerate() {
        let _ = write!(out, "gate {id} {}", g.kind.as_str());
        for i in &g.inputs {
            let _ = write!(out, " {i}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "output: {}", c.output());
    out
}

enum Stanza {
    None,
    Colour(usize),
    Candidates,
    Forbidden,
}

fn significant(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_instance(text: &str) -> Result<InstanceDump> {
    let mut universe: Option<(Vec<String>, HashMap<String, usize>)> = None;
    let mut k: Option<usize> = None;
    let mut colours: Vec<Vec<VertexSet>> = Vec::new();
    let mut candidates: Option<Vec<VertexSet>> = None;
    let mut forbidden: Vec<VertexSet> = Vec::new();
    let mut seen_forbidden = false;
    let mut stanza = Stanza::None;

    for (line_no, line) in significant(text) {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, format!("expected `key: ...`, found `{line}`")))?;
        let key = key.trim();
        if key == "universe" {
            if universe.is_some() {
                return Err(Error::parse(line_no, "duplicate `universe:`"));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let mut index = HashMap::new();
            for (i, n) in names.iter().enumerate() {
                if index.insert(n.clone(), i).is_some() {
                    return Err(Error::parse(line_no, format!("duplicate element `{n}`")));
                }
            }
            universe = Some((names, index));
            continue;
        }
        let (names, index) = universe
            .as_ref()
            .ok_or_else(|| Error::parse(line_no, "`universe:` must come first"))?;
        if !rest.trim().is_empty() && key != "set" && key != "k" {
            return Err(Error::parse(
                line_no,
                format!("`{key}:` takes no arguments"),
            ));
        }
        match key {
            "k" => {
                let v = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad k `{}`", rest.trim())))?;
                k = Some(v);
            }
            "candidates" => {
                if candidates.is_some() || !colours.is_empty() {
                    return Err(Error::parse(line_no, "unexpected `candidates:`"));
                }
                candidates = Some(Vec::new());
                stanza = Stanza::Candidates;
            }
            "forbidden" => {
                if seen_forbidden {
                    return Err(Error::parse(line_no, "duplicate `forbidden:`"));
                }
                seen_forbidden = true;
                stanza = Stanza::Forbidden;
            }
            "set" => {
                let mut s = VertexSet::empty(names.len());
                for tok in rest.split_whitespace() {
                    let &i = index
                        .get(tok)
                        .ok_or_else(|| Error::parse(line_no, format!("unknown element `{tok}`")))?;
                    s.insert(VertexId(i));
                }
                match stanza {
                    Stanza::None => return Err(Error::parse(line_no, "`set:` outside a stanza")),
                    Stanza::Colour(i) => colours[i].push(s),
                    Stanza::Candidates => candidates.as_mut().expect("stanza open").push(s),
                    Stanza::Forbidden => forbidden.push(s),
                }
            }
            other => {
                let colour = other
                    .strip_prefix("colour")
                    .and_then(|n| n.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(line_no, format!("unknown directive `{other}`")))?;
                if candidates.is_some() || seen_forbidden || colour != colours.len() + 1 {
                    return Err(Error::parse(
                        line_no,
                        format!("unexpected `colour {colour}:`"),
                    ));
                }
                colours.push(Vec::new());
                stanza = Stanza::Colour(colour - 1);
            }
        }
    }

    let (names, _) = universe.ok_or_else(|| Error::parse(1, "missing `universe:`"))?;
    match (candidates, k) {
        (Some(c), Some(k)) => Ok(InstanceDump::Single(SingleColouredInstance::new(
            names, c, forbidden, k,
        )?)),
        (Some(_), None) => Err(Error::parse(1, "single-coloured instance without `k:`")),
        (None, Some(_)) => Err(Error::parse(1, "`k:` given for a multicoloured instance")),
        (None, None) => Ok(InstanceDump::Multi(MultiColouredInstance::new(
            names, colours, forbidden,
        )?)),
    }
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut gates = Vec::new();
    let mut output = None;
    for (line_no, line) in significant(text) {
        if let Some(rest) = line.strip_prefix("output:") {
            let id = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad output id `{}`", rest.trim())))?;
            output = Some(id);
            continue;
        }
        let mut toks = line.split_whitespace();
        if toks.next() != Some("gate") {
            return Err(Error::parse(
                line_no,
                format!("expected `gate`, found `{line}`"),
            ));
        }
        let id: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(line_no, "missing gate id"))?;
        if id != gates.len() {
            return Err(Error::parse(
                line_no,
                format!("gate ids must be consecutive, expected {}", gates.len()),
            ));
        }
        let kind = toks
            .next()
            .and_then(GateKind::parse)
            .ok_or_else(|| Error::parse(line_no, "missing or unknown gate kind"))?;
        let inputs = toks
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(line_no, format!("bad input id `{t}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        gates.push(Gate { kind, inputs });
    }
    let output = output.ok_or_else(|| Error::parse(1, "missing `output:`"))?;
    Circuit::new(gates, output)
}
