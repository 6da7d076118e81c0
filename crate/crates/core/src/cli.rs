//! Command implementations behind the `lexhit` binary.
//!
//! Every command writes to caller-supplied sinks and returns an
//! [`ExitStatus`]; the binary only parses arguments and wires up the
//! standard streams.
//!
//! Exit codes: `0` success / `true`, `1` a negative answer (`false`, no
//! transversal where one was asked for, a failed verification, a violated
//! bound), `2` usage, parse or I/O errors.

use std::fmt;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::enumerate::{enumerate, lex_largest_greedy, lex_smallest, EnumerationStats};
use crate::error::Error;
use crate::family::circuit::Circuit;
use crate::family::dump;
use crate::hypergraph::OrderedHypergraph;
use crate::oracle::{extend_decide, reduce_to_mcif, ExtensionQuery, WitnessForm};
use crate::reference::BruteForce;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Negative = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Reduction artifact selected by `reduce --emit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Mcif,
    If,
    Circuit,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    pub limit: Option<u64>,
    pub json: bool,
    pub stats: bool,
}

/// Summary of one enumeration run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub vertices: usize,
    pub edges: usize,
    pub rank: usize,
    pub outputs: u64,
    pub complete: bool,
    /// Number of minimal transversals; only known for complete runs.
    pub n_min: Option<u64>,
    pub observed_kstar: Option<usize>,
    pub max_node_delay: Option<u64>,
    pub node_delay_bound: u64,
    pub nodes_before_first_output: Option<u64>,
    pub nodes_visited: u64,
    pub oracle_calls: u64,
    pub tuples_examined: u64,
    pub max_include_size_queried: usize,
    pub delay_min_us: Option<f64>,
    pub delay_median_us: Option<f64>,
    pub delay_max_us: Option<f64>,
}

impl RunReport {
    pub fn new(h: &OrderedHypergraph, stats: &EnumerationStats, delays: &[Duration]) -> Self {
        let mut us: Vec<f64> = delays.iter().map(|d| d.as_secs_f64() * 1e6).collect();
        us.sort_by(f64::total_cmp);
        RunReport {
            vertices: h.vertex_count(),
            edges: h.edge_count(),
            rank: h.rank(),
            outputs: stats.outputs,
            complete: stats.finished,
            n_min: stats.finished.then_some(stats.outputs),
            observed_kstar: stats.observed_kstar,
            max_node_delay: stats.max_delay_nodes,
            node_delay_bound: stats.delay_bound(),
            nodes_before_first_output: stats.nodes_before_first_output,
            nodes_visited: stats.nodes_visited,
            oracle_calls: stats.oracle_calls,
            tuples_examined: stats.tuples_examined,
            max_include_size_queried: stats.max_include_size_queried,
            delay_min_us: us.first().copied(),
            delay_median_us: (!us.is_empty()).then(|| us[us.len() / 2]),
            delay_max_us: us.last().copied(),
        }
    }
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn opt_us(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.1}"))
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "outputs: {}", self.outputs)?;
        writeln!(f, "complete: {}", self.complete)?;
        writeln!(f, "n_min: {}", opt(&self.n_min))?;
        writeln!(f, "observed_kstar: {}", opt(&self.observed_kstar))?;
        writeln!(f, "max_node_delay: {}", opt(&self.max_node_delay))?;
        writeln!(f, "node_delay_bound: {}", self.node_delay_bound)?;
        writeln!(
            f,
            "nodes_before_first_output: {}",
            opt(&self.nodes_before_first_output)
        )?;
        writeln!(f, "nodes_visited: {}", self.nodes_visited)?;
        writeln!(f, "oracle_calls: {}", self.oracle_calls)?;
        writeln!(f, "tuples_examined: {}", self.tuples_examined)?;
        writeln!(
            f,
            "max_include_size_queried: {}",
            self.max_include_size_queried
        )?;
        writeln!(f, "delay_min_us: {}", opt_us(self.delay_min_us))?;
        writeln!(f, "delay_median_us: {}", opt_us(self.delay_median_us))?;
        writeln!(f, "delay_max_us: {}", opt_us(self.delay_max_us))
    }
}

#[derive(Serialize)]
struct SolutionRecord<'a> {
    index: u64,
    size: usize,
    vertices: Vec<&'a str>,
}

pub fn load(path: &std::path::Path) -> Result<OrderedHypergraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    OrderedHypergraph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn line(h: &OrderedHypergraph, s: &VertexSet) -> String {
    h.labels(s).join(" ")
}

pub fn cmd_enumerate(
    h: &OrderedHypergraph,
    opts: EnumerateOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let mut it = enumerate(h);
    let mut delays = Vec::new();
    let mut produced = 0u64;
    let mut last = Instant::now();
    while opts.limit.is_none_or(|l| produced < l) {
        let Some(s) = it.next() else { break };
        delays.push(last.elapsed());
        produced += 1;
        if opts.json {
            let rec = SolutionRecord {
                index: produced,
                size: s.len(),
                vertices: h.labels(&s),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rec).expect("plain record")
            )?;
        } else {
            writeln!(out, "{}", line(h, &s))?;
        }
        last = Instant::now();
    }
    out.flush()?;
    let stats = it.stats();
    if stats.finished && stats.outputs == 0 {
        writeln!(err, "no transversal exists")?;
    }
    if opts.stats {
        write!(err, "{}", RunReport::new(h, stats, &delays))?;
    }
    Ok(ExitStatus::Success)
}

pub fn cmd_count(h: &OrderedHypergraph, out: &mut dyn Write) -> io::Result<ExitStatus> {
    writeln!(out, "{}", enumerate(h).count())?;
    Ok(ExitStatus::Success)
}

pub fn cmd_lexmin(
    h: &OrderedHypergraph,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    report_single(h, lex_smallest(h), out, err)
}

pub fn cmd_lexmax(
    h: &OrderedHypergraph,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    report_single(h, lex_largest_greedy(h), out, err)
}

fn report_single(
    h: &OrderedHypergraph,
    s: Option<VertexSet>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    match s {
        Some(s) => {
            writeln!(out, "{}", line(h, &s))?;
            Ok(ExitStatus::Success)
        }
        None => {
            writeln!(err, "no transversal exists")?;
            Ok(ExitStatus::Negative)
        }
    }
}

fn query<'h>(
    h: &'h OrderedHypergraph,
    include: &[String],
    exclude: &[String],
    err: &mut dyn Write,
) -> io::Result<Option<ExtensionQuery<'h>>> {
    match ExtensionQuery::named(h, include, exclude) {
        Ok(q) => Ok(Some(q)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(None)
        }
    }
}

pub fn cmd_extend(
    h: &OrderedHypergraph,
    include: &[String],
    exclude: &[String],
    stats: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let Some(q) = query(h, include, exclude, err)? else {
        return Ok(ExitStatus::Usage);
    };
    let d = extend_decide(&q);
    writeln!(out, "{}", d.answer)?;
    if stats {
        writeln!(err, "tuples_examined: {}", d.stats.tuples_examined)?;
        writeln!(err, "system_sizes: {:?}", d.stats.system_sizes)?;
        writeln!(err, "forbidden_size: {}", d.stats.forbidden_size)?;
        writeln!(err, "edges: {}", d.stats.edge_count)?;
    }
    Ok(if d.answer {
        ExitStatus::Success
    } else {
        ExitStatus::Negative
    })
}

pub fn cmd_reduce(
    h: &OrderedHypergraph,
    include: &[String],
    exclude: &[String],
    emit: Emit,
    form: WitnessForm,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let Some(q) = query(h, include, exclude, err)? else {
        return Ok(ExitStatus::Usage);
    };
    let red = reduce_to_mcif(&q, form);
    if let Some(answer) = red.constant {
        writeln!(out, "# constant {answer} instance")?;
    }
    let text = match emit {
        Emit::Mcif => dump::write_multi(&red.instance),
        Emit::If => dump::write_single(&red.instance.to_single_coloured()),
        Emit::Circuit => {
            let single = red.instance.to_single_coloured();
            let mut t = format!(
                "# weight-{} satisfiable iff the extension exists\n",
                single.k()
            );
            t.push_str(&dump::write_circuit(&Circuit::from_instance(&single)));
            t
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(ExitStatus::Success)
}

/// One named check of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{verdict} {}", c.name)?;
            } else {
                writeln!(f, "{verdict} {}: {}", c.name, c.detail)?;
            }
        }
        writeln!(
            f,
            "{}",
            if self.passed() {
                "verified"
            } else {
                "verification failed"
            }
        )
    }
}

/// Runs the enumerator and checks it against `expected`, which should be
/// the full sorted list of minimal transversals.
pub fn verify_against(h: &OrderedHypergraph, expected: &[VertexSet]) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut it = enumerate(h);
    let got: Vec<VertexSet> = it.by_ref().collect();
    let stats = it.stats().clone();

    report.push(
        "matches brute force",
        got == expected,
        format!("{} enumerated, {} expected", got.len(), expected.len()),
    );
    let ascending = got
        .windows(2)
        .all(|w| w[0].lex_cmp(&w[1]) == Ok(std::cmp::Ordering::Less));
    report.push("strictly ascending", ascending, "");
    let bad = got.iter().filter(|s| h.check_minimal(s).is_err()).count();
    report.push(
        "witnesses for every output",
        bad == 0,
        format!("{bad} without"),
    );
    report.push(
        "node delay bound",
        stats
            .max_delay_nodes
            .is_none_or(|d| d <= stats.delay_bound()),
        format!(
            "max {} <= {}",
            opt(&stats.max_delay_nodes),
            stats.delay_bound()
        ),
    );
    let kstar = stats.observed_kstar.unwrap_or(0);
    report.push(
        "oracle include size",
        stats.max_include_size_queried <= kstar + 1,
        format!(
            "max |X| {} <= k*+1 = {}",
            stats.max_include_size_queried,
            kstar + 1
        ),
    );
    report.push(
        "oracle budgets",
        stats.budget_violations == 0,
        format!("{} violations", stats.budget_violations),
    );
    report.push(
        "instrumented bounds",
        stats.check_bounds().is_ok(),
        stats
            .check_bounds()
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default(),
    );
    report.push(
        "lexmin is first",
        lex_smallest(h).as_ref() == got.first(),
        "",
    );
    report.push(
        "greedy lexmax is last",
        lex_largest_greedy(h).as_ref() == got.last(),
        "",
    );
    report
}

pub fn cmd_verify(
    h: &OrderedHypergraph,
    bf: BruteForce,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let expected = match bf.all_minimal_transversals(h) {
        Ok(e) => e,
        Err(e @ Error::CapExceeded { .. }) => {
            writeln!(
                err,
                "error: {e} (raise with --max-n or {})",
                crate::reference::CAP_ENV
            )?;
            return Ok(ExitStatus::Usage);
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(ExitStatus::Usage);
        }
    };
    let report = verify_against(h, &expected);
    write!(out, "{report}")?;
    Ok(if report.passed() {
        ExitStatus::Success
    } else {
        ExitStatus::Negative
    })
}

pub fn cmd_bench(
    h: &OrderedHypergraph,
    repeat: usize,
    out: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let mut delays = Vec::new();
    let mut last_stats = None;
    let mut ok = true;
    let started = Instant::now();
    for _ in 0..repeat.max(1) {
        let mut it = enumerate(h);
        let mut last = Instant::now();
        while it.next().is_some() {
            delays.push(last.elapsed());
            last = Instant::now();
        }
        ok &= it.stats().check_bounds().is_ok();
        last_stats = Some(it.stats().clone());
    }
    let stats = last_stats.expect("at least one run");
    writeln!(out, "repeat: {}", repeat.max(1))?;
    writeln!(
        out,
        "total_ms: {:.3}",
        started.elapsed().as_secs_f64() * 1e3
    )?;
    write!(out, "{}", RunReport::new(h, &stats, &delays))?;
    writeln!(out, "bounds: {}", if ok { "ok" } else { "violated" })?;
    Ok(if ok {
        ExitStatus::Success
    } else {
        ExitStatus::Negative
    })
}
