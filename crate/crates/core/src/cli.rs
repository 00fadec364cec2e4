//! Command-line driver: single-graph reports, the verification suite and
//! decomposition reports. Everything here is callable from tests; the binary
//! only forwards `std::env::args`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formulas::{formula_for_spec, FormulaError, FormulaReport, FormulaValue};
use crate::graph::{build_graph, decompose_cubic_circulant, ladder_position, Graph, GraphError, GraphSpec, LadderFamily, Rail};
use crate::homology::{
    oracle_invariants, with_thread_pool, FieldSpec, HomologyError, InvariantReport, HOCHSTER_VERTEX_CAP,
    SLOW_TIER_VERTICES,
};
use crate::ideal::{verify_colon_decomposition, IdealError, MonomialIdeal};
use crate::sdepth::{sdepth_exact, SdepthError, SdepthResult, SdepthValue, SolverOptions, SDEPTH_VARIABLE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Largest `--max-n` for the default tier of `verify`; `--slow` allows one more.
pub const DEFAULT_MAX_N: usize = 7;
pub const SLOW_MAX_N: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Sdepth(#[from] SdepthError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Sdepth,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "circdepth", version, about = "Depth, Stanley depth and projective dimension of edge ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Report 0 seconds everywhere so output is byte-for-byte reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants of one graph.
    Invariants {
        /// Graph spec, e.g. `cubic:5:1`, `ladderC:3`, `union:(path:3;cycle:5)`.
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// `2`, `32003`, any other prime, or `exact`.
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long, default_value_t = 60)]
        budget_seconds: u64,
        /// Allow the oracle on 16 to 20 vertices.
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check every closed form against the oracle and the solver.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Include graphs on 16 or more vertices and allow `--max-n 8`.
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value = "2")]
        field: String,
        /// Per-instance Stanley depth budget.
        #[arg(long, default_value_t = 20)]
        budget_seconds: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Component structure of `C_{2n}(a, n)`.
    Decompose {
        n: usize,
        a: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

/// What to compute for one graph.
#[derive(Clone, Copy, Debug)]
pub struct EvalPlan {
    pub formula: bool,
    pub oracle: bool,
    pub sdepth: bool,
    pub field: FieldSpec,
    pub budget: Duration,
    pub slow: bool,
}

impl EvalPlan {
    pub fn new(method: Method, field: FieldSpec, budget: Duration, slow: bool) -> Self {
        let all = method == Method::All;
        EvalPlan {
            formula: all || method == Method::Formula,
            oracle: all || method == Method::Oracle,
            sdepth: all || method == Method::Sdepth,
            field,
            budget,
            slow,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "bounds-consistent")]
    BoundsConsistent,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::BoundsConsistent => "bounds-consistent",
            Verdict::Mismatch => "MISMATCH",
        }
    }

    fn worst(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Mismatch, _) | (_, Mismatch) => Mismatch,
            (BoundsConsistent, _) | (_, BoundsConsistent) => BoundsConsistent,
            _ => Match,
        }
    }
}

/// Everything computed for one graph.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub spec: GraphSpec,
    pub vertices: usize,
    pub edges: usize,
    pub formula: Option<FormulaReport>,
    pub oracle: Option<InvariantReport>,
    pub solver: Option<SdepthResult>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

fn compare(expected: FormulaValue, actual: usize) -> Verdict {
    match (expected.admits(actual), expected.exact()) {
        (false, _) => Verdict::Mismatch,
        (true, Some(_)) => Verdict::Match,
        (true, None) => Verdict::BoundsConsistent,
    }
}

impl Evaluation {
    /// `MISMATCH` when an exact formula value disagrees with a computed one, a
    /// computed value falls outside stated bounds, or the solver's sdepth is
    /// below the oracle's depth.
    pub fn verdict(&self) -> Verdict {
        let mut v = Verdict::Match;
        if let (Some(f), Some(o)) = (&self.formula, &self.oracle) {
            v = v.worst(compare(f.depth, o.depth())).worst(compare(f.pdim, o.pdim()));
        }
        if let Some(s) = &self.solver {
            if let Some(f) = &self.formula {
                v = v.worst(match s.value {
                    SdepthValue::Exact(x) => compare(f.sdepth, x),
                    SdepthValue::LowerBound(x) if f.sdepth.hi().is_some_and(|h| x > h) => Verdict::Mismatch,
                    SdepthValue::LowerBound(_) => Verdict::BoundsConsistent,
                });
            }
            if let (Some(o), SdepthValue::Exact(x)) = (&self.oracle, s.value) {
                if x < o.depth() {
                    v = Verdict::Mismatch;
                }
            }
        }
        v
    }

    /// `(lo, hi)` for sdepth, combining the formula with the solver.
    pub fn sdepth_range(&self) -> (Option<usize>, Option<usize>) {
        let (mut lo, mut hi) = match &self.formula {
            Some(f) => (Some(f.sdepth.lo()), f.sdepth.hi()),
            None => (None, None),
        };
        match self.solver.as_ref().map(|s| s.value) {
            Some(SdepthValue::Exact(x)) => (lo, hi) = (Some(x), Some(x)),
            Some(SdepthValue::LowerBound(x)) => lo = Some(lo.map_or(x, |l| l.max(x))),
            None => {}
        }
        (lo, hi)
    }

    pub fn theorem(&self) -> String {
        self.formula.as_ref().map_or_else(|| "none".to_string(), |f| f.source.clone())
    }
}

/// Compute what `plan` asks for. Refusals for size are errors only when the
/// part was asked for explicitly on its own; with several parts they become notes.
pub fn evaluate(spec: &GraphSpec, plan: &EvalPlan) -> Result<Evaluation, CliError> {
    let start = Instant::now();
    let g = build_graph(spec)?;
    let only = [plan.formula, plan.oracle, plan.sdepth].iter().filter(|&&b| b).count() == 1;
    let mut notes = Vec::new();

    let formula = if plan.formula {
        match formula_for_spec(spec) {
            Ok(f) => Some(f),
            Err(e) if only => return Err(e.into()),
            Err(e) => {
                notes.push(e.to_string());
                None
            }
        }
    } else {
        None
    };

    let oracle = if plan.oracle {
        match oracle_gate(&g, plan.slow) {
            Err(e) if only => return Err(e),
            Err(e) => {
                notes.push(e.to_string());
                None
            }
            Ok(()) => Some(oracle_invariants(&g, plan.field)?),
        }
    } else {
        None
    };

    let solver = if plan.sdepth {
        if g.num_vertices() > SDEPTH_VARIABLE_CAP {
            let e = SdepthError::TooManyVariables { vars: g.num_vertices(), cap: SDEPTH_VARIABLE_CAP };
            if only {
                return Err(e.into());
            }
            notes.push(e.to_string());
            None
        } else {
            let floor = formula.as_ref().map(|f| f.sdepth.lo()).or(oracle.as_ref().map(|o| o.depth())).unwrap_or(0);
            let options = SolverOptions { time_budget: Some(plan.budget), floor };
            let r = sdepth_exact(&MonomialIdeal::edge_ideal(&g), options)?;
            if r.value.exact().is_none() {
                notes.push(format!("sdepth search stopped after {} nodes", r.nodes));
            }
            Some(r)
        }
    } else {
        None
    };

    Ok(Evaluation {
        spec: spec.clone(),
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        formula,
        oracle,
        solver,
        notes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn oracle_gate(g: &Graph, slow: bool) -> Result<(), CliError> {
    let n = g.num_vertices();
    if n > HOCHSTER_VERTEX_CAP {
        return Err(HomologyError::TooManyVertices { vars: n, cap: HOCHSTER_VERTEX_CAP }.into());
    }
    if n >= SLOW_TIER_VERTICES && !slow {
        return Err(CliError::Usage(format!(
            "{n} vertices is in the slow tier ({SLOW_TIER_VERTICES}..={HOCHSTER_VERTEX_CAP}); pass --slow"
        )));
    }
    Ok(())
}

/// One line of the verification table. `sdepth_lo`/`sdepth_hi` are the
/// formula's bounds, `sdepth_exact` the solver's value when it finished.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRow {
    pub family: String,
    pub params: String,
    pub depth_formula: Option<usize>,
    pub depth_oracle: Option<usize>,
    pub pdim_formula: Option<usize>,
    pub pdim_oracle: Option<usize>,
    pub sdepth_lo: Option<usize>,
    pub sdepth_hi: Option<usize>,
    pub sdepth_exact: Option<usize>,
    pub verdict: Verdict,
    pub theorem: String,
    pub seconds: f64,
}

pub const CSV_COLUMNS: [&str; 12] = [
    "family", "params", "depth_formula", "depth_oracle", "pdim_formula", "pdim_oracle", "sdepth_lo", "sdepth_hi",
    "sdepth_exact", "verdict", "theorem", "seconds",
];

fn split_spec(spec: &GraphSpec) -> (String, String) {
    let s = spec.to_string();
    match s.split_once(':') {
        Some((f, p)) => (f.to_string(), p.to_string()),
        None => (s, String::new()),
    }
}

impl VerificationRow {
    pub fn from_evaluation(e: &Evaluation) -> Self {
        let (family, params) = split_spec(&e.spec);
        VerificationRow {
            family,
            params,
            depth_formula: e.formula.as_ref().map(|f| f.depth.lo()),
            depth_oracle: e.oracle.as_ref().map(InvariantReport::depth),
            pdim_formula: e.formula.as_ref().map(|f| f.pdim.lo()),
            pdim_oracle: e.oracle.as_ref().map(InvariantReport::pdim),
            sdepth_lo: e.formula.as_ref().map(|f| f.sdepth.lo()),
            sdepth_hi: e.formula.as_ref().and_then(|f| f.sdepth.hi()),
            sdepth_exact: e.solver.as_ref().and_then(|s| s.value.exact()),
            verdict: e.verdict(),
            theorem: e.theorem(),
            seconds: e.seconds,
        }
    }

    fn check(family: &str, params: String, ok: bool, theorem: String, seconds: f64) -> Self {
        VerificationRow {
            family: family.to_string(),
            params,
            depth_formula: None,
            depth_oracle: None,
            pdim_formula: None,
            pdim_oracle: None,
            sdepth_lo: None,
            sdepth_hi: None,
            sdepth_exact: None,
            verdict: if ok { Verdict::Match } else { Verdict::Mismatch },
            theorem,
            seconds,
        }
    }

    fn csv_record(&self) -> [String; 12] {
        let o = |v: Option<usize>| v.map_or_else(String::new, |x| x.to_string());
        [
            self.family.clone(),
            self.params.clone(),
            o(self.depth_formula),
            o(self.depth_oracle),
            o(self.pdim_formula),
            o(self.pdim_oracle),
            o(self.sdepth_lo),
            o(self.sdepth_hi),
            o(self.sdepth_exact),
            self.verdict.as_str().to_string(),
            self.theorem.clone(),
            format!("{:.3}", self.seconds),
        ]
    }
}

/// A colon-decomposition instance: a connected graph and a pivot vertex.
#[derive(Clone, Debug)]
pub struct ColonInstance {
    pub label: String,
    pub graph: Graph,
    pub pivot: usize,
}

/// `A_n` at `y_n`, `C_{2n}(1,n)` at `y_1` and, for odd `n`, `C_{2n}(2,n)` at `y_n`.
pub fn ladder_colon_instances(ns: impl IntoIterator<Item = usize>) -> Result<Vec<ColonInstance>, CliError> {
    let mut out = Vec::new();
    for n in ns {
        let a = build_graph(&GraphSpec::Ladder(LadderFamily::A, n))?;
        let pivot = a.vertex_by_label(&format!("y{n}")).expect("ladder labels");
        out.push(ColonInstance { label: format!("ladderA:{n}@y{n}"), graph: a, pivot });
        if n >= 2 {
            let m = build_graph(&GraphSpec::CubicCirculant { n, a: 1 })?;
            out.push(ColonInstance { label: format!("cubic:{n}:1@y1"), graph: m, pivot: ladder_position(n, 1, Rail::Y, 1)? });
        }
        if n >= 3 && n % 2 == 1 {
            let p = build_graph(&GraphSpec::CubicCirculant { n, a: 2 })?;
            out.push(ColonInstance { label: format!("cubic:{n}:2@y{n}"), graph: p, pivot: ladder_position(n, 2, Rail::Y, n)? });
        }
    }
    Ok(out)
}

/// Every graph spec the suite evaluates for `max_n`, in output order.
pub fn suite_specs(max_n: usize, slow: bool) -> Vec<GraphSpec> {
    let limit = if slow { HOCHSTER_VERTEX_CAP } else { SLOW_TIER_VERTICES - 1 };
    let mut specs = Vec::new();
    for q in 2..=(2 * max_n).min(limit) {
        specs.push(GraphSpec::Path(q));
        if q >= 3 {
            specs.push(GraphSpec::Cycle(q));
        }
        specs.push(GraphSpec::Star(q));
        specs.push(GraphSpec::Complete(q));
    }
    for f in LadderFamily::ALL {
        specs.extend((2..=max_n).map(|n| GraphSpec::Ladder(f, n)));
    }
    for n in 2..=max_n {
        specs.extend((1..n).map(|a| GraphSpec::CubicCirculant { n, a }));
    }
    specs.retain(|s| s.vertex_count() <= limit);
    specs
}

/// Run the whole suite. Rows come back in a fixed order whatever the thread count.
pub fn verify_suite(max_n: usize, plan: &EvalPlan) -> Result<Vec<VerificationRow>, CliError> {
    let cap = if plan.slow { SLOW_MAX_N } else { DEFAULT_MAX_N };
    if max_n > cap {
        let hint = if plan.slow { "" } else { "; pass --slow for 8" };
        return Err(CliError::Usage(format!("--max-n {max_n} exceeds {cap}{hint}")));
    }
    let specs = suite_specs(max_n, plan.slow);
    let colon = ladder_colon_instances(3..=max_n)?;
    with_thread_pool(|| {
        let mut rows: Vec<VerificationRow> = specs
            .par_iter()
            .map(|s| {
                let mut p = *plan;
                p.sdepth = p.sdepth && s.vertex_count() <= SDEPTH_VARIABLE_CAP;
                evaluate(s, &p).map(|e| VerificationRow::from_evaluation(&e))
            })
            .collect::<Result<_, _>>()?;
        let pairs: Vec<(usize, usize)> = (2..=max_n).flat_map(|n| (1..n).map(move |a| (n, a))).collect();
        let dd: Vec<VerificationRow> = pairs
            .par_iter()
            .map(|&(n, a)| {
                let start = Instant::now();
                let (ok, tag) = match decompose_cubic_circulant(n, a) {
                    Ok(r) => (crate::graph::validate_report(&r), r.summary()),
                    Err(e) => (false, e.to_string()),
                };
                VerificationRow::check("components", format!("{n}:{a}"), ok, tag, start.elapsed().as_secs_f64())
            })
            .collect();
        rows.extend(dd);
        let cl: Vec<VerificationRow> = colon
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let ok = verify_colon_decomposition(&c.graph, c.pivot, 4).unwrap_or(false);
                VerificationRow::check("colon", c.label.clone(), ok, "degrees 1..=4".into(), start.elapsed().as_secs_f64())
            })
            .collect();
        rows.extend(cl);
        Ok(rows)
    })
}

fn render_rows(rows: &[VerificationRow], format: OutputFormat) -> Result<String, CliError> {
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(rows)? + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS)?;
            for r in rows {
                w.write_record(r.csv_record())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8")
        }
        OutputFormat::Text => {
            let table: Vec<[String; 12]> = rows.iter().map(VerificationRow::csv_record).collect();
            let mut widths = CSV_COLUMNS.map(str::len);
            for r in &table {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let mut out = String::new();
            let line = |cells: &[String], out: &mut String| {
                let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            };
            line(&CSV_COLUMNS.map(String::from), &mut out);
            for r in &table {
                line(r, &mut out);
            }
            let bad = rows.iter().filter(|r| r.verdict == Verdict::Mismatch).count();
            let _ = writeln!(out, "{} rows, {bad} mismatches", rows.len());
            out
        }
    })
}

#[derive(Serialize)]
struct SdepthJson {
    lo: Option<usize>,
    hi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<usize>,
}

#[derive(Serialize)]
struct InvariantsJson {
    depth: Option<usize>,
    pdim: Option<usize>,
    reg: Option<usize>,
    sdepth: SdepthJson,
}

#[derive(Serialize)]
struct ProvenanceJson {
    method: Method,
    field: FieldSpec,
    theorem: String,
}

#[derive(Serialize)]
struct ReportJson {
    spec: String,
    vertices: usize,
    edges: usize,
    invariants: InvariantsJson,
    provenance: ProvenanceJson,
    verdict: Verdict,
    notes: Vec<String>,
    seconds: f64,
}

/// Oracle values win over formula values when both exist.
fn render_evaluation(e: &Evaluation, method: Method, field: FieldSpec, format: OutputFormat) -> Result<String, CliError> {
    let depth = e.oracle.as_ref().map(InvariantReport::depth).or(e.formula.as_ref().and_then(|f| f.depth.exact()));
    let pdim = e.oracle.as_ref().map(InvariantReport::pdim).or(e.formula.as_ref().and_then(|f| f.pdim.exact()));
    let (lo, hi) = e.sdepth_range();
    let exact = match (lo, hi) {
        (Some(l), Some(h)) if l == h => Some(l),
        _ => None,
    };
    Ok(match format {
        OutputFormat::Json => {
            let j = ReportJson {
                spec: e.spec.to_string(),
                vertices: e.vertices,
                edges: e.edges,
                invariants: InvariantsJson {
                    depth,
                    pdim,
                    reg: e.oracle.as_ref().map(InvariantReport::reg),
                    sdepth: SdepthJson { lo, hi, exact },
                },
                provenance: ProvenanceJson { method, field, theorem: e.theorem() },
                verdict: e.verdict(),
                notes: e.notes.clone(),
                seconds: e.seconds,
            };
            serde_json::to_string_pretty(&j)? + "\n"
        }
        OutputFormat::Csv => render_rows(&[VerificationRow::from_evaluation(e)], OutputFormat::Csv)?,
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "graph    {} ({} vertices, {} edges)", e.spec, e.vertices, e.edges);
            if let Some(f) = &e.formula {
                let _ = writeln!(out, "formula  depth {}  pdim {}  sdepth {}  [{}]", f.depth, f.pdim, f.sdepth, f.source);
            }
            if let Some(o) = &e.oracle {
                let _ = writeln!(out, "oracle   depth {}  pdim {}  reg {}  over {}", o.depth(), o.pdim(), o.reg(), o.field());
            }
            if let Some(s) = &e.solver {
                let kind = if s.value.exact().is_some() { "exact" } else { "lower bound" };
                let _ = writeln!(out, "sdepth   {} ({kind}, {} intervals, {} nodes)", s.value.value(), s.witness.intervals.len(), s.nodes);
            }
            for n in &e.notes {
                let _ = writeln!(out, "note     {n}");
            }
            let _ = writeln!(out, "verdict  {}", e.verdict().as_str());
            out
        }
    })
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    Ok(s.parse::<FieldSpec>()?)
}

fn run_command(cmd: Command, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Invariants { graph, method, field, budget_seconds, slow, output } => {
            let spec: GraphSpec = graph.parse()?;
            let field = parse_field(&field)?;
            let plan = EvalPlan::new(method, field, Duration::from_secs(budget_seconds), slow);
            let mut e = evaluate(&spec, &plan)?;
            if output.no_timing {
                e.seconds = 0.0;
            }
            emit(&render_evaluation(&e, method, field, output.format)?, &output.out, stdout)?;
            Ok(if e.verdict() == Verdict::Mismatch { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Verify { max_n, slow, field, budget_seconds, output } => {
            let plan = EvalPlan::new(Method::All, parse_field(&field)?, Duration::from_secs(budget_seconds), slow);
            let mut rows = verify_suite(max_n, &plan)?;
            if output.no_timing {
                rows.iter_mut().for_each(|r| r.seconds = 0.0);
            }
            emit(&render_rows(&rows, output.format)?, &output.out, stdout)?;
            Ok(if rows.iter().any(|r| r.verdict == Verdict::Mismatch) { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Decompose { n, a, format } => {
            match decompose_cubic_circulant(n, a) {
                Ok(r) => {
                    let ok = crate::graph::validate_report(&r);
                    let text = match format {
                        OutputFormat::Json => {
                            #[derive(Serialize)]
                            struct Shown<'a> {
                                #[serde(flatten)]
                                report: &'a crate::graph::DecompositionReport,
                                summary: String,
                                verified: bool,
                            }
                            serde_json::to_string_pretty(&Shown { report: &r, summary: r.summary(), verified: ok })? + "\n"
                        }
                        _ => format!(
                            "C_{}({a},{n}): t = {}, 2n/t {}, {}\n{}, {}\n",
                            2 * n,
                            r.t,
                            match r.parity {
                                crate::graph::Parity::Even => "even",
                                crate::graph::Parity::Odd => "odd",
                            },
                            r.components.iter().map(|c| format!("{:?}", c.iter().collect::<Vec<_>>())).collect::<Vec<_>>().join(" "),
                            r.summary(),
                            if ok { "verified" } else { "NOT verified" }
                        ),
                    };
                    stdout.write_all(text.as_bytes())?;
                    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
                }
                Err(GraphError::DecompositionMismatch { detail, .. }) => {
                    writeln!(stdout, "decomposition failed: {detail}")?;
                    Ok(EXIT_MISMATCH)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
/// Errors go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    match run_command(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}
