//! Command-line front end. The binary target is a thin wrapper around
//! [`run`], which parses arguments, dispatches to the library and maps
//! errors to stable exit codes:
//!
//! - 0: success
//! - 1: verification failure (or an internal route disagreement)
//! - 2: precondition violation (e.g. an irregular factor)
//! - 3: connectivity error
//! - 4: parse error (graph specs, files, command line)
//!
//! Output on stdout is byte-deterministic for a fixed invocation; the only
//! timing information (the per-pair summary of `verify`) goes to stderr.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;

use crate::eigen::DEFAULT_TOLERANCE;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::invariant_reports;
use crate::product::star_product;
use crate::spectra::{closed_form_report, MatrixKind};
use crate::sweep::{run_verification, PairVerification, DEFAULT_MAX_ORDER};

const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Plain,
}

fn parse_kind(s: &str) -> std::result::Result<MatrixKind, String> {
    MatrixKind::parse(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "starprod",
    version,
    about = "Exact spectral toolkit for the star product of two graphs",
    long_about = "Constructs the star product of two graphs and verifies its closed-form \
                  Laplacian and signless-Laplacian spectra, Kirchhoff index, spanning-tree \
                  count, Wiener index and integrality against independent oracles.\n\n\
                  Graph specs: K<n>, C<n>, P<n>, S<n>, K<a>,<b>, Q<d>, petersen, or @<file> \
                  (edge list or graph6, auto-detected)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct the product and print counts, encodings and the labeling
    Product {
        spec1: String,
        spec2: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        out: OutputFormat,
    },
    /// Closed-form characteristic polynomial vs direct computation
    Charpoly {
        spec1: String,
        spec2: String,
        #[arg(long, value_parser = parse_kind, default_value = "L")]
        kind: MatrixKind,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        out: OutputFormat,
    },
    /// Product spectrum from the closed form (exact or numeric)
    Spectrum {
        spec1: String,
        spec2: String,
        #[arg(long, value_parser = parse_kind, default_value = "L")]
        kind: MatrixKind,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        out: OutputFormat,
    },
    /// Kirchhoff index, spanning trees and Wiener index with oracle verdicts
    Invariants {
        spec1: String,
        spec2: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        out: OutputFormat,
    },
    /// Run the full verification sweep
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        out: OutputFormat,
    },
}

/// Parses a graph spec: a family mnemonic or `@path`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    if let Some(path) = spec.strip_prefix('@') {
        return load_graph_file(path);
    }
    if spec == "petersen" {
        return Ok(Graph::petersen());
    }
    let (letter, rest) = spec.split_at(spec.len().min(1));
    let parse_num = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad graph spec `{spec}`")))
    };
    match letter {
        "K" if rest.contains(',') => {
            let (a, b) = rest.split_once(',').expect("checked");
            Graph::complete_bipartite(parse_num(a)?, parse_num(b)?)
        }
        "K" => Graph::complete(parse_num(rest)?),
        "C" => Graph::cycle(parse_num(rest)?),
        "P" => Graph::path(parse_num(rest)?),
        "S" => Graph::star(parse_num(rest)?),
        "Q" => Graph::hypercube(parse_num(rest)?),
        _ => Err(Error::Parse(format!("unknown graph spec `{spec}`"))),
    }
}

/// Loads a graph file, auto-detecting edge-list vs graph6 content: after
/// stripping comments, edge lists start with a decimal order while graph6
/// bytes all sit above the digit range.
fn load_graph_file(path: &str) -> Result<Graph> {
    let content = std::fs::read_to_string(path)?;
    let stripped: String = content
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    match stripped.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() => Graph::from_edge_list(&content),
        Some(_) => {
            let line = content
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or_default();
            graph6::from_graph6(line)
        }
        None => Err(Error::Parse(format!("file `{path}` holds no graph"))),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::UnknownFamily(_)
        | Error::InvalidFamilyParameter { .. }
        | Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..) => 4,
        Error::Disconnected => 3,
        Error::NotRegular(_)
        | Error::Precondition(_)
        | Error::NotSquare { .. }
        | Error::NotSymmetric
        | Error::DimensionMismatch(_)
        | Error::ZeroPolynomial
        | Error::NonIntegerCoefficients
        | Error::ZeroDenominator
        | Error::ExactDivisionFailed(_)
        | Error::JacobiNoConvergence => 2,
        Error::RouteDisagreement(_) | Error::Io(_) | Error::Json(_) => 1,
    }
}

/// Parses `args` and runs the requested command, writing results to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    4
                }
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code_for(&err)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Product { spec1, spec2, out: format } => {
            cmd_product(&spec1, &spec2, format, out)
        }
        Command::Charpoly { spec1, spec2, kind, tol, out: format } => {
            cmd_closed_form(&spec1, &spec2, kind, tol, format, out, ReportFocus::Charpoly)
        }
        Command::Spectrum { spec1, spec2, kind, tol, out: format } => {
            cmd_closed_form(&spec1, &spec2, kind, tol, format, out, ReportFocus::Spectrum)
        }
        Command::Invariants { spec1, spec2, out: format } => {
            cmd_invariants(&spec1, &spec2, format, out)
        }
        Command::Verify { max_order, jobs, tol, out: format } => {
            cmd_verify(max_order, jobs, tol, format, out, err)
        }
    }
}

fn graph_summary(spec: &str, g: &Graph) -> Value {
    json!({
        "spec": spec,
        "order": g.order(),
        "edges": g.size(),
    })
}

fn cmd_product(
    spec1: &str,
    spec2: &str,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let g1 = parse_graph_spec(spec1)?;
    let g2 = parse_graph_spec(spec2)?;
    let product = star_product(&g1, &g2);
    let expected = product.expected_edge_count();
    if product.graph.size() != expected {
        return Err(Error::RouteDisagreement(
            "edge count disagrees with the closed formula".into(),
        ));
    }
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "schema": SCHEMA_VERSION,
                "command": "product",
                "g1": graph_summary(spec1, &g1),
                "g2": graph_summary(spec2, &g2),
                "product": {
                    "order": product.graph.order(),
                    "edges": product.graph.size(),
                    "edge_formula": expected,
                    "formula_match": true,
                    "graph6": graph6::to_graph6(&product.graph),
                    "edge_list": product.graph.to_edge_list(),
                    "labeling": product.labeling.sidecar_json(),
                },
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&payload)?)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "index,class,i,k")?;
            for index in 0..product.labeling.len() {
                let label = product.labeling.label(index);
                let class = match label.class {
                    crate::product::VertexClass::A => "a",
                    crate::product::VertexClass::B => "b",
                };
                writeln!(out, "{index},{class},{},{}", label.i, label.k)?;
            }
        }
        OutputFormat::Plain => {
            writeln!(out, "g1: {spec1} (order {}, edges {})", g1.order(), g1.size())?;
            writeln!(out, "g2: {spec2} (order {}, edges {})", g2.order(), g2.size())?;
            writeln!(out, "product order: {}", product.graph.order())?;
            writeln!(out, "product edges: {}", product.graph.size())?;
            writeln!(
                out,
                "edge formula n2^2 (n1 + e1) + n1 e2 = {expected} (match)"
            )?;
            writeln!(out, "graph6: {}", graph6::to_graph6(&product.graph))?;
            writeln!(
                out,
                "labeling: a[i,k] -> i*n2 + k, b[i,k] -> n1*n2 + i*n2 + k (0-indexed)"
            )?;
        }
    }
    Ok(0)
}

enum ReportFocus {
    Charpoly,
    Spectrum,
}

fn cmd_closed_form(
    spec1: &str,
    spec2: &str,
    kind: MatrixKind,
    tol: f64,
    format: OutputFormat,
    out: &mut dyn Write,
    focus: ReportFocus,
) -> Result<i32> {
    let g1 = parse_graph_spec(spec1)?;
    let g2 = parse_graph_spec(spec2)?;
    let report = closed_form_report(&g1, &g2, kind, tol)?;
    match format {
        OutputFormat::Json => {
            let command = match focus {
                ReportFocus::Charpoly => "charpoly",
                ReportFocus::Spectrum => "spectrum",
            };
            let payload = json!({
                "schema": SCHEMA_VERSION,
                "command": command,
                "g1": graph_summary(spec1, &g1),
                "g2": graph_summary(spec2, &g2),
                "report": report.to_json(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&payload)?)?;
        }
        OutputFormat::Csv => match focus {
            ReportFocus::Charpoly => {
                writeln!(out, "degree,closed,direct")?;
                let closed = report.closed_poly.to_coeff_strings();
                let direct = report.direct_poly.to_coeff_strings();
                for (k, (c, d)) in closed.iter().zip(&direct).enumerate() {
                    writeln!(out, "{k},{c},{d}")?;
                }
            }
            ReportFocus::Spectrum => {
                writeln!(out, "value,multiplicity,kind")?;
                for (value, mult) in report.spectrum.entries() {
                    let kind_name = match value {
                        crate::eigen::Eigenvalue::Rational(_) => "rational",
                        crate::eigen::Eigenvalue::Surd(_) => "surd",
                        crate::eigen::Eigenvalue::Numeric { .. } => "numeric",
                    };
                    writeln!(out, "{value},{mult},{kind_name}")?;
                }
            }
        },
        OutputFormat::Plain => {
            writeln!(out, "kind: {}", report.kind.letter())?;
            writeln!(out, "closed = {}", report.closed_poly)?;
            writeln!(out, "direct = {}", report.direct_poly)?;
            writeln!(out, "equal: {}", report.equal)?;
            writeln!(out, "factors:")?;
            writeln!(out, "  linear    = {}", report.factors.linear)?;
            writeln!(out, "  shifted   = {}", report.factors.shifted)?;
            writeln!(out, "  quadratic = {}", report.factors.quadratic)?;
            writeln!(
                out,
                "spectrum{}: {}",
                if report.numeric_spectrum {
                    " (numeric fallback)"
                } else {
                    ""
                },
                report.spectrum
            )?;
        }
    }
    if report.equal {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn cmd_invariants(
    spec1: &str,
    spec2: &str,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let g1 = parse_graph_spec(spec1)?;
    let g2 = parse_graph_spec(spec2)?;
    let reports = invariant_reports(&g1, &g2)?;
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "schema": SCHEMA_VERSION,
                "command": "invariants",
                "g1": graph_summary(spec1, &g1),
                "g2": graph_summary(spec2, &g2),
                "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&payload)?)?;
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "name,literal,corrected,oracle,corrected_matches_oracle,literal_matches_oracle"
            )?;
            for report in &reports {
                writeln!(out, "{}", report.csv_row())?;
            }
        }
        OutputFormat::Plain => {
            for report in &reports {
                writeln!(out, "{}:", report.name.name())?;
                match &report.literal {
                    crate::invariants::LiteralValue::Finite(v) => {
                        writeln!(out, "  literal   = {v}")?;
                    }
                    crate::invariants::LiteralValue::Singular(reason) => {
                        writeln!(out, "  literal   = singular ({reason})")?;
                    }
                }
                writeln!(out, "  corrected = {}", report.corrected)?;
                writeln!(out, "  oracle    = {}", report.oracle)?;
                writeln!(
                    out,
                    "  verdicts  : corrected {} oracle, literal {} oracle",
                    if report.corrected_matches_oracle { "==" } else { "!=" },
                    if report.literal_matches_oracle { "==" } else { "!=" },
                )?;
                if let Some(detail) = &report.wiener {
                    match &detail.low_order_variant {
                        Some(v) => writeln!(
                            out,
                            "  low-order coefficient variant = {v} ({} oracle)",
                            if detail.low_order_matches_oracle { "==" } else { "!=" }
                        )?,
                        None => writeln!(out, "  low-order coefficient variant = undefined")?,
                    }
                    writeln!(
                        out,
                        "  uncapped form applicable (diam <= 2): {}",
                        detail.uncapped_applicable
                    )?;
                }
            }
        }
    }
    let all_ok = reports.iter().all(|r| r.corrected_matches_oracle);
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_verify(
    max_order: usize,
    jobs: Option<usize>,
    tol: f64,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let run = run_verification(max_order, jobs, tol)?;

    // Timing summary is the one nondeterministic artifact; stderr only.
    writeln!(err, "g1,g2,millis")?;
    for pair in &run.pairs {
        writeln!(err, "{},{},{}", pair.name1, pair.name2, pair.millis)?;
    }

    match format {
        OutputFormat::Json => {
            let mut payload = run.to_json();
            payload["schema"] = json!(SCHEMA_VERSION);
            payload["command"] = json!("verify");
            payload["max_order"] = json!(max_order);
            writeln!(out, "{}", serde_json::to_string_pretty(&payload)?)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "{}", PairVerification::csv_header())?;
            for pair in &run.pairs {
                writeln!(out, "{}", pair.csv_row())?;
            }
        }
        OutputFormat::Plain => {
            writeln!(
                out,
                "verification sweep: {} ordered pairs, product order <= {max_order}",
                run.pairs.len()
            )?;
            for pair in &run.pairs {
                if pair.pass() {
                    let mut notes = Vec::new();
                    if pair.numeric_spectrum {
                        notes.push("numeric spectrum");
                    }
                    if !pair.wiener_uncapped_applicable {
                        notes.push("uncapped Wiener form inapplicable (diam > 2)");
                    }
                    writeln!(
                        out,
                        "PASS {} * {} (order {}){}",
                        pair.name1,
                        pair.name2,
                        pair.order,
                        if notes.is_empty() {
                            String::new()
                        } else {
                            format!(" [{}]", notes.join("; "))
                        }
                    )?;
                } else {
                    writeln!(
                        out,
                        "FAIL {} * {} (order {}): {}",
                        pair.name1,
                        pair.name2,
                        pair.order,
                        failing_checks(pair).join(", ")
                    )?;
                }
            }
            let corona_ok = run.corona.iter().filter(|c| c.ok).count();
            writeln!(
                out,
                "corona reduction (one-vertex second factor): {corona_ok}/{} ok",
                run.corona.len()
            )?;
            let literal_kirchhoff = run
                .pairs
                .iter()
                .filter(|p| p.kirchhoff_literal_singular)
                .count();
            let literal_trees = run.pairs.iter().filter(|p| p.trees_literal_zero).count();
            let low_order = run
                .pairs
                .iter()
                .filter(|p| p.wiener_low_order_matches)
                .count();
            writeln!(
                out,
                "annotations: literal Kirchhoff form singular on {literal_kirchhoff} pairs; \
                 literal tree-count form zero on {literal_trees} pairs; \
                 low-order Wiener variant matched the oracle on {low_order} pairs"
            )?;
            writeln!(
                out,
                "result: {}",
                if run.all_pass() {
                    "ALL CHECKS PASSED"
                } else {
                    "FAILURES DETECTED"
                }
            )?;
        }
    }
    Ok(if run.all_pass() { 0 } else { 1 })
}

fn failing_checks(pair: &PairVerification) -> Vec<&'static str> {
    let mut failures = Vec::new();
    let checks: [(&'static str, bool); 14] = [
        ("edge_formula", pair.edge_formula_ok),
        ("blocks", pair.blocks_match),
        ("charpoly_l", pair.charpoly_equal_l),
        ("charpoly_q", pair.charpoly_equal_q),
        ("spectrum_l", pair.spectrum_ok_l),
        ("spectrum_q", pair.spectrum_ok_q),
        ("kirchhoff", pair.kirchhoff_ok),
        ("trees", pair.trees_ok),
        ("wiener_capped", pair.wiener_capped_ok),
        ("wiener_uncapped", pair.wiener_uncapped_consistent),
        ("integrality_l", pair.integrality_agree_l),
        ("integrality_q", pair.integrality_agree_q),
        ("jacobi", pair.jacobi_ok),
        ("relabel", pair.relabel_ok),
    ];
    for (name, ok) in checks {
        if !ok {
            failures.push(name);
        }
    }
    failures
}
