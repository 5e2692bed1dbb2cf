//! Batch front end: build the graded graph pair of an instance, run the
//! verification pipeline, or print dimension tables.
//!
//! Exit codes are a stable contract for CI: 0 all checks pass, 1 a
//! verification check failed (the report is still printed), 2 usage error,
//! 3 internal or instance construction error. Identical invocations print
//! byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hopftower::construct::{
    differential_coefficient, gamma_from_beta, gamma_prime_from_alpha, GraphSide,
};
use hopftower::graph::{check_duality, fomin_check, DualityOutcome, GradedGraph};
use hopftower::hopf::HopfPair;
use hopftower::instances::{by_key, canonical_alpha_beta};
use hopftower::tower::{tower_from_graph_pair, TowerDims};
use hopftower::Error;

const DEFAULT_RANK: usize = 6;
const DEFAULT_MAX_RANK: usize = 8;
const MAX_RANK_ENV: &str = "HOPFTOWER_MAX_RANK";

const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INTERNAL: i32 = 3;

#[derive(Parser)]
#[command(
    name = "hopftower",
    version,
    about = "Dual graded graphs from structure-constant Hopf algebra pairs, with exact verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a constructed graded graph in DOT, JSON, or plain text.
    Graph(GraphArgs),
    /// Run the full verification pipeline and report every check.
    Verify(VerifyArgs),
    /// Print the per-rank dimension table against r^n * n!.
    Dims(DimsArgs),
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Instance key.
    #[arg(long, value_parser = ["sym", "nsym-qsym"])]
    instance: String,
    /// Weight pairs a:b for the degree-1 elements, comma separated; a bare
    /// integer k means 1:k (scales the upper element). Defaults to all ones.
    #[arg(long)]
    weights: Option<String>,
    /// Highest rank to materialize.
    #[arg(long, default_value_t = DEFAULT_RANK)]
    rank: usize,
    /// Multiply by the degree-1 element on the left or the right.
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    /// Which of the two graphs to emit.
    #[arg(long, value_enum, default_value_t = WhichGraph::Gamma)]
    which: WhichGraph,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Instance key.
    #[arg(long, value_parser = ["sym", "nsym-qsym"])]
    instance: String,
    /// Weight pairs a:b for the degree-1 elements, comma separated; a bare
    /// integer k means 1:k (scales the upper element). Defaults to all ones.
    #[arg(long)]
    weights: Option<String>,
    /// Degree and rank cutoff for every check.
    #[arg(long, default_value_t = DEFAULT_RANK)]
    rank: usize,
    /// Multiply by the degree-1 element on the left or the right.
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(clap::Args)]
struct DimsArgs {
    /// Instance key; mutually exclusive with --dims-file.
    #[arg(long, value_parser = ["sym", "nsym-qsym"], conflicts_with = "dims_file")]
    instance: Option<String>,
    /// JSON dimension table {ranks: [[{dimS, dimP}, ...], ...]}.
    #[arg(long)]
    dims_file: Option<PathBuf>,
    /// Highest rank to tabulate; defaults to the file's depth or 6.
    #[arg(long)]
    rank: Option<usize>,
    /// Weight pairs for the degree-1 elements (instance mode only).
    #[arg(long)]
    weights: Option<String>,
    /// Multiply by the degree-1 element on the left or the right.
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl SideArg {
    fn to_graph_side(self) -> GraphSide {
        match self {
            SideArg::Left => GraphSide::Left,
            SideArg::Right => GraphSide::Right,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SideArg::Left => "left",
            SideArg::Right => "right",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichGraph {
    Gamma,
    #[value(name = "gamma-prime")]
    GammaPrime,
    Both,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Graph(args) => cmd_graph(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Dims(args) => cmd_dims(args),
    };
    std::process::exit(code);
}

fn usage_error(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn internal_error(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_INTERNAL
}

/// Configured rank cap: the environment variable overrides the default.
fn rank_cap() -> Result<usize, String> {
    match std::env::var(MAX_RANK_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| format!("{MAX_RANK_ENV} must be a nonnegative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_MAX_RANK),
    }
}

fn check_rank(rank: usize) -> Result<(), i32> {
    let cap = rank_cap().map_err(usage_error)?;
    if rank > cap {
        return Err(usage_error(format!(
            "rank {rank} exceeds the configured maximum {cap} (set {MAX_RANK_ENV} to raise it)"
        )));
    }
    Ok(())
}

/// Parses `a:b[,a:b...]`; a bare integer k stands for 1:k.
fn parse_weights(raw: &str) -> Result<Vec<(i64, i64)>, String> {
    let mut out = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        let pair = match token.split_once(':') {
            Some((a, b)) => {
                let a = a.parse::<i64>().map_err(|_| format!("bad weight {token:?}"))?;
                let b = b.parse::<i64>().map_err(|_| format!("bad weight {token:?}"))?;
                (a, b)
            }
            None => {
                let k = token.parse::<i64>().map_err(|_| format!("bad weight {token:?}"))?;
                (1, k)
            }
        };
        out.push(pair);
    }
    Ok(out)
}

fn weights_display(weights: &[(i64, i64)]) -> String {
    weights
        .iter()
        .map(|(a, b)| format!("{a}:{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

struct Pipeline {
    pair: HopfPair,
    weights: Vec<(i64, i64)>,
    gamma: GradedGraph,
    gamma_prime: GradedGraph,
    pairing: i64,
}

/// Builds instance, weighted degree-1 elements, and both graphs; weight
/// problems are usage errors, everything else is an internal error.
fn build_pipeline(
    instance: &str,
    weights: &Option<String>,
    rank: usize,
    side: GraphSide,
) -> Result<Pipeline, i32> {
    let pair = by_key(instance).map_err(internal_error)?;
    let weights = match weights {
        Some(raw) => parse_weights(raw).map_err(usage_error)?,
        None => vec![(1, 1); pair.degree_one_elements(hopftower::element::Side::Lower).len()],
    };
    let (alpha, beta) = match canonical_alpha_beta(&pair, &weights) {
        Ok(pair) => pair,
        Err(e @ (Error::WeightCount { .. } | Error::NonpositiveWeight(_))) => {
            return Err(usage_error(e))
        }
        Err(e) => return Err(internal_error(e)),
    };
    let gamma = gamma_from_beta(&pair, &beta, rank, side).map_err(internal_error)?;
    let gamma_prime =
        gamma_prime_from_alpha(&pair, &alpha, rank, side).map_err(internal_error)?;
    let pairing = differential_coefficient(&pair, &alpha, &beta).map_err(internal_error)?;
    Ok(Pipeline { pair, weights, gamma, gamma_prime, pairing })
}

fn cmd_graph(args: GraphArgs) -> i32 {
    if let Err(code) = check_rank(args.rank) {
        return code;
    }
    let pipeline =
        match build_pipeline(&args.instance, &args.weights, args.rank, args.side.to_graph_side()) {
            Ok(p) => p,
            Err(code) => return code,
        };
    let selected: Vec<(&str, &GradedGraph)> = match args.which {
        WhichGraph::Gamma => vec![("gamma", &pipeline.gamma)],
        WhichGraph::GammaPrime => vec![("gamma_prime", &pipeline.gamma_prime)],
        WhichGraph::Both => {
            vec![("gamma", &pipeline.gamma), ("gamma_prime", &pipeline.gamma_prime)]
        }
    };
    match args.format {
        GraphFormat::Dot => {
            for (name, graph) in selected {
                match graph.to_dot(name, args.rank) {
                    Ok(dot) => print!("{dot}"),
                    Err(e) => return internal_error(e),
                }
            }
        }
        GraphFormat::Json => {
            let mut doc = serde_json::Map::new();
            for (name, graph) in selected {
                match graph.to_json_value(args.rank) {
                    Ok(v) => {
                        doc.insert(name.to_string(), v);
                    }
                    Err(e) => return internal_error(e),
                }
            }
            let value = if doc.len() == 1 {
                doc.into_iter().next().unwrap().1
            } else {
                serde_json::Value::Object(doc)
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
        }
        GraphFormat::Text => {
            for (name, graph) in selected {
                print!("{}", render_graph_text(name, graph, args.rank));
            }
        }
    }
    0
}

fn render_graph_text(name: &str, graph: &GradedGraph, max_rank: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} (ranks 0..{max_rank})");
    for n in 0..=max_rank {
        let verts = graph.vertices(n).expect("rank materialized");
        let _ = writeln!(out, "rank {n}: {}", verts.join(" "));
    }
    for n in 0..max_rank {
        let _ = writeln!(out, "matrix {n} -> {}:", n + 1);
        let rows = graph.vertices(n).expect("rank materialized").len();
        let cols = graph.vertices(n + 1).expect("rank materialized").len();
        for i in 0..rows {
            let row: Vec<String> = (0..cols)
                .map(|j| graph.multiplicity(n, i, j).expect("in range").to_string())
                .collect();
            let _ = writeln!(out, "  {}", row.join(" "));
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.rank == 0 {
        return usage_error("verify needs --rank >= 1 (the commutator looks one rank up)");
    }
    if let Err(code) = check_rank(args.rank) {
        return code;
    }
    let pipeline =
        match build_pipeline(&args.instance, &args.weights, args.rank, args.side.to_graph_side()) {
            Ok(p) => p,
            Err(code) => return code,
        };
    let rank = args.rank;
    let duality = match pipeline.pair.verify_duality(rank as u32) {
        Ok(r) => r,
        Err(e) => return internal_error(e),
    };
    let bialgebra = match pipeline.pair.verify_bialgebra(rank as u32) {
        Ok(r) => r,
        Err(e) => return internal_error(e),
    };
    let graph_duality = match check_duality(&pipeline.gamma, &pipeline.gamma_prime, rank) {
        Ok(o) => o,
        Err(e) => return internal_error(e),
    };
    // the remaining checks only make sense on a dual pair
    let downstream = match &graph_duality {
        DualityOutcome::Dual { .. } => {
            let fomin = match fomin_check(&pipeline.gamma, &pipeline.gamma_prime, rank) {
                Ok(r) => r,
                Err(e) => return internal_error(e),
            };
            let tower = match tower_from_graph_pair(&pipeline.gamma, &pipeline.gamma_prime, rank) {
                Ok(t) => t,
                Err(e) => return internal_error(e),
            };
            let dims = match tower.verify_dimension_theorem(rank) {
                Ok(r) => r,
                Err(e) => return internal_error(e),
            };
            Some((fomin, dims))
        }
        DualityOutcome::NotDual { .. } => None,
    };

    let coefficient_matches = matches!(
        &graph_duality,
        DualityOutcome::Dual { r } if *r == pipeline.pairing
    );
    let pass = duality.passed()
        && bialgebra.passed()
        && coefficient_matches
        && downstream
            .as_ref()
            .map(|(fomin, dims)| fomin.passed() && dims.passed())
            .unwrap_or(false);

    match args.format {
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "hopftower verify");
            let _ = writeln!(out, "instance: {}", args.instance);
            let _ = writeln!(out, "weights: {}", weights_display(&pipeline.weights));
            let _ = writeln!(out, "side: {}", args.side.name());
            let _ = writeln!(out, "rank: {rank}");
            let _ = writeln!(out);
            render_axiom_report(&mut out, "hopf-duality", &duality);
            render_axiom_report(&mut out, "hopf-bialgebra", &bialgebra);
            match &graph_duality {
                DualityOutcome::Dual { r } => {
                    let verdict = if coefficient_matches { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "check graph-duality (ranks <= {}): {verdict} (r = {r}, <alpha,beta> = {})",
                        rank.saturating_sub(1),
                        pipeline.pairing
                    );
                }
                DualityOutcome::NotDual { failures } => {
                    let _ = writeln!(
                        out,
                        "check graph-duality (ranks <= {}): FAIL ({} non-scalar commutators)",
                        rank.saturating_sub(1),
                        failures.len()
                    );
                    for f in failures {
                        let _ = writeln!(
                            out,
                            "  rank {}: commutator != {}*I: {:?}",
                            f.rank, f.expected_r, f.commutator
                        );
                    }
                }
            }
            if let Some((fomin, dims)) = &downstream {
                let verdict = if fomin.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "check fomin (ranks <= {rank}): {verdict}");
                for row in &fomin.rows {
                    let _ = writeln!(
                        out,
                        "  n={}: sum f*f' = {}, r^n*n! = {}",
                        row.rank, row.path_product_sum, row.factorial_side
                    );
                }
                let verdict = if dims.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "check dimension (ranks <= {rank}): {verdict} (r = {})", dims.r);
                for row in &dims.rows {
                    let _ = writeln!(
                        out,
                        "  n={}: dim = {}, r^n*n! = {}",
                        row.rank, row.dimension, row.expected
                    );
                }
            } else {
                let _ = writeln!(out, "check fomin (ranks <= {rank}): SKIPPED (pair not dual)");
                let _ = writeln!(out, "check dimension (ranks <= {rank}): SKIPPED (pair not dual)");
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "result: {}", if pass { "PASS" } else { "FAIL" });
            print!("{out}");
        }
        ReportFormat::Json => {
            let mut checks = vec![duality.to_json(), bialgebra.to_json()];
            match &graph_duality {
                DualityOutcome::Dual { r } => checks.push(json!({
                    "check": "graph-duality",
                    "rank": rank,
                    "r": r,
                    "pairing": pipeline.pairing,
                    "failures": [],
                })),
                DualityOutcome::NotDual { failures } => checks.push(json!({
                    "check": "graph-duality",
                    "rank": rank,
                    "r": serde_json::Value::Null,
                    "pairing": pipeline.pairing,
                    "failures": failures.iter().map(|f| json!({
                        "rank": f.rank,
                        "expected_r": f.expected_r,
                        "commutator": f.commutator,
                    })).collect::<Vec<_>>(),
                })),
            }
            if let Some((fomin, dims)) = &downstream {
                checks.push(json!({
                    "check": "fomin",
                    "rank": rank,
                    "r": fomin.r,
                    "rows": fomin.rows.iter().map(|row| json!({
                        "n": row.rank,
                        "sum": row.path_product_sum,
                        "expected": row.factorial_side,
                    })).collect::<Vec<_>>(),
                }));
                checks.push(json!({
                    "check": "dimension",
                    "rank": rank,
                    "r": dims.r,
                    "rows": dims.rows.iter().map(|row| json!({
                        "n": row.rank,
                        "dim": row.dimension,
                        "expected": row.expected,
                    })).collect::<Vec<_>>(),
                }));
            }
            let doc = json!({
                "instance": args.instance,
                "weights": pipeline.weights.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "side": args.side.name(),
                "rank": rank,
                "checks": checks,
                "pass": pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
        }
    }
    if pass {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}

fn render_axiom_report(out: &mut String, name: &str, report: &hopftower::hopf::VerifyReport) {
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "check {name} (degrees <= {}): {verdict} ({} violations)",
        report.rank,
        report.violations.len()
    );
    for v in &report.violations {
        let _ = writeln!(
            out,
            "  {} side, {} at [{}]: lhs = {}, rhs = {}",
            v.side,
            v.equation,
            v.labels.join(", "),
            v.lhs,
            v.rhs
        );
    }
}

fn cmd_dims(args: DimsArgs) -> i32 {
    let (tower, rank, heading) = if let Some(path) = &args.dims_file {
        let raw = match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return internal_error(format!("cannot read {}: {e}", path.display())),
        };
        let tower = match TowerDims::from_json_str(&raw) {
            Ok(t) => t,
            Err(e) => return internal_error(e),
        };
        let rank = args.rank.unwrap_or_else(|| tower.max_rank());
        (tower, rank, format!("dims-file: {}", path.display()))
    } else if let Some(instance) = &args.instance {
        let rank = args.rank.unwrap_or(DEFAULT_RANK);
        if let Err(code) = check_rank(rank) {
            return code;
        }
        let pipeline =
            match build_pipeline(instance, &args.weights, rank, args.side.to_graph_side()) {
                Ok(p) => p,
                Err(code) => return code,
            };
        let tower = match tower_from_graph_pair(&pipeline.gamma, &pipeline.gamma_prime, rank) {
            Ok(t) => t,
            Err(e) => return internal_error(e),
        };
        (tower, rank, format!("instance: {instance}"))
    } else {
        return usage_error("one of --instance or --dims-file is required");
    };

    let report = match tower.verify_dimension_theorem(rank) {
        Ok(r) => r,
        Err(e) => return internal_error(e),
    };
    println!("hopftower dims");
    println!("{heading}");
    println!("r: {}", report.r);
    println!("n | sum(dimP*dimS) | r^n*n! | status");
    for row in &report.rows {
        let status = if row.dimension == row.expected { "ok" } else { "FAIL" };
        println!("{} | {} | {} | {status}", row.rank, row.dimension, row.expected);
    }
    println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
    if report.passed() {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}
