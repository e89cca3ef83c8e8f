//! Command-line driver. [`run`] parses arguments, writes the JSON report to
//! `out` and diagnostics to `err`, and returns the process exit code.
//!
//! Exit codes: 0 success, 1 verify sweep found a counterexample,
//! 2 parse/validation failure, 3 routing not applicable to the graph,
//! 4 exact optimization refused for oversize input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::Winner;
use crate::constructions::{
    bfs_tree, counterexample_routing, dfs_tree, eulerian_counterexample_routing,
    geodesic_routing, hamiltonian_path_tree, long_path_counterexample_routing,
    random_spanning_tree, spanning_tree_routing, star_tree, ConstructionError,
};
use crate::graph::{complete_graph, cycle_graph, path_graph, random_tree, star_graph, Graph};
use crate::optimizer::{
    enumerate_optimal, local_search, optimal_bound_comparison, BoundComparison, Objective,
    ObjectiveValue, OptimizerError, SearchLimits,
};
use crate::report::{analyze, AnalysisOptions};
use crate::routing::Routing;
use crate::verify::{run_sweep, Suite, SweepConfig};

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_OVERSIZE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "canonical-paths",
    about = "Poincaré and Cheeger eigenvalue bounds for random walk on graphs under canonical-path routings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute bounds, spectrum and checker verdicts for one routing.
    Analyze {
        #[command(flatten)]
        graph: GraphSource,
        /// geodesic, tree:BUILDER (bfs, dfs, hamiltonian, star, random),
        /// file:PATH, counterexample, eulerian or long:LENGTH
        #[arg(long, default_value = "geodesic")]
        routing: String,
        /// Seed for random graphs and random trees.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also report the total-variation series up to this many steps.
        #[arg(long)]
        tv_rmax: Option<usize>,
        /// Start vertex for the total-variation series.
        #[arg(long, default_value_t = 0)]
        tv_start: usize,
    },
    /// Search for a routing minimizing an objective.
    Optimize {
        #[command(flatten)]
        graph: GraphSource,
        /// gamma-b | b | poincare | cheeger
        #[arg(long, default_value = "gamma-b")]
        objective: Objective,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Largest graph the exact search accepts.
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        max_vertices: usize,
        /// Branch-and-bound node budget for the exact search.
        #[arg(long, default_value_t = SearchLimits::default().max_evaluations)]
        max_evaluations: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on accepted local-search moves.
        #[arg(long, default_value_t = 10_000)]
        max_iters: usize,
        /// In exact mode, also compare the best Poincaré and best Cheeger bounds.
        #[arg(long)]
        compare: bool,
    },
    /// Run a randomized sweep checking one of the bound theorems.
    Verify {
        /// theorem1 | theorem2 | lemma1 | lemma2 | bounds-validity | tv
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        rmax: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Local,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Complete graph K_N.
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    /// Cycle C_N.
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    /// Path on N vertices.
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    /// Star on N vertices, centre 0.
    #[arg(long, value_name = "N")]
    pub star: Option<usize>,
    /// Random recursive tree on N vertices with shuffled labels (uses --seed).
    #[arg(long, value_name = "N")]
    pub tree_random: Option<usize>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn inapplicable(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INAPPLICABLE,
            message: message.into(),
        }
    }
}

fn load_graph(source: &GraphSource, seed: u64) -> Result<Graph, Failure> {
    let result = if let Some(path) = &source.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
        Graph::from_edge_list(&text)
    } else if let Some(n) = source.complete {
        complete_graph(n)
    } else if let Some(n) = source.cycle {
        cycle_graph(n)
    } else if let Some(n) = source.path {
        path_graph(n)
    } else if let Some(n) = source.star {
        star_graph(n)
    } else if let Some(n) = source.tree_random {
        random_tree(n, seed)
    } else {
        unreachable!("clap requires one graph source")
    };
    result.map_err(|e| Failure::invalid(format!("graph: {e}")))
}

fn construction_failure(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::NotSpanning(_) | ConstructionError::Graph(_) => {
            Failure::invalid(e.to_string())
        }
        _ => Failure::inapplicable(e.to_string()),
    }
}

/// Builds the routing named by `spec`; the flag says whether it is a
/// spanning-tree routing.
fn build_routing(graph: &Graph, spec: &str, seed: u64) -> Result<(Routing, bool), Failure> {
    let n = graph.vertex_count();
    let need_complete = |what: &str| {
        if graph.is_complete() {
            Ok(())
        } else {
            Err(Failure::inapplicable(format!("{what} routing requires a complete graph")))
        }
    };
    let routing = match spec.split_once(':') {
        None if spec == "geodesic" => (geodesic_routing(graph), false),
        None if spec == "counterexample" => {
            need_complete("counterexample")?;
            (counterexample_routing(n).map_err(construction_failure)?, false)
        }
        None if spec == "eulerian" => {
            need_complete("eulerian")?;
            (eulerian_counterexample_routing(n).map_err(construction_failure)?, false)
        }
        Some(("long", len)) => {
            need_complete("long-path")?;
            let len = len
                .parse()
                .map_err(|_| Failure::invalid(format!("invalid long path length {len:?}")))?;
            (long_path_counterexample_routing(n, len).map_err(construction_failure)?, false)
        }
        Some(("tree", kind)) => {
            let tree = match kind {
                "bfs" => bfs_tree(graph, 0),
                "dfs" => dfs_tree(graph, 0),
                "hamiltonian" => hamiltonian_path_tree(graph),
                "star" => star_tree(graph, 0),
                "random" => Ok(random_spanning_tree(graph, seed)),
                other => return Err(Failure::invalid(format!("unknown tree builder {other:?}"))),
            }
            .map_err(construction_failure)?;
            (spanning_tree_routing(graph, &tree).map_err(construction_failure)?, true)
        }
        Some(("file", path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("{path}: {e}")))?;
            let routing =
                Routing::parse(&text, n).map_err(|e| Failure::invalid(format!("routing: {e}")))?;
            (routing, false)
        }
        _ => return Err(Failure::invalid(format!("unknown routing {spec:?}"))),
    };
    if let Err(violations) = routing.0.validate(graph) {
        let lines: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
        return Err(Failure::invalid(format!(
            "invalid routing ({} violations):\n{}",
            violations.len(),
            lines.join("\n")
        )));
    }
    Ok(routing)
}

#[derive(Debug, Serialize)]
struct OptimizeReport {
    objective: Objective,
    mode: &'static str,
    value: ObjectiveValue,
    optimal: bool,
    evaluations: u64,
    gamma_star: u64,
    bottleneck: u64,
    winner: Winner,
    routing: Vec<String>,
    comparison: Option<BoundComparison>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    suite: String,
    checks: usize,
    failures: usize,
    passed: bool,
}

fn optimizer_failure(e: OptimizerError) -> Failure {
    Failure {
        code: EXIT_OVERSIZE,
        message: e.to_string(),
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Analyze {
            graph,
            routing,
            seed,
            tv_rmax,
            tv_start,
        } => {
            let g = load_graph(&graph, seed)?;
            let (r, is_tree) = build_routing(&g, &routing, seed)?;
            if tv_rmax.is_some() && tv_start >= g.vertex_count() {
                return Err(Failure::invalid(format!("tv start vertex {tv_start} out of range")));
            }
            let options = AnalysisOptions {
                routing_tag: routing,
                spanning_tree_routing: is_tree,
                tv: tv_rmax.map(|r| (tv_start, r.max(1))),
            };
            let report = analyze(&g, &r, &options).map_err(|e| Failure::invalid(e.to_string()))?;
            writeln!(out, "{}", report.to_json()).ok();
            Ok(0)
        }
        Command::Optimize {
            graph,
            objective,
            mode,
            max_vertices,
            max_evaluations,
            seed,
            max_iters,
            compare,
        } => {
            let g = load_graph(&graph, seed)?;
            let limits = SearchLimits {
                max_vertices,
                max_evaluations,
            };
            let result = match mode {
                Mode::Exact => enumerate_optimal(&g, objective, limits).map_err(optimizer_failure)?,
                Mode::Local => local_search(&g, objective, seed, max_iters),
            };
            let comparison = match (mode, compare) {
                (Mode::Exact, true) => {
                    Some(optimal_bound_comparison(&g, limits).map_err(optimizer_failure)?)
                }
                _ => None,
            };
            let bounds = crate::bounds::compare(&g, &result.routing);
            let report = OptimizeReport {
                objective,
                mode: match mode {
                    Mode::Exact => "exact",
                    Mode::Local => "local",
                },
                value: result.value,
                optimal: result.optimal,
                evaluations: result.evaluations,
                gamma_star: bounds.gamma_star,
                bottleneck: bounds.bottleneck,
                winner: bounds.winner,
                routing: result.routing.to_text().lines().map(str::to_string).collect(),
                comparison,
            };
            writeln!(out, "{}", to_json(&report)).ok();
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            trials,
            seed,
            rmax,
        } => {
            let config = SweepConfig {
                max_n: max_n.max(2),
                trials,
                seed,
                r_max: rmax.max(1),
            };
            let summary = run_sweep(suite, &config).map_err(|e| Failure::invalid(e.to_string()))?;
            for failure in &summary.failures {
                writeln!(err, "counterexample in {suite}:\n{failure}").ok();
            }
            let report = VerifyReport {
                suite: suite.to_string(),
                checks: summary.checks,
                failures: summary.failures.len(),
                passed: summary.passed(),
            };
            writeln!(out, "{}", to_json(&report)).ok();
            Ok(if summary.passed() { 0 } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(failure) => {
            writeln!(err, "error: {}", failure.message).ok();
            failure.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["canonical-paths"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn inapplicable_routing_exits_3() {
        let (code, _, err) = run_capture(&["analyze", "--cycle", "5", "--routing", "counterexample"]);
        assert_eq!(code, EXIT_INAPPLICABLE);
        assert!(err.contains("complete graph"));
        let (code, _, _) = run_capture(&["analyze", "--complete", "6", "--routing", "eulerian"]);
        assert_eq!(code, EXIT_INAPPLICABLE);
        let (code, _, _) = run_capture(&["analyze", "--path", "4", "--routing", "tree:star"]);
        assert_eq!(code, EXIT_INAPPLICABLE);
    }

    #[test]
    fn bad_arguments_exit_2() {
        let (code, _, _) = run_capture(&["analyze", "--complete", "1"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_capture(&["analyze", "--complete", "4", "--routing", "nope"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_capture(&["analyze"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, _, _) = run_capture(&["analyze", "--complete", "4", "--cycle", "4"]);
        assert_eq!(code, EXIT_INVALID);
    }
}
