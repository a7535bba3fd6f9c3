//! `zspline` — command-line access to the integer-spline library.
//!
//! Every command reads JSON documents, calls one library routine, and
//! prints a single compact JSON object with sorted keys and a trailing
//! newline, so identical inputs always produce identical bytes.
//!
//! Exit codes: 0 success/valid, 1 invalid/no-solution (the payload still
//! explains itself: `{"valid":false,...}` or `{"solvable":false}`),
//! 2 usage or domain error, 3 internal invariant violation (never
//! expected in a correct build).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use zspline::arith::{crt_system, Congruence};
use zspline::cycle;
use zspline::families::{complete_extend, star_center, wheel_extend};
use zspline::graph::EdgeLabeledGraph;
use zspline::json::{
    basis_to_value, graph_from_value, int_to_value, ints_to_value, spline_from_value,
};
use zspline::oracle::{enumerate_splines, DEFAULT_BUDGET};
use zspline::spline::{verify, Spline, Verdict};
use zspline::Error;

#[derive(Parser)]
#[command(
    name = "zspline",
    version,
    about = "Integer splines on edge-labeled graphs: flow-up bases, verification, \
             decomposition, congruence solving, and bounded enumeration."
)]
struct Cli {
    /// Output format; only "json" is available.
    #[arg(long, global = true, default_value = "json", value_parser = ["json"])]
    format: String,

    /// Seed for randomized tooling; accepted everywhere so scripted runs
    /// can pass it uniformly. Current commands are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Work budget for enumeration-backed commands, in candidate values
    /// examined.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the flow-up basis of a cycle graph.
    Basis {
        /// Path to a cycle graph document.
        graph: PathBuf,
    },
    /// Check a spline against a graph's edge congruences.
    Verify {
        /// Path to a graph document.
        graph: PathBuf,
        /// Path to a spline document.
        spline: PathBuf,
    },
    /// Express a spline as exact integer multiples of the cycle's flow-up
    /// basis.
    Decompose {
        /// Path to a cycle graph document.
        graph: PathBuf,
        /// Path to a spline document.
        spline: PathBuf,
    },
    /// Solve for a star's center value given its leaf values.
    SolveStar {
        /// Comma-separated edge labels, leaf i to the center.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        labels: Vec<String>,
        /// Comma-separated leaf values.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        leaves: Vec<String>,
    },
    /// Extend a valid spline by one vertex: a hub over a cycle (--wheel)
    /// or a new vertex joined to every vertex of a complete graph
    /// (--complete).
    #[command(group(ArgGroup::new("target").required(true).args(["wheel", "complete"])))]
    Extend {
        /// Treat the graph as a rim and solve for a hub using --spokes.
        #[arg(long, requires = "spokes")]
        wheel: bool,
        /// Grow a complete graph by one vertex using --star.
        #[arg(long, requires = "star")]
        complete: bool,
        /// Path to the base graph document (cycle for --wheel, complete
        /// for --complete).
        graph: PathBuf,
        /// Path to the base spline document.
        spline: PathBuf,
        /// Comma-separated spoke labels, rim vertex i to the hub.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        spokes: Option<Vec<String>>,
        /// Comma-separated star labels, vertex i to the new vertex.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        star: Option<Vec<String>>,
    },
    /// List every spline with entries in [0, bound), in lexicographic
    /// order.
    Enumerate {
        /// Path to a graph document.
        graph: PathBuf,
        /// Exclusive upper bound on entry values.
        #[arg(long, required = true)]
        bound: u64,
    },
    /// Solve simultaneous congruences given as "r,m;r,m;...".
    Crt {
        /// Semicolon-separated residue,modulus pairs.
        #[arg(long, required = true, allow_hyphen_values = true)]
        pairs: String,
    },
}

/// A command's payload, tagged with which exit code it deserves.
enum Outcome {
    /// Exit 0: the requested object or a positive verdict.
    Success(Value),
    /// Exit 1: a well-formed negative answer (invalid spline, no
    /// solution).
    Negative(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success(payload)) => {
            emit(&payload);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Negative(payload)) => {
            emit(&payload);
            ExitCode::from(1)
        }
        Err(Error::InvalidSpline(message)) => {
            // Domain answer, not a usage problem: the inputs parsed but the
            // labeling is not a spline (or not one this operation accepts).
            eprintln!("error: {message}");
            emit(&json!({ "valid": false }));
            ExitCode::from(1)
        }
        Err(err @ Error::Internal(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Basis { graph } => {
            let graph = load_graph(graph)?;
            let basis = cycle::flow_up_basis(graph.cycle_labels()?)?;
            Ok(Outcome::Success(basis_to_value(&basis)))
        }
        Command::Verify { graph, spline } => {
            let graph = load_graph(graph)?;
            let spline = load_spline(spline)?;
            match verify(&graph, &spline)? {
                Verdict::Valid => Ok(Outcome::Success(json!({ "valid": true }))),
                Verdict::Violation(violation) => Ok(Outcome::Negative(json!({
                    "edge": violation.edge,
                    "label": int_to_value(&violation.label),
                    "u": violation.u,
                    "v": violation.v,
                    "valid": false,
                }))),
            }
        }
        Command::Decompose { graph, spline } => {
            let graph = load_graph(graph)?;
            let spline = load_spline(spline)?;
            let coefficients = cycle::decompose(graph.cycle_labels()?, &spline)?;
            Ok(Outcome::Success(json!({
                "coefficients": ints_to_value(&coefficients),
            })))
        }
        Command::SolveStar { labels, leaves } => {
            let labels = parse_ints(labels, "--labels")?;
            let leaves = parse_ints(leaves, "--leaves")?;
            match star_center(&labels, &leaves)? {
                Some(solution) => Ok(Outcome::Success(json!({
                    "center": int_to_value(&solution.value),
                    "modulus": int_to_value(&solution.modulus),
                    "solvable": true,
                }))),
                None => Ok(Outcome::Negative(json!({ "solvable": false }))),
            }
        }
        Command::Extend {
            wheel,
            complete: _,
            graph,
            spline,
            spokes,
            star,
        } => {
            let graph = load_graph(graph)?;
            let spline = load_spline(spline)?;
            if *wheel {
                let spokes = parse_ints(spokes.as_deref().unwrap_or_default(), "--spokes")?;
                let rim = graph.cycle_labels()?;
                match wheel_extend(rim, &spokes, &spline)? {
                    Some(solution) => {
                        let mut values = spline.values.clone();
                        values.push(solution.value.clone());
                        Ok(Outcome::Success(extension_payload(&solution.modulus, &values, &solution.value)))
                    }
                    None => Ok(Outcome::Negative(json!({ "solvable": false }))),
                }
            } else {
                let star = parse_ints(star.as_deref().unwrap_or_default(), "--star")?;
                match complete_extend(&graph, &spline, &star)? {
                    Some((_, extended)) => {
                        let solution = star_center(&star, &spline.values)?.ok_or_else(|| {
                            Error::Internal(
                                "extension succeeded but the center system has no solution"
                                    .to_string(),
                            )
                        })?;
                        Ok(Outcome::Success(extension_payload(
                            &solution.modulus,
                            &extended.values,
                            &solution.value,
                        )))
                    }
                    None => Ok(Outcome::Negative(json!({ "solvable": false }))),
                }
            }
        }
        Command::Enumerate { graph, bound } => {
            let graph = load_graph(graph)?;
            let report = enumerate_splines(&graph, *bound, cli.budget)?;
            Ok(Outcome::Success(json!({
                "bound": report.bound,
                "count": report.count(),
                "splines": Value::Array(
                    report.splines.iter().map(|s| ints_to_value(&s.values)).collect()
                ),
            })))
        }
        Command::Crt { pairs } => {
            let congruences = parse_pairs(pairs)?;
            match crt_system(&congruences)? {
                Some(solution) => Ok(Outcome::Success(json!({
                    "modulus": int_to_value(&solution.modulus),
                    "solvable": true,
                    "value": int_to_value(&solution.value),
                }))),
                None => Ok(Outcome::Negative(json!({ "solvable": false }))),
            }
        }
    }
}

fn extension_payload(modulus: &BigInt, values: &[BigInt], new_value: &BigInt) -> Value {
    json!({
        "modulus": int_to_value(modulus),
        "solvable": true,
        "spline": ints_to_value(values),
        "value": int_to_value(new_value),
    })
}

fn emit(payload: &Value) {
    let text = serde_json::to_string(payload).expect("JSON values always serialize");
    println!("{text}");
}

fn load_value(path: &Path, what: &str) -> Result<Value, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("{what} {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Document(format!("{what} {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<EdgeLabeledGraph, Error> {
    graph_from_value(&load_value(path, "graph file")?)
}

fn load_spline(path: &Path) -> Result<Spline, Error> {
    spline_from_value(&load_value(path, "spline file")?)
}

fn parse_ints(items: &[String], what: &str) -> Result<Vec<BigInt>, Error> {
    items
        .iter()
        .map(|s| {
            BigInt::from_str(s.trim())
                .map_err(|_| Error::Document(format!("{what}: {s:?} is not an integer")))
        })
        .collect()
}

fn parse_pairs(pairs: &str) -> Result<Vec<Congruence>, Error> {
    pairs
        .split(';')
        .map(|pair| {
            let mut parts = pair.split(',');
            let (Some(residue), Some(modulus), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(Error::Document(format!(
                    "--pairs: {pair:?} is not of the form residue,modulus"
                )));
            };
            let residue = BigInt::from_str(residue.trim()).map_err(|_| {
                Error::Document(format!("--pairs: {residue:?} is not an integer"))
            })?;
            let modulus = BigInt::from_str(modulus.trim()).map_err(|_| {
                Error::Document(format!("--pairs: {modulus:?} is not an integer"))
            })?;
            Congruence::new(residue, modulus)
        })
        .collect()
}
