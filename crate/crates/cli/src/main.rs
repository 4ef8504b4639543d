//! `hgstate`: command-line front end for hypergraph-state analysis.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure or violation, 2 usage or parse error.

mod input;
mod selftest;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hgstate::entanglement::genuine_multipartite_geometric;
use hgstate::extract::{classify_balance, extract_fast, extract_layered};
use hgstate::hypergraph::{count_exponent, count_states, CountMode};
use hgstate::orbits::class_inequivalence_report;
use hgstate::statesim::{build_state, commutator_residual, stabilizers, uniqueness_check, ComplexState, StateVector};
use hgstate::{rng, Exec, Hypergraph};

use crate::input::Input;

#[derive(Parser)]
#[command(name = "hgstate", version, about = "Exact analysis of quantum hypergraph states")]
struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = rng::DEFAULT_SEED)]
    seed: u64,

    /// Run batch work on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Layered,
    Fast,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build the state of a hypergraph file and dump its amplitudes.
    Build { graph: String },
    /// Recover the hypergraph of a truth-table file or sign-state dump.
    Extract {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Check stabilizers, commutators and eigenspace uniqueness.
    Verify { graph: String },
    /// Uniformity class of a hypergraph, or balance of a truth table.
    Classify {
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph")]
        table: Option<String>,
    },
    /// Bipartition spectra and the geometric measure E2.
    Entangle { input: String },
    /// Local-Pauli inequivalence of the k-uniform classes.
    Orbit {
        #[arg(long)]
        n: usize,
    },
    /// Number of hypergraph states on n vertices.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Print the base-2 exponent instead of the full integer.
        #[arg(long)]
        exponent: bool,
    },
    /// Graphviz rendering of a hypergraph file.
    Dot { graph: String },
    /// Run the built-in example suite.
    Selftest,
}

/// A failed command: exit code and message for stderr.
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    pub fn usage(msg: impl ToString) -> Self {
        Failure { code: 2, msg: msg.to_string() }
    }
}

impl From<hgstate::Error> for Failure {
    fn from(e: hgstate::Error) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match run(cli.command, cli.seed, exec) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, seed: u64, exec: Exec) -> Outcome {
    match command {
        Command::Build { graph } => {
            let h = input::read_graph(&graph)?;
            Ok((StateVector::from(build_state(&h)?).dump(), true))
        }
        Command::Extract { input, method } => extract(&input, method),
        Command::Verify { graph } => verify(&input::read_graph(&graph)?, seed),
        Command::Classify { graph, table } => match (graph, table) {
            (Some(g), None) => Ok((format!("{}\n", input::read_graph(&g)?.classify_uniformity()), true)),
            (None, Some(t)) => {
                let tt = input::read_table(&t)?;
                let r = classify_balance(&tt);
                let out = format!(
                    "{}\nminus_signs {}\nfull_edge {}\n",
                    r.balance,
                    r.minus_signs,
                    if r.full_edge { "present" } else { "absent" }
                );
                Ok((out, true))
            }
            _ => Err(Failure::usage("classify needs a graph file or --table <file>")),
        },
        Command::Entangle { input } => {
            let state: StateVector = match input::read_any(&input)? {
                Input::Graph(h) => build_state(&h)?.into(),
                Input::Table(tt) => hgstate::SignState::from_signs(tt).into(),
                Input::State(s) => s,
            };
            Ok((genuine_multipartite_geometric(&state, exec)?.to_text(), true))
        }
        Command::Orbit { n } => {
            let report = class_inequivalence_report(n, exec)?;
            Ok((report.to_text(), report.total_violations() == 0))
        }
        Command::Count { n, k, exponent } => {
            let mode = k.map_or(CountMode::All, CountMode::UniformK);
            let value = if exponent { count_exponent(n, mode)? } else { count_states(n, mode)? };
            Ok((format!("{value}\n"), true))
        }
        Command::Dot { graph } => Ok((input::read_graph(&graph)?.to_dot(), true)),
        Command::Selftest => Ok(selftest::run(seed, exec)),
    }
}

fn extract(path: &str, method: Method) -> Outcome {
    let tt = match input::read_any(path)? {
        Input::Table(tt) => tt,
        // A state is defined up to global phase; the canonical sign table
        // already has a plus sign on |0...0>.
        Input::State(s) => match s {
            StateVector::Sign(s) => s.normalized_signs(),
            StateVector::Complex(c) => c.to_sign()?.normalized_signs(),
        },
        Input::Graph(_) => return Err(Failure::usage("extract expects a truth table or a state dump")),
    };
    let h = match method {
        Method::Layered => extract_layered(&tt)?,
        Method::Fast => extract_fast(&tt)?,
        Method::Both => {
            let (a, b) = (extract_layered(&tt)?, extract_fast(&tt)?);
            if a != b {
                return Err(Failure { code: 1, msg: format!("layered {a} and fast {b} extractions differ") });
            }
            a
        }
    };
    Ok((h.to_text(), true))
}

const VERIFY_PROBES: usize = 10;

fn verify(h: &Hypergraph, seed: u64) -> Outcome {
    let state = build_state(h)?;
    let ks = stabilizers(h);
    let mut out = String::new();
    let mut ok = true;
    for k in &ks {
        let pass = k.apply_sign(&state)? == state;
        ok &= pass;
        writeln!(out, "{} : {}", k.describe(), if pass { "pass" } else { "FAIL" }).unwrap();
    }
    let mut r = rng::seeded(seed);
    let mut worst = 0.0f64;
    for _ in 0..VERIFY_PROBES {
        let probe = ComplexState::random(h.n(), &mut r)?;
        for a in 0..ks.len() {
            for b in a + 1..ks.len() {
                worst = worst.max(commutator_residual(&ks[a], &ks[b], &probe)?);
            }
        }
    }
    ok &= worst == 0.0;
    writeln!(out, "commutator max_residual {worst:e} over {VERIFY_PROBES} probes").unwrap();
    if h.n() <= hgstate::statesim::MAX_UNIQUENESS_QUBITS {
        let unique = uniqueness_check(h, &mut r)?;
        ok &= unique;
        writeln!(out, "uniqueness {}", if unique { "pass" } else { "FAIL" }).unwrap();
    } else {
        writeln!(out, "uniqueness skipped (n > {})", hgstate::statesim::MAX_UNIQUENESS_QUBITS).unwrap();
    }
    Ok((out, ok))
}
