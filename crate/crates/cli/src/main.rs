//! Command-line front end: parse hypergraph or graph documents, dispatch the
//! polynomial and verification operations, and emit machine-readable JSON
//! (or a text rendering) deterministically.
//!
//! Exit codes: 0 success/pass, 1 verification failure (with a replayable
//! counterexample in the report), 2 usage or input error, 3 resource budget
//! exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use hyperpoly::{
    build_bipartite, crosscheck_specialization, enumerate_hypertrees_with_budget, parse_graph,
    parse_hypergraph, polynomial_pair, verify_lemmas_with_budget, verify_order_independence,
    verify_transposition_proof, BipartiteGraph, Counterexample, EdgeOrdering, Hypergraph,
    InstanceContext, IntPolynomial, OrderingMode, Report, Status, TransferTable,
    DEFAULT_TREE_BUDGET,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hyperpoly", version)]
#[command(about = "Interior and exterior polynomials of connected hypergraphs, \
with verification subcommands that re-check the supporting lemmas on the instance")]
struct Cli {
    /// Output format for documents and reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for parallel verification (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Cap on spanning trees visited during hypertree enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_TREE_BUDGET)]
    budget_trees: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    All,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all hypertrees of a connected hypergraph
    Hypertrees {
        /// Hypergraph document
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Interior polynomial I(x)
    Interior {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Comma-separated hyperedge ids, smallest first (default: document order)
        #[arg(long)]
        order: Option<String>,
    },
    /// Exterior polynomial X(y)
    Exterior {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        order: Option<String>,
    },
    /// Re-check theorem statements on one instance
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Compare the polynomials of a graph's hypergraph against its Tutte polynomial
    CrosscheckTutte {
        /// Graph document
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Generate a corpus of random connected hypergraphs
    GenCorpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Largest vertex count per instance
        #[arg(long = "max-v", default_value_t = 7)]
        max_vertices: usize,
        /// Largest hyperedge count per instance
        #[arg(long = "max-e", default_value_t = 6)]
        max_edges: usize,
    },
    /// Re-run the verification embedded in a counterexample document
    Replay {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// All (or sampled) orderings must give identical polynomials
    OrderIndependence {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Orderings to sample in random mode
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for random mode
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive exchange-lemma suite on one instance
    Lemmas {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Swap two adjacent ranks of an ordering and re-check the activity bookkeeping
    Transposition {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        order: Option<String>,
        /// Rank to swap with its successor (1-based)
        #[arg(long = "h", value_name = "RANK")]
        rank: usize,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<hyperpoly::Error> for Failure {
    fn from(err: hyperpoly::Error) -> Self {
        if err.is_budget() {
            Failure::Budget(err.to_string())
        } else {
            Failure::Input(err.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Hypertrees { input } => {
            let (h, bip) = load_hypergraph(input)?;
            let basis = enumerate_hypertrees_with_budget(&bip, cli.budget_trees)?;
            let docs: Vec<BTreeMap<String, u64>> =
                basis.iter().map(|f| f.to_document(&bip)).collect();
            #[derive(Serialize)]
            struct HypertreesOut {
                count: usize,
                hypertrees: Vec<BTreeMap<String, u64>>,
            }
            emit(
                cli.format,
                &HypertreesOut {
                    count: docs.len(),
                    hypertrees: docs,
                },
                || {
                    basis
                        .iter()
                        .map(|f| {
                            (0..h.hyperedge_count())
                                .map(|e| format!("{}={}", bip.hyperedge_id(e), f.value(e)))
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Interior { input, order } => {
            let poly = polynomial(cli, input, order.as_deref(), true)?;
            emit(cli.format, &poly, || poly.render("x"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Exterior { input, order } => {
            let poly = polynomial(cli, input, order.as_deref(), false)?;
            emit(cli.format, &poly, || poly.render("y"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what } => {
            let report = match what {
                VerifyCommand::OrderIndependence {
                    input,
                    mode,
                    samples,
                    seed,
                } => {
                    let (h, _) = load_hypergraph(input)?;
                    let mode = match mode {
                        Mode::All => OrderingMode::All,
                        Mode::Random => OrderingMode::Random {
                            samples: *samples,
                            seed: *seed,
                        },
                    };
                    verify_order_independence(&h, mode, cli.budget_trees)?
                }
                VerifyCommand::Lemmas { input } => {
                    let (h, _) = load_hypergraph(input)?;
                    verify_lemmas_with_budget(&h, cli.budget_trees)?
                }
                VerifyCommand::Transposition { input, order, rank } => {
                    let (h, bip) = load_hypergraph(input)?;
                    let ordering = parse_order(&bip, order.as_deref())?;
                    verify_transposition_proof(&h, &ordering, *rank)?
                }
            };
            finish_report(cli.format, &report)
        }
        Command::CrosscheckTutte { input } => {
            let text = read(input)?;
            let graph = parse_graph(&text)?;
            let report = crosscheck_specialization(&graph)?;
            finish_report(cli.format, &report)
        }
        Command::GenCorpus {
            seed,
            count,
            max_vertices,
            max_edges,
        } => {
            let corpus = hyperpoly::generate_corpus(
                *seed,
                &hyperpoly::CorpusSpec {
                    count: *count,
                    max_vertices: *max_vertices,
                    max_edges: *max_edges,
                },
            );
            let instances: Vec<hyperpoly::HypergraphDocument> =
                corpus.iter().map(Hypergraph::to_document).collect();
            #[derive(Serialize)]
            struct CorpusOut {
                seed: u64,
                count: usize,
                instances: Vec<hyperpoly::HypergraphDocument>,
            }
            let out = CorpusOut {
                seed: *seed,
                count: instances.len(),
                instances,
            };
            emit(cli.format, &out, || {
                out.instances
                    .iter()
                    .map(|doc| serde_json::to_string(doc).expect("document serializes"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { input } => {
            let text = read(input)?;
            let ce: Counterexample = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("malformed counterexample document: {e}")))?;
            let report = replay(&ce, cli.budget_trees)?;
            finish_report(cli.format, &report)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_hypergraph(path: &Path) -> Result<(Hypergraph, BipartiteGraph), Failure> {
    let text = read(path)?;
    let h = parse_hypergraph(&text)?;
    for id in h.unit_hyperedges() {
        eprintln!("note: hyperedge `{id}` has a single vertex; its valence is 0 in every hypertree");
    }
    let bip = build_bipartite(&h);
    if !bip.is_connected() {
        return Err(Failure::Input(
            "bipartite incidence graph is not connected".to_owned(),
        ));
    }
    Ok((h, bip))
}

fn parse_order(bip: &BipartiteGraph, order: Option<&str>) -> Result<EdgeOrdering, Failure> {
    match order {
        None => Ok(EdgeOrdering::document(bip.hyperedge_count())),
        Some(list) => {
            let ids: Vec<&str> = list.split(',').map(str::trim).collect();
            Ok(EdgeOrdering::from_ids(bip, &ids)?)
        }
    }
}

fn polynomial(
    cli: &Cli,
    input: &Path,
    order: Option<&str>,
    interior: bool,
) -> Result<IntPolynomial, Failure> {
    let (_, bip) = load_hypergraph(input)?;
    let ordering = parse_order(&bip, order)?;
    let basis = enumerate_hypertrees_with_budget(&bip, cli.budget_trees)?;
    let table = TransferTable::build(&bip, &basis)?;
    let (i, x) = polynomial_pair(&table, basis.len(), &ordering);
    Ok(if interior { i } else { x })
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(value).expect("output serializes")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn finish_report(format: Format, report: &Report) -> Result<ExitCode, Failure> {
    emit(format, report, || report.render_text());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Re-runs the verification a counterexample came from. Exit 0 means the
/// counterexample does not reproduce.
fn replay(ce: &Counterexample, budget_trees: u64) -> Result<Report, Failure> {
    match ce {
        Counterexample::OrderIndependence {
            hypergraph,
            order_a,
            order_b,
            ..
        } => {
            let h = Hypergraph::from_document(hypergraph)?;
            let bip = build_bipartite(&h);
            let ctx = InstanceContext::with_budget(&h, budget_trees)?;
            let oa = EdgeOrdering::from_ids(&bip, order_a)?;
            let ob = EdgeOrdering::from_ids(&bip, order_b)?;
            let (ia, xa) = polynomial_pair(ctx.table(), ctx.basis().len(), &oa);
            let (ib, xb) = polynomial_pair(ctx.table(), ctx.basis().len(), &ob);
            let mut checks = Vec::new();
            let mut failed = false;
            for (name, same) in [("interior-replay", ia == ib), ("exterior-replay", xa == xb)] {
                failed |= !same;
                checks.push(hyperpoly::Check {
                    name: name.to_owned(),
                    status: if same { Status::Pass } else { Status::Fail },
                    checked: 1,
                    vacuous: 0,
                    note: None,
                });
            }
            let counterexample = failed.then(|| {
                let interior_differs = ia != ib;
                Counterexample::OrderIndependence {
                    hypergraph: h.to_document(),
                    polynomial: if interior_differs { "interior" } else { "exterior" }.to_owned(),
                    order_a: order_a.clone(),
                    order_b: order_b.clone(),
                    value_a: if interior_differs { ia.clone() } else { xa.clone() },
                    value_b: if interior_differs { ib.clone() } else { xb.clone() },
                }
            });
            Ok(Report {
                status: if failed { Status::Fail } else { Status::Pass },
                checks,
                counterexample,
                seed: None,
                details: None,
            })
        }
        Counterexample::Transposition {
            hypergraph,
            order,
            swap_rank,
            ..
        } => {
            let h = Hypergraph::from_document(hypergraph)?;
            let bip = build_bipartite(&h);
            let ordering = EdgeOrdering::from_ids(&bip, order)?;
            Ok(verify_transposition_proof(&h, &ordering, *swap_rank)?)
        }
        Counterexample::Lemmas { hypergraph, .. } => {
            let h = Hypergraph::from_document(hypergraph)?;
            Ok(verify_lemmas_with_budget(&h, budget_trees)?)
        }
        Counterexample::TutteSpecialization { graph, .. } => {
            let g = hyperpoly::Multigraph::from_document(graph)?;
            Ok(crosscheck_specialization(&g)?)
        }
    }
}
