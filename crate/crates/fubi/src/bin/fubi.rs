use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use fubi::catalog::{Catalog, CatalogEntry};
use fubi::classes::build_partition;
use fubi::equations::{self, SolveOptions};
use fubi::indicator::GraphRecord;
use fubi::pipeline::{self, ClassifyOptions, Commutativity, Format};
use fubi::sieve::ApcMode;
use fubi::signature::DualSignature;
use fubi::symmetry::{cycle_notation, InducedAction};
use fubi::FubiError;

#[derive(Parser)]
#[command(
    name = "fubi",
    version,
    about = "Classify fusion bialgebras with exchange relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient classes of a signature.
    Classes {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        pairs: usize,
        #[arg(long, value_parser = parse_comm, default_value = "auto")]
        commutative: Commutativity,
    },
    /// Print the induced class permutations in cycle notation.
    Actions {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        pairs: usize,
        #[arg(long, value_parser = parse_comm, default_value = "auto")]
        commutative: Commutativity,
    },
    /// Run the sieving pipeline for one dimension.
    Classify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long, value_parser = parse_comm, default_value = "auto")]
        commutative: Commutativity,
        #[arg(long)]
        db: Option<PathBuf>,
        #[arg(long, default_value = "table")]
        emit: String,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        solve: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "cancel")]
        apc: String,
        /// Skip the minimum edge count in the forest stage.
        #[arg(long)]
        no_edge_rule: bool,
        #[arg(long, default_value_t = 32)]
        max_class_bits: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 32)]
        starts: usize,
        #[arg(long, default_value_t = 1e-3)]
        damping: f64,
        /// Drop elapsed times so runs compare byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Solve the structure equations of one candidate.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 32)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-3)]
        damping: f64,
    },
    /// Inspect or extend the catalog of known patterns.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        db: Option<PathBuf>,
    },
    Add {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        label: String,
    },
    Export {
        #[arg(long)]
        db: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_comm(s: &str) -> Result<Commutativity, String> {
    match s {
        "auto" => Ok(Commutativity::Auto),
        "on" => Ok(Commutativity::On),
        "off" => Ok(Commutativity::Off),
        _ => Err(format!("expected auto, on or off, got {s:?}")),
    }
}

fn signature(dim: usize, pairs: usize) -> Result<DualSignature, FubiError> {
    if dim < 2 {
        return Err(FubiError::InvalidSignature(
            "dimension must be at least 2".into(),
        ));
    }
    DualSignature::canonical(dim - 1, pairs)
}

fn read_graph(path: &PathBuf) -> Result<GraphRecord> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Classes {
            dim,
            pairs,
            commutative,
        } => {
            let sig = signature(dim, pairs)?;
            let part = build_partition(&sig, commutative.resolve(sig.n, sig.m));
            print!("{}", part.render());
        }
        Command::Actions {
            dim,
            pairs,
            commutative,
        } => {
            let sig = signature(dim, pairs)?;
            let part = build_partition(&sig, commutative.resolve(sig.n, sig.m));
            for p in InducedAction::new(&part)?.perms {
                println!("{}", cycle_notation(&p));
            }
        }
        Command::Classify {
            dim,
            pairs,
            commutative,
            db,
            emit,
            threads,
            solve,
            seed,
            apc,
            no_edge_rule,
            max_class_bits,
            tol,
            starts,
            damping,
            no_timing,
        } => {
            let format: Format = emit.parse()?;
            let apc: ApcMode = apc.parse()?;
            let cat = Catalog::open_or_seed(db.as_deref())?;
            let opts = ClassifyOptions {
                pairs,
                commutative,
                threads,
                solve,
                seed,
                apc,
                edge_rule: !no_edge_rule,
                tensor_check: true,
                max_class_bits,
                solver: SolveOptions {
                    tol,
                    starts,
                    damping,
                    ..Default::default()
                },
            };
            let mut report = pipeline::classify(dim, &opts, &cat)?;
            if no_timing {
                report = report.without_timing();
            }
            print!("{}", pipeline::emit(&report, format)?);
        }
        Command::Solve {
            graph,
            tol,
            starts,
            seed,
            damping,
        } => {
            let rec = read_graph(&graph)?;
            let (_, aif, t) = rec.resolve()?;
            let sys = equations::build_system(&t)?;
            let opts = SolveOptions {
                tol,
                starts,
                damping,
                seed: equations::seed_for(&aif.to_string(), seed),
                ..Default::default()
            };
            let out = match equations::solve(&sys, &opts) {
                Ok(rep) => {
                    let dim = sys.dim;
                    let nest = |v: &[f64]| -> Vec<Vec<Vec<f64>>> {
                        (0..dim)
                            .map(|x| {
                                (0..dim)
                                    .map(|y| (0..dim).map(|z| v[(x * dim + y) * dim + z]).collect())
                                    .collect()
                            })
                            .collect()
                    };
                    let sols: Vec<_> = rep
                        .solutions
                        .iter()
                        .map(|s| {
                            let n = sys.coefficient_values(&s.d);
                            let tilde = equations::normalized_coeffs(&n, &s.d, s.delta);
                            json!({
                                "d": s.d,
                                "delta": s.delta,
                                "residual": s.residual,
                                "margin": s.margin,
                                "free_parameters": s.free_parameter_count,
                                "N": nest(&n),
                                "tilde_N": nest(&tilde),
                            })
                        })
                        .collect();
                    json!({ "aif_bits": rec.aif_bits, "linear_free": rep.linear_free, "solutions": sols })
                }
                Err(FubiError::Infeasible(why)) => {
                    json!({ "aif_bits": rec.aif_bits, "infeasible": why })
                }
                Err(e) => return Err(e.into()),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { db } => {
                let cat = Catalog::open_or_seed(db.as_deref())?;
                for e in &cat.entries {
                    println!(
                        "dim {}  {:?}  {}  {}",
                        e.dim, e.involution, e.aif_bits, e.label
                    );
                }
            }
            CatalogAction::Add { db, graph, label } => {
                let mut cat = Catalog::open_or_seed(Some(&db))?;
                let rec = read_graph(&graph)?;
                rec.resolve()?;
                let entry = CatalogEntry {
                    dim: rec.dim,
                    involution: rec.involution,
                    commutative: Some(rec.commutative),
                    aif_bits: rec.aif_bits,
                    label,
                    solution: None,
                };
                let added = cat.insert(entry)?;
                cat.save(&db)?;
                println!("{}", if added { "added" } else { "already present" });
            }
            CatalogAction::Export { db, out } => {
                let cat = Catalog::open_or_seed(db.as_deref())?;
                match out {
                    Some(p) => cat.save(&p)?,
                    None => println!("{}", serde_json::to_string_pretty(&cat)?),
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fubi: {e:#}");
            let code = match e.downcast_ref::<FubiError>() {
                Some(FubiError::MissingCatalog(_)) => 3,
                Some(
                    FubiError::InvalidSignature(_)
                    | FubiError::TooLarge { .. }
                    | FubiError::UnknownFormat(_)
                    | FubiError::Infeasible(_),
                ) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
