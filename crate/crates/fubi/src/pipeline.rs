//! Classification driver: enumerate, sieve, solve, report.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, Catalog};
use crate::classes::{build_partition, ClassPartition};
use crate::equations::{self, Solution, SolveOptions};
use crate::graphs::ForestFilter;
use crate::indicator::{expand, Aif};
use crate::sieve::{self, ApcMode, TensorWitness};
use crate::signature::{default_commutative, enumerate_signatures, DualSignature};
use crate::symmetry::InducedAction;
use crate::FubiError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Commutativity {
    #[default]
    Auto,
    On,
    Off,
}

impl Commutativity {
    pub fn resolve(self, n: usize, m: usize) -> bool {
        match self {
            Commutativity::Auto => default_commutative(n, m),
            Commutativity::On => true,
            Commutativity::Off => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub pairs: Option<usize>,
    pub commutative: Commutativity,
    pub threads: usize,
    pub solve: bool,
    pub seed: u64,
    pub apc: ApcMode,
    /// Require at least `dim^2` nonzero coefficients in the forest stage.
    pub edge_rule: bool,
    pub tensor_check: bool,
    pub max_class_bits: usize,
    pub solver: SolveOptions,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            pairs: None,
            commutative: Commutativity::Auto,
            threads: 0,
            solve: false,
            seed: 0,
            apc: ApcMode::Cancel,
            edge_rule: true,
            tensor_check: true,
            max_class_bits: 32,
            solver: SolveOptions::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stages {
    pub total: u64,
    pub ff: u64,
    pub rg: u64,
    pub apc: u64,
    pub ftpc: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infeasible: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_free: Option<usize>,
    #[serde(default)]
    pub solutions: Vec<Solution>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Survivor {
    pub aif_bits: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub solve: Option<SolveRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeProduct {
    pub aif_bits: String,
    pub s: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorProduct {
    pub aif_bits: String,
    pub witness: TensorWitness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub pairs: usize,
    pub commutative: bool,
    pub classes: usize,
    pub stages: Stages,
    pub elapsed_ms: BTreeMap<String, f64>,
    pub survivors: Vec<Survivor>,
    pub free_products: Vec<FreeProduct>,
    pub tensor_products: Vec<TensorProduct>,
    /// Representatives that passed the positivity sieve, before product checks.
    #[serde(default)]
    pub apc_survivors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SievingReport {
    pub dim: usize,
    pub cases: Vec<CaseReport>,
}

impl SievingReport {
    pub fn without_timing(mut self) -> Self {
        for c in &mut self.cases {
            c.elapsed_ms.clear();
        }
        self
    }

    pub fn from_json(text: &str) -> Result<Self, FubiError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Forest-filter and canonical-representative stages over the whole AIF range.
pub fn enumerate(
    part: &ClassPartition,
    action: &InducedAction,
    edge_rule: bool,
) -> (Vec<Aif>, Vec<Aif>) {
    let len = part.len();
    let filter = ForestFilter::new(part, edge_rule);
    let total: u64 = 1 << len;
    let chunk: u64 = 1 << 12.min(len);
    let forests: Vec<Aif> = (0..total / chunk)
        .into_par_iter()
        .map_init(
            || filter.scratch(),
            |ds, c| {
                (c * chunk..(c + 1) * chunk)
                    .map(|bits| Aif::new(bits, len))
                    .filter(|a| filter.check(a, ds))
                    .collect::<Vec<_>>()
            },
        )
        .flatten()
        .collect();
    let reps = forests
        .par_iter()
        .copied()
        .filter(|a| action.is_canonical(a))
        .collect();
    (forests, reps)
}

/// Catalog dimensions the tensor criterion needs for `dim`.
pub fn catalog_dependencies(dim: usize) -> Vec<usize> {
    (2..dim)
        .filter(|a| dim % a == 0)
        .map(|a| dim / a)
        .filter(|&b| b >= 2)
        .collect()
}

fn identify(part: &ClassPartition, aif: &Aif, cat: &Catalog) -> Option<String> {
    let dim = part.signature.dim();
    let t = expand(aif, part).ok()?;
    for e in cat.entries_of_dim(dim) {
        if e.involution == part.signature.bar && e.aif_bits == aif.to_string() {
            return Some(e.label.clone());
        }
    }
    for (name, table) in catalog::small_groups(dim) {
        let g = catalog::group_pattern(&table).ok()?;
        if sieve::find_isomorphism(&g, &t).is_some() {
            return Some(name.to_string());
        }
    }
    None
}

pub fn classify_case(
    sig: &DualSignature,
    opts: &ClassifyOptions,
    cat: &Catalog,
) -> Result<CaseReport, FubiError> {
    let commutative = opts.commutative.resolve(sig.n, sig.m);
    let part = build_partition(sig, commutative);
    if part.len() > opts.max_class_bits || part.len() > 63 {
        return Err(FubiError::TooLarge {
            classes: part.len(),
            limit: opts.max_class_bits.min(63),
        });
    }
    let action = InducedAction::new(&part)?;
    let mut elapsed = BTreeMap::new();

    let t0 = Instant::now();
    let (forests, reps) = enumerate(&part, &action, opts.edge_rule);
    elapsed.insert("ff_rg".to_string(), ms(t0));

    let t1 = Instant::now();
    let apc: Vec<Aif> = reps
        .par_iter()
        .copied()
        .filter(|a| {
            let t = expand(a, &part).expect("length matches");
            sieve::apc_violation(&t, &part, opts.apc).is_none()
        })
        .collect();
    elapsed.insert("apc".to_string(), ms(t1));

    let t2 = Instant::now();
    let mut survivors = Vec::new();
    let mut free_products = Vec::new();
    let mut tensor_products = Vec::new();
    for a in &apc {
        let t = expand(a, &part)?;
        let ms = sieve::minimal_s(&t);
        if ms.s.len() < t.dim() {
            free_products.push(FreeProduct {
                aif_bits: a.to_string(),
                s: ms.s.into_iter().collect(),
            });
            continue;
        }
        if opts.tensor_check {
            if let Some(w) = sieve::is_tensor_product(&t, cat)? {
                tensor_products.push(TensorProduct {
                    aif_bits: a.to_string(),
                    witness: w,
                });
                continue;
            }
        }
        survivors.push(*a);
    }
    elapsed.insert("ftpc".to_string(), ms(t2));

    let t3 = Instant::now();
    let survivors: Vec<Survivor> = survivors
        .par_iter()
        .map(|a| -> Result<Survivor, FubiError> {
            let solve = if opts.solve {
                Some(solve_aif(&part, a, opts)?)
            } else {
                None
            };
            Ok(Survivor {
                aif_bits: a.to_string(),
                label: identify(&part, a, cat),
                solve,
            })
        })
        .collect::<Result<_, _>>()?;
    if opts.solve {
        elapsed.insert("solve".to_string(), ms(t3));
    }

    Ok(CaseReport {
        pairs: sig.m,
        commutative,
        classes: part.len(),
        stages: Stages {
            total: 1 << part.len(),
            ff: forests.len() as u64,
            rg: reps.len() as u64,
            apc: apc.len() as u64,
            ftpc: survivors.len() as u64,
        },
        elapsed_ms: elapsed,
        survivors,
        free_products,
        tensor_products,
        apc_survivors: apc.iter().map(Aif::to_string).collect(),
    })
}

/// Builds and solves the structure system of one candidate.
pub fn solve_aif(
    part: &ClassPartition,
    aif: &Aif,
    opts: &ClassifyOptions,
) -> Result<SolveRecord, FubiError> {
    let t = expand(aif, part)?;
    let sys = equations::build_system(&t)?;
    let solver = SolveOptions {
        seed: equations::seed_for(&aif.to_string(), opts.seed),
        ..opts.solver
    };
    Ok(match equations::solve(&sys, &solver) {
        Ok(r) => SolveRecord {
            infeasible: None,
            linear_free: Some(r.linear_free),
            solutions: r.solutions,
        },
        Err(FubiError::Infeasible(why)) => SolveRecord {
            infeasible: Some(why),
            ..Default::default()
        },
        Err(e) => return Err(e),
    })
}

pub fn classify(
    dim: usize,
    opts: &ClassifyOptions,
    cat: &Catalog,
) -> Result<SievingReport, FubiError> {
    if dim < 2 {
        return Err(FubiError::InvalidSignature(
            "dimension must be at least 2".into(),
        ));
    }
    if opts.tensor_check {
        for b in catalog_dependencies(dim) {
            if cat.entries_of_dim(b).is_empty() {
                return Err(FubiError::MissingCatalog(b));
            }
        }
    }
    let sigs: Vec<DualSignature> = match opts.pairs {
        Some(m) => vec![DualSignature::canonical(dim - 1, m)?],
        None => enumerate_signatures(dim - 1)?,
    };
    let run = || -> Result<Vec<CaseReport>, FubiError> {
        sigs.iter().map(|s| classify_case(s, opts, cat)).collect()
    };
    let cases = if opts.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| FubiError::Infeasible(e.to_string()))?
            .install(run)?
    } else {
        run()?
    };
    Ok(SievingReport { dim, cases })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = FubiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(FubiError::UnknownFormat(other.into())),
        }
    }
}

const ROWS: [&str; 5] = ["total", "FF", "RG", "APC", "FTPC"];

fn row(s: &Stages, r: usize) -> u64 {
    [s.total, s.ff, s.rg, s.apc, s.ftpc][r]
}

pub fn emit(report: &SievingReport, format: Format) -> Result<String, FubiError> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(report)?;
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("dim,case,pairs,commutative,stage,count\n");
            for (c, case) in report.cases.iter().enumerate() {
                for (r, name) in ROWS.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        report.dim,
                        c + 1,
                        case.pairs,
                        case.commutative,
                        name,
                        row(&case.stages, r)
                    );
                }
            }
        }
        Format::Table => {
            let _ = write!(out, "{:<8}", format!("dim {}", report.dim));
            for c in 1..=report.cases.len() {
                let _ = write!(out, "{:>12}", format!("case {c}"));
            }
            out.push('\n');
            let _ = write!(out, "{:<8}", "pairs");
            for case in &report.cases {
                let _ = write!(out, "{:>12}", case.pairs);
            }
            out.push('\n');
            for (r, name) in ROWS.iter().enumerate() {
                let _ = write!(out, "{name:<8}");
                for case in &report.cases {
                    let _ = write!(out, "{:>12}", row(&case.stages, r));
                }
                out.push('\n');
            }
            for (c, case) in report.cases.iter().enumerate() {
                for s in &case.survivors {
                    let label = s.label.as_deref().unwrap_or("unidentified");
                    let _ = writeln!(out, "case {} survivor {} ({label})", c + 1, s.aif_bits);
                    if let Some(rec) = &s.solve {
                        if let Some(why) = &rec.infeasible {
                            let _ = writeln!(out, "  infeasible: {why}");
                        }
                        for sol in &rec.solutions {
                            let _ = writeln!(
                                out,
                                "  delta^2 = {:.9}  free = {}  residual = {:.1e}",
                                sol.delta * sol.delta,
                                sol.free_parameter_count,
                                sol.residual
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
