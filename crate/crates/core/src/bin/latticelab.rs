//! Command-line front end: reads `lattice-v1` / `fn-v1` JSON files, runs
//! one analysis per invocation, and prints a single JSON report with a
//! `format` field and stable key order. Exit codes: 0 success, 1 validation
//! failure, 2 budget exceeded, 3 I/O or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use latticelab::analysis::{run_analysis, Check};
use latticelab::completeness::{antichain_amplification, AmplificationOutcome};
use latticelab::error::LatticeError;
use latticelab::io::{
    read_function_file, read_lattice_file, to_canonical_json, write_lattice_file, FileError,
    FileResult, LatticeFile,
};
use latticelab::lattice::{Lattice, TupleIndex};
use latticelab::order::{
    count_monotone, extend_partial, longest_chain, max_antichain, ramsey_witness, WitnessKind,
};
use latticelab::ortho::{factorization_report, OrthoLattice};
use latticelab::poly::{interpolate, polynomial_clone};
use latticelab::{gallery, FunctionTable};

#[derive(Parser)]
#[command(name = "latticelab", version, about = "Finite lattice and ortholattice analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a lattice file (and its orthocomplement when present).
    Validate { file: PathBuf },
    /// Run structural checks and print a combined report.
    Analyze {
        file: PathBuf,
        /// Comma-separated list: width,height,distributive,simple,wille,opc-wille
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Compute the polynomial clone at the given arity.
    Clone {
        file: PathBuf,
        #[arg(long)]
        arity: usize,
        /// Budget on the number of clone members.
        #[arg(long)]
        max_size: Option<usize>,
        /// JSON file holding a list of restriction tuples, e.g. [[0,1],[2,0]].
        #[arg(long)]
        restrict: Option<PathBuf>,
        /// Include the witness terms of all members in the report.
        #[arg(long)]
        emit_term: bool,
    },
    /// Search for a polynomial agreeing with a (partial) function.
    Interpolate {
        file: PathBuf,
        #[arg(long = "fn")]
        fn_file: PathBuf,
        #[arg(long)]
        max_size: Option<usize>,
        /// Include the witness term in the report.
        #[arg(long)]
        emit_term: bool,
    },
    /// Minimal monotone total extension of a partial monotone function.
    Extend {
        file: PathBuf,
        #[arg(long = "fn")]
        fn_file: PathBuf,
    },
    /// Maximum antichain (Dilworth width).
    Antichain { file: PathBuf },
    /// Longest chain (Mirsky height).
    Chain { file: PathBuf },
    /// Chain-or-antichain witness for the finite Ramsey dichotomy.
    Ramsey {
        file: PathBuf,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        s: usize,
    },
    /// Count monotone functions of the given arity.
    CountMonotone {
        file: PathBuf,
        #[arg(long)]
        arity: usize,
        /// Budget on the number of functions visited.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write a stock lattice to a file.
    ///
    /// Kinds: chain --size N | mn --atoms N | n5 | boolean --atoms N |
    /// mo --pairs N | example1/example2/example3 --blocks S1,S2,.. |
    /// random --size N --seed S
    Gallery {
        kind: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        atoms: Option<usize>,
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Validate the ortholattice laws of a file with a perp table.
    OrthoCheck { file: PathBuf },
    /// Factor an arbitrary unary map through the graph antichain.
    OrthoFactor {
        file: PathBuf,
        #[arg(long = "fn")]
        fn_file: PathBuf,
    },
    /// Run the Sperner/interpolation/thinning amplification pipeline.
    Amplify {
        file: PathBuf,
        /// Comma-separated element ids forming an antichain.
        #[arg(long, value_delimiter = ',')]
        antichain: Vec<usize>,
        #[arg(long)]
        max_size: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match &e {
                FileError::Lattice(LatticeError::BudgetExceeded { .. }) => 2u8,
                FileError::Lattice(_) => 1u8,
                _ => 3u8,
            })
        }
    }
}

fn load_lattice(path: &Path) -> FileResult<(Lattice, Option<OrthoLattice>)> {
    read_lattice_file(path)?.to_lattice()
}

fn load_function(path: &Path, n: usize) -> FileResult<FunctionTable> {
    read_function_file(path)?.to_table(n)
}

fn run(command: Command) -> FileResult<String> {
    match command {
        Command::Validate { file } => {
            let (l, ortho) = load_lattice(&file)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                valid: bool,
                n: usize,
                bottom: usize,
                top: usize,
                ortho: bool,
            }
            Ok(to_canonical_json(&Report {
                format: "validate-v1",
                valid: true,
                n: l.len(),
                bottom: l.bottom(),
                top: l.top(),
                ortho: ortho.is_some(),
            }))
        }
        Command::Analyze { file, checks } => {
            let (l, _) = load_lattice(&file)?;
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|name| {
                        Check::parse(name)
                            .ok_or_else(|| FileError::Invalid(format!("unknown check {name:?}")))
                    })
                    .collect::<FileResult<Vec<_>>>()?
            };
            let report = run_analysis(&l, &checks)?;
            Ok(to_canonical_json(&report))
        }
        Command::Clone { file, arity, max_size, restrict, emit_term } => {
            let (l, _) = load_lattice(&file)?;
            let restriction: Option<Vec<usize>> = match restrict {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let tuples: Vec<Vec<usize>> = serde_json::from_str(&text)?;
                    let idx = TupleIndex::new(l.len(), arity);
                    let mut points = Vec::with_capacity(tuples.len());
                    for t in &tuples {
                        if t.len() != arity {
                            return Err(FileError::Lattice(LatticeError::ArityMismatch {
                                expected: arity,
                                got: t.len(),
                            }));
                        }
                        for &c in t {
                            if c >= l.len() {
                                return Err(FileError::Lattice(LatticeError::InvalidElement {
                                    id: c,
                                    n: l.len(),
                                }));
                            }
                        }
                        points.push(idx.encode(t));
                    }
                    Some(points)
                }
                None => None,
            };
            let clone = polynomial_clone(&l, arity, restriction.as_deref(), max_size)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                arity: usize,
                points: usize,
                size: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                terms: Option<Vec<String>>,
            }
            Ok(to_canonical_json(&Report {
                format: "clone-v1",
                arity,
                points: clone.points().len(),
                size: clone.len(),
                terms: emit_term.then(|| {
                    (0..clone.len()).map(|m| clone.witness_term(m).to_string()).collect()
                }),
            }))
        }
        Command::Interpolate { file, fn_file, max_size, emit_term } => {
            let (l, _) = load_lattice(&file)?;
            let f = load_function(&fn_file, l.len())?;
            let term = interpolate(&l, &f, max_size)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                result: &'static str,
                #[serde(skip_serializing_if = "Option::is_none")]
                term: Option<String>,
            }
            Ok(to_canonical_json(&Report {
                format: "interpolate-v1",
                result: if term.is_some() { "ok" } else { "none" },
                term: term.filter(|_| emit_term).map(|t| t.to_string()),
            }))
        }
        Command::Extend { file, fn_file } => {
            let (l, _) = load_lattice(&file)?;
            let f = load_function(&fn_file, l.len())?;
            let extended = extend_partial(&l, &f)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                arity: usize,
                table: Vec<usize>,
            }
            Ok(to_canonical_json(&Report {
                format: "extend-v1",
                arity: extended.arity(),
                table: extended.dense_values(),
            }))
        }
        Command::Antichain { file } => {
            let (l, _) = load_lattice(&file)?;
            let antichain = max_antichain(l.poset());
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                width: usize,
                antichain: Vec<usize>,
            }
            Ok(to_canonical_json(&Report {
                format: "antichain-v1",
                width: antichain.len(),
                antichain,
            }))
        }
        Command::Chain { file } => {
            let (l, _) = load_lattice(&file)?;
            let chain = longest_chain(l.poset());
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                height: usize,
                chain: Vec<usize>,
            }
            Ok(to_canonical_json(&Report { format: "chain-v1", height: chain.len(), chain }))
        }
        Command::Ramsey { file, r, s } => {
            let (l, _) = load_lattice(&file)?;
            let witness = ramsey_witness(l.poset(), r, s)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                kind: &'static str,
                elements: Vec<usize>,
            }
            Ok(to_canonical_json(&Report {
                format: "ramsey-v1",
                kind: match witness.kind {
                    WitnessKind::Chain => "chain",
                    WitnessKind::Antichain => "antichain",
                    WitnessKind::DualChain => "dual-chain",
                },
                elements: witness.elements,
            }))
        }
        Command::CountMonotone { file, arity, limit } => {
            let (l, _) = load_lattice(&file)?;
            let count = count_monotone(&l, arity, limit)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                arity: usize,
                count: usize,
            }
            Ok(to_canonical_json(&Report { format: "count-monotone-v1", arity, count }))
        }
        Command::Gallery { kind, size, atoms, pairs, blocks, seed, out } => {
            let need = |value: Option<usize>, flag: &str| {
                value.ok_or_else(|| FileError::Invalid(format!("{kind} requires --{flag}")))
            };
            let need_blocks = || {
                if blocks.is_empty() {
                    Err(FileError::Invalid(format!("{kind} requires --blocks")))
                } else {
                    Ok(blocks.as_slice())
                }
            };
            let file: LatticeFile = match kind.as_str() {
                "chain" => LatticeFile::from_lattice(&gallery::chain(need(size, "size")?)?, None),
                "mn" => LatticeFile::from_lattice(&gallery::make_mn(need(atoms, "atoms")?)?, None),
                "n5" => LatticeFile::from_lattice(&gallery::make_n5(), None),
                "boolean" => LatticeFile::from_ortho(&gallery::make_boolean(need(atoms, "atoms")?)?),
                "mo" => LatticeFile::from_ortho(&gallery::make_mo(need(pairs, "pairs")?)?),
                "example1" => {
                    LatticeFile::from_lattice(&gallery::make_example(1, need_blocks()?)?, None)
                }
                "example2" => {
                    LatticeFile::from_lattice(&gallery::make_example(2, need_blocks()?)?, None)
                }
                "example3" => {
                    LatticeFile::from_lattice(&gallery::make_example(3, need_blocks()?)?, None)
                }
                "random" => LatticeFile::from_lattice(
                    &gallery::random_lattice(need(size, "size")?, seed.unwrap_or(0)),
                    None,
                ),
                other => return Err(FileError::Invalid(format!("unknown gallery kind {other:?}"))),
            };
            write_lattice_file(&out, &file)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                kind: String,
                n: usize,
                path: String,
            }
            Ok(to_canonical_json(&Report {
                format: "gallery-v1",
                kind,
                n: file.n,
                path: out.display().to_string(),
            }))
        }
        Command::OrthoCheck { file } => {
            let lattice_file = read_lattice_file(&file)?;
            if lattice_file.perp.is_none() {
                return Err(FileError::Lattice(LatticeError::PerpUnavailable));
            }
            let (_, ortho) = lattice_file.to_lattice()?;
            let o = ortho.expect("perp present");
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                valid: bool,
                n: usize,
            }
            Ok(to_canonical_json(&Report { format: "ortho-check-v1", valid: true, n: o.len() }))
        }
        Command::OrthoFactor { file, fn_file } => {
            let (_, ortho) = load_lattice(&file)?;
            let o = ortho.ok_or(FileError::Lattice(LatticeError::PerpUnavailable))?;
            let f = load_function(&fn_file, o.len())?;
            let report = factorization_report(&o, &f)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                sum_size: usize,
                graph_antichain: bool,
                g_monotone: bool,
                h_monotone: bool,
                identity_verified: bool,
            }
            Ok(to_canonical_json(&Report {
                format: "ortho-factor-v1",
                sum_size: report.o1.len(),
                graph_antichain: report.graph_is_antichain,
                g_monotone: report.g_monotone,
                h_monotone: report.h_monotone,
                identity_verified: report.identity_verified,
            }))
        }
        Command::Amplify { file, antichain, max_size } => {
            let (l, _) = load_lattice(&file)?;
            let outcome = antichain_amplification(&l, &antichain, max_size)?;
            #[derive(Serialize)]
            struct Report {
                format: &'static str,
                outcome: &'static str,
                #[serde(skip_serializing_if = "Option::is_none")]
                family_size: Option<usize>,
                #[serde(skip_serializing_if = "Option::is_none")]
                n_prime: Option<usize>,
                #[serde(skip_serializing_if = "Option::is_none")]
                coefficients: Option<Vec<Vec<usize>>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                terms: Option<Vec<String>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness_table: Option<Vec<usize>>,
            }
            Ok(to_canonical_json(&match outcome {
                AmplificationOutcome::Amplified { family_size, terms, n_prime, coefficients } => {
                    Report {
                        format: "amplify-v1",
                        outcome: "amplified",
                        family_size: Some(family_size),
                        n_prime: Some(n_prime),
                        coefficients: Some(coefficients),
                        terms: Some(terms.iter().map(|t| t.to_string()).collect()),
                        witness_table: None,
                    }
                }
                AmplificationOutcome::NonPolynomialWitness(f) => Report {
                    format: "amplify-v1",
                    outcome: "non-polynomial-witness",
                    family_size: None,
                    n_prime: None,
                    coefficients: None,
                    terms: None,
                    witness_table: Some(f.dense_values()),
                },
            }))
        }
    }
}
