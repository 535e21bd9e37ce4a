//! `monoreg`: exact computations on monomial ideals and weighted oriented
//! graphs, plus randomized verification suites.
//!
//! Reports go to stdout as JSON; human summaries go to stderr. Exit codes:
//! 0 on success, 1 when a verification finds failures, 2 on usage or parse
//! errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use monoreg::{
    critical_pairs, degree_complex, integral_closure, np_membership, reduced_homology_dims,
    regularity, regularity_oracle_koszul, Field,
};
use monoreg_cli::input::{load_complex, load_graph, load_ideal, parse_exponent};
use monoreg_cli::suites::{run_suite, Suite, SuiteParams};
use monoreg_cli::{golden, resolve_seed};

#[derive(Parser)]
#[command(name = "monoreg", version, about = "Exact regularity and integral closure computations for monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Prime characteristic for the coefficient field (default: rationals).
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

impl FieldArg {
    fn field(&self) -> anyhow::Result<Field> {
        match self.characteristic {
            None => Ok(Field::Rationals),
            Some(p) => Ok(Field::gf(p)?),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Castelnuovo-Mumford regularity of a monomial ideal.
    Reg {
        /// Ideal file or inline text (`x1*x2^3, ...`) or JSON.
        #[arg(long)]
        ideal: String,
        /// Ambient variable count (otherwise inferred).
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        field: FieldArg,
        /// Cross-check with the Betti-number oracle.
        #[arg(long)]
        oracle: bool,
        /// Print the extremal witness to stderr.
        #[arg(long)]
        witness: bool,
    },
    /// Integral closure of a monomial ideal.
    Closure {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: Option<usize>,
        /// Print as JSON instead of the text grammar.
        #[arg(long)]
        json: bool,
    },
    /// Newton-polyhedron membership with an exact certificate.
    Member {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated exponent, e.g. `5,1,1`.
        #[arg(long)]
        exp: String,
    },
    /// The degree complex of an ideal at an exponent.
    DegreeComplex {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        exp: String,
        /// Also list the critical pairs found at this exponent.
        #[arg(long)]
        pairs: bool,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Reduced homology dimensions of a facet-encoded complex.
    Homology {
        /// Complex file or inline JSON `{"n":3,"facets":[[1,2],[2,3]]}`.
        #[arg(long)]
        complex: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Edge ideal of a weighted oriented graph.
    EdgeIdeal {
        /// Graph file or inline JSON.
        #[arg(long)]
        graph: String,
        /// Rewrite weighted sources to weight 1 instead of rejecting them.
        #[arg(long)]
        normalize_sources: bool,
        #[arg(long)]
        json: bool,
    },
    /// Regularity of a graph's edge ideal (or of its integral closure).
    GraphReg {
        #[arg(long)]
        graph: String,
        /// Compute the regularity of the integral closure instead.
        #[arg(long)]
        closure: bool,
        #[arg(long)]
        normalize_sources: bool,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Run a randomized verification suite.
    Verify {
        /// One of: main-inequality, complete-formulas, radical-formulas,
        /// acyclicity, oracle-crosscheck, closure-idempotence.
        suite: String,
        /// Maximum vertex / variable count.
        #[arg(long)]
        n: Option<usize>,
        /// Maximum weight (or exponent).
        #[arg(long)]
        wmax: Option<u32>,
        /// Number of instances.
        #[arg(long)]
        count: Option<usize>,
        /// RNG seed (falls back to MC_SEED, then the default).
        #[arg(long)]
        seed: Option<u64>,
        /// Exhaustive orientation sweep (complete-formulas only).
        #[arg(long)]
        exhaustive: bool,
        /// Lift the size caps (n <= 8, weights <= 6).
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Replay the fixed golden examples.
    Golden,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Reg {
            ideal,
            n,
            field,
            oracle,
            witness,
        } => {
            let ideal = load_ideal(&ideal, n)?;
            let field = field.field()?;
            let report = regularity(&ideal, field)?;
            let mut out = serde_json::to_value(&report)?;
            if oracle {
                let oracle_report = regularity_oracle_koszul(&ideal, field)?;
                let agree = oracle_report.reg_ideal == report.reg_ideal;
                out["oracle"] = serde_json::to_value(&oracle_report)?;
                out["oracle_agrees"] = json!(agree);
                if !agree {
                    println!("{out}");
                    eprintln!(
                        "DISAGREEMENT: engine {} vs oracle {}",
                        report.reg_ideal, oracle_report.reg_ideal
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            println!("{out}");
            eprintln!(
                "reg(I) = {}, reg(S/I) = {} over {}",
                report.reg_ideal, report.reg_module, report.field
            );
            if witness {
                eprintln!(
                    "witness: a = {:?}, i = {}, F = {}",
                    report.witness.a, report.witness.i, report.witness.face
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure { ideal, n, json } => {
            let ideal = load_ideal(&ideal, n)?;
            let closure = integral_closure(&ideal)?;
            if json {
                println!("{}", serde_json::to_string(&closure)?);
            } else {
                println!("{closure}");
            }
            eprintln!(
                "{} minimal generators ({} in the input)",
                closure.num_gens(),
                ideal.num_gens()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { ideal, n, exp } => {
            let ideal = load_ideal(&ideal, n)?;
            let a = parse_exponent(&exp, ideal.n())?;
            let (member, cert) = np_membership(&ideal, &a)?;
            let cert_json = cert.as_ref().map(|c| {
                c.coefficients
                    .iter()
                    .map(|(&idx, coeff)| {
                        json!({
                            "generator": ideal.gens()[idx].coords(),
                            "coefficient": coeff.to_string(),
                        })
                    })
                    .collect::<Vec<_>>()
            });
            println!(
                "{}",
                json!({ "member": member, "certificate": cert_json })
            );
            eprintln!(
                "x^{:?} is {}in the integral closure",
                a.coords(),
                if member { "" } else { "NOT " }
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::DegreeComplex {
            ideal,
            n,
            exp,
            pairs,
            field,
        } => {
            let ideal = load_ideal(&ideal, n)?;
            let a = parse_exponent(&exp, ideal.n())?;
            let delta = degree_complex(&ideal, &a)?;
            let mut out = serde_json::to_value(&delta)?;
            if pairs {
                let field = field.field()?;
                let found: Vec<_> = critical_pairs(&ideal, field)?
                    .into_iter()
                    .filter(|p| p.a == a)
                    .collect();
                out["critical_pairs"] = serde_json::to_value(&found)?;
            }
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { complex, field } => {
            let complex = load_complex(&complex)?;
            let profile = reduced_homology_dims(&complex, field.field()?);
            println!("{}", serde_json::to_string(&profile)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::EdgeIdeal {
            graph,
            normalize_sources,
            json,
        } => {
            let graph = load_graph(&graph, normalize_sources)?;
            let ideal = graph.edge_ideal();
            if json {
                println!("{}", serde_json::to_string(&ideal)?);
            } else {
                println!("{ideal}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GraphReg {
            graph,
            closure,
            normalize_sources,
            field,
        } => {
            let graph = load_graph(&graph, normalize_sources)?;
            let mut ideal = graph.edge_ideal();
            if closure {
                ideal = integral_closure(&ideal)?;
            }
            let report = regularity(&ideal, field.field()?)?;
            println!("{}", serde_json::to_string(&report)?);
            eprintln!(
                "reg = {} ({}, {} generators)",
                report.reg_ideal,
                if closure { "integral closure" } else { "edge ideal" },
                ideal.num_gens()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n,
            wmax,
            count,
            seed,
            exhaustive,
            allow_large,
            field,
        } => {
            let suite = Suite::from_name(&suite)
                .ok_or_else(|| anyhow::anyhow!("unknown suite `{suite}`"))?;
            let mut params = default_params_for(suite);
            if let Some(n) = n {
                params.n = n;
            }
            if let Some(w) = wmax {
                params.w_max = w;
            }
            if let Some(c) = count {
                params.count = c;
            }
            params.seed = resolve_seed(seed);
            params.field = field.field()?;
            params.exhaustive = exhaustive;
            if !allow_large && (params.n > 8 || params.w_max > 6) {
                anyhow::bail!(
                    "size caps are n <= 8 and weights <= 6 (regularity search grows \
                     exponentially); pass --allow-large to override"
                );
            }
            let run = run_suite(suite, &params);
            println!("{}", serde_json::to_string(&run)?);
            summarize(&run);
            Ok(if run.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Golden => {
            let run = golden::run_golden();
            println!("{}", serde_json::to_string(&run)?);
            summarize(&run);
            Ok(if run.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn default_params_for(suite: Suite) -> SuiteParams {
    let mut params = SuiteParams::default();
    match suite {
        Suite::MainInequality => {
            params.n = 6;
            params.w_max = 4;
            params.count = 100;
        }
        Suite::CompleteFormulas => {
            params.n = 4;
            params.w_max = 4;
            params.count = 50;
        }
        Suite::RadicalFormulas => {
            params.n = 6;
            params.w_max = 4;
            params.count = 100;
        }
        Suite::Acyclicity => {
            params.n = 6;
            params.w_max = 4;
            params.count = 100;
        }
        Suite::OracleCrosscheck => {
            params.n = 4;
            params.w_max = 4;
            params.count = 200;
        }
        Suite::ClosureIdempotence => {
            params.n = 5;
            params.w_max = 5;
            params.count = 100;
        }
    }
    params
}

fn summarize(run: &monoreg_cli::VerificationRun) {
    let total_ms: u64 = run.timings_ms.iter().sum();
    eprintln!(
        "suite {}: {} instances, {} failures, {} notes, {} ms (seed {})",
        run.suite,
        run.instances,
        run.failures.len(),
        run.notes.len(),
        total_ms,
        run.seed
    );
    for f in &run.failures {
        eprintln!("  FAIL #{}: {}", f.index, f.detail);
    }
    for note in &run.notes {
        eprintln!("  note: {note}");
    }
}
