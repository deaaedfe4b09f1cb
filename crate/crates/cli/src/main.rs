//! `downup` — batch verifier for the Hochschild cohomology of the down-up
//! algebra A(0,1,0).
//!
//! Exit codes: 0 all checks pass (documented corrections allowed), 1 a
//! verification check failed or a cocycle was rejected, 2 usage or parse
//! error.

use std::process::ExitCode;

use downup_cli::parse;

use clap::{Args, Parser, Subcommand};
use downup_core::{
    dims_csv, run_verification, BoundaryTest, FieldSpec, HomologyEngine, RunConfig, RunScope,
};

#[derive(Parser)]
#[command(
    name = "downup",
    version,
    about = "Exact verifier for the Hochschild cohomology of the down-up algebra A(0,1,0)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EngineOpts {
    /// Exact field: `q` for rationals or `fp:<p>` for a prime field, p odd
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
}

#[derive(Args, Clone)]
struct VerifyOpts {
    #[command(flatten)]
    engine: EngineOpts,
    /// Largest weight swept by the slice computations
    #[arg(long, default_value_t = 12)]
    wmax: u32,
    /// Seed for the sampled checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include full slice matrices in the JSON report
    #[arg(long)]
    verbose: bool,
    /// Write the JSON report to this path instead of stdout
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW normal form of an algebra expression
    NormalForm {
        #[command(flatten)]
        engine: EngineOpts,
        /// Expression over x, y, z, e.g. "y*x" or "2*x^2*y - x*z"
        expr: String,
    },
    /// Apply the differential to a cochain literal
    Diff {
        #[command(flatten)]
        engine: EngineOpts,
        /// Cochain, e.g. "t^v # (x) - u^v # (y)"
        cochain: String,
    },
    /// Emit the dimensions table (CSV) for all degrees and weights
    HomologyDims {
        #[command(flatten)]
        engine: EngineOpts,
        #[arg(long, default_value_t = 12)]
        wmax: u32,
        /// Also write the rows as JSON to this path
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
    /// Reduce a cocycle to its class coordinates or a boundary witness
    Reduce {
        #[command(flatten)]
        engine: EngineOpts,
        cochain: String,
    },
    /// Verify the multiplication tables
    VerifyTables(VerifyOpts),
    /// Verify the module structure over the center
    VerifyModules(VerifyOpts),
    /// Run the full verification suite
    VerifyAll(VerifyOpts),
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::NormalForm { engine, expr } => match parse::parse_algebra(&expr, engine.field) {
            Ok(e) => {
                println!("{e}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Diff { engine, cochain } => match parse::parse_cochain(&cochain, engine.field) {
            Ok(c) => {
                println!("{}", c.differential(engine.field));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::HomologyDims { engine, wmax, json } => {
            let eng = HomologyEngine::new(engine.field);
            let rows = eng.dims_table(wmax);
            print!("{}", dims_csv(&rows));
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&rows).expect("rows serialize");
                if let Err(e) = std::fs::write(&path, body) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if rows.iter().all(|r| r.matches) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Reduce { engine, cochain } => {
            let c = match parse::parse_cochain(&cochain, engine.field) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(2);
                }
            };
            let eng = HomologyEngine::new(engine.field);
            match eng.is_boundary(&c) {
                Ok(BoundaryTest::Boundary { witness }) => {
                    println!("boundary; witness b with d(b) = c:");
                    println!("  b = {witness}");
                    ExitCode::SUCCESS
                }
                Ok(BoundaryTest::NotBoundary { class }) => {
                    let coords: Vec<String> =
                        class.coordinates.iter().map(|s| s.to_string()).collect();
                    println!(
                        "class in degree {}, weight {}; coordinates [{}]",
                        class.degree,
                        class.weight,
                        coords.join(", ")
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::VerifyTables(opts) => run_verify(opts, RunScope::Tables),
        Command::VerifyModules(opts) => run_verify(opts, RunScope::Modules),
        Command::VerifyAll(opts) => run_verify(opts, RunScope::All),
    }
}

fn run_verify(opts: VerifyOpts, scope: RunScope) -> ExitCode {
    let cfg = RunConfig {
        field: opts.engine.field,
        w_max: opts.wmax,
        seed: opts.seed,
        verbose: opts.verbose,
        scope,
    };
    let report = run_verification(&cfg);
    let body = report.to_json();
    match opts.json {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &body) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            println!("{}", report.aggregate);
        }
        None => println!("{body}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
