use clap::{Parser, Subcommand};
use std::io::Write;
use std::process::ExitCode;
use takagi_cli::{cmd_pick, cmd_solve, cmd_validate, cmd_verify, Emit, Overrides, RunOptions, Status};

/// Boundary interpolation in generalized Schur classes.
///
/// Exit codes: 0 success or verified, 1 verification failed, 2 validation failed, 3 parse error.
#[derive(Debug, Parser)]
#[command(name = "takagi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Relative singular-value threshold for rank decisions.
    #[arg(long, global = true)]
    tol_rank: Option<f64>,
    /// Threshold for treating eigenvalues as zero.
    #[arg(long, global = true)]
    tol_eig: Option<f64>,
    /// Relative residual accepted for matrix identities.
    #[arg(long, global = true)]
    tol_res: Option<f64>,
    /// Override the domain of the problem file ("disc" or "half-plane").
    #[arg(long, global = true)]
    domain: Option<String>,
    /// Emit JSON on stdout (the only output format).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the standing assumptions and report P, X and the negative index of P.
    Validate { file: String },
    /// Build W, the associated pair and K, and parametrize and verify a solution.
    Solve {
        file: String,
        /// Seed for randomized steps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parts to include in the report.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        emit: Vec<Emit>,
    },
    /// Verify the candidate_s of the problem file.
    Verify { file: String },
    /// Report the Pick matrix P and its inertia.
    Pick { file: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Status::ParseError.exit_code() } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let overrides =
        Overrides { domain: cli.domain, tol_rank: cli.tol_rank, tol_eig: cli.tol_eig, tol_res: cli.tol_res };
    let mut opts = RunOptions { overrides, ..RunOptions::default() };
    let report = match &cli.command {
        Command::Validate { file } => cmd_validate(file, &opts),
        Command::Solve { file, seed, emit } => {
            opts.seed = *seed;
            opts.emit = emit.clone();
            cmd_solve(file, &opts)
        }
        Command::Verify { file } => cmd_verify(file, &opts),
        Command::Pick { file } => cmd_pick(file, &opts),
    };
    let _ = writeln!(std::io::stdout().lock(), "{}", report.to_json());
    ExitCode::from(report.exit_code as u8)
}
