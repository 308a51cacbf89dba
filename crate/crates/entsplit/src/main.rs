use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process;

use clap::{Args, Parser, Subcommand};
use entsplit::report::{self, ReportDoc};
use entsplit::sweep::{self, Format, SweepSpec};
use entsplit::transform_file::read_transform;
use entsplit::{CliError, ExitCode};
use entsplit_core::splitting::{
    optimality_probe, pairwise_entanglement, split_n_branch, split_schmidt, split_singlet,
    werner_fraction_from_coefficients,
};
use entsplit_core::SchmidtParams;

/// Entanglement splitting experiments.
#[derive(Debug, Parser)]
#[command(name = "entsplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entanglement of formation of one branch versus |alpha|.
    Figure1 {
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value_t = 0.0)]
        alpha_sq_min: f64,
        #[arg(long, default_value_t = 1.0)]
        alpha_sq_max: f64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        branches: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Pairwise entanglement among A, B1, B2 and the ancilla.
    Figure2 {
        #[arg(long)]
        alpha_sq: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Full diagnostics of one splitting run, as JSON.
    Report {
        #[arg(long)]
        alpha_sq: f64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        branches: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a transform file against the splitting constraints.
    Check { transform: PathBuf },
    /// Split Werner inputs and locate separable outputs of entangled inputs.
    WernerScan {
        #[arg(long, default_value_t = 201)]
        points: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Random search for transforms beating the optimal singlet fraction.
    Probe {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Figure1 { points, alpha_sq_min, alpha_sq_max, branches, output } => {
            let spec = SweepSpec { alpha_sq_min, alpha_sq_max, points, n_branches: branches };
            let table = sweep::figure1(&spec)?;
            emit(&table.render(output.format.unwrap_or(Format::Csv)), output.out.as_deref())
        }
        Command::Figure2 { alpha_sq, output } => {
            let p = SchmidtParams::from_alpha_sq(alpha_sq)?;
            let map = pairwise_entanglement(&p)?;
            let text = match output.format {
                None => report::pairwise_table(&map),
                Some(Format::Csv) => report::pairwise_csv(&map),
                Some(Format::Json) => report::pairwise_json(alpha_sq, &map),
            };
            emit(&text, output.out.as_deref())
        }
        Command::Report { alpha_sq, branches, out } => {
            let [n] = branches[..] else {
                return Err(CliError::Usage("report takes exactly one branch count".into()));
            };
            let p = SchmidtParams::from_alpha_sq(alpha_sq)?;
            let r = if n == 2 { split_schmidt(&p)? } else { split_n_branch(&p, n)? };
            emit(&ReportDoc::new(&r).to_json(), out.as_deref())
        }
        Command::Check { transform } => {
            let (name, t) = read_transform(&transform)?;
            let constraints = t.check_constraints();
            let f_w = if constraints.all_pass() { split_singlet(&t)?.f_w } else { None };
            emit(&report::constraint_text(name.as_deref(), &t, &constraints, f_w), None)?;
            if constraints.all_pass() {
                Ok(())
            } else {
                Err(CliError::Constraint(format!(
                    "constraints violated (coefficient formula would give F_W = {:.12})",
                    werner_fraction_from_coefficients(&t)
                )))
            }
        }
        Command::WernerScan { points, output } => {
            let scan = sweep::werner_scan(points)?;
            emit(&scan.table.render(output.format.unwrap_or(Format::Csv)), output.out.as_deref())?;
            match scan.interval {
                Some((lo, hi)) => eprintln!(
                    "separable output from entangled input for fw_in in [{lo}, {hi}]{}",
                    if scan.contiguous { "" } else { " (not contiguous)" }
                ),
                None => eprintln!("no entangled input gave a separable output"),
            }
            Ok(())
        }
        Command::Probe { trials, seed } => {
            let p = optimality_probe(trials, seed)?;
            emit(&report::probe_text(trials, seed, &p), None)?;
            if p.max_f_w > 0.75 + 1e-9 || p.min_f_w < -1e-9 {
                return Err(CliError::Constraint(format!("singlet fraction bound broken: {}", p.max_f_w)));
            }
            Ok(())
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage } else { ExitCode::Success };
            let _ = e.print();
            process::exit(code as i32);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        process::exit(e.exit_code() as i32);
    }
}
