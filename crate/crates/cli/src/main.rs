use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::{error_json, Format};

#[derive(Debug, Parser)]
#[command(
    name = "stmodk",
    version,
    about = "Homotopy K-theory and A1-invariants of stable and cluster categories"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Stamp the report with the current Unix time.
    #[arg(long, global = true)]
    timestamps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BaseArgs {
    /// Order of the finite base field.
    #[arg(long = "base-q", default_value_t = 2)]
    pub base_q: u64,
    /// Highest degree i for which KH_i is reported.
    #[arg(long, default_value_t = 5)]
    pub max_degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Snf,
    Modkernel,
    Nakayama,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exterior algebra on g generators.
    Exterior {
        #[arg(long)]
        generators: u32,
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Group algebra of (Z/p)^r over F_p.
    GroupAlgebra {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        /// Defaults to p.
        #[arg(long = "base-q")]
        base_q: Option<u64>,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
    },
    /// Truncated polynomial ring k[x]/(x^m).
    Truncated {
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Self-injective Nakayama algebra.
    Nakayama {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Algebra described by a JSON descriptor file.
    AlgebraFile {
        path: PathBuf,
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Cluster category of A_n with linear orientation.
    Cluster {
        #[arg(long)]
        n: usize,
        /// Report every n' from n through this bound.
        #[arg(long)]
        scan_to: Option<usize>,
    },
    /// Quillen's K-groups of F_q.
    Kgroups {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
    },
    /// The phi-matrix of the exterior algebra on g generators.
    Phi {
        #[arg(long)]
        generators: u32,
        /// Compare snf(phi) with diag(1, ..., 1, snf(C)).
        #[arg(long)]
        verify_snf: bool,
    },
    /// Flag descriptor files whose Cartan matrix is unimodular.
    PhantomScan { paths: Vec<PathBuf> },
    /// Cross-check fast paths against brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = stmodk_core::oracle::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("usage error")
                .trim_start_matches("error: ");
            print!("{}", error_json("usage_error", first));
            eprint!("{msg}");
            return ExitCode::from(2);
        }
    };

    match commands::run(&cli.command) {
        Ok(outcome) => {
            let mut report = outcome.report;
            if cli.timestamps {
                report.generated_at = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .ok()
                    .map(|d| d.as_secs());
            }
            let body = report.emit(cli.format);
            if let Err(e) = write_output(cli.out.as_ref(), &body) {
                print!("{}", error_json("io_error", &e.to_string()));
                return ExitCode::from(1);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => print!("{}", error_json(e.code(), &e.to_string())),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(1)
        }
    }
}

fn write_output(out: Option<&PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}
