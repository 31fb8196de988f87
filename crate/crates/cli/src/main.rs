mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kerov_core::clt::Normalization;
use kerov_core::{Alpha, Error};

/// Exit status for malformed invocations (sysexits `EX_USAGE`).
const EXIT_USAGE: u8 = 64;
/// Exit status when an output file cannot be written (sysexits `EX_IOERR`).
const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "kerov", version, about = "Exact identity suites and Monte Carlo experiments for Jack measures, Kerov growth and tensor-product walks")]
struct Cli {
    /// Worker threads; defaults to KEROV_THREADS, then to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every exact identity suite up to a size over a list of alpha values.
    Verify(VerifyArgs),
    /// Monte Carlo Kolmogorov distance of W to the standard normal.
    Clt(CltArgs),
    /// Exact expectations of conditional content moments under Jack measure.
    Moments(MomentsArgs),
    /// Build the walk on irreducibles of S_n for a character and check it.
    Walk(WalkArgs),
    /// Sample one growth path.
    Sample(SampleArgs),
    /// Dump the theta table of Jack power-sum coefficients as CSV.
    Theta(ThetaArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest partition size checked.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Comma-separated alpha values as integers or p/q.
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, default_value = "1/2,1,2,5/3")]
    pub alpha: Vec<Alpha>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CltArgs {
    #[arg(long, value_parser = parse_alpha, default_value = "1")]
    pub alpha: Alpha,
    /// Comma-separated partition sizes.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400,800")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exponent in L_{n,2δ}, in (0, 1].
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    /// canonical, shifted-binomial or linear.
    #[arg(long, default_value = "canonical")]
    pub normalization: Normalization,
    /// CSV output; without it the CSV goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON summary output; printed to stdout when only --out is given.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    /// Comma-separated sizes, each at most 30.
    #[arg(long, value_delimiter = ',', default_value = "10,20,30")]
    pub n: Vec<usize>,
    /// Comma-separated moment orders.
    #[arg(long, value_delimiter = ',', default_value = "2,4")]
    pub r: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, default_value = "1")]
    pub alpha: Vec<Alpha>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WalkArgs {
    #[arg(long)]
    pub n: usize,
    /// perm, std, regular, or a path to a file of "partition multiplicity" lines.
    #[arg(long, default_value = "perm")]
    pub eta: String,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_alpha, default_value = "1")]
    pub alpha: Alpha,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ThetaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_alpha, default_value = "1")]
    pub alpha: Alpha,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    s.parse::<Alpha>().map_err(|e| e.to_string())
}

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    /// The run finished and at least one identity failed.
    Violation,
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Violation => 1,
        Failure::Core(Error::Resource { .. }) => 2,
        Failure::Core(Error::Domain(_) | Error::Parse(_) | Error::Unsupported(_)) => EXIT_USAGE,
        Failure::Core(Error::Hypothesis(_) | Error::Internal(_)) => 1,
        Failure::Io(_) => EXIT_IO,
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, String> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("KEROV_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("KEROV_THREADS must be a positive integer, got {v:?}")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match thread_count(cli.threads) {
        Ok(Some(0)) | Err(_) => {
            eprintln!("error: thread count must be a positive integer");
            return ExitCode::from(EXIT_USAGE);
        }
        Ok(Some(t)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
        Ok(None) => {}
    }
    let result = match cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Clt(a) => commands::clt(a),
        Command::Moments(a) => commands::moments(a),
        Command::Walk(a) => commands::walk(a),
        Command::Sample(a) => commands::sample(a),
        Command::Theta(a) => commands::theta(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Violation => eprintln!("identity violation found"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
