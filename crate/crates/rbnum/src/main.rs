//! Thin command-line front end over the library; all logic lives in
//! [`rbnum::report`] and below.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rbnum::report::{
    run_construct, run_rb, run_sweep, run_verify, CliError, ConstructionKind, OutputFormat,
    StoreOptions,
};
use rbnum::SearchLimits;

#[derive(Parser)]
#[command(
    name = "rbnum",
    version,
    about = "Exact rainbow numbers of x1 + ... + x(k-1) = xk over [1, n]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rb([n], eq) exactly by pruned exhaustive search
    Rb {
        /// Interval size n (domain [1, n])
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Number of variables k in x1 + ... + x(k-1) = xk
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        /// Skip counting the extremal colorings
        #[arg(long)]
        no_extremal: bool,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        store: StoreArgs,
    },
    /// Emit a rainbow-free construction as a coloring file
    Construct {
        /// Interval size n (domain [1, n])
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Number of variables k in x1 + ... + x(k-1) = xk
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        /// Construction to emit (default: trailing-zeros for k = 3, staircase otherwise)
        #[arg(long, value_enum)]
        which: Option<Which>,
        /// Write the coloring here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring file: exactness, canonical form, rainbow-freeness
    Verify {
        /// Coloring file ("n=<n> r=<r>" header, then one color per element)
        file: PathBuf,
        /// Number of variables k in x1 + ... + x(k-1) = xk
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
    },
    /// Compute rb for every n in an inclusive range; emit CSV or JSON
    Sweep {
        /// Smallest n of the range
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_min: u64,
        /// Largest n of the range
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Number of variables k in x1 + ... + x(k-1) = xk
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also enumerate extremal colorings per row (fills extremal_count)
        #[arg(long)]
        extremal: bool,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        store: StoreArgs,
    },
}

#[derive(Args)]
struct LimitArgs {
    /// Abort the search after visiting this many nodes
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Abort the search after this many seconds of wall time
    #[arg(long)]
    max_seconds: Option<f64>,
    /// Worker threads for the search (1 = fully sequential)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=512))]
    threads: u64,
    /// Tightened k = 3 color bound from first-occurrence doubling
    #[arg(long = "lemma5-prune", value_enum, default_value_t = Toggle::On)]
    lemma5_prune: Toggle,
}

impl LimitArgs {
    fn to_limits(&self) -> Result<SearchLimits, CliError> {
        let max_wall_time = match self.max_seconds {
            Some(s) if s.is_finite() && (0.0..=1e9).contains(&s) => {
                Some(Duration::from_secs_f64(s))
            }
            Some(s) => {
                return Err(CliError::Usage(format!(
                    "--max-seconds must be between 0 and 1e9, got {s}"
                )))
            }
            None => None,
        };
        Ok(SearchLimits {
            max_nodes: self.max_nodes,
            max_wall_time,
            parallel_width: self.threads as usize,
            doubling_prune: self.lemma5_prune == Toggle::On,
            ..SearchLimits::default()
        })
    }
}

#[derive(Args)]
struct StoreArgs {
    /// Result store file (JSON)
    #[arg(long, default_value = "rbnum-store.json")]
    store: PathBuf,
    /// Do not read or write the result store
    #[arg(long)]
    no_store: bool,
    /// Delete the result store before running
    #[arg(long)]
    reset_store: bool,
}

impl StoreArgs {
    fn to_options(&self) -> StoreOptions {
        StoreOptions {
            path: self.store.clone(),
            enabled: !self.no_store,
            reset: self.reset_store,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    TrailingZeros,
    Staircase,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Rb {
            n,
            k,
            no_extremal,
            limits,
            store,
        } => run_rb(
            n as usize,
            k as usize,
            &limits.to_limits()?,
            &store.to_options(),
            !no_extremal,
        ),
        Command::Construct { n, k, which, out } => {
            let kind = match which {
                Some(Which::TrailingZeros) => ConstructionKind::TrailingZeros,
                Some(Which::Staircase) => ConstructionKind::Staircase,
                None if k == 3 => ConstructionKind::TrailingZeros,
                None => ConstructionKind::Staircase,
            };
            run_construct(n as usize, k as usize, kind, out.as_deref())
        }
        Command::Verify { file, k } => run_verify(&file, k as usize),
        Command::Sweep {
            n_min,
            n_max,
            k,
            format,
            out,
            extremal,
            limits,
            store,
        } => {
            if n_min > n_max {
                return Err(CliError::Usage(format!(
                    "--n-min ({n_min}) must not exceed --n-max ({n_max})"
                )));
            }
            run_sweep(
                n_min as usize,
                n_max as usize,
                k as usize,
                &limits.to_limits()?,
                format.into(),
                out.as_deref(),
                &store.to_options(),
                extremal,
            )
        }
    }
}
