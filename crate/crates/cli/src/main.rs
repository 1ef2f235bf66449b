//! `gencount`: Hilbert bases of weighted congruences, torus invariants of
//! binary forms, SL₂ invariant dimensions and Weyl dimensions.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use gencount::congruence::SearchOptions;
use gencount::verify::{VerifyConfig, DEFAULT_SEED};

use commands::{Failure, WeylQuery, WeylSource};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "gencount", version, about = "Exact generator counts for torus and SL2 invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Write to this file (atomically) instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Work budget in visited search nodes.
    #[arg(long, env = "GENCOUNT_BUDGET", global = true, default_value_t = gencount::congruence::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(10_000..))]
    budget: u64,

    /// Worker threads.
    #[arg(long, env = "GENCOUNT_WORKERS", global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..=1024))]
    workers: u64,

    /// Seed for the randomly drawn systems of `verify oracle`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert basis of w_1 x_1 + ... + w_r x_r ≡ 0 (mod n); modulus 0 means equality.
    HilbertBasis {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        #[arg(long)]
        modulus: u64,
        /// Degree cap (default: n, or 2·max|w| - 1 for modulus 0).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Torus invariants of binary forms of degree n against the binomial bounds.
    BinaryForms {
        #[arg(long)]
        n: u32,
    },
    /// Table of a_n(d) = dim S^d(V_n)^SL2 with generator lower bounds.
    Sl2 {
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        d_max: u32,
    },
    /// Growth of a_n(d) in n for fixed d.
    Growth {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        fit_from: Option<u32>,
        /// Emit `ln n  ln a_n(d)` pairs for plotting.
        #[arg(long)]
        plot_data: bool,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Override the suite's upper parameter.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Weyl dimension of V_(nλ), or the dimension polynomial in n.
    #[command(group(ArgGroup::new("system").required(true).args(["preset", "file"])))]
    #[command(group(ArgGroup::new("query").required(true).args(["n", "poly"])))]
    Weyl {
        /// A1, A2, B2 or G2; λ in fundamental-weight coordinates.
        #[arg(long)]
        preset: Option<String>,
        /// JSON root system {rank, positive_roots, gram}; λ in ambient coordinates.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<String>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        poly: bool,
    },
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let workers = cli.workers as usize;
    let options = SearchOptions::default().with_budget(cli.budget).with_workers(workers);
    let (out, passed) = match &cli.command {
        Command::HilbertBasis { weights, modulus, cap } => {
            (commands::hilbert_basis(weights.clone(), *modulus, *cap, &options)?, true)
        }
        Command::BinaryForms { n } => (commands::binary_forms(*n, &options)?, true),
        Command::Sl2 { n_max, d_max } => (commands::sl2_table(*n_max, *d_max, workers)?, true),
        Command::Growth { d, n_max, fit_from, plot_data } => {
            (commands::growth(*d, *n_max, *fit_from, *plot_data, workers)?, true)
        }
        Command::Verify { suite, max_n } => {
            let config = VerifyConfig { max_n: *max_n, options, seed: cli.seed, ..VerifyConfig::default() };
            commands::verify(suite, &config)?
        }
        Command::Weyl { preset, file, lambda, n, poly } => {
            let source = match (preset, file) {
                (Some(p), _) => WeylSource::Preset(p),
                (None, Some(f)) => WeylSource::File(f),
                (None, None) => unreachable!("clap requires one of --preset, --file"),
            };
            let query = match (n, poly) {
                (Some(n), _) => WeylQuery::At(*n),
                _ => WeylQuery::Polynomial,
            };
            (commands::weyl(source, lambda, query)?, true)
        }
    };
    output::emit(cli.output.as_deref(), &out.render(cli.format)?)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(Failure::Verify.exit_code())
        }
        Err(failure) => {
            match &failure {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Verify => eprintln!("verification failed"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
