use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permscape_cli::{cmd_ea, cmd_fdc, cmd_pca, with_threads, EaOptions, FdcOptions, Mode, PcaOptions};

/// Permutation fitness-landscape experiments.
#[derive(Parser)]
#[command(name = "permscape", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Directory for CSV tables and the metadata file.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Worker threads (default: all available cores). Output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Correlation matrix and principal components of the distance measures.
    Pca {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = 3_628_800)]
        samples: usize,
        /// Comma-separated measure names (default: the eleven PCA measures).
        #[arg(long)]
        measures: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Fitness-distance correlation on the example landscapes.
    Fdc {
        /// Comma-separated presets L1..L5, or a TOML landscape file.
        #[arg(long, default_value = "L1,L2,L3,L4,L5")]
        landscape: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        measures: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Mutation-operator comparison with the evolutionary algorithm.
    Ea {
        /// tsp, atsp or haystack-<measure>.
        #[arg(long)]
        problem: String,
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Comma-separated operators, e.g. `reversal,cycle:5,uscramble:0.25`.
        #[arg(long, default_value = "adjswap,swap,insertion,reversal,3opt,blockmove,blockswap,cycle,scramble,uscramble")]
        operators: String,
        #[arg(long, default_value_t = 10)]
        runs: usize,
        #[arg(long, default_value_t = 10)]
        instances: usize,
        #[arg(long, default_value_t = 1000)]
        generations: usize,
        #[arg(long, default_value_t = 100)]
        population: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, job): (&Common, Box<dyn FnOnce() -> permscape_cli::Result<_> + Send>) = match &cli.command {
        Command::Pca { n, mode, samples, measures, common } => {
            let opts = PcaOptions {
                n: *n,
                mode: match mode {
                    ModeArg::Exhaustive => Mode::Exhaustive,
                    ModeArg::Sampled => Mode::Sampled,
                },
                samples: *samples,
                seed: common.seed,
                measures: measures.clone(),
                reference: None,
            };
            (common, Box::new(move || cmd_pca(&opts)))
        }
        Command::Fdc { landscape, samples, measures, common } => {
            let opts = FdcOptions {
                landscapes: landscape.clone(),
                samples: *samples,
                seed: common.seed,
                measures: measures.clone(),
            };
            (common, Box::new(move || cmd_fdc(&opts)))
        }
        Command::Ea { problem, n, operators, runs, instances, generations, population, common } => {
            let opts = EaOptions {
                problem: problem.clone(),
                n: *n,
                operators: operators.clone(),
                runs: *runs,
                instances: *instances,
                generations: *generations,
                population: *population,
                seed: common.seed,
            };
            (common, Box::new(move || cmd_ea(&opts)))
        }
    };
    let result = with_threads(common.threads, job).and_then(|r| r).and_then(|report| report.write(&common.out));
    match result {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("permscape: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
