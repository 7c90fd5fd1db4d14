use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclebound::report::NumberMode;
use cyclebound::{Error, Rational, SearchConfig};

mod commands;

#[derive(Parser)]
#[command(
    name = "cyclebound",
    version,
    about = "Exact heaviest-cycle bounds for weighted graphs"
)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct RunArgs {
    /// How numbers are printed. Computation is always exact.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest vertex count for brute-force cycle enumeration.
    #[arg(long = "enum-cap", default_value_t = 12, value_parser = parse_cap, global = true)]
    enum_cap: usize,
    /// Largest block order for the heaviest-cycle search.
    #[arg(long = "search-cap", default_value_t = 15, value_parser = parse_cap, global = true)]
    search_cap: usize,
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum Command {
    /// Check the main inequality and print the per-edge report.
    Verify { file: PathBuf },
    /// Decomposition, equality certificate and corollaries in one pass.
    Analyze {
        file: PathBuf,
        /// Threshold T for the light-mass bound (repeatable), e.g. 13 or 9/2.
        #[arg(long = "threshold")]
        thresholds: Vec<Rational>,
    },
    /// Print a generated instance.
    #[command(subcommand)]
    Generate(GenerateKind),
    /// Random falsification run.
    Fuzz {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long = "n-min", default_value_t = 3)]
        n_min: usize,
        /// Instances per vertex count.
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also compare every C_w(e) with brute-force enumeration.
        #[arg(long = "cross-check")]
        cross_check: bool,
        /// Where a failing instance is written.
        #[arg(long = "out-dir", default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Uniform random labelled tree with random weights.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// K_r with w(uv) = (a(u) + a(v)) / 2.
    InducedClique {
        #[arg(long)]
        r: usize,
        /// Comma-separated vertex values.
        #[arg(long, value_delimiter = ',')]
        a: Vec<Rational>,
    },
    /// Block graph from a JSON recipe.
    BlockGraph {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random connected graph.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge count; defaults to a random spanning tree plus n extra edges.
        #[arg(long, conflicts_with = "p")]
        m: Option<usize>,
        /// Independent probability for each non-tree pair.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|e| format!("{e}"))?;
    if cap < 3 {
        return Err("caps must be at least 3".into());
    }
    Ok(cap)
}

impl RunArgs {
    fn search(&self) -> SearchConfig {
        let cfg = SearchConfig {
            enumeration_cap: self.enum_cap,
            search_cap: self.search_cap,
            parallel: true,
        };
        if self.sequential {
            cfg.sequential()
        } else {
            cfg
        }
    }

    fn number_mode(&self) -> NumberMode {
        match self.mode {
            Mode::Exact => NumberMode::Exact,
            Mode::Float => NumberMode::Float,
        }
    }
}

pub(crate) enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(failure: &Failure, run: &RunArgs) -> u8 {
    match failure {
        Failure::Io(msg) => {
            eprintln!("error: {msg}");
            2
        }
        Failure::Core(err) => {
            eprintln!("error: {err}");
            match err {
                Error::CapExceeded { what, .. } => {
                    eprintln!(
                        "hint: {what} is limited by --enum-cap {} / --search-cap {}; raise the cap or split the instance",
                        run.enum_cap, run.search_cap
                    );
                    4
                }
                Error::Counterexample { instance, .. } | Error::Discrepancy { instance, .. } => {
                    eprintln!("offending instance:\n{instance}");
                    3
                }
                _ => 2,
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = cli.run;
    let result = match cli.command {
        Command::Verify { file } => commands::verify(&file, &run),
        Command::Analyze { file, thresholds } => commands::analyze(&file, &thresholds, &run),
        Command::Generate(kind) => commands::generate(kind, &run),
        Command::Fuzz {
            n_max,
            n_min,
            trials,
            seed,
            cross_check,
            out_dir,
        } => commands::fuzz(
            cyclebound::fuzz::FuzzConfig {
                n_min,
                n_max,
                trials,
                seed,
                cross_check,
                search: run.search(),
                ..Default::default()
            },
            &out_dir,
            &run,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => ExitCode::from(exit_code(&failure, &run)),
    }
}
