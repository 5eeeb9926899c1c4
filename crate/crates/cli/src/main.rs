use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use vck::commands::{self, DiscoverArgs, Failure, KernelizeArgs, PatternSource, SolveArgs};
use vck::report::RunReport;
use vckernel::profile::{SearchSpace, DEFAULT_CANDIDATE_LIMIT};
use vckernel::Pipeline;

/// Vertex cover kernelization, exact solving and replacement-rule discovery.
///
/// Exit codes: 0 completed (any verdict), 1 usage error, 2 malformed input,
/// 3 internal invariant violation.
#[derive(Parser)]
#[command(name = "vck", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a DIMACS graph and print a JSON report.
    Kernelize {
        /// Kernelization pipeline.
        #[arg(long, value_parser = parse_pipeline, default_value = "all")]
        pipeline: Pipeline,
        /// Budget (required by every pipeline).
        #[arg(short)]
        k: Option<usize>,
        /// Write the kernel as DIMACS here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the reduction log here, one event per line.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// DIMACS input, or `-` for standard input.
        input: PathBuf,
    },
    /// Decide a budget, or find the optimum when `-k` is absent.
    Solve {
        #[arg(short)]
        k: Option<usize>,
        /// Search the raw graph without any reduction rules.
        #[arg(long)]
        no_kernel: bool,
        input: PathBuf,
    },
    /// Search for patterns with the same profile as a source pattern and
    /// print them as certificates.
    Discover {
        /// `deg4-disjoint`, `deg4-path`, or `file:<path>` holding a pattern.
        #[arg(long, value_parser = parse_source)]
        pattern: PatternSource,
        /// Core size of the candidates.
        #[arg(long)]
        n: usize,
        /// Interface count; must match the pattern when given.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Space::Attachment)]
        space: Space,
        /// Refuse searches with more candidates than this.
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
        limit: u128,
        /// Only report candidates with the identical profile.
        #[arg(long)]
        exact: bool,
        /// Re-check every certificate on random hosts by brute force.
        #[arg(long)]
        verify: bool,
        /// Hosts per certificate for `--verify`.
        #[arg(long, default_value_t = 100)]
        hosts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    /// Any core with any attachment masks.
    Attachment,
    /// Boundary vertex i attached to interface i, other vertices unattached.
    Boundaried,
}

fn parse_pipeline(s: &str) -> Result<Pipeline, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Pipeline::ALL.iter().map(|p| p.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_source(s: &str) -> Result<PatternSource, String> {
    s.parse()
}

fn print_report(r: Result<RunReport, Failure>) -> Result<(), Failure> {
    let report = r?;
    let text =
        serde_json::to_string_pretty(&report).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Cmd::Kernelize {
            pipeline,
            k,
            out,
            trace,
            input,
        } => print_report(commands::kernelize(&KernelizeArgs {
            input,
            pipeline,
            k,
            out,
            trace,
        })),
        Cmd::Solve {
            k,
            no_kernel,
            input,
        } => print_report(commands::solve(&SolveArgs {
            input,
            k,
            no_kernel,
        })),
        Cmd::Discover {
            pattern,
            n,
            t,
            space,
            limit,
            exact,
            verify,
            hosts,
            seed,
        } => {
            let space = match space {
                Space::Attachment => SearchSpace::Attachment,
                Space::Boundaried => SearchSpace::Boundaried,
            };
            let text = commands::discover(&DiscoverArgs {
                pattern,
                n,
                t,
                space,
                limit,
                exact,
                verify,
                hosts,
                seed,
            })?;
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("vck: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
