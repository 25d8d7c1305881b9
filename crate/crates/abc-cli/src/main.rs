use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use abc_cli::commands::{self, Outcome};
use abc_cli::config::{OutputFormat, RunConfig};

/// Search and verification tools for trees minimizing the atom-bond
/// connectivity index.
#[derive(Parser)]
#[command(name = "abc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ABC index of a tree file to six decimals.
    Index { tree: PathBuf },
    /// Exhaustively scan all trees of one order for the minimal index.
    Brute {
        #[arg(long)]
        n: usize,
        /// Worker threads; the result is identical for any count.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Override the order cap.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search over degree sequences via greedy realizations.
    Dsearch {
        #[arg(long)]
        n: usize,
        /// Override the order cap.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the greedy tree for a degree sequence and print it.
    Greedy {
        /// Comma-separated degrees, e.g. 4,3,3,2,2,1,1,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
    },
    /// Check the structural properties required of minimal trees.
    Props { tree: PathBuf },
    /// Apply one decreasing rewrite to a tree and report its deltas.
    Transform {
        /// Rewrite kind, e.g. pro05, t11, ta2, t2_thm4.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        tree: PathBuf,
        /// Write the rewritten tree to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive a verification suite; exits 1 if anything fails.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Summarize stored search results as a CSV table.
    Report {
        /// Inclusive order range A..B; rows without records become gaps.
        #[arg(long)]
        range: Option<String>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Numeric landmarks: constants, limits, and roots.
    Constants {
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monotonicity and sign scans of the helper functions.
    Propositions {
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decrease sweeps over every transformation kind.
    Transforms {
        /// Seed for the randomized extra instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy trees against every labeled tree, order by order.
    Greedy {
        /// Largest order to verify.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Allowed slack when comparing index values.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Results store path (overrides ABC_RESULTS).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Index { tree } => commands::index(&tree),
        Command::Brute {
            n,
            jobs,
            force,
            format,
            out,
        } => {
            let mut cfg = RunConfig::new("brute");
            cfg.n = Some(n);
            cfg.jobs = jobs;
            cfg.force = force;
            cfg.format = format;
            cfg.out = out;
            commands::brute(&cfg)
        }
        Command::Dsearch {
            n,
            force,
            format,
            out,
        } => {
            let mut cfg = RunConfig::new("dsearch");
            cfg.n = Some(n);
            cfg.force = force;
            cfg.format = format;
            cfg.out = out;
            commands::dsearch(&cfg)
        }
        Command::Greedy { degrees } => commands::greedy(&degrees),
        Command::Props { tree } => commands::props(&tree),
        Command::Transform { kind, tree, out } => {
            commands::transform(&kind, &tree, out.as_deref())
        }
        Command::Verify { suite } => match suite {
            VerifySuite::Constants { out } => {
                let mut cfg = RunConfig::new("verify-constants");
                cfg.out = out;
                commands::verify_constants(&cfg)
            }
            VerifySuite::Propositions { out } => {
                let mut cfg = RunConfig::new("verify-propositions");
                cfg.out = out;
                commands::verify_propositions(&cfg)
            }
            VerifySuite::Transforms { seed, out } => {
                let mut cfg = RunConfig::new("verify-transforms");
                cfg.seed = seed;
                cfg.out = out;
                commands::verify_transforms(&cfg)
            }
            VerifySuite::Greedy { n, tol, out } => {
                let mut cfg = RunConfig::new("verify-greedy");
                cfg.n = Some(n);
                cfg.tol = tol;
                cfg.out = out;
                commands::verify_greedy(&cfg)
            }
        },
        Command::Report { range, out } => {
            let range = range.as_deref().map(commands::parse_range).transpose()?;
            commands::report(range, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
