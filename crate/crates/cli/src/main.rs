//! `younglab`: runs the verification sweeps and prints tables and
//! certificates. Exit status 0 on success, 1 when a check finds a
//! counterexample, 2 on bad input.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use younglab::limits::Limits;
use younglab::{Error, Partition, Weight};

use output::Format;

#[derive(Parser)]
#[command(
    name = "younglab",
    version,
    about = "Exact checks on Young tableaux, characters and forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Partitions of n in listing order.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// The Kostka number K(μ, λ).
    Kostka {
        #[arg(long)]
        mu: Partition,
        /// Weight; need not be a partition.
        #[arg(long)]
        lambda: Weight,
    },
    /// Semistandard tableaux of shape μ and weight λ.
    Ssyt {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Weight,
    },
    /// Certificate pairing tableaux for the Kostka recurrence at (λ, ρ).
    Bijection {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: Partition,
    },
    /// Irreducible characters of the symmetric group of degree n.
    CharacterTable {
        #[arg(long)]
        n: usize,
    },
    /// Sweep one identity over all partitions up to --max-n.
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        #[arg(long)]
        max_n: usize,
    },
    /// The covering-relation system for λ, or the kernel sweep over n.
    Linsys {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        lambda: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Transport of uniform mass along Young-graph edges from n−1 to n.
    Polymorphism {
        #[arg(long)]
        n: usize,
    },
    /// Checks on spaces of forms.
    Forms {
        #[arg(long, value_enum)]
        check: FormsCheck,
        #[arg(long)]
        lambda: Option<Partition>,
        /// Number of variables (two-row).
        #[arg(long)]
        n: Option<usize>,
        /// Degree (two-row).
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Theorem1,
    YoungsRule,
    Eq1,
    Eq2,
    Lemma1,
    Dimension,
    ConjugateTwist,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormsCheck {
    Example4,
    Statement2,
    Specht,
    TwoRow,
}

/// Bad input, reported as `{"error": kind, "message": ...}` with exit 2.
struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure {
            kind: "usage",
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::LimitExceeded { .. } => "limit_exceeded",
            Error::Parse(_) => "parse",
            Error::OrthogonalizationFailure(_) | Error::CertificateFailure(_) => "internal",
            _ => "invalid_input",
        };
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var("YOUNGLAB_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|cap| Limits::default().capped(cap))
            .map_err(|_| Failure::usage(format!("YOUNGLAB_MAX_N must be an integer, got {v:?}"))),
        Err(_) => Ok(Limits::default()),
    }
}

fn report_error(kind: &str, message: &str) {
    eprintln!("{}", json!({ "error": kind, "message": message }));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report_error("usage", e.to_string().trim());
            return ExitCode::from(2);
        }
    };
    let started = Instant::now();
    let result = limits().and_then(|l| commands::run(&cli.command, l));
    let out = match result {
        Ok(out) => out,
        Err(f) => {
            report_error(f.kind, &f.message);
            return ExitCode::from(2);
        }
    };
    let text = out.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                report_error("io", &format!("{}: {e}", path.display()));
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    eprintln!("elapsed_ms: {}", started.elapsed().as_millis());
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
