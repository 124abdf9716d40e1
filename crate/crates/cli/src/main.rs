use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Output;

#[derive(Parser)]
#[command(name = "oscillo", version, about = "Root data, Kostant partitions, oscillator stalks and U(n) checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args, Clone)]
pub struct TypeArgs {
    /// Cartan family letter (A-G).
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots and coroots of a type, with its dual.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Kostant partitions of a coweight.
    Kostant {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated coordinates in the simple coroot basis.
        #[arg(long)]
        theta: String,
    },
    /// Stalk character of an oscillator at a configuration of points.
    PloStalk {
        #[command(flatten)]
        ty: TypeArgs,
        /// Points as `theta@label` separated by `;`, e.g. "1,0@x;0,1@y".
        #[arg(long, required_unless_present = "pattern")]
        config: Option<String>,
        /// Collision pattern of a single P_n, e.g. "2,1".
        #[arg(long, conflicts_with = "config")]
        pattern: Option<String>,
    },
    /// S1, S2 and the diagonal part of the nearby cycles.
    Diag {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, required_unless_present = "all_coroots")]
        theta: Option<String>,
        /// Sweep every positive coroot.
        #[arg(long, conflicts_with = "theta")]
        all_coroots: bool,
    },
    /// The enveloping algebra U(n) of the dual group.
    Uea {
        #[command(subcommand)]
        command: UeaCommand,
    },
    /// Run every identity check for a type; exit 1 if any fails.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        /// Largest coweight length in the sweeps.
        #[arg(long, default_value_t = 4)]
        max_length: u64,
        /// Restrict the diagonal checks to one coweight.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Write a deterministic JSON fixture for a type and coweight.
    Fixture {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        theta: String,
    },
}

#[derive(Subcommand)]
enum UeaCommand {
    /// Weight-space dimensions next to Kostant counts.
    Dims {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 6)]
        max_length: u64,
    },
    /// Hopf and associativity checks on short PBW monomials.
    Check {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        hopf: bool,
        #[arg(long)]
        assoc: bool,
        /// Length bound; defaults by rank.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Product of two expressions such as "e1*e2" and "E3 - 2".
    Mul {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
}

fn run(cli: &Cli) -> Result<Output, commands::Failure> {
    match &cli.command {
        Command::Roots { ty } => commands::roots(ty),
        Command::Kostant { ty, theta } => commands::kostant(ty, theta),
        Command::PloStalk { ty, config, pattern } => commands::plo_stalk(ty, config.as_deref(), pattern.as_deref()),
        Command::Diag { ty, theta, all_coroots } => commands::diag(ty, theta.as_deref(), *all_coroots),
        Command::Uea { command } => match command {
            UeaCommand::Dims { ty, max_length } => commands::uea_dims(ty, *max_length),
            UeaCommand::Check { ty, hopf, assoc, bound } => commands::uea_check(ty, *hopf, *assoc, *bound),
            UeaCommand::Mul { ty, lhs, rhs } => commands::uea_mul(ty, lhs, rhs),
        },
        Command::Verify { ty, max_length, theta } => commands::verify(ty, *max_length, theta.as_deref()),
        Command::Fixture { ty, theta } => {
            if cli.out.is_none() {
                return Err(commands::Failure::Usage("fixture requires --out".into()));
            }
            commands::fixture(ty, theta)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {f}");
            return ExitCode::from(f.code());
        }
    };
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Markdown => output.markdown.clone(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
