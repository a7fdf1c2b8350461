use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;

use commands::Report;

#[derive(Parser, Debug)]
#[command(
    name = "g2star",
    version,
    about = "Exact computations for left-invariant G2*-structures"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraInput {
    /// Lie algebra JSON file; stdin when omitted or `-`.
    input: Option<PathBuf>,

    /// Gram matrix JSON file (default: the split metric in dimension 7).
    #[arg(long)]
    gram: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SpanInput {
    /// Family token such as `hIII`, `m102`, `sl2`.
    #[arg(long)]
    family: Option<String>,

    /// Matrix span JSON file; stdin when omitted or `-`.
    input: Option<PathBuf>,

    /// Gram matrix JSON file (default: the split metric).
    #[arg(long)]
    gram: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity.
    Validate {
        /// Lie algebra JSON file; stdin when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// Signature of a Gram matrix.
    Metric {
        #[arg(long)]
        gram: Option<PathBuf>,
    },
    /// Levi-Civita maps.
    Connection(AlgebraInput),
    /// Curvature endomorphisms.
    Curvature(AlgebraInput),
    /// Infinitesimal holonomy algebra.
    Holonomy(AlgebraInput),
    /// Second Bianchi residuals.
    Bianchi(AlgebraInput),
    /// Socle, indecomposability and type of a matrix algebra.
    Classify(SpanInput),
    /// Space of formal curvature tensors.
    Kspace(SpanInput),
    /// Berger criterion.
    Berger(SpanInput),
    /// Parallelism of the deformed three-form.
    Deform {
        #[command(flatten)]
        algebra: AlgebraInput,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c: String,
        /// 1-based index of the time direction.
        #[arg(long, default_value_t = 5)]
        time: usize,
    },
    /// Isometry invariant of the example family.
    Invariant {
        #[command(flatten)]
        algebra: AlgebraInput,
        /// Flip the sign choices for f4 and f6.
        #[arg(long)]
        negative: bool,
    },
    /// Emit a built-in example as a Lie algebra JSON file.
    Example {
        #[command(subcommand)]
        which: Example,
    },
    /// Run every built-in verification suite.
    #[command(alias = "verify-paper")]
    Verify,
}

#[derive(Subcommand, Debug)]
enum Example {
    /// The one-parameter family with abelian holonomy.
    GEps {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        eps: String,
    },
}

fn run(cli: &Cli) -> g2star_core::Result<Report> {
    match &cli.command {
        Command::Validate { input } => commands::validate(input.as_deref()),
        Command::Metric { gram } => commands::metric(gram.as_deref()),
        Command::Connection(a) => commands::connection(a.input.as_deref(), a.gram.as_deref()),
        Command::Curvature(a) => commands::curvature(a.input.as_deref(), a.gram.as_deref()),
        Command::Holonomy(a) => commands::holonomy(a.input.as_deref(), a.gram.as_deref()),
        Command::Bianchi(a) => commands::bianchi(a.input.as_deref(), a.gram.as_deref()),
        Command::Classify(s) => {
            commands::classify(s.family.as_deref(), s.input.as_deref(), s.gram.as_deref())
        }
        Command::Kspace(s) => commands::kspace(s.family.as_deref(), s.input.as_deref()),
        Command::Berger(s) => commands::berger(s.family.as_deref(), s.input.as_deref()),
        Command::Deform {
            algebra,
            a,
            b,
            c,
            time,
        } => commands::deform(
            algebra.input.as_deref(),
            algebra.gram.as_deref(),
            [a, b, c],
            *time,
        ),
        Command::Invariant { algebra, negative } => {
            commands::invariant(algebra.input.as_deref(), algebra.gram.as_deref(), *negative)
        }
        Command::Example {
            which: Example::GEps { eps },
        } => commands::example_g_eps(eps),
        Command::Verify => Ok(commands::verify()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                );
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
