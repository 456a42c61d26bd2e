mod commands;
mod golden;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use felcheck_core::semigroup::DEFAULT_BOUND;
use felcheck_core::{Error, Rational, SemigroupSpec};

use commands::{Outcome, VerifyPlan};
use render::Format;

const EXIT_INVALID: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "felcheck", version, about = "Exact numerical-semigroup invariants and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Largest p for G_r, K_p and the main identity.
    #[arg(long, global = true, default_value_t = 8)]
    p_max: u32,

    /// Series truncation order (default m + p_max + 2, raised to at least m + p_max).
    #[arg(long, global = true)]
    order: Option<usize>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Random sample points per companion identity.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,

    /// Upper bound on the generator product accepted for gap enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: u64,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gaps, Frobenius number, genus, gap power sums and generator power sums.
    Invariants {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Hilbert numerator, syzygy sums and K_p.
    Hilbert {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Universal polynomials T_0..T_n, symbolic or at a point.
    Tn {
        n_max: usize,
        /// Comma-separated rationals, e.g. 3,5 or 1/2,-3.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        at: Option<Vec<Rational>>,
    },
    /// Run every identity check on one semigroup or a random sweep.
    Verify {
        #[arg(allow_negative_numbers = true, required_unless_present = "random")]
        generators: Vec<i64>,
        #[arg(long, conflicts_with = "generators")]
        random: bool,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 30)]
        d_max: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Largest n for the zig-zag recursion; the sign-flip identity runs to 2n+1.
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        /// List passing records too.
        #[arg(long)]
        verbose: bool,
    },
    /// Recompute the three worked examples and diff them against golden values.
    Examples,
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let spec = |g: &[i64]| SemigroupSpec::with_bound(g, cli.bound);
    match &cli.command {
        Command::Invariants { generators } => Ok(commands::invariants(&spec(generators)?, cli.p_max)),
        Command::Hilbert { generators } => commands::hilbert(&spec(generators)?, cli.p_max),
        Command::Tn { n_max, at } => commands::tn(*n_max, at.as_deref()),
        Command::Verify { generators, random, m_max, d_max, count, n_max, verbose } => {
            let semigroups = if *random {
                if *m_max < 2 || *d_max < 2 {
                    return Err(Error::InvalidParameter("--m-max and --d-max must be at least 2".into()));
                }
                commands::random_semigroups(*m_max, *d_max, *count, cli.seed)
            } else {
                vec![spec(generators)?]
            };
            commands::verify(&VerifyPlan {
                semigroups,
                p_max: cli.p_max,
                order: cli.order,
                n_max: *n_max,
                samples: cli.samples,
                seed: cli.seed,
                verbose: *verbose,
            })
        }
        Command::Examples => commands::examples(cli.p_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            return ExitCode::from(EXIT_INVALID);
        }
    };
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    let text = outcome.doc.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: Io: {}: {e}", path.display());
                return ExitCode::from(EXIT_INVALID);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.exit as u8)
}
