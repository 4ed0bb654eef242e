use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use eqcob_core::equivariant::Theory;
use serde::Serialize;

mod commands;
mod outcome;
mod verify;

use outcome::Outcome;

/// Equivariant coefficient rings, formal group laws and their checks.
#[derive(Parser, Debug, Serialize)]
#[command(name = "eqcob", version)]
struct Cli {
    /// universal, chow or ktheory.
    #[arg(long, global = true, value_parser = parse_theory)]
    theory: Option<Theory>,

    /// Truncation order D (at least 1).
    #[arg(long = "trunc", global = true, env = "EQCOB_TRUNC", default_value_t = 4, value_parser = parse_trunc)]
    trunc: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "subcommand")]
enum Command {
    /// Print the theory's formal group law and its logarithm.
    Fgl,
    /// Print the n-series [n](t).
    Nseries {
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
    },
    /// Print the formal inverse ι(t).
    Inverse,
    /// Conjugate a law: by default the additive law by the theory's
    /// exponential; with --tau, twist the theory's law by an inverse Todd class.
    Conjugate {
        /// Integers a₀,a₁,…; τᵢ = aᵢ·gⁱ with g = t₁ (universal) or β (ktheory).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        tau: Option<Vec<i64>>,
    },
    /// Equivariant coefficient rings.
    Coeff {
        #[command(subcommand)]
        group: Group,
    },
    /// ℙⁿ with G_m acting by the given weights.
    PnWeighted {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        weights: Vec<i64>,
    },
    /// Projective bundle of a sum of characters over the rank-r torus.
    Pb(Characters),
    /// Chern classes of a sum of characters over the rank-r torus.
    Chern(Characters),
    /// Restriction from GLₙ to its maximal torus.
    RestrictGln {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Specialize the universal weighted-ℙⁿ presentation and the universal law.
    Specialize {
        #[arg(long, value_parser = parse_theory)]
        to: Theory,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "0,1"
        )]
        weights: Vec<i64>,
    },
    /// Built-in verification suites; exit status 1 on any failure.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "group")]
enum Group {
    Torus {
        #[arg(short = 'r', default_value_t = 1)]
        r: usize,
    },
    Gln {
        #[arg(short = 'n')]
        n: usize,
    },
    Mu {
        #[arg(short = 'n')]
        n: i64,
    },
}

#[derive(Args, Debug, Serialize)]
struct Characters {
    /// A character as a weight vector, e.g. `--root 1,0`; repeatable.
    #[arg(long = "root", required = true, value_parser = parse_character, allow_hyphen_values = true)]
    roots: Vec<Character>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
struct Character(Vec<i64>);

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "suite")]
enum Suite {
    /// Axioms of the built-in laws, n-series identities and the Θ_exp identity.
    Fgl,
    /// Randomized Whitney-formula trials.
    Whitney {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Torus towers: surjective transitions and stabilization.
    Towers,
    /// Flag, Grassmannian and GLₙ ranks.
    Ranks,
    /// μₙ coefficient rings.
    Mu,
    /// Restriction from GLₙ to the torus.
    Restriction,
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse::<Theory>().map_err(|e| e.to_string())
}

fn parse_trunc(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(d) if d >= 1 => Ok(d),
        Ok(_) => Err("truncation must be at least 1".into()),
        Err(e) => Err(format!("invalid truncation {s:?}: {e}")),
    }
}

fn parse_character(s: &str) -> Result<Character, String> {
    let w = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| format!("invalid weight {x:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Character(w))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let theory = cli.theory.unwrap_or(Theory::Universal);
    let d = cli.trunc;
    Ok(match &cli.command {
        Command::Fgl => commands::fgl(theory, d)?,
        Command::Nseries { n } => commands::nseries(theory, d, *n)?,
        Command::Inverse => commands::inverse(theory, d)?,
        Command::Conjugate { tau } => commands::conjugate(theory, d, tau.as_deref())?,
        Command::Coeff { group } => match group {
            Group::Torus { r } => commands::coeff_torus(theory, d, *r)?,
            Group::Gln { n } => commands::coeff_gln(theory, d, *n)?,
            Group::Mu { n } => commands::coeff_mu(theory, d, *n)?,
        },
        Command::PnWeighted { weights } => commands::pn_weighted(theory, d, weights)?,
        Command::Pb(c) => commands::bundle(theory, d, &characters(c))?,
        Command::Chern(c) => commands::chern(theory, d, &characters(c))?,
        Command::RestrictGln { n } => commands::restrict_gln(theory, d, *n)?,
        Command::Specialize { to, weights } => commands::specialize(*to, d, weights)?,
        Command::Verify { suite } => {
            let theories = cli
                .theory
                .map(|t| vec![t])
                .unwrap_or_else(|| Theory::ALL.to_vec());
            match suite {
                Suite::Fgl => verify::fgl(&theories, d)?,
                Suite::Whitney { trials, seed } => verify::whitney(&theories, d, *trials, *seed)?,
                Suite::Towers => verify::towers(&theories, d)?,
                Suite::Ranks => verify::ranks(&theories, d)?,
                Suite::Mu => verify::mu(&theories, d)?,
                Suite::Restriction => verify::restriction(&theories, d)?,
            }
        }
    })
}

fn characters(c: &Characters) -> Vec<Vec<i64>> {
    c.roots.iter().map(|x| x.0.clone()).collect()
}

fn render(cli: &Cli, outcome: &Outcome) -> anyhow::Result<String> {
    Ok(match cli.format {
        Format::Text => outcome.text(),
        Format::Json => {
            let echo = serde_json::to_value(cli)?;
            outcome.json(echo)?
        }
    })
}

fn emit(cli: &Cli, body: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        emit(&cli, &render(&cli, &o)?)?;
        Ok(o.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
