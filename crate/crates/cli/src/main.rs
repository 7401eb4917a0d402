use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use redim_core::atlas::semicircle_csv;
use redim_core::pairing::{pair_reals, unpair_reals};
use redim_core::{build_phi, pair_unit, to_expansion, unpair_unit, ExactRational, RealTuple, TransportedSpace};

/// Exact bijections between R^n and R^k by decimal digit-group interleaving.
#[derive(Parser)]
#[command(name = "redim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pair two reals into one (or two values in (0,1] with --unit).
    Pair {
        #[arg(long)]
        unit: bool,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Split one real back into the pair it encodes.
    Unpair {
        #[arg(long)]
        unit: bool,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Apply the bijection R^n -> R^k to an n-tuple; with --inverse, map an
    /// n-tuple back to R^k through the inverse of R^k -> R^n.
    Phi {
        n: usize,
        k: usize,
        #[arg(long)]
        inverse: bool,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        tuple: Vec<String>,
    },
    /// Transported sum of two n-tuples in R^n_k.
    Add {
        n: usize,
        k: usize,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Transported scalar multiple of an n-tuple in R^n_k.
    Smul {
        n: usize,
        k: usize,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Check the vector space axioms and linearity of phi on seeded inputs.
    Axioms {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write CSV samples of the semicircle map.
    Figure {
        #[arg(long, default_value_t = 201, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// bad input: exit 1
    Input(String),
    /// a law failed: exit 2
    Law,
}

impl From<redim_core::Error> for Failure {
    fn from(e: redim_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn rational(text: &str) -> Result<ExactRational, Failure> {
    Ok(text.parse()?)
}

fn tuple(text: &str, arity: usize) -> Result<RealTuple, Failure> {
    let t: RealTuple = text.parse()?;
    if t.arity() != arity {
        return Err(Failure::Input(format!("expected {arity} coordinates, got {}", t.arity())));
    }
    Ok(t)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Pair { unit: true, a, b } => {
            let y = pair_unit(&rational(&a)?, &rational(&b)?)?;
            println!("{y} = {}", to_expansion(&y)?);
        }
        Command::Pair { unit: false, a, b } => println!("{}", pair_reals(&rational(&a)?, &rational(&b)?)?),
        Command::Unpair { unit, y } => {
            let y = rational(&y)?;
            let (a, b) = if unit { unpair_unit(&y)? } else { unpair_reals(&y)? };
            println!("({a}, {b})");
        }
        Command::Phi { n, k, inverse, tuple: parts } => {
            let x = tuple(&parts.join(" "), n)?;
            let image = if inverse { build_phi(k, n)?.backward(&x)? } else { build_phi(n, k)?.forward(&x)? };
            println!("{image}");
        }
        Command::Add { n, k, x, y } => {
            let space = TransportedSpace::pairing(n, k)?;
            println!("{}", space.vadd(&tuple(&x, n)?, &tuple(&y, n)?)?);
        }
        Command::Smul { n, k, c, x } => {
            let space = TransportedSpace::pairing(n, k)?;
            println!("{}", space.smul(&rational(&c)?, &tuple(&x, n)?)?);
        }
        Command::Axioms { n, k, trials, seed, json } => {
            let space = TransportedSpace::pairing(n, k)?;
            let axioms = space.check_axioms(trials as usize, seed);
            let iso = space.check_isomorphism(trials as usize, seed);
            if json {
                let doc = serde_json::json!({ "axioms": axioms, "isomorphism": iso });
                println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
            } else {
                print!("{axioms}\n{iso}");
            }
            if !(axioms.all_pass() && iso.all_pass()) {
                return Err(Failure::Law);
            }
        }
        Command::Figure { samples, out } => {
            let csv = semicircle_csv(samples as usize);
            match out {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
                }
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Law) => ExitCode::from(2),
    }
}
