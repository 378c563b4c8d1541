mod commands;
mod render;

use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfdouble::json::{load_str, Loaded};
use hopfdouble::{catalog, Error};

/// Exact computations with finite-dimensional Hopf algebras and their
/// Drinfeld doubles.
///
/// INPUT is a JSON file, `-` for standard input, or a catalog id (see
/// `examples list`).
///
/// Exit codes: 0 success, 1 a predicate evaluated to false, 2 invalid input,
/// 3 internal theorem violation.
#[derive(Parser, Debug)]
#[command(name = "hopfdouble", version, about, long_about)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Print notes and warnings to standard error (repeat for more).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    /// Largest dim(H) for which the double is built.
    #[arg(long, default_value_t = 12, global = true)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf axioms (and the R-matrix identities, if present).
    Validate { input: String },
    /// Summary: dimension, (co)commutativity, antipode order, grouplikes.
    Info { input: String },
    /// The dual Hopf algebra.
    Dual { input: String },
    /// The Drinfeld double with R-matrix, Drinfeld element and monodromy.
    Double { input: String },
    /// Left integral in H and right integral on H.
    Integrals { input: String },
    /// Grouplikes of H and characters of H.
    Grouplikes { input: String },
    /// Distinguished grouplikes and the S⁴ formula.
    Radford { input: String },
    /// Pivotal grouplikes and certified ribbon elements of the double.
    Ribbon { input: String },
    /// Sphericity verdict (exit 1 when false).
    Spherical { input: String },
    /// Modularity verdict for the double (exit 1 when false).
    Modular { input: String },
    /// Full classification report (exit 1 when the double is not modular).
    Classify { input: String },
    /// The built-in catalog.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand, Debug)]
enum ExamplesAction {
    /// Print the catalog ids.
    List,
    /// Print one catalog entry as algebra JSON.
    Emit { id: String },
}

/// What a command produced: output for stdout, diagnostics, and the verdict.
pub struct Outcome {
    pub json: serde_json::Value,
    pub text: String,
    pub verdict: bool,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(json: serde_json::Value, text: String) -> Self {
        Outcome { json, text, verdict: true, notes: Vec::new() }
    }

    pub fn verdict(mut self, v: bool) -> Self {
        self.verdict = v;
        self
    }

    pub fn notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

pub enum Failure {
    Input(String),
    Theorem(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Bijection(_) | Error::Convention(_) | Error::Construction(_) | Error::NotCommuting(..) => {
                Failure::Theorem(e.to_string())
            }
            Error::Axioms(ref report) => Failure::Input(format!("{e}\n{report}")),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load(input: &str) -> Result<Loaded, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else if let Some(entry) = catalog::lookup(input) {
        return Ok(Loaded::Algebra(entry.build()?));
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("{input}: {e}")))?
    } else {
        return Err(Failure::Input(format!("{input}: no such file or catalog id")));
    };
    Ok(load_str(&text)?)
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let ceiling = cli.max_dim;
    match &cli.command {
        Command::Examples { action: ExamplesAction::List } => Ok(commands::examples_list()),
        Command::Examples { action: ExamplesAction::Emit { id } } => commands::examples_emit(id),
        Command::Validate { input } => commands::validate(&load(input)?),
        Command::Info { input } => commands::info(&commands::validated(load(input)?)?),
        Command::Dual { input } => commands::dual(&commands::validated(load(input)?)?),
        Command::Double { input } => commands::double(&commands::validated(load(input)?)?, ceiling),
        Command::Integrals { input } => commands::integrals(&commands::validated(load(input)?)?),
        Command::Grouplikes { input } => commands::grouplikes(&commands::validated(load(input)?)?),
        Command::Radford { input } => commands::radford(&commands::validated(load(input)?)?),
        Command::Ribbon { input } => commands::ribbon(&commands::validated(load(input)?)?, ceiling),
        Command::Spherical { input } => commands::spherical(&commands::validated(load(input)?)?),
        Command::Modular { input } => commands::modular(&commands::validated(load(input)?)?, ceiling),
        Command::Classify { input } => commands::classify(&commands::validated(load(input)?)?, ceiling),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.verbose > 0 {
                for n in &out.notes {
                    eprintln!("note: {n}");
                }
            }
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
                Format::Text => out.text,
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Theorem(msg)) => {
            eprintln!("theorem violation: {msg}");
            ExitCode::from(3)
        }
    }
}
