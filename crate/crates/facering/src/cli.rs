//! Batch command-line front end: validation, Hilbert series, products,
//! decomposition, membership with oracle cross-checks, characteristic
//! classes, the torus structure map, and the Stanley-Reisner comparison.
//!
//! Exit codes: 0 on success or agreement, 1 on validation failure, data
//! errors or oracle disagreement, 2 on usage errors. All numeric output is
//! exact and deterministic.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::charclass::{pontrjagin_total, sw_total};
use crate::models::{build_builtin, load_element, load_model, Model, ModelError};
use crate::oracle::{naive_membership, sr_hilbert};
use crate::ring::{decompose, eta, hilbert, multiply, RingElement};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Parser)]
#[command(
    name = "facering",
    about = "Exact computation in topological face rings of nice manifolds with corners",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// Model source: `builtin:<name>` or a path to a model file.
    /// Builtins: bigon, triangle, square, rp2-no-boundary, connected-sum.
    #[arg(long)]
    model: String,
    /// Field override for builtin models: `q` for the rationals or a prime.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassKind {
    Sw,
    Pontrjagin,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full validation report on a model.
    Validate {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Print the exact dimension of each graded piece up to a degree bound.
    Hilbert {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        max_degree: usize,
    },
    /// Multiply two elements read from files; optionally decompose the product.
    Multiply {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long)]
        decompose: bool,
    },
    /// Canonically decompose an element into face elements.
    Decompose {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        element: PathBuf,
    },
    /// Test face-ring membership; `--oracle` cross-checks the linear solver.
    Member {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        element: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Total equivariant characteristic class, printed as a face-element sum.
    Charclass {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        kind: ClassKind,
    },
    /// Image of a degree-two class of the classifying algebra, as `u1,...,un`.
    Eta {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        u: String,
    },
    /// Compare the Hilbert series against the Stanley-Reisner count.
    CompareSr {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        max_degree: usize,
    },
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    match text.trim().to_ascii_lowercase().as_str() {
        "q" | "0" | "rationals" => Ok(FieldSpec::rationals()),
        other => {
            let p: u64 = other
                .parse()
                .map_err(|_| format!("cannot parse field `{text}`: expected `q` or a prime"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn load_raw(args: &ModelArgs) -> Result<Model, ModelError> {
    let field = match &args.field {
        Some(text) => Some(parse_field(text).map_err(ModelError::Parse)?),
        None => None,
    };
    if let Some(name) = args.model.strip_prefix("builtin:") {
        return build_builtin(name, field);
    }
    if field.is_some() {
        return Err(ModelError::Parse(
            "--field applies to builtin models only; model files declare their field".into(),
        ));
    }
    load_model(&args.model)
}

fn load(args: &ModelArgs) -> Result<Model, String> {
    load_raw(args).map_err(|e| e.to_string())
}

fn print_decomposition(model: &Model, element: &RingElement) -> Result<(), String> {
    match decompose(&model.complex, element) {
        Ok(decomposition) => {
            println!("{}", decomposition.display(&model.complex));
            Ok(())
        }
        Err(e) => {
            println!("NOT IN FACE RING: {e}");
            Ok(())
        }
    }
}

fn run_command(command: &Command) -> Result<i32, String> {
    match command {
        Command::Validate { model } => match load_raw(model) {
            Ok(model) => {
                print!("{}", model.complex.validate());
                Ok(0)
            }
            Err(ModelError::Validation(report)) => {
                print!("{report}");
                Ok(1)
            }
            Err(e) => Err(e.to_string()),
        },
        Command::Hilbert { model, max_degree } => {
            let model = load(model)?;
            let dims = hilbert(&model.complex, *max_degree);
            let line: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            println!("{}", line.join(" "));
            Ok(0)
        }
        Command::Multiply {
            model,
            lhs,
            rhs,
            decompose: also_decompose,
        } => {
            let model = load(model)?;
            let a = load_element(&model.complex, lhs).map_err(|e| e.to_string())?;
            let b = load_element(&model.complex, rhs).map_err(|e| e.to_string())?;
            let product = multiply(&model.complex, &a, &b);
            println!("{}", product.display(&model.complex));
            if *also_decompose {
                println!("decomposition:");
                print_decomposition(&model, &product)?;
            }
            Ok(0)
        }
        Command::Decompose { model, element } => {
            let model = load(model)?;
            let x = load_element(&model.complex, element).map_err(|e| e.to_string())?;
            print_decomposition(&model, &x)?;
            Ok(0)
        }
        Command::Member {
            model,
            element,
            oracle,
        } => {
            let model = load(model)?;
            let x = load_element(&model.complex, element).map_err(|e| e.to_string())?;
            let fast = decompose(&model.complex, &x).is_ok();
            let verdict = if fast { "MEMBER" } else { "NOT MEMBER" };
            if *oracle {
                let slow = naive_membership(&model.complex, &x);
                if slow.member == fast {
                    println!("{verdict} (agrees with oracle)");
                    Ok(0)
                } else {
                    println!("{verdict} (DISAGREES with oracle)");
                    Ok(1)
                }
            } else {
                println!("{verdict}");
                Ok(0)
            }
        }
        Command::Charclass { model, kind } => {
            let model = load(model)?;
            let data = model
                .char_data
                .as_ref()
                .ok_or("model carries no characteristic-class data")?;
            let total = match kind {
                ClassKind::Sw => sw_total(&model.complex, data).map_err(|e| e.to_string())?,
                ClassKind::Pontrjagin => pontrjagin_total(&model.complex, data),
            };
            print_decomposition(&model, &total)?;
            Ok(0)
        }
        Command::Eta { model, u } => {
            let model = load(model)?;
            let torus = model.torus.as_ref().ok_or("model carries no torus data")?;
            let field = model.complex.field();
            let u: Vec<Scalar> = u
                .split(',')
                .map(|part| field.parse(part).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let image = eta(&model.complex, torus, &u).map_err(|e| e.to_string())?;
            print_decomposition(&model, &image)?;
            Ok(0)
        }
        Command::CompareSr { model, max_degree } => {
            let model = load(model)?;
            let fast = hilbert(&model.complex, *max_degree);
            let slow = sr_hilbert(&model.complex, *max_degree).map_err(|e| e.to_string())?;
            if fast == slow {
                println!("AGREE");
                Ok(0)
            } else {
                println!("DISAGREE");
                let line = |dims: &[u64]| {
                    dims.iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("hilbert:    {}", line(&fast));
                println!("sr-hilbert: {}", line(&slow));
                Ok(1)
            }
        }
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match run_command(&cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}
