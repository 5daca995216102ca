//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success (or a positive verdict), 1 negative verdict,
//! 2 usage or input error, 3 enumeration cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use bmsym_core::classify::{AffineVerdict, InvarianceReport, DEFAULT_MAX_N};
use bmsym_core::{lie, membership_test, metric, Classifier, Permutation};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::json::{
    self, AlgebraJson, ElementJson, FormatError, GroupJson, MatrixInput, OracleJson, ReportJson,
    StructureJson,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bmsym", version, about = "Symmetries of the Berwald-Moór metric")]
pub struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Inputs are file paths or inline JSON (leading `{` or `[`).
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose two elements: first B, then A.
    Compose {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Inverse of an element.
    Inverse {
        #[arg(long)]
        input: String,
    },
    /// Apply an element to a point.
    Apply {
        #[arg(long)]
        input: String,
        #[arg(long)]
        y: String,
    },
    /// Evaluate F_n(y).
    Metric {
        #[arg(long)]
        y: String,
    },
    /// Decide whether a Jacobian preserves the metric.
    Classify {
        #[arg(long)]
        matrix: String,
        /// Optional translation carried into the recovered element.
        #[arg(long)]
        translation: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Test whether MATRIX lies in W_{σ^{-1}}.
    Membership {
        #[arg(long)]
        matrix: String,
        /// One-line notation, e.g. [2,3,1].
        #[arg(long)]
        sigma: String,
    },
    /// Randomized soundness/completeness check of the classifier.
    Oracle(OracleArgs),
    /// Exponential of a traceless diagonal.
    LieExp {
        #[arg(long)]
        input: String,
    },
    /// Logarithm of a positive unit-determinant diagonal.
    LieLog {
        #[arg(long)]
        input: String,
    },
    /// Basis E_1..E_{n-1} of the Lie algebra.
    LieBasis {
        #[arg(long)]
        n: usize,
    },
    /// Structure constants c^k_{ij}.
    LieStructure {
        #[arg(long)]
        n: usize,
    },
    /// Sign pattern of a diagonal group element.
    Components {
        #[arg(long)]
        input: String,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] bmsym_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Core(e) | CliError::Format(FormatError::Invalid(e)) => Some(e),
            _ => None,
        };
        match core {
            Some(bmsym_core::Error::DimensionCapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Inline JSON when the argument starts with `{` or `[`, else a file path.
pub fn load(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_owned());
    }
    fs::read_to_string(arg).map_err(|source| CliError::Read {
        path: arg.to_owned(),
        source,
    })
}

fn decode<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(&load(arg)?).map_err(FormatError::from)?)
}

fn element(arg: &str) -> Result<bmsym_core::AffineSymmetry, CliError> {
    Ok(decode::<ElementJson>(arg)?.into_affine()?)
}

fn line<T: Serialize>(value: &T) -> String {
    json::to_line(value)
}

/// Executes a parsed command: the JSON document and the exit code.
pub fn execute(command: &Command) -> Result<(String, i32), CliError> {
    let ok = |doc: String| Ok((doc, EXIT_OK));
    match command {
        Command::Compose { a, b } => {
            let (a, b) = (element(a)?, element(b)?);
            ok(line(&ElementJson::from_affine(&a.compose(&b)?)))
        }
        Command::Inverse { input } => ok(line(&ElementJson::from_affine(&element(input)?.inverse()))),
        Command::Apply { input, y } => {
            let s = element(input)?;
            let y = json::parse_vector(&load(y)?)?;
            let image: Vec<json::Rat> = s.apply(&y)?.into_iter().map(json::Rat).collect();
            ok(line(&image))
        }
        Command::Metric { y } => {
            #[derive(Serialize)]
            struct MetricJson {
                #[serde(rename = "F")]
                f: f64,
            }
            let y = json::parse_real_vector(&load(y)?)?;
            ok(line(&MetricJson { f: metric(&y)? }))
        }
        Command::Classify {
            matrix,
            translation,
            max_n,
        } => {
            let m = decode::<MatrixInput>(matrix)?.into_dense()?;
            let classifier = Classifier::new(*max_n);
            let (doc, positive) = match translation {
                Some(t) => {
                    let t = json::parse_vector(&load(t)?)?;
                    let v = classifier.classify_affine(&m, &t)?;
                    (ReportJson::from(&v), matches!(v, AffineVerdict::Symmetry(_)))
                }
                None => {
                    let r = classifier.check(&m)?;
                    (ReportJson::from(&r), matches!(r, InvarianceReport::Symmetry(_)))
                }
            };
            Ok((line(&doc), if positive { EXIT_OK } else { EXIT_NEGATIVE }))
        }
        Command::Membership { matrix, sigma } => {
            #[derive(Serialize)]
            struct MembershipJson {
                member: bool,
            }
            let m = decode::<MatrixInput>(matrix)?.into_dense()?;
            let sigma: Vec<usize> = decode(sigma)?;
            let sigma = Permutation::from_one_based(&sigma)?;
            let member = membership_test(&m, &sigma)?;
            Ok((
                line(&MembershipJson { member }),
                if member { EXIT_OK } else { EXIT_NEGATIVE },
            ))
        }
        Command::Oracle(args) => {
            let report = Classifier::new(args.max_n).theorem_oracle(args.n, args.trials, args.seed)?;
            let clean = report.positives_passed == report.trials && report.perturbed_rejected == report.trials;
            Ok((
                line(&OracleJson::from(&report)),
                if clean { EXIT_OK } else { EXIT_NEGATIVE },
            ))
        }
        Command::LieExp { input } => {
            let x = decode::<AlgebraJson>(input)?.into_element()?;
            ok(line(&GroupJson::from_element(&lie::exp(&x))))
        }
        Command::LieLog { input } => {
            let a = decode::<GroupJson>(input)?.into_element()?;
            ok(line(&AlgebraJson::from_element(&lie::log(&a)?)))
        }
        Command::LieBasis { n } => {
            #[derive(Serialize)]
            struct BasisJson {
                n: usize,
                basis: Vec<AlgebraJson>,
            }
            let basis = lie::basis_all::<f64>(*n)?;
            ok(line(&BasisJson {
                n: *n,
                basis: basis.iter().map(AlgebraJson::from_element).collect(),
            }))
        }
        Command::LieStructure { n } => {
            let c = lie::structure_constants::<f64>(*n)?;
            ok(line(&StructureJson::new(*n, &c)))
        }
        Command::Components { input } => {
            #[derive(Serialize)]
            struct ComponentsJson {
                n: usize,
                signs: Vec<i8>,
                identity_component: bool,
            }
            let a = decode::<GroupJson>(input)?.into_element()?;
            let signs = lie::component_signature(&a);
            let identity_component = signs.iter().all(|&s| s > 0);
            ok(line(&ComponentsJson {
                n: a.n(),
                signs,
                identity_component,
            }))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
///
/// Nothing but the JSON document ever lands in `stdout`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli.command).and_then(|(doc, code)| emit(cli.output.as_ref(), doc, code)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn emit(output: Option<&PathBuf>, doc: String, code: i32) -> Result<Outcome, CliError> {
    let doc = doc + "\n";
    match output {
        Some(path) => {
            fs::write(path, &doc).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code,
            stdout: doc,
            stderr: String::new(),
        }),
    }
}
