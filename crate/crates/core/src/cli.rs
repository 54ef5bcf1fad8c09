//! Command-line surface. `run` returns the rendered report and exit code so
//! the binary stays a thin wrapper.
//!
//! Exit codes: 0 when everything matches, 2 when some published identity or
//! coefficient disagrees with the engine, 1 on an engine error or a failed
//! internal check.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::boundary_residue::boundary_report;
use crate::error::{EngineError, Result};
use crate::fiber_algebra::Params;
use crate::interior_residue::{one_form_report, sanity_report, torsion_report};
use crate::report::{ReportDocument, ResidueReport, Timing};
use crate::scalar_ring::{GaussRat, ParamScalar};
use crate::verification_oracle::{self, DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Parser, Debug)]
#[command(name = "spectral-torsion", version, about = "Spectral torsion residues for a0 d + b0 delta")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the registered identities against 16x16 brute force.
    VerifyLemmas {
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Tag prefix, e.g. `torsion-xi` or `boundary-trace/eps-n`.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Add wall-clock seconds to the report.
        #[arg(long)]
        timing: bool,
    },
    /// Derive a functional and compare it with the published coefficient.
    Derive {
        #[arg(value_enum)]
        functional: Functional,
        /// Rational value, or `symbolic`.
        #[arg(long)]
        a0: Option<String>,
        #[arg(long)]
        b0: Option<String>,
        /// Keep a0 and b0 as symbols (the default when neither is given).
        #[arg(long, conflicts_with_all = ["a0", "b0"])]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
    /// List the identity tags and their statements.
    Tags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Functional {
    Torsion,
    OneForm,
    Boundary,
    Sanity,
}

impl Functional {
    pub fn name(self) -> &'static str {
        match self {
            Functional::Torsion => "torsion",
            Functional::OneForm => "one-form",
            Functional::Boundary => "boundary",
            Functional::Sanity => "sanity",
        }
    }

    pub fn report(self, params: Params) -> Result<ResidueReport> {
        match self {
            Functional::Torsion => torsion_report(params),
            Functional::OneForm => one_form_report(params),
            Functional::Boundary => boundary_report(params),
            Functional::Sanity => sanity_report(params),
        }
    }
}

pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn parse_rational(s: &str) -> Result<GaussRat> {
    ParamScalar::parse(s)?.as_constant().ok_or_else(|| EngineError::Parse {
        input: s.to_string(),
        reason: "expected a constant".into(),
    })
}

/// `None` for symbolic parameters.
pub fn parse_params(a0: Option<&str>, b0: Option<&str>) -> Result<Params> {
    let sym = |s: Option<&str>| s.map_or(true, |x| x == "symbolic");
    match (sym(a0), sym(b0)) {
        (true, true) => Ok(Params::symbolic()),
        (false, false) => Params::numeric(parse_rational(a0.unwrap())?, parse_rational(b0.unwrap())?),
        _ => Err(EngineError::Parse {
            input: format!("--a0 {} --b0 {}", a0.unwrap_or("symbolic"), b0.unwrap_or("symbolic")),
            reason: "give both parameters or neither".into(),
        }),
    }
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json() + "\n",
        Format::Md => doc.to_markdown(),
    }
}

fn code_for(doc: &ReportDocument) -> i32 {
    let engine_fault = doc.residues.iter().any(|r| !r.all_checks_pass())
        || doc.oracle.iter().any(|o| o.reconstruction_ok == Some(false));
    if engine_fault {
        1
    } else if doc.any_mismatch() {
        2
    } else {
        0
    }
}

fn format_flag(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Md => "md",
    }
}

pub fn execute(cli: Cli) -> Result<Outcome> {
    let start = Instant::now();
    match cli.command {
        Command::Tags => {
            let mut out = String::new();
            for t in verification_oracle::registry() {
                out.push_str(&format!("{}\n    {}\n", t.name, t.statement));
            }
            Ok(Outcome { output: out, code: 0 })
        }
        Command::VerifyLemmas {
            trials,
            seed,
            only,
            format,
            timing,
        } => {
            let prefix = only.unwrap_or_default();
            let mut command = format!("verify-lemmas --trials {trials} --seed {seed}");
            if !prefix.is_empty() {
                command.push_str(&format!(" --only {prefix}"));
            }
            command.push_str(&format!(" --format {}", format_flag(format)));
            let mut doc = ReportDocument::new(&command);
            doc.seed = Some(seed);
            doc.trials = Some(trials);
            doc.oracle = verification_oracle::verify(&prefix, trials, seed)?;
            if timing {
                doc.timing = Some(Timing {
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
            Ok(Outcome {
                output: render(&doc, format),
                code: code_for(&doc),
            })
        }
        Command::Derive {
            functional,
            a0,
            b0,
            symbolic,
            format,
            timing,
        } => {
            let params = if symbolic {
                Params::symbolic()
            } else {
                parse_params(a0.as_deref(), b0.as_deref())?
            };
            let command = if params.is_symbolic() {
                format!("derive {} --symbolic --format {}", functional.name(), format_flag(format))
            } else {
                format!(
                    "derive {} --a0 {} --b0 {} --format {}",
                    functional.name(),
                    params.a0,
                    params.b0,
                    format_flag(format)
                )
            };
            let mut doc = ReportDocument::new(&command);
            doc.residues.push(functional.report(params)?);
            if timing {
                doc.timing = Some(Timing {
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
            Ok(Outcome {
                output: render(&doc, format),
                code: code_for(&doc),
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Engine
/// errors become exit code 1 with the message as output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Outcome {
                output: e.render().to_string(),
                code,
            };
        }
    };
    match execute(cli) {
        Ok(o) => o,
        Err(e) => Outcome {
            output: format!("error: {e}\n"),
            code: 1,
        },
    }
}
