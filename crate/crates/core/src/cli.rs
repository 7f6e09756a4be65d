//! Command-line front end used by the `jmccoy` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{HUNT_RINGS, SMALL_RINGS};
use crate::error::Error;
use crate::eval::{Defs, Evaluator};
use crate::mccoy::{check_property, PropertyKind, Side, Variant};
use crate::radical::RadicalReport;
use crate::report::{to_json, VerdictSummary};
use crate::ring::axioms::{verify, AxiomReport};
use crate::search::{SearchOptions, DEFAULT_BUDGET};
use crate::suite::{run_suite, Status, Suite, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_FAULT: i32 = 5;

/// Witness log entries printed with `check`.
const CHECK_SAMPLE: usize = 10;

const LIST_LIMIT: u64 = 256;

#[derive(Parser, Debug)]
#[command(name = "jmccoy", version, about = "Finite rings, Jacobson radicals and McCoy-type conditions")]
struct Cli {
    /// Refuse searches whose estimated cost exceeds this many products.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Worker threads for the search; results do not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Accepted for compatibility; every run is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    /// TOML file with extra sigma and bimodule definitions.
    #[arg(long, global = true)]
    defs: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a ring and check the ring axioms.
    Build { ring: String },
    /// Units, Jacobson radical and nilpotents.
    Radical { ring: String },
    /// Decide a McCoy-type property up to a degree bound.
    Check {
        ring: String,
        #[arg(long, default_value = "j-mccoy")]
        property: Variant,
        #[arg(long, default_value = "right")]
        side: Side,
        #[arg(long, default_value_t = 1)]
        max_degree: usize,
    },
    /// Search a list of rings for counterexamples, one line per ring.
    Hunt {
        /// Rings to search; defaults to the built-in catalog.
        rings: Vec<String>,
        #[arg(long, default_value = "mccoy")]
        property: Variant,
        #[arg(long, default_value = "right")]
        side: Side,
        #[arg(long, default_value_t = 1)]
        max_degree: usize,
    },
    /// Run a validation suite.
    Validate {
        /// `default` (alias `paper`) or `gaps`.
        #[arg(long, default_value = "default")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
        /// Degree bound for the search over the truncated-series example.
        #[arg(long)]
        example_degree: Option<usize>,
    },
}

#[derive(Serialize)]
struct BuildReport {
    command: &'static str,
    expression: String,
    materialized: bool,
    #[serde(flatten)]
    axioms: AxiomReport,
    /// Element labels in index order, for rings up to `LIST_LIMIT`.
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Wrapped<T: Serialize> {
    command: &'static str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct ErrorReport {
    command: &'static str,
    error: String,
    exit_code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => EXIT_BUDGET,
        Error::Consistency(_) | Error::AxiomFailure(_) => EXIT_FAULT,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let format = cli.format;
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            match format {
                Format::Json => {
                    let _ = out.write_all(
                        to_json(&ErrorReport {
                            command: "error",
                            error: e.to_string(),
                            exit_code: code,
                        })
                        .as_bytes(),
                    );
                }
                Format::Text => {
                    let _ = writeln!(err, "error: {e}");
                }
            }
            code
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let defs = match &cli.defs {
        None => Defs::default(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))?;
            Defs::from_toml(&text)?
        }
    };
    let ev = Evaluator::new(Default::default(), defs);
    let search = SearchOptions {
        budget: cli.budget,
        workers: cli
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1),
    };
    let text = cli.format == Format::Text;
    let mut emit = |s: String| out.write_all(s.as_bytes()).map_err(|e| Error::InvalidArgument(e.to_string()));
    match cli.command {
        Command::Build { ring } => {
            let r = ev.eval_str(&ring)?;
            let axioms = verify(&r)?;
            let elements = (r.order() <= LIST_LIMIT).then(|| r.elements().map(|e| r.label_of(e)).collect::<Vec<_>>());
            if text {
                emit(format!(
                    "{}: order {}, {}, axioms verified ({} triples{})\n",
                    r.label(),
                    r.order(),
                    if axioms.commutative { "commutative" } else { "noncommutative" },
                    axioms.triples_checked,
                    if axioms.exhaustive { ", exhaustive" } else { ", sampled" }
                ))?;
                if let Some(els) = &elements {
                    emit(format!("  elements: {}\n", els.join("  ")))?;
                }
            } else {
                emit(to_json(&BuildReport {
                    command: "build",
                    expression: ring,
                    materialized: r.is_materialized(),
                    axioms,
                    elements,
                }))?;
            }
            Ok(EXIT_OK)
        }
        Command::Radical { ring } => {
            let r = ev.eval_str(&ring)?;
            let rep = RadicalReport::of(&r)?;
            if text {
                emit(format!(
                    "{} (order {})\n  units: {{{}}}\n  J: {{{}}}\n  N: {{{}}}\n",
                    rep.ring,
                    rep.order,
                    rep.units.join(", "),
                    rep.jacobson.join(", "),
                    rep.nilpotents.join(", ")
                ))?;
            } else {
                emit(to_json(&Wrapped { command: "radical", body: rep }))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            ring,
            property,
            side,
            max_degree,
        } => {
            let r = ev.eval_str(&ring)?;
            let v = check_property(&r, PropertyKind::new(property, side), max_degree, &search)?;
            let s = VerdictSummary::new(&v, CHECK_SAMPLE);
            emit(if text { verdict_line(&s) } else { to_json(&Wrapped { command: "check", body: s }) })?;
            Ok(if v.holds() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Hunt {
            rings,
            property,
            side,
            max_degree,
        } => {
            let rings: Vec<String> = if rings.is_empty() {
                SMALL_RINGS.iter().chain(HUNT_RINGS).map(|s| s.to_string()).collect()
            } else {
                rings
            };
            let mut found = false;
            let mut refused = false;
            for text_expr in rings {
                let line = match ev
                    .eval_str(&text_expr)
                    .and_then(|r| check_property(&r, PropertyKind::new(property, side), max_degree, &search))
                {
                    Ok(v) => {
                        found |= !v.holds();
                        let s = VerdictSummary::new(&v, 0);
                        if text {
                            verdict_line(&s)
                        } else {
                            serde_json::to_string(&Wrapped { command: "hunt", body: s }).unwrap() + "\n"
                        }
                    }
                    Err(e @ Error::Consistency(_)) => return Err(e),
                    Err(e) => {
                        refused |= exit_code(&e) == EXIT_BUDGET;
                        if exit_code(&e) == EXIT_USAGE {
                            return Err(e);
                        }
                        if text {
                            format!("{text_expr}: skipped, {e}\n")
                        } else {
                            let skip = serde_json::json!({"command": "hunt", "ring": text_expr, "outcome": "skipped", "reason": e.to_string()});
                            skip.to_string() + "\n"
                        }
                    }
                };
                emit(line)?;
            }
            Ok(if found {
                EXIT_COUNTEREXAMPLE
            } else if refused {
                EXIT_BUDGET
            } else {
                EXIT_OK
            })
        }
        Command::Validate {
            suite,
            truncation,
            example_degree,
        } => {
            let opts = SuiteOptions {
                truncation,
                example_degree,
                search,
                ..Default::default()
            };
            let rep = run_suite(suite, &opts)?;
            emit(if text { suite_text(&rep) } else { to_json(&Wrapped { command: "validate", body: &rep }) })?;
            Ok(if rep.any_failed() { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
    }
}

fn verdict_line(s: &VerdictSummary) -> String {
    let head = format!("{} {} {} up to degree {}", s.ring, s.side, s.property, s.max_degree);
    match (&s.f, &s.g) {
        (Some(f), Some(g)) => format!("{head}: counterexample f = {f}, g = {g}\n"),
        _ => format!(
            "{head}: holds ({} zero pairs, {} polynomials witnessed)\n",
            s.pairs_examined, s.witnessed_polynomials
        ),
    }
}

fn suite_text(rep: &SuiteReport) -> String {
    let mut s = String::new();
    for v in &rep.validations {
        let status = match &v.status {
            Status::Pass => "PASS".to_string(),
            Status::Fail { instance, detail } => format!("FAIL [{instance}] {detail}"),
            Status::Skipped { reason } => format!("SKIP ({reason})"),
        };
        s.push_str(&format!("{:34} {status}\n", v.name));
        for e in &v.evidence {
            s.push_str(&format!("    {e}\n"));
        }
    }
    s.push_str(&format!(
        "{} passed, {} failed, {} skipped\n",
        rep.passed, rep.failed, rep.skipped
    ));
    s
}
