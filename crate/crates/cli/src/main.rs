//! Command-line front end for the reconstruction-algebra toolkit.
//!
//! Every subcommand is a thin wrapper over the library: compute, render
//! (text, JSON, or DOT), exit. Exit codes: 0 success, 1 verification
//! failure, 2 invalid arguments, 3 search-bound exhaustion. Identical
//! invocations produce byte-identical output.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use rca_core::deformation::{deformed_quiver, deformed_ring};
use rca_core::fixtures::{
    fixture_names, load_fixture, load_fixture_from_str, load_fixture_with_lambda, verify_fixture,
};
use rca_core::invariant_ring::ring_presentation;
use rca_core::numtheory::{hj_dual, hj_expand, versal_dimension};
use rca_core::quiver::{quiver_presentation, QuiverOptions};
use rca_core::report::verify_pair;
use rca_core::specials::module_classes;
use rca_core::Error;

#[derive(Parser)]
#[command(
    name = "rca",
    version,
    about = "Reconstruction algebras of cyclic quotient surface singularities 1/r(1,a)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch-Jung expansion, its dual, and the versal dimension.
    Fraction { r: i64, a: i64 },
    /// Generators and relations of the invariant ring, or of its
    /// deformation over the Artin component.
    Ring {
        r: i64,
        a: i64,
        /// Present the deformed ring instead of the invariant ring.
        #[arg(long)]
        deformed: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Special module classes with normalized generators and gradings.
    Modules {
        r: i64,
        a: i64,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// The quiver with relations of the reconstruction algebra.
    Quiver {
        r: i64,
        a: i64,
        /// Compute the deformed quiver instead.
        #[arg(long)]
        deformed: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Hom-search degree bound (default 2r).
        #[arg(long)]
        bound: Option<i64>,
        /// Path-relation degree bound (default 3r; 0 skips relations).
        #[arg(long)]
        path_bound: Option<i64>,
    },
    /// Run the full verification suite for one pair (r, a).
    Verify {
        r: i64,
        a: i64,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Load and verify a golden fixture by name or from a file.
    Golden {
        /// Built-in fixture name; ignored when --path is given.
        name: String,
        /// Override the rational parameter, e.g. "3/2" (admissible
        /// values exclude 0 and 1).
        #[arg(long)]
        lambda: Option<String>,
        /// Read the fixture from this file instead of the built-ins.
        #[arg(long)]
        path: Option<PathBuf>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExhausted { .. } | Error::LiftExhausted { .. } => 3,
        Error::Verification(_) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<i32, (String, i32)> {
    let lib = |e: Error| (e.to_string(), exit_code(&e));
    match cli.command {
        Command::Fraction { r, a } => {
            let primal = hj_expand(r, a).map_err(lib)?;
            let dual = hj_dual(r, a).map_err(lib)?;
            let dim = versal_dimension(r, a).map_err(lib)?;
            let render = |entries: &[i64]| {
                entries
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            println!(
                "[{}] / dual [{}] / dim {}",
                render(&primal.entries),
                render(&dual.entries),
                dim
            );
            Ok(0)
        }
        Command::Ring {
            r,
            a,
            deformed,
            json,
        } => {
            let rendered = if deformed {
                let dr = deformed_ring(r, a).map_err(lib)?;
                if json {
                    to_json_text(&dr.to_json())
                } else {
                    dr.to_text()
                }
            } else {
                let presentation = ring_presentation(r, a).map_err(lib)?;
                if json {
                    to_json_text(&presentation.to_json())
                } else {
                    presentation.to_text()
                }
            };
            print!("{rendered}");
            Ok(0)
        }
        Command::Modules { r, a, json } => {
            let presentation = ring_presentation(r, a).map_err(lib)?;
            let classes = module_classes(&presentation).map_err(lib)?;
            if json {
                let value: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|class| {
                        serde_json::json!({
                            "name": class.name(),
                            "module": class.normalized.to_string(),
                            "representatives": class
                                .representatives
                                .iter()
                                .map(|rep| rep.to_string())
                                .collect::<Vec<_>>(),
                            "generators": class
                                .normalized
                                .generators()
                                .iter()
                                .map(|g| (g.xexp, g.yexp))
                                .collect::<Vec<_>>(),
                            "degrees": class.degrees,
                        })
                    })
                    .collect();
                print!("{}", to_json_text(&serde_json::Value::Array(value)));
            } else {
                println!("special module classes of 1/{r}(1,{a}):");
                for class in &classes {
                    let reps = class
                        .representatives
                        .iter()
                        .map(|rep| rep.to_string())
                        .collect::<Vec<_>>()
                        .join(" ~ ");
                    let degrees = class
                        .degrees
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "  {} = {}  degrees [{}]  [{}]",
                        class.name(),
                        class.normalized,
                        degrees,
                        reps
                    );
                }
            }
            Ok(0)
        }
        Command::Quiver {
            r,
            a,
            deformed,
            format,
            bound,
            path_bound,
        } => {
            let options = QuiverOptions {
                hom_bound: bound,
                path_bound,
            };
            let quiver = if deformed {
                deformed_quiver(r, a, &options).map_err(lib)?
            } else {
                quiver_presentation(r, a, &options).map_err(lib)?
            };
            let rendered = match format {
                Format::Text => quiver.to_text(),
                Format::Json => to_json_text(&quiver.to_json()),
                Format::Dot => quiver.to_dot(),
            };
            print!("{rendered}");
            Ok(0)
        }
        Command::Verify { r, a, json } => {
            let report = verify_pair(r, a).map_err(lib)?;
            if json {
                let value = serde_json::to_value(&report).expect("report serializes");
                print!("{}", to_json_text(&value));
            } else {
                println!("{report}");
            }
            Ok(if report.is_pass() { 0 } else { 1 })
        }
        Command::Golden {
            name,
            lambda,
            path,
            json,
        } => {
            let lambda = lambda
                .map(|text| {
                    BigRational::from_str(&text)
                        .map_err(|e| (format!("invalid --lambda {text:?}: {e}"), 2))
                })
                .transpose()?;
            let fixture = match path {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| (format!("cannot read {}: {e}", path.display()), 2))?;
                    load_fixture_from_str(&text, lambda).map_err(lib)?
                }
                None => match lambda {
                    Some(lambda) => load_fixture_with_lambda(&name, lambda).map_err(|e| {
                        if matches!(e, Error::UnknownFixture(_)) {
                            (
                                format!("{e}; built-ins: {}", fixture_names().join(", ")),
                                2,
                            )
                        } else {
                            lib(e)
                        }
                    })?,
                    None => load_fixture(&name).map_err(|e| {
                        if matches!(e, Error::UnknownFixture(_)) {
                            (
                                format!("{e}; built-ins: {}", fixture_names().join(", ")),
                                2,
                            )
                        } else {
                            lib(e)
                        }
                    })?,
                },
            };
            let report = verify_fixture(&fixture);
            if json {
                let value = serde_json::json!({
                    "summary": fixture.summary(),
                    "checks": report.checks,
                });
                print!("{}", to_json_text(&value));
            } else {
                println!("{}", fixture.summary());
                println!("{report}");
            }
            Ok(if report.is_pass() { 0 } else { 1 })
        }
    }
}

fn to_json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    text.push('\n');
    text
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err((message, code)) => {
            eprintln!("error: {message}");
            std::process::exit(code);
        }
    }
}
