use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use polyfield::coxeter::{preset, resolve_diagram};
use polyfield::matgroup::DEFAULT_ENUM_CAP;
use polyfield::workbench::{cmd_analyze, cmd_suite, criterion, Config, CriterionReport, SCHEMA, SUITES};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "polyfield", version, about = "Reflection groups over GF(p) and the polytopes they define")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Write the JSON report to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
    /// Largest group that may be enumerated element by element
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CAP)]
    max_enum: u128,
    /// Directory for cached enumerations
    #[arg(long, value_name = "DIR")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build, classify and test one diagram modulo a prime
    Analyze {
        /// Diagram shorthand such as "[4,3,4,3]", a preset name, or a JSON object
        #[arg(conflicts_with_all = ["diagram", "preset"])]
        spec: Option<String>,
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, conflicts_with = "diagram")]
        preset: Option<String>,
        #[arg(long, short)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite
    Suite {
        #[arg(conflicts_with = "suite")]
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a single numbered verification block
    Criterion {
        id: u32,
        #[command(flatten)]
        common: Common,
    },
    /// List suites and presets
    List,
}

#[derive(Serialize)]
struct CriterionOutput<'a> {
    schema: &'a str,
    criterion: &'a CriterionReport,
    passed: bool,
}

fn config(c: &Common) -> Config {
    Config {
        max_enum: c.max_enum,
        cache: c.cache.clone(),
    }
}

fn emit<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn report_claims(c: &CriterionReport) {
    for claim in &c.claims {
        let tag = match (claim.passed, claim.asserted) {
            (_, false) => "NOTE",
            (true, true) => "PASS",
            (false, true) => "FAIL",
        };
        eprintln!("{tag} {} {}: {}", claim.id, claim.description, claim.detail);
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let start = Instant::now();
    let ok = match cli.command {
        Command::Analyze {
            spec,
            diagram,
            preset: name,
            prime,
            common,
        } => {
            let d = match (spec.or(diagram), name) {
                (Some(s), _) => resolve_diagram(&s),
                (None, Some(n)) => preset(&n).map(|p| p.diagram),
                (None, None) => return Err("give a diagram (positional, --diagram or --preset)".into()),
            }
            .map_err(|e| e.to_string())?;
            let r = cmd_analyze(&d, prime, &config(&common)).map_err(|e| e.to_string())?;
            for n in &r.notices {
                eprintln!("notice: {n}");
            }
            emit(&r, &common.json_out)?;
            true
        }
        Command::Suite { name, suite, common } => {
            let name = name.or(suite).ok_or("give a suite name")?;
            let r = cmd_suite(&name, &config(&common)).map_err(|e| e.to_string())?;
            r.criteria.iter().for_each(report_claims);
            emit(&r, &common.json_out)?;
            r.passed
        }
        Command::Criterion { id, common } => {
            let r = criterion(id, &config(&common)).map_err(|e| e.to_string())?;
            report_claims(&r);
            let passed = r.passed();
            emit(
                &CriterionOutput {
                    schema: SCHEMA,
                    criterion: &r,
                    passed,
                },
                &common.json_out,
            )?;
            passed
        }
        Command::List => {
            for (name, ids) in SUITES {
                println!("suite {name}: blocks {ids:?}");
            }
            for name in polyfield::coxeter::PRESET_NAMES {
                println!("preset {name}");
            }
            true
        }
    };
    eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
