use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nmlab::extension::{extend, ExtensionKind};
use nmlab::harness::{self, canonical_json, RunReport};
use nmlab::kernel::{FormulaSet, Language};
use nmlab::operations::load_op;
use nmlab::properties::{check_many, default_pool, PropertyKind, PropertyVerdict, Universe};
use nmlab::representations::{represent, representation_table, ReprKind};
use nmlab::{LabError, Result};

#[derive(Parser)]
#[command(
    name = "nmlab",
    version,
    about = "Check nonmonotonic inference operations over a bounded universe"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check properties of an operation; exits 1 on any counterexample.
    Check {
        #[command(flatten)]
        op: OpArgs,
        /// Comma-separated property names, or `all`.
        #[arg(long, default_value = "all")]
        props: String,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Print the representation at one input, or the table over the universe.
    Represent {
        #[command(flatten)]
        op: OpArgs,
        /// largest, trace or cumulative-trace
        #[arg(long)]
        kind: String,
        /// Comma-separated formulas.
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Apply a canonical extension of an operation.
    ///
    /// The input is a formula set or a single formula standing for its theory.
    /// Strong co-compactness can only fail over infinitely many atoms, so no
    /// counterexample exists here; see the extension chapter of the guide.
    Extend {
        #[command(flatten)]
        op: OpArgs,
        /// plain or ra
        #[arg(long)]
        kind: String,
        #[arg(long)]
        input: String,
    },
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Random table operations against the representation biconditionals.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// 1 or 2.
        #[arg(long, default_value_t = 2)]
        atoms_count: usize,
        /// Comma-separated properties the generators must respect.
        #[arg(long)]
        enforce: Option<String>,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Run a built-in scenario by id, or a scenario file; exits 1 on a mismatch.
    Run {
        /// Scenario id or path; omit with --all.
        target: Option<String>,
        #[arg(long, conflicts_with = "target")]
        all: bool,
        /// Also write the structured report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    List,
}

#[derive(Args)]
struct OpArgs {
    /// Builtin (cn, cwa, gcwa, two-variable), inline JSON, or a config path.
    #[arg(long)]
    op: String,
    /// Comma-separated atom names.
    #[arg(long, default_value = "p,q")]
    atoms: String,
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long, default_value_t = 3)]
    max_set_size: usize,
    /// Comma-separated pool formulas; defaults to literals and their pairs.
    #[arg(long)]
    pool: Option<String>,
    /// Schema instantiations allowed per check.
    #[arg(long)]
    cap: Option<u64>,
}

impl UniverseArgs {
    fn build(&self, lang: &Language) -> Result<Universe> {
        let pool = match &self.pool {
            Some(p) => lang.parse_set(p).map_err(|e| config("--pool", e))?,
            None => default_pool(lang),
        };
        let u = Universe::new(lang, pool, self.max_set_size)?;
        Ok(match self.cap {
            Some(c) => u.with_cap(c),
            None => u,
        })
    }
}

fn config(path: &str, e: impl ToString) -> LabError {
    LabError::Config {
        path: path.into(),
        message: e.to_string(),
    }
}

fn language(atoms: &str) -> Result<Language> {
    Language::from_list(atoms).map_err(|e| config("--atoms", e))
}

fn parse_input(lang: &Language, input: &str) -> Result<FormulaSet> {
    lang.parse_set(input).map_err(|e| config("--input", e))
}

fn print_verdicts(format: Format, verdicts: &[PropertyVerdict]) {
    match format {
        Format::Text => verdicts.iter().for_each(|v| println!("{v}")),
        Format::Structured => print!("{}", canonical_json(&verdicts)),
    }
}

fn print_report(format: Format, r: &RunReport) {
    match format {
        Format::Structured => print!("{}", r.to_json()),
        Format::Text => {
            let status = if r.ok() { "ok" } else { "MISMATCH" };
            println!("{}: {status} ({} ms)", r.scenario, r.wall_time_ms);
            for v in &r.verdicts {
                println!("  {v}");
            }
            for m in &r.mismatches {
                println!("  mismatch: {m}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Check { op, props, universe } => {
            let lang = language(&op.atoms)?;
            let f = load_op(&op.op, &lang)?;
            let u = universe.build(&lang)?;
            let kinds: Vec<PropertyKind> = if props.trim() == "all" {
                PropertyKind::ALL.to_vec()
            } else {
                props.split(',').map(str::parse).collect::<Result<_>>()?
            };
            let verdicts = check_many(&f, &kinds, &u)?;
            print_verdicts(format, &verdicts);
            Ok(verdicts.iter().all(PropertyVerdict::passed))
        }
        Command::Represent {
            op,
            kind,
            input,
            universe,
        } => {
            let lang = language(&op.atoms)?;
            let f = load_op(&op.op, &lang)?;
            let kind: ReprKind = kind.parse()?;
            match input {
                Some(input) => {
                    let x = parse_input(&lang, &input)?;
                    let s = lang.canonical_axiom(represent(&f, &x, kind)?.models());
                    match format {
                        Format::Text => println!("{kind}({x}) = Cn({s})"),
                        Format::Structured => print!(
                            "{}",
                            canonical_json(&json!({
                                "operation": f.name(),
                                "kind": kind,
                                "input": x.to_strings(),
                                "assumptions": s.to_string(),
                            }))
                        ),
                    }
                }
                None => {
                    let rows = representation_table(&f, kind, &universe.build(&lang)?)?;
                    match format {
                        Format::Text => rows
                            .iter()
                            .for_each(|r| println!("{{{}}}\t{}\t{}", r.input.join(", "), r.theory, r.assumptions)),
                        Format::Structured => print!("{}", canonical_json(&rows)),
                    }
                }
            }
            Ok(true)
        }
        Command::Extend { op, kind, input } => {
            let lang = language(&op.atoms)?;
            let f = load_op(&op.op, &lang)?;
            let kind: ExtensionKind = kind.parse()?;
            let ext = extend(&f, kind)?;
            let x = parse_input(&lang, &input)?;
            let t = lang.canonical_axiom(ext.apply(&x).models());
            match format {
                Format::Text => println!("{}({x}) = Cn({t})", ext.name()),
                Format::Structured => print!(
                    "{}",
                    canonical_json(&json!({
                        "operation": ext.name(),
                        "input": x.to_strings(),
                        "theory": t.to_string(),
                    }))
                ),
            }
            Ok(true)
        }
        Command::Scenario(ScenarioCommand::List) => {
            let list = harness::list_scenarios();
            match format {
                Format::Text => list.iter().for_each(|s| println!("{}\t{}", s.id, s.description)),
                Format::Structured => print!("{}", canonical_json(&list)),
            }
            Ok(true)
        }
        Command::Scenario(ScenarioCommand::Run { target, all, out }) => {
            let reports = match (target, all) {
                (_, true) => harness::run_all()?,
                (Some(t), false) => vec![harness::run_scenario(&t)?],
                (None, false) => return Err(config("scenario run", "give a scenario id or path, or --all")),
            };
            reports.iter().for_each(|r| print_report(format, r));
            if let Some(path) = out {
                let text = if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    canonical_json(&reports)
                };
                std::fs::write(path, text)?;
            }
            Ok(reports.iter().all(RunReport::ok))
        }
        Command::Fuzz {
            seed,
            count,
            atoms_count,
            enforce,
        } => {
            let enforce: Vec<PropertyKind> = match enforce {
                Some(list) => list.split(',').map(str::parse).collect::<Result<_>>()?,
                None => Vec::new(),
            };
            let r = harness::run_fuzz(seed, count, atoms_count, &enforce)?;
            match format {
                Format::Structured => print!("{}", r.to_json()),
                Format::Text => {
                    println!("{} ({} ms)", r.scenario, r.wall_time_ms);
                    for (k, v) in &r.summary {
                        println!("  {k}: {v}");
                    }
                    r.verdicts.iter().for_each(|v| println!("  violation: {v}"));
                }
            }
            Ok(r.verdicts.is_empty())
        }
    }
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
