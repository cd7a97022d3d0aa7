use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use enriques_core::diagram::catalog;
use enriques_core::tasks::scenario::Scenario;
use enriques_core::tasks::{render_text, run_scenario, run_standalone, Report, Task, TaskError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact checks of curve diagrams, fixed loci and lattices on Enriques surfaces.
///
/// INPUT is a catalog name (see --catalog-list) or a scenario JSON file.
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on
/// invalid input.
#[derive(Debug, Parser)]
#[command(name = "enriques", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print the catalog names and exit.
    #[arg(long)]
    catalog_list: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Finite, affine or other type of a diagram.
    Classify {
        input: String,
        /// Expected class, e.g. "finite A2" or "affine E~8".
        #[arg(long)]
        expect: Option<String>,
    },
    /// Rank-8 configurations of disjoint affine subdiagrams.
    Fibrations { input: String },
    /// Every affine subdiagram lies in a component of some fibration.
    Vinberg { input: String },
    /// All fixed-locus assignments of a diagram.
    FixedLocus { input: String },
    /// e(F^sigma) = e(F) for the given fiber types (all pictured types by default).
    Lemma43 { fibers: Vec<String> },
    /// Local Lefschetz number for a monomial fixed-point ideal.
    LefschetzWild {
        /// Generator exponents `a,b` for u^a v^b; default (u^2, v^2).
        #[arg(long = "generator", value_parser = parse_pair)]
        generators: Vec<(u32, u32)>,
        /// Also report chi(O_Y) = (1 + chi_z) / 2.
        #[arg(long)]
        chi_z: Option<i64>,
    },
    /// Invariant half-fiber pairs for a nontrivial action on the base.
    Theorem44,
    /// Lattice computations.
    Lattice {
        #[arg(value_enum)]
        verb: LatticeVerb,
    },
    /// Worked example: double plane with two tangent (1,2) curves.
    Example1,
    /// Worked example: double plane with an E8 point and two tacnodes.
    Example2,
    /// Worked example: rational elliptic surface with fibers IV and I0*.
    Example3,
    /// Seeded randomized checks.
    Properties {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cases: Option<u64>,
    },
    /// Run a scenario file, or the given tasks on a catalog diagram.
    Run {
        input: String,
        /// Comma-separated task names; required for catalog names.
        #[arg(long, value_delimiter = ',')]
        tasks: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeVerb {
    E10,
    Isotropic,
    Glue,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    Ok((a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

/// Scenario for `input` running `tasks`; a scenario file keeps its diagram
/// and options but its task list is replaced.
fn load(input: &str, tasks: Vec<Task>) -> Result<Scenario, TaskError> {
    if catalog::by_name(input).is_some() {
        return Scenario::for_catalog(input, tasks);
    }
    let path = Path::new(input);
    if !path.exists() {
        return Err(TaskError::UnknownCatalog(input.to_string()));
    }
    let mut s = Scenario::from_path(path)?;
    if !tasks.is_empty() {
        s.tasks = tasks;
    }
    Ok(s)
}

fn on_input(input: &str, task: Task, options: Map<String, Value>) -> Result<Report, TaskError> {
    let mut s = load(input, vec![task])?;
    if !options.is_empty() {
        s.options.entry(task).or_default().extend(options);
    }
    run_scenario(&s)
}

fn standalone(task: Task, options: Map<String, Value>) -> Report {
    run_standalone(&[task], &BTreeMap::from([(task, options)]))
}

fn execute(command: Command) -> Result<Report, TaskError> {
    Ok(match command {
        Command::Classify { input, expect } => {
            on_input(&input, Task::Classify, object(expect.map_or(json!({}), |e| json!({"expected": e}))))?
        }
        Command::Fibrations { input } => on_input(&input, Task::Fibrations, Map::new())?,
        Command::Vinberg { input } => on_input(&input, Task::Vinberg, Map::new())?,
        Command::FixedLocus { input } => on_input(&input, Task::FixedLocus, Map::new())?,
        Command::Lemma43 { fibers } => {
            for f in &fibers {
                if catalog::by_name(f).is_none() {
                    return Err(TaskError::UnknownCatalog(f.clone()));
                }
            }
            let opts = if fibers.is_empty() { Map::new() } else { object(json!({"fibers": fibers})) };
            standalone(Task::Lemma43, opts)
        }
        Command::LefschetzWild { generators, chi_z } => {
            let mut opts = Map::new();
            if !generators.is_empty() {
                opts.insert("generators".into(), json!(generators));
            }
            if let Some(c) = chi_z {
                opts.insert("chi_z".into(), json!(c));
            }
            standalone(Task::LefschetzWild, opts)
        }
        Command::Theorem44 => standalone(Task::Theorem44, Map::new()),
        Command::Lattice { verb } => standalone(
            match verb {
                LatticeVerb::E10 => Task::LatticeE10,
                LatticeVerb::Isotropic => Task::LatticeIsotropic,
                LatticeVerb::Glue => Task::LatticeGlue,
            },
            Map::new(),
        ),
        Command::Example1 => standalone(Task::Example1, Map::new()),
        Command::Example2 => standalone(Task::Example2, Map::new()),
        Command::Example3 => standalone(Task::Example3, Map::new()),
        Command::Properties { seed, cases } => {
            let mut opts = Map::new();
            if let Some(s) = seed {
                opts.insert("seed".into(), json!(s));
            }
            if let Some(c) = cases {
                opts.insert("cases".into(), json!(c));
            }
            standalone(Task::Properties, opts)
        }
        Command::Run { input, tasks } => {
            let tasks = tasks.iter().map(|t| t.parse()).collect::<Result<Vec<Task>, _>>()?;
            if tasks.is_empty() && catalog::by_name(&input).is_some() {
                return Err(TaskError::Schema("--tasks is required with a catalog name".into()));
            }
            run_scenario(&load(&input, tasks)?)?
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.catalog_list {
        for n in catalog::names() {
            let note = if catalog::is_provisional(&n) { "  (provisional)" } else { "" };
            println!("{n}{note}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    match execute(command) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.to_canonical_json()),
                Format::Text => print!("{}", render_text(&report)),
            }
            if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
