//! Command-line driver.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tautilt::counting::{
    closed_formula, count_tilting_direct_spec, count_tilting_via_product, enumerate_reduced,
    verify_example_lists,
};
use tautilt::dynkin::{auslander_presentation, reduced_algebra, DynkinSpec, Series};
use tautilt::exchange::{exchange_quiver_with, ExchangeOptions, DEFAULT_BUDGET};
use tautilt::{Algebra, Error, DEFAULT_PRIME};

use crate::dsl::{parse_dsl, to_dsl};
use crate::output::{edge_list, node_list, to_dot, Labels};

#[derive(Parser)]
#[command(
    name = "tautilt",
    version,
    about = "Support τ-tilting pairs and tilting-module counts for bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    A,
    D,
    E,
}

#[derive(Args)]
struct SpecArgs {
    /// Dynkin series.
    #[arg(long, ignore_case = true)]
    series: Option<SeriesArg>,
    /// Rank m of the Dynkin diagram.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args)]
struct EngineArgs {
    /// Prime characteristic of the ground field.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    field: u32,
    /// Maximum number of exchange-quiver nodes.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads for the enumeration (output does not depend on it).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Bijection,
    Product,
    Formula,
    Direct,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    /// The Auslander algebra itself.
    Gamma,
    /// The Auslander algebra modulo its projective-injective idempotent.
    Reduced,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bound quiver presentation of an Auslander algebra.
    Present {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        field: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count tilting modules over the Auslander algebra.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = RouteArg::Bijection)]
        route: RouteArg,
        /// Node budget for the direct route when running all routes.
        #[arg(long, default_value_t = 1000)]
        direct_budget: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the exchange quiver of support τ-tilting pairs.
    Enumerate {
        /// Algebra file in the text format; alternatively give --series/--rank.
        file: Option<PathBuf>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Reduced)]
        algebra: AlgebraArg,
        /// Also write the quiver in Graphviz format.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Labels::Gvec)]
        labels: Labels,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the enumeration with the listed pairs for D4 or E6.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Input(String),
    Mismatch(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::FieldTooSmall { .. } | Error::NotPrime(_) => 3,
        Error::Parse { .. }
        | Error::InvalidSpec { .. }
        | Error::DuplicateVertex(_)
        | Error::DuplicateArrow(_)
        | Error::UnknownVertex(_)
        | Error::UnknownArrow(_)
        | Error::NotComposable(..)
        | Error::InhomogeneousRelation(..)
        | Error::RelationTooShort(_)
        | Error::EndpointMismatch
        | Error::EmptyRelation
        | Error::NotFiniteDimensional(_)
        | Error::GuardRail(_) => 2,
        _ => 1,
    }
}

fn kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn spec_of(args: &SpecArgs) -> Result<DynkinSpec, Failure> {
    match (args.series, args.rank) {
        (Some(s), Some(r)) => {
            let series = match s {
                SeriesArg::A => Series::A,
                SeriesArg::D => Series::D,
                SeriesArg::E => Series::E,
            };
            Ok(DynkinSpec::new(series, r)?)
        }
        _ => Err(Failure::Input("--series and --rank are both required".into())),
    }
}

fn options(engine: &EngineArgs) -> Result<ExchangeOptions, Failure> {
    tautilt::Fp::new(engine.field)?;
    if engine.budget == 0 {
        return Err(Failure::Input("--budget must be at least 1".into()));
    }
    Ok(ExchangeOptions {
        budget: engine.budget,
        threads: engine.threads,
    })
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn count(spec: DynkinSpec, route: RouteArg, direct_budget: usize, engine: &EngineArgs) -> Result<Value, Failure> {
    let opts = options(engine)?;
    let p = engine.field;
    let start = Instant::now();
    let wanted: Vec<RouteArg> = match route {
        RouteArg::All => vec![RouteArg::Bijection, RouteArg::Product, RouteArg::Formula, RouteArg::Direct],
        r => vec![r],
    };
    let mut routes = Vec::new();
    let mut counts = Vec::new();
    let mut nodes = Value::Null;
    let mut edges = Value::Null;
    for r in wanted {
        let t = Instant::now();
        let (name, result): (&str, Result<u128, Error>) = match r {
            RouteArg::Bijection => ("bijection", {
                enumerate_reduced(spec, p, &opts).map(|eq| {
                    nodes = json!(eq.node_count());
                    edges = json!(eq.edge_count());
                    eq.node_count() as u128
                })
            }),
            RouteArg::Product => ("product", count_tilting_via_product(spec, p, &opts).map(|r| r.count)),
            RouteArg::Formula => ("closed_formula", closed_formula(spec)),
            RouteArg::Direct => {
                let budget = if route == RouteArg::All {
                    direct_budget.min(opts.budget)
                } else {
                    opts.budget
                };
                let o = ExchangeOptions { budget, ..opts.clone() };
                ("direct", count_tilting_direct_spec(spec, p, &o).map(|r| r.count))
            }
            RouteArg::All => unreachable!(),
        };
        match result {
            Ok(c) => {
                counts.push(c);
                routes.push(json!({"route": name, "status": "ok", "count": c, "elapsed_ms": ms(t)}));
            }
            Err(Error::BudgetExceeded(b)) if route == RouteArg::All => {
                routes.push(json!({"route": name, "status": "skipped", "count": null,
                    "reason": format!("node budget {b} exceeded"), "elapsed_ms": ms(t)}));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let agreed = counts.windows(2).all(|w| w[0] == w[1]);
    let route_name = match route {
        RouteArg::All => "all",
        RouteArg::Bijection => "bijection",
        RouteArg::Product => "product",
        RouteArg::Formula => "closed_formula",
        RouteArg::Direct => "direct",
    };
    let report = json!({
        "input": spec.to_string(),
        "route": route_name,
        "count": if agreed { json!(counts.first()) } else { Value::Null },
        "nodes": nodes,
        "edges": edges,
        "p": p,
        "elapsed_ms": ms(start),
        "routes": routes,
        "agree": agreed,
    });
    if agreed {
        Ok(report)
    } else {
        Err(Failure::Mismatch(report))
    }
}

fn enumerate(
    file: &Option<PathBuf>,
    spec: &SpecArgs,
    which: AlgebraArg,
    dot: &Option<PathBuf>,
    labels: Labels,
    engine: &EngineArgs,
) -> Result<Value, Failure> {
    let opts = options(engine)?;
    let (input, algebra): (String, Algebra) = match (file, spec.series.is_some() || spec.rank.is_some()) {
        (Some(_), true) => return Err(Failure::Input("give either a file or --series/--rank".into())),
        (Some(path), false) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            let mut pres = parse_dsl(&text)?;
            if engine.field != DEFAULT_PRIME {
                pres.p = engine.field;
            }
            (path.display().to_string(), pres.build()?)
        }
        (None, _) => {
            let s = spec_of(spec)?;
            match which {
                AlgebraArg::Gamma => (format!("{s} gamma"), auslander_presentation(s, engine.field)?),
                AlgebraArg::Reduced => (format!("{s} reduced"), reduced_algebra(s, engine.field)?),
            }
        }
    };
    let p = algebra.p();
    let start = Instant::now();
    let eq = exchange_quiver_with(&Arc::new(algebra), &opts)?;
    if let Some(path) = dot {
        std::fs::write(path, to_dot(&eq, labels))
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(json!({
        "input": input,
        "route": "exchange_quiver",
        "count": eq.node_count(),
        "nodes": eq.node_count(),
        "edges": eq.edge_count(),
        "p": p,
        "elapsed_ms": ms(start),
        "tilting": eq.tilting_nodes().len(),
        "node_list": node_list(&eq, labels),
        "edge_list": edge_list(&eq),
    }))
}

fn verify(spec: &SpecArgs, engine: &EngineArgs) -> Result<Value, Failure> {
    let s = spec_of(spec)?;
    let opts = options(engine)?;
    let start = Instant::now();
    let check = verify_example_lists(s, engine.field, &opts)?;
    let report = json!({
        "input": check.input,
        "count": check.count,
        "listed": check.listed,
        "missing": check.missing,
        "extra": check.extra,
        "passed": check.passed(),
        "p": engine.field,
        "elapsed_ms": ms(start),
    });
    if check.passed() {
        Ok(report)
    } else {
        Err(Failure::Mismatch(report))
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Present { spec, field, output } => {
            let alg = auslander_presentation(spec_of(&spec)?, field)?;
            emit(&output, &to_dsl(&alg))
        }
        Command::Count {
            spec,
            route,
            direct_budget,
            engine,
            output,
        } => {
            let report = count(spec_of(&spec)?, route, direct_budget, &engine)?;
            emit(&output, &pretty(&report))
        }
        Command::Enumerate {
            file,
            spec,
            algebra,
            dot,
            labels,
            engine,
            output,
        } => {
            let report = enumerate(&file, &spec, algebra, &dot, labels, &engine)?;
            emit(&output, &pretty(&report))
        }
        Command::Verify { spec, engine, output } => {
            let report = verify(&spec, &engine)?;
            emit(&output, &pretty(&report))
        }
    }
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            let code = exit_code(&e);
            eprintln!("{}", json!({"error": kind(&e), "message": e.to_string(), "exit_code": code}));
            code
        }
        Err(Failure::Input(message)) => {
            eprintln!("{}", json!({"error": "Input", "message": message, "exit_code": 2}));
            2
        }
        Err(Failure::Mismatch(report)) => {
            print!("{}", pretty(&report));
            eprintln!("{}", json!({"error": "Mismatch", "message": "verification failed", "exit_code": 1}));
            1
        }
    }
}
