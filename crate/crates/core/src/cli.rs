//! Command-line front end. `main.rs` only parses arguments and maps the
//! outcome to an exit status; everything else lives here so it can be tested.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{builtin_catalog, read_catalog, render_table, summarize, verify_catalog};
use crate::error::{Error, Result};
use crate::graph::{is_separating, to_dot, to_json};
use crate::group::{build_group, sylow_decomposition, Atom, GroupSpec};
use crate::kappa::{
    kappa_enhanced, mr, mr_abelian_closed_form, witness_separating_set, KappaOptions, Method,
    Verdict, DEFAULT_BUDGET,
};
use crate::power::{enhanced_power_graph, GraphKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "epgraph", version, about = "Vertex connectivity of enhanced power graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity of the enhanced power graph by formula, oracle or both.
    Kappa {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit one of the graphs of a group.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = KindArg::Enhanced)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Minimum root count of a p-group.
    Mr {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Explicit separating set for a subset of Sylow factor indices.
    Witness {
        spec: String,
        /// Comma-separated 0-based factor indices; defaults to the minimizing subset.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Formula against oracle over a catalog file or the built-in catalog.
    Verify {
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Enhanced,
    Power,
    Commuting,
    Deleted,
    Proper,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Enhanced => GraphKind::Enhanced,
            KindArg::Power => GraphKind::Power,
            KindArg::Commuting => GraphKind::Commuting,
            KindArg::Deleted => GraphKind::Deleted,
            KindArg::Proper => GraphKind::Proper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::InvalidSpec(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_ERROR,
    }
}

/// Runs a parsed command, writing its report to `out`; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Kappa {
            spec,
            method,
            budget,
            json,
        } => cmd_kappa(spec, (*method).into(), *budget, *json, out),
        Command::Graph { spec, kind, format } => cmd_graph(spec, (*kind).into(), *format, out),
        Command::Mr { spec, json } => cmd_mr(spec, *json, out),
        Command::Witness { spec, subset, json } => cmd_witness(spec, subset.as_deref(), *json, out),
        Command::Verify {
            catalog,
            budget,
            json,
        } => cmd_verify(catalog.as_ref(), *budget, *json, out),
    }
}

fn io(err: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source: err,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn cmd_kappa(
    spec: &str,
    method: Method,
    budget: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let spec = GroupSpec::parse(spec)?;
    let report = kappa_enhanced(&spec, KappaOptions { method, budget })?;
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        let t = report.minimizing_subset();
        let text = format!(
            "spec: {}\norder: {}\nkappa_formula: {}\nkappa_oracle: {}\nminimizing_T: {:?}\nwitness_size: {}\nverdict: {}\n",
            report.spec,
            report.order,
            opt(report.kappa_formula()),
            opt(report.kappa_oracle()),
            t,
            opt(report.witness_set.as_ref().map(Vec::len)),
            report.verdict.as_str()
        );
        out.write_all(text.as_bytes()).map_err(io)?;
        if let Some(v) = report.variants {
            writeln!(
                out,
                "closed form: printed {}, mr-corrected {}",
                opt(v.printed),
                opt(v.mr_corrected)
            )
            .map_err(io)?;
        }
    }
    Ok(if report.verdict == Verdict::Disagree {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    })
}

pub fn cmd_graph(spec: &str, kind: GraphKind, format: FormatArg, out: &mut dyn Write) -> Result<i32> {
    let spec = GroupSpec::parse(spec)?;
    let group = build_group(&spec)?;
    let graph = kind.build(&group);
    let text = match format {
        FormatArg::Json => to_json(&graph) + "\n",
        FormatArg::Dot => to_dot(&graph, &format!("{} {}", kind.name(), spec)),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MrJson {
    spec: String,
    prime: u64,
    mr: u64,
    closed_form: Option<u128>,
}

pub fn cmd_mr(spec: &str, json: bool, out: &mut dyn Write) -> Result<i32> {
    let spec = GroupSpec::parse(spec)?;
    let group = build_group(&spec)?;
    let p = group
        .prime_of_p_group()
        .ok_or_else(|| Error::InvalidArgument(format!("{spec} is not a p-group of order > 1")))?;
    let value = mr(&group, p)?;
    let closed_form = match spec.factors() {
        [Atom::AbelianP { p, exponents }] => Some(mr_abelian_closed_form(*p, exponents)?),
        _ => None,
    };
    if json {
        let data = MrJson {
            spec: spec.to_string(),
            prime: p,
            mr: value,
            closed_form,
        };
        writeln!(out, "{}", serde_json::to_string(&data).expect("mr json")).map_err(io)?;
    } else {
        writeln!(out, "mr({spec}) = {value} (p = {p})").map_err(io)?;
        if let Some(c) = closed_form {
            writeln!(out, "closed form: {c}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct WitnessJson {
    spec: String,
    subset: Vec<usize>,
    size: usize,
    separating: bool,
    vertices: Vec<String>,
}

pub fn cmd_witness(spec: &str, subset: Option<&[usize]>, json: bool, out: &mut dyn Write) -> Result<i32> {
    let spec = GroupSpec::parse(spec)?;
    let group = build_group(&spec)?;
    let decomposition = sylow_decomposition(&group)?;
    let subset = match subset {
        Some(t) => {
            let mut t = t.to_vec();
            t.sort_unstable();
            t.dedup();
            t
        }
        None => {
            let report = kappa_enhanced(
                &spec,
                KappaOptions {
                    method: Method::Formula,
                    budget: 0,
                },
            )?;
            report.minimizing_subset().to_vec()
        }
    };
    let set = witness_separating_set(&group, &decomposition, &subset)?;
    let separating = is_separating(&enhanced_power_graph(&group), &set);
    let vertices: Vec<String> = set.iter().map(|&v| group.labels()[v].clone()).collect();
    if json {
        let data = WitnessJson {
            spec: spec.to_string(),
            subset,
            size: set.len(),
            separating,
            vertices,
        };
        writeln!(out, "{}", serde_json::to_string(&data).expect("witness json")).map_err(io)?;
    } else {
        writeln!(
            out,
            "T = {subset:?}: {} vertices, separating: {separating}\n{}",
            set.len(),
            vertices.join(" ")
        )
        .map_err(io)?;
    }
    Ok(if separating { EXIT_OK } else { EXIT_ERROR })
}

#[derive(Serialize)]
struct VerifyJson {
    rows: Vec<serde_json::Value>,
    summary: crate::catalog::CatalogSummary,
}

pub fn cmd_verify(catalog: Option<&PathBuf>, budget: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    let entries = match catalog {
        Some(path) => read_catalog(path)?,
        None => builtin_catalog(),
    };
    let rows = verify_catalog(&entries, budget);
    let summary = summarize(&rows);
    if json {
        let rows = rows
            .iter()
            .map(|row| match &row.outcome {
                Ok(r) => serde_json::to_value(r.to_json_value()).expect("report json"),
                Err(e) => serde_json::json!({ "spec": row.spec, "error": e.to_string() }),
            })
            .collect();
        let data = VerifyJson { rows, summary };
        writeln!(out, "{}", serde_json::to_string(&data).expect("verify json")).map_err(io)?;
    } else {
        out.write_all(render_table(&rows).as_bytes()).map_err(io)?;
    }
    Ok(if summary.disagree > 0 {
        EXIT_DISAGREE
    } else if summary.errors > 0 {
        EXIT_ERROR
    } else {
        EXIT_OK
    })
}
