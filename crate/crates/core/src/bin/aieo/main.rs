mod io;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use aieo::export::{export_graph, render_dot, render_json, DetailLevel};
use aieo::pipeline::{run_iteration, FrameworkDocument};
use aieo::query::{canned_query, evaluate, parse_query, to_json, to_tsv, CannedQuery, QueryError};
use aieo::reasoner::{materialize, Materialization, ReasonerError};
use aieo::serialization::{parse_config, ConfigError};
use aieo::{compute_metrics, seed_aieo_schema, OntologyStore};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Io(_) => 4,
        }
    }
}

impl From<ReasonerError> for CliError {
    fn from(e: ReasonerError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<QueryError> for CliError {
    fn from(e: QueryError) -> Self {
        match e {
            QueryError::UnknownConcept(_) => CliError::Validation(e.to_string()),
            QueryError::Syntax(ref d) | QueryError::UnsupportedFeature(ref d) => {
                let kind = if matches!(e, QueryError::Syntax(_)) { "syntax error" } else { "unsupported feature" };
                CliError::Parse(format!("query:{}:{}: {kind}: {}", d.line, d.column, d.message))
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "aieo", version, about = "AI-Ethics Ontology toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ResultFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricsFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write the bundled schema.
    Seed {
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate a store and print its metrics.
    Parse { file: PathBuf },
    /// Materialize a store under the inference rules.
    Reason {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write `<out>.trace.json` with one-step derivations.
        #[arg(long, requires = "out")]
        trace: bool,
    },
    /// Report disjointness violations; exits 3 if there are any.
    Check { file: PathBuf },
    /// Evaluate a pattern query or a canned question.
    Query {
        file: PathBuf,
        #[arg(long, conflicts_with_all = ["ask", "arg"], required_unless_present = "ask")]
        text: Option<String>,
        #[arg(long)]
        ask: Option<String>,
        #[arg(long, requires = "ask")]
        arg: Option<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: ResultFormat,
    },
    /// Ingest one framework document.
    Ingest {
        store: PathBuf,
        doc: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the iteration record as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Overrides the config's label-similarity threshold.
        #[arg(long)]
        similarity_threshold: Option<f64>,
        /// Overrides the config's saturation threshold.
        #[arg(long)]
        saturation_threshold: Option<f64>,
    },
    /// Entity and axiom counts.
    Metrics {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: MetricsFormat,
    },
    /// Render the knowledge graph.
    Export {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        level: u8,
        #[arg(long, value_enum)]
        format: GraphFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Axiom additions and removals plus metric deltas.
    Diff { before: PathBuf, after: PathBuf },
}

fn reason(file: &Path) -> Result<(OntologyStore, Materialization), CliError> {
    let store = io::load_store(file)?;
    let mat = materialize(&store)?;
    Ok((store, mat))
}

fn trace_json(mat: &Materialization) -> String {
    let p = mat.base.prefixes();
    let traces: Vec<_> = mat
        .traces
        .values()
        .flatten()
        .map(|t| {
            json!({
                "conclusion": t.conclusion.display_with(p),
                "rule": t.rule.code(),
                "premises": t.premises.iter().map(|a| a.display_with(p)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&json!({ "traces": traces })).expect("traces serialize");
    text.push('\n');
    text
}

fn check(file: &Path) -> Result<u8, CliError> {
    let (store, mat) = reason(file)?;
    let p = store.prefixes();
    let mut out = String::new();
    for v in &mat.violations {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            p.display(&v.individual),
            p.display(&v.class_a),
            p.display(&v.class_b),
            v.rule.code()
        ));
    }
    io::emit(None, &out)?;
    if mat.consistent {
        eprintln!("consistent");
        Ok(0)
    } else {
        eprintln!("{} violation(s)", mat.violations.len());
        Ok(3)
    }
}

fn query(file: &Path, text: Option<&str>, ask: Option<&str>, arg: Option<&str>, format: ResultFormat) -> Result<(), CliError> {
    let (store, mat) = reason(file)?;
    let rs = match (text, ask) {
        (Some(text), _) => {
            let q = parse_query(text)?;
            for warning in q.lint() {
                eprintln!("warning: {warning}");
            }
            evaluate(&q, &mat)
        }
        (None, Some(name)) => {
            let cq: CannedQuery = name.parse()?;
            let arg = arg
                .map(|a| store.resolve(a))
                .transpose()
                .map_err(|e| CliError::Parse(e.to_string()))?;
            canned_query(cq, arg.as_ref(), &mat)?
        }
        (None, None) => unreachable!("clap requires --text or --ask"),
    };
    let out = match format {
        ResultFormat::Tsv => to_tsv(&rs, store.prefixes()),
        ResultFormat::Json => to_json(&rs),
    };
    io::emit(None, &out)
}

#[allow(clippy::too_many_arguments)]
fn ingest(
    store_path: &Path,
    doc_path: &Path,
    config_path: &Path,
    out: Option<&Path>,
    report: Option<&Path>,
    similarity: Option<f64>,
    saturation: Option<f64>,
) -> Result<(), CliError> {
    let store = io::load_store(store_path)?;
    let doc = FrameworkDocument::from_json(&io::read(doc_path)?)
        .map_err(|e| CliError::Parse(format!("{}:{}:{}: {e}", doc_path.display(), e.line(), e.column())))?;
    let mut cfg = parse_config(&io::read(config_path)?).map_err(|e| match e {
        ConfigError::Syntax(d) => CliError::Parse(format!("{}:{d}", config_path.display())),
        e @ ConfigError::SchemaViolation { .. } => CliError::Validation(format!("{}: {e}", config_path.display())),
    })?;
    for (value, slot, name) in [
        (similarity, &mut cfg.similarity_threshold, "--similarity-threshold"),
        (saturation, &mut cfg.saturation_threshold, "--saturation-threshold"),
    ] {
        if let Some(v) = value {
            if !(0.0..=1.0).contains(&v) {
                return Err(CliError::Parse(format!("{name} must be within [0, 1], got {v}")));
            }
            *slot = v;
        }
    }
    let (next, record) = run_iteration(&store, &doc, &cfg).map_err(|e| CliError::Validation(e.to_string()))?;
    // Render everything before touching the file system.
    let store_text = io::render_store(&next, out);
    let mut report_text = serde_json::to_string_pretty(&record).expect("record serializes");
    report_text.push('\n');
    if let Some(r) = report {
        io::write_atomic(r, &report_text)?;
    }
    io::emit(out, &store_text)?;
    eprintln!(
        "iteration {}: {} axioms -> {} (+{}), {} proposal(s){}",
        record.iteration_index,
        record.before.axiom_count,
        record.after.axiom_count,
        record.increment,
        record.proposals.len(),
        if record.saturated { ", saturated" } else { "" }
    );
    Ok(())
}

fn diff(before: &Path, after: &Path) -> Result<(), CliError> {
    let b = io::load_store(before)?;
    let a = io::load_store(after)?;
    let mut prefixes = a.prefixes().clone();
    prefixes.merge_missing(b.prefixes());
    let bs: &BTreeSet<_> = b.axiom_set();
    let as_: &BTreeSet<_> = a.axiom_set();
    let mut out = String::new();
    for ax in bs.difference(as_) {
        out.push_str(&format!("- {}\n", ax.display_with(&prefixes)));
    }
    for ax in as_.difference(bs) {
        out.push_str(&format!("+ {}\n", ax.display_with(&prefixes)));
    }
    out.push('\n');
    for (label, delta) in compute_metrics(&b).delta(&compute_metrics(&a)) {
        out.push_str(&format!("{label}\t{delta:+}\n"));
    }
    io::emit(None, &out)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Seed { out } => {
            let store = seed_aieo_schema();
            io::write_atomic(&out, &io::render_store(&store, Some(&out)))?;
        }
        Command::Parse { file } => {
            let store = io::load_store(&file)?;
            store.validate().map_err(|e| CliError::Validation(e.to_string()))?;
            io::emit(None, &compute_metrics(&store).to_table())?;
        }
        Command::Reason { file, out, trace } => {
            let (_, mat) = reason(&file)?;
            let text = io::render_store(&mat.to_store(), out.as_deref());
            if trace {
                let out = out.as_ref().expect("clap requires --out with --trace");
                let mut sidecar = out.clone().into_os_string();
                sidecar.push(".trace.json");
                io::write_atomic(Path::new(&sidecar), &trace_json(&mat))?;
            }
            io::emit(out.as_deref(), &text)?;
            if !mat.consistent {
                eprintln!("warning: {} consistency violation(s); run `aieo check` for details", mat.violations.len());
            }
        }
        Command::Check { file } => return check(&file),
        Command::Query { file, text, ask, arg, format } => {
            query(&file, text.as_deref(), ask.as_deref(), arg.as_deref(), format)?
        }
        Command::Ingest { store, doc, config, out, report, similarity_threshold, saturation_threshold } => ingest(
            &store,
            &doc,
            &config,
            out.as_deref(),
            report.as_deref(),
            similarity_threshold,
            saturation_threshold,
        )?,
        Command::Metrics { file, format } => {
            let m = compute_metrics(&io::load_store(&file)?);
            let text = match format {
                MetricsFormat::Table => m.to_table(),
                MetricsFormat::Json => serde_json::to_string_pretty(&m).expect("metrics serialize") + "\n",
            };
            io::emit(None, &text)?;
        }
        Command::Export { file, level, format, out } => {
            let (_, mat) = reason(&file)?;
            let level = DetailLevel::from_number(level).expect("clap restricts the range");
            let g = export_graph(&mat, level);
            let text = match format {
                GraphFormat::Dot => render_dot(&g),
                GraphFormat::Json => render_json(&g),
            };
            io::write_atomic(&out, &text)?;
        }
        Command::Diff { before, after } => diff(&before, &after)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
