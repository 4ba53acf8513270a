//! The `statcheck` command line.
//!
//! Exit codes: 0 on success, 1 when `reproduce` finds a difference or a
//! tensor-lab claim fails, 2 on any input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use statcheck_core::audit::classify_with;
use statcheck_core::microstates::{count_microstates, microstate_table, microstates_from_series};
use statcheck_core::partitions::enumerate_partitions;
use statcheck_core::scalar::parse_rational;
use statcheck_core::symfunc::KostkaTransform;
use statcheck_core::tensor_lab::{experiment_names, run_experiment, Experiment};
use statcheck_core::zoo::{Family, FamilyParams};
use statcheck_core::{AuditVerdict, Side, StatisticsSpec};

use crate::cache::{CacheStatus, KostkaCache};
use crate::config::{family_spec, load_config, OutputFormat, ResolvedSpec};
use crate::golden::{all_ids, reproduce};
use crate::model::{run_model, ModelDescriptor};
use crate::report::{aligned, csv_rows, rational_strings, verdict_csv, verdict_json, verdict_text};
use crate::tables::{kostka_lines, microstate_lines};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "statcheck", version, about = "Audit exchange statistics against the Schur/monomial consistency conditions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one or more statistics and print a verdict table.
    Audit(AuditArgs),
    /// Print the Kostka matrix for N, using the on-disk cache.
    Kostka(KostkaArgs),
    /// Show a family's coefficients on both sides, or list the families.
    Zoo(ZooArgs),
    /// Count microstates at fixed particle number and total energy.
    Microstates(MicroArgs),
    /// Run a model descriptor file.
    Fock(FockArgs),
    /// Run the explicit tensor-space experiments.
    TensorLab(TensorArgs),
    /// Regenerate a reference table and compare it with the golden copy.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args, Default)]
pub struct FamilyArgs {
    /// Family name (boson, fermion, gentile, paraboson, parafermion, quon, jack, immanon, semion, capped).
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Occupancy cap.
    #[arg(long)]
    pub q: Option<usize>,
    /// Para order.
    #[arg(long)]
    pub p: Option<usize>,
    /// Jack parameter as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub m_states: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// JSON configuration listing the specs.
    #[arg(long, conflicts_with_all = ["family", "coefficients"])]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Explicit coefficients, comma separated `p/q` values in partition order.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "family")]
    pub coefficients: Option<String>,
    /// Side of explicit coefficients: schur or monomial.
    #[arg(long, default_value = "schur")]
    pub side: String,
    #[arg(long)]
    pub label: Option<String>,
    /// text, json or csv; overrides the config file.
    #[arg(long)]
    pub output: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct KostkaArgs {
    pub n: usize,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Compute without reading or writing the cache.
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ZooArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Debug, Args)]
pub struct MicroArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub e: usize,
    /// Columns as `family` or `family:q`, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = ["boson".to_string(), "fermion".to_string(), "gentile:2".to_string(), "gentile:3".to_string(), "gentile:4".to_string()])]
    pub columns: Vec<String>,
    /// Also extract every count from the series expansion and compare.
    #[arg(long)]
    pub series: bool,
    #[arg(long, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct FockArgs {
    pub descriptor: PathBuf,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long, conflicts_with_all = ["list", "all"])]
    pub experiment: Option<String>,
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Table id; see `--list`.
    #[arg(conflicts_with_all = ["all", "list"])]
    pub id: Option<String>,
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub list: bool,
    /// Read golden files from this directory instead of the built-in copies.
    #[arg(long)]
    pub golden_dir: Option<PathBuf>,
    /// Print the regenerated table as well as the diff status.
    #[arg(long)]
    pub print: bool,
}

/// Either an input problem (exit 2) or a detected mismatch (exit 1).
#[derive(Debug)]
enum Failure {
    Input(String),
    Mismatch,
}

type Outcome = Result<(), Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

pub fn run(argv: impl IntoIterator<Item = String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with(argv: impl IntoIterator<Item = String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Audit(a) => audit(a, out),
        Command::Kostka(a) => kostka(a, out, err),
        Command::Zoo(a) => zoo(a, out),
        Command::Microstates(a) => microstates(a, out),
        Command::Fock(a) => fock(a, out),
        Command::TensorLab(a) => tensor_lab(a, out),
        Command::Reproduce(a) => reproduce_cmd(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(input)
}

fn family_params(f: &FamilyArgs) -> Result<FamilyParams, Failure> {
    let name = f.family.as_deref().ok_or_else(|| input("--family is required"))?;
    let family = Family::parse(name).ok_or_else(|| input(format!("unknown family {name:?}")))?;
    let n = f.n.ok_or_else(|| input("--n is required"))?;
    let mut p = FamilyParams::new(family, n);
    p.q_or_p = match (f.q, f.p) {
        (Some(_), Some(_)) => return Err(input("give --q or --p, not both")),
        (q, p) => q.or(p),
    };
    if let Some(a) = &f.alpha {
        p.alpha = Some(parse_rational(a).ok_or_else(|| input(format!("--alpha: not a rational: {a:?}")))?);
    }
    p.m_states = f.m_states;
    Ok(p)
}

/// Classifies every spec on its own thread; results keep the input order.
pub fn audit_all(specs: &[ResolvedSpec]) -> Vec<AuditVerdict> {
    std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .iter()
            .map(|r| s.spawn(move || classify_with(&r.spec, &KostkaTransform::new(r.spec.n))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("audit worker panicked")).collect()
    })
}

fn audit(a: AuditArgs, out: &mut dyn Write) -> Outcome {
    let (format, specs) = if let Some(path) = &a.config {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let (format, specs) = load_config(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
        (a.output.unwrap_or(format), specs)
    } else if let Some(coeffs) = &a.coefficients {
        let n = a.family.n.ok_or_else(|| input("--n is required with --coefficients"))?;
        let side = Side::parse(&a.side).ok_or_else(|| input(format!("--side: expected schur or monomial, got {:?}", a.side)))?;
        let values = coeffs
            .split(',')
            .map(|c| parse_rational(c).ok_or_else(|| input(format!("--coefficients: not a rational: {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let label = a.label.clone().unwrap_or_else(|| format!("custom N={n}"));
        let spec = StatisticsSpec::new(n, side, values, label.clone()).map_err(|e| input(format!("--coefficients: {e}")))?;
        (a.output.unwrap_or_default(), vec![ResolvedSpec { title: label, spec }])
    } else {
        let params = family_params(&a.family)?;
        let mut r = family_spec(&params).map_err(input)?;
        if let Some(label) = &a.label {
            r.spec.label = label.clone();
        }
        (a.output.unwrap_or_default(), vec![r])
    };
    let verdicts = audit_all(&specs);
    let rows: Vec<(ResolvedSpec, AuditVerdict)> = specs.into_iter().zip(verdicts).collect();
    let text = match format {
        OutputFormat::Text => verdict_text(&rows),
        OutputFormat::Json => verdict_json(&rows) + "\n",
        OutputFormat::Csv => verdict_csv(&rows),
    };
    emit(out, &text)
}

fn kostka(a: KostkaArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if a.n == 0 {
        return Err(input("N must be at least 1"));
    }
    let k = if a.no_cache {
        statcheck_core::symfunc::kostka_matrix(a.n)
    } else {
        let cache = a.cache_dir.clone().map_or_else(KostkaCache::from_env, KostkaCache::new);
        let (k, status) = cache.get_or_compute(a.n).map_err(input)?;
        let what = match status {
            CacheStatus::Hit => "cache hit",
            CacheStatus::Computed => "computed and cached",
            CacheStatus::Repaired => "cache file was invalid; recomputed",
        };
        let _ = writeln!(err, "{what}: {}", cache.path(a.n).display());
        k
    };
    let table = enumerate_partitions(a.n);
    let text = match a.output {
        OutputFormat::Text => {
            let rows: Vec<Vec<String>> = kostka_lines(a.n).iter().map(|l| l.split(" | ").map(String::from).collect()).collect();
            aligned(&rows)
        }
        OutputFormat::Csv => crate::cache::render_matrix(&k),
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": a.n,
                "partitions": table.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                "entries": k.entries,
            });
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
    };
    emit(out, &text)
}

fn zoo(a: ZooArgs, out: &mut dyn Write) -> Outcome {
    if a.family.family.is_none() {
        let rows: Vec<Vec<String>> = std::iter::once(vec!["family".to_string(), "side".to_string()])
            .chain(Family::ALL.iter().map(|f| vec![f.name().to_string(), f.natural_side().name().to_string()]))
            .collect();
        return emit(out, &aligned(&rows));
    }
    let params = family_params(&a.family)?;
    let r = family_spec(&params).map_err(input)?;
    let v = classify_with(&r.spec, &KostkaTransform::new(r.spec.n));
    let mut text = format!("{}\n", r.spec.label);
    let partitions: Vec<String> = enumerate_partitions(r.spec.n).iter().map(|p| p.to_string()).collect();
    text += &format!("partitions: {}\n", partitions.join(" "));
    text += &format!("C     = ({})\n", rational_strings(&v.c).join(","));
    text += &format!("Omega = ({})\n", rational_strings(&v.omega).join(","));
    text += &verdict_text(&[(r, v)]);
    emit(out, &text)
}

fn column_spec(text: &str, n: usize) -> Result<StatisticsSpec, Failure> {
    let (name, q) = match text.split_once(':') {
        Some((name, q)) => (name, Some(q.parse::<usize>().map_err(|_| input(format!("--columns: bad parameter in {text:?}")))?)),
        None => (text, None),
    };
    let family = Family::parse(name.trim()).ok_or_else(|| input(format!("--columns: unknown family {name:?}")))?;
    let mut p = FamilyParams::new(family, n);
    p.q_or_p = q;
    family_spec(&p).map(|r| r.spec).map_err(|e| input(format!("--columns: {e}")))
}

fn microstates(a: MicroArgs, out: &mut dyn Write) -> Outcome {
    if a.n == 0 {
        return Err(input("--n must be at least 1"));
    }
    let specs = a.columns.iter().map(|c| column_spec(c, a.n)).collect::<Result<Vec<_>, _>>()?;
    let table = microstate_table(&specs, a.n, a.e).map_err(input)?;
    let lines = microstate_lines(&table);
    let rows: Vec<Vec<String>> = lines.iter().map(|l| l.split(" | ").map(String::from).collect()).collect();
    let mut text = match a.output {
        OutputFormat::Text => aligned(&rows),
        OutputFormat::Csv => csv_rows(&rows),
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": a.n,
                "e": a.e,
                "columns": table.columns,
                "rows": table.rows.iter().map(|r| serde_json::json!({
                    "distribution": r.distribution.energies,
                    "type": r.occupation_type.parts(),
                    "weights": rational_strings(&r.weights),
                })).collect::<Vec<_>>(),
                "totals": rational_strings(&table.totals),
            });
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
    };
    if a.series {
        let mut mismatches = Vec::new();
        for s in &specs {
            let series = microstates_from_series(s, a.n, a.e).map_err(input)?;
            for (k, value) in series.iter().enumerate() {
                let e = a.n + k;
                if *value != count_microstates(s, a.n, e).map_err(input)? {
                    mismatches.push(format!("{} at E={e}", s.label));
                }
            }
        }
        if a.output == OutputFormat::Text {
            text += &match mismatches.is_empty() {
                true => format!("series check: direct and series counts agree for E={}..={}\n", a.n, a.e),
                false => format!("series check: MISMATCH {}\n", mismatches.join(", ")),
            };
        }
        if !mismatches.is_empty() {
            emit(out, &text)?;
            return Err(Failure::Mismatch);
        }
    }
    emit(out, &text)
}

fn fock(a: FockArgs, out: &mut dyn Write) -> Outcome {
    let path = &a.descriptor;
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let desc = ModelDescriptor::parse(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let report = run_model(&desc).map_err(|e| input(format!("{}: {e}", path.display())))?;
    emit(out, &(serde_json::to_string_pretty(&report).expect("json") + "\n"))
}

fn experiment_text(e: &Experiment) -> String {
    let mut text = format!("{} {}\n", e.name, if e.pass() { "PASS" } else { "FAIL" });
    for c in &e.claims {
        text += &format!("  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.description, c.observed);
        if !c.pass {
            text += &format!(" (expected {})", c.expected);
        }
        text.push('\n');
    }
    text
}

fn tensor_lab(a: TensorArgs, out: &mut dyn Write) -> Outcome {
    if a.list {
        return emit(out, &(experiment_names().join("\n") + "\n"));
    }
    let names: Vec<&str> = match (&a.experiment, a.all) {
        (Some(name), _) => vec![name.as_str()],
        (None, true) => experiment_names().to_vec(),
        (None, false) => return Err(input("give --experiment NAME, --all or --list")),
    };
    let mut failed = false;
    for name in names {
        let e = run_experiment(name).ok_or_else(|| input(format!("unknown experiment {name:?}")))?;
        failed |= !e.pass();
        emit(out, &experiment_text(&e))?;
    }
    if failed {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn reproduce_cmd(a: ReproduceArgs, out: &mut dyn Write) -> Outcome {
    if a.list {
        return emit(out, &(all_ids().join("\n") + "\n"));
    }
    let ids: Vec<&str> = match (&a.id, a.all) {
        (Some(id), _) => vec![id.as_str()],
        (None, true) => all_ids().to_vec(),
        (None, false) => return Err(input("give a table id, --all or --list")),
    };
    let mut mismatch = false;
    for id in ids {
        let r = reproduce(id, a.golden_dir.as_deref()).map_err(input)?;
        if a.print {
            emit(out, &(r.lines.join("\n") + "\n"))?;
        }
        if r.clean() {
            emit(out, &format!("{id}: ok ({} lines)\n", r.lines.len()))?;
        } else {
            mismatch = true;
            emit(out, &format!("{id}: MISMATCH\n{}", r.render_diff()))?;
        }
    }
    if mismatch {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}
