//! `wittflag`: conditions, Witt presentations and reference tables for
//! complex flag varieties `G/L_H`.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use wittflag_core::character::{self, DEFAULT_DEGREE_CAP, DEFAULT_PRODUCT_CAP};
use wittflag_core::conditions::{self, ConditionStatus, ConditionVerdict};
use wittflag_core::degrees::{self, WittPresentation};
use wittflag_core::tables::{self, Agreement};
use wittflag_core::weyl::{self, DEFAULT_BUDGET};
use wittflag_core::{shared_root_datum, Error, RootDatum, SimpleType, SubsetMask};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "wittflag", version, about = "Witt rings of complex flag varieties G/L_H")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest conjugacy class the involution search may enumerate.
    #[arg(long, global = true, env = "WITTFLAG_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "WITTFLAG_THREADS", default_value_t = 0)]
    threads: usize,
    /// Monomial degree up to which free generation is checked.
    #[arg(long, global = true, env = "WITTFLAG_DEGREE_CAP", default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    /// Largest number of term pairs in one character product.
    #[arg(long, global = true, env = "WITTFLAG_PRODUCT_CAP", default_value_t = DEFAULT_PRODUCT_CAP)]
    product_cap: usize,
    /// Refuse types of larger rank.
    #[arg(long, global = true, env = "WITTFLAG_MAX_RANK", default_value_t = 8)]
    max_rank: usize,
    /// Report wall-clock time (text output, or an extra JSON field).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List subsets of the Dynkin diagram up to Weyl equivalence.
    Classify {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Conditions and Witt-ring presentation for one flag variety.
    Witt {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Nodes of H, as `2,3,4` or as a diagram like `o***`.
        #[arg(value_name = "SUBSET", allow_hyphen_values = true)]
        subset: String,
    },
    /// Regenerate a reference table.
    Table {
        #[arg(value_parser = tables::TABLE_NAMES)]
        name: String,
        /// Compare against the golden file instead of printing.
        #[arg(long)]
        check: bool,
        /// Directory holding the golden files.
        #[arg(long, env = "WITTFLAG_TABLES", default_value = "tables")]
        golden_dir: PathBuf,
    },
    /// The involution w_o^H and its conjugates.
    Involution {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(value_name = "SUBSET", allow_hyphen_values = true)]
        subset: String,
    },
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Theorem(String),
    Budget(String),
    CheckFailed(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        match e {
            Error::TypeParse(_)
            | Error::SubsetParse(_)
            | Error::InvalidType { .. }
            | Error::NodeOutOfRange { .. }
            | Error::TableParse(..) => Failure::Parse(msg),
            Error::TheoremViolation(_) => Failure::Theorem(msg),
            Error::BudgetExceeded(_) => Failure::Budget(format!("{msg}; raise it with --budget or WITTFLAG_BUDGET")),
            _ => Failure::Other(msg),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Other(_) | Failure::CheckFailed(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Theorem(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Theorem(m) | Failure::Budget(m) | Failure::CheckFailed(m) | Failure::Other(m) => m,
        }
    }
}

// A closed pipe (`| head`) is not an error worth a panic.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

type Outcome = Result<(serde_json::Value, String), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed = start.elapsed();
    match outcome {
        Ok((mut value, text)) => {
            if cli.json {
                if cli.timing {
                    value["elapsed_ms"] = json!(elapsed.as_millis() as u64);
                }
                emit(&(serde_json::to_string_pretty(&value).expect("serializable report") + "\n"));
            } else {
                emit(&text);
                if cli.timing {
                    emit(&format!("elapsed: {:.3} s\n", elapsed.as_secs_f64()));
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if cli.json {
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "error": { "code": f.code(), "message": f.message() },
                });
                emit(&(serde_json::to_string_pretty(&v).expect("serializable error") + "\n"));
            }
            eprintln!("wittflag: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { ty } => classify(cli, ty),
        Command::Witt { ty, subset } => witt(cli, ty, subset),
        Command::Table { name, check, golden_dir } => table(name, *check, golden_dir),
        Command::Involution { ty, subset } => involution(cli, ty, subset),
    }
}

fn load(cli: &Cli, ty: &str) -> Result<std::sync::Arc<RootDatum>, Failure> {
    let ty: SimpleType = ty.parse()?;
    if ty.rank > cli.max_rank {
        return Err(Failure::Parse(format!("rank {} exceeds the configured maximum {}", ty.rank, cli.max_rank)));
    }
    Ok(shared_root_datum(ty)?)
}

fn report(command: &str, query: serde_json::Value, result: impl Serialize) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "query": query,
        "result": result,
    })
}

fn classify(cli: &Cli, ty: &str) -> Outcome {
    let datum = load(cli, ty)?;
    let n = datum.rank();
    let reps = weyl::subsets_up_to_equivalence(&datum);
    let rows: Vec<serde_json::Value> = reps
        .iter()
        .map(|h| {
            json!({
                "subset": h,
                "diagram": h.diagram(n),
                "class_size": weyl::equivalence_class(&datum, *h).len(),
                "connected": h.is_connected(&datum),
            })
        })
        .collect();
    let mut text = format!("{} has {} classes of subsets\n", datum.simple_type(), reps.len());
    for h in &reps {
        text += &format!("  {}  {:<16} class size {}\n", h.diagram(n), h.to_string(), weyl::equivalence_class(&datum, *h).len());
    }
    let query = json!({ "type": datum.simple_type().to_string() });
    Ok((report("classify", query, json!({ "classes": rows, "count": reps.len() })), text))
}

#[derive(Serialize)]
struct FreeGeneration {
    degree_cap: usize,
    checked: Option<bool>,
    skipped: Option<String>,
}

fn witt(cli: &Cli, ty: &str, subset: &str) -> Outcome {
    let datum = load(cli, ty)?;
    let n = datum.rank();
    let h = SubsetMask::parse(subset, n)?;
    let verdict: ConditionVerdict = conditions::classify_condition(&datum, h);
    let presentation: WittPresentation = degrees::witt_presentation(&datum, h, cli.budget)?;

    let free = match (verdict.status, verdict.parameter_i) {
        (ConditionStatus::Neither, _) | (_, None) => {
            FreeGeneration { degree_cap: cli.degree_cap, checked: None, skipped: Some("no orbit-basis parameter".into()) }
        }
        (_, Some(i)) => match character::verify_free_generation(&datum, h, i, cli.degree_cap, cli.product_cap) {
            Ok(ok) => FreeGeneration { degree_cap: cli.degree_cap, checked: Some(ok), skipped: None },
            Err(e @ Error::ProductTooLarge(_)) => {
                FreeGeneration { degree_cap: cli.degree_cap, checked: None, skipped: Some(e.to_string()) }
            }
            Err(e) => return Err(e.into()),
        },
    };

    let mut text = format!("{} with H = {} {}\n", datum.simple_type(), h, h.diagram(n));
    text += &format!("condition: {:?}", verdict.status);
    if let Some(i) = verdict.parameter_i {
        text += &format!(" (I = {i})");
    }
    text += "\n";
    if verdict.orbit_basis_parameters.len() > 1 {
        let all: Vec<String> = verdict.orbit_basis_parameters.iter().map(ToString::to_string).collect();
        text += &format!("orbit-basis parameters: {}\n", all.join(" "));
    }
    if let Some(w) = &verdict.translating_w {
        if let Some(word) = w.word_nodes() {
            text += &format!("translating w: s{:?}\n", word);
        }
    }
    text += &format!(
        "fixed monoid: {} generators, {}\n",
        verdict.monoid.hilbert_basis.len(),
        if verdict.monoid.is_free { "free" } else { "not free" }
    );
    for b in &verdict.monoid.hilbert_basis {
        text += &format!("  {}\n", b.pretty());
    }
    text += &format!("witt ring: {:?}", presentation.status);
    if let Some(g) = presentation.generator_count {
        text += &format!(", {g} generator{}", if g == 1 { "" } else { "s" });
    }
    if let (Some(d1), Some(d3)) = (presentation.degree1_count, presentation.degree3_count) {
        text += &format!(" ({d1} of degree 1, {d3} of degree 3)");
    }
    if let Some(p) = presentation.provenance {
        text += &format!(" [{p:?}]");
    }
    text += "\n";
    if let Some(i) = presentation.parameter_i.filter(|_| presentation.degree1_count.is_some()) {
        text += &format!("degree subset I = {i} {}\n", i.diagram(n));
    }
    if let Some(note) = &presentation.note {
        text += &format!("note: {note}\n");
    }
    match (free.checked, &free.skipped) {
        (Some(ok), _) => text += &format!("free generation up to degree {}: {ok}\n", free.degree_cap),
        (None, Some(why)) if verdict.status != ConditionStatus::Neither => {
            text += &format!("free generation not checked: {why}\n")
        }
        _ => {}
    }

    let query = json!({
        "type": datum.simple_type().to_string(),
        "subset": h,
        "diagram": h.diagram(n),
    });
    let result = json!({
        "verdict": verdict,
        "presentation": presentation,
        "free_generation": free,
    });
    Ok((report("witt", query, result), text))
}

fn read_golden(dir: &std::path::Path, name: &str) -> Result<String, Failure> {
    let path = dir.join(format!("{name}.tsv"));
    std::fs::read_to_string(&path).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))
}

fn table(name: &str, check: bool, dir: &std::path::Path) -> Outcome {
    let query = json!({ "table": name, "check": check });
    let (value, text, mismatches) = match name {
        "results-connected" => {
            let rows = tables::results_connected()?;
            if check {
                let golden = tables::parse_results(&read_golden(dir, name)?)?;
                let cmp = tables::compare_results(&golden, &rows)?;
                let mut text = String::new();
                let mut bad = 0;
                for c in &cmp {
                    let label = match c.agreement {
                        Agreement::Match => continue,
                        Agreement::Stronger => "stronger",
                        Agreement::Unlisted => "unlisted",
                        Agreement::Mismatch => {
                            bad += 1;
                            "MISMATCH"
                        }
                    };
                    text += &format!(
                        "{label}\t{}\t{}\treference {}\tcomputed {}\n",
                        c.simple_type,
                        c.subset.diagram(c.simple_type.rank),
                        c.reference.map_or("-".to_string(), |m| m.to_string()),
                        c.computed
                    );
                }
                let matched = cmp.iter().filter(|c| c.agreement == Agreement::Match).count();
                text += &format!("{matched} rows match, {bad} mismatches\n");
                (json!({ "comparison": cmp, "mismatches": bad }), text, bad)
            } else {
                let text = tables::format_results(&rows);
                (json!({ "rows": rows }), text, 0)
            }
        }
        "types" => {
            let rows = tables::types_table()?;
            if check {
                let golden = tables::parse_types(&read_golden(dir, name)?)?;
                let mut text = String::new();
                let mut bad = 0;
                for g in &golden {
                    match rows.iter().find(|r| r.simple_type == g.simple_type) {
                        Some(r) if r.marks == g.marks => {}
                        r => {
                            bad += 1;
                            text += &format!(
                                "MISMATCH\t{}\treference {}\tcomputed {}\n",
                                g.simple_type,
                                g.marks,
                                r.map_or("-", |r| r.marks.as_str())
                            );
                        }
                    }
                }
                text += &format!("{} rows, {bad} mismatches\n", golden.len());
                (json!({ "mismatches": bad, "rows": golden.len() }), text, bad)
            } else {
                (json!({ "rows": rows }), tables::format_types(&rows), 0)
            }
        }
        "f4-cone" => {
            let rows = tables::f4_cone()?;
            if check {
                let golden = tables::parse_f4_cone(&read_golden(dir, name)?)?;
                f4_check(&golden, &rows, |r| r.subset)?
            } else {
                (json!({ "rows": rows }), tables::format_f4_cone(&rows), 0)
            }
        }
        "f4-orbits" => {
            let rows = tables::f4_orbits()?;
            if check {
                let golden = tables::parse_f4_orbits(&read_golden(dir, name)?)?;
                f4_check(&golden, &rows, |r| r.subset)?
            } else {
                (json!({ "rows": rows }), tables::format_f4_orbits(&rows), 0)
            }
        }
        _ => unreachable!("clap restricts table names"),
    };
    if mismatches > 0 {
        emit(&text);
        return Err(Failure::CheckFailed(format!("{name}: {mismatches} rows differ from the golden file")));
    }
    Ok((report("table", query, value), text))
}

fn f4_check<T: PartialEq + std::fmt::Debug>(
    golden: &[T],
    rows: &[T],
    subset: impl Fn(&T) -> SubsetMask,
) -> Result<(serde_json::Value, String, usize), Failure> {
    let mut text = String::new();
    let mut bad = 0;
    for (g, c) in tables::pair_f4_rows(golden, rows, &subset)? {
        if c != Some(g) {
            bad += 1;
            text += &format!("MISMATCH\t{}\treference {g:?}\tcomputed {c:?}\n", subset(g).diagram(4));
        }
    }
    text += &format!("{} rows, {bad} mismatches\n", golden.len());
    Ok((json!({ "mismatches": bad, "rows": golden.len() }), text, bad))
}

fn involution(cli: &Cli, ty: &str, subset: &str) -> Outcome {
    let datum = load(cli, ty)?;
    let n = datum.rank();
    let h = SubsetMask::parse(subset, n)?;
    let s = degrees::involution_summary(&datum, h, cli.budget)?;
    let mut text = format!("{} with H = {} {}\n", datum.simple_type(), h, h.diagram(n));
    text += &format!("w_o^H: l+ = {}, l- = {}, conjugacy class of size {}\n", s.ell_plus, s.ell_minus, s.class_size);
    let parabolic: Vec<String> = s.parabolic_conjugates.iter().map(|k| k.diagram(n)).collect();
    text += &format!("conjugate to w_o^K for K in: {}\n", parabolic.join(" "));
    if s.degree_subsets.is_empty() {
        text += "no I with w_o^H ~ w_o w_o^I satisfying (i) and (ii)\n";
    }
    for (i, w) in &s.degree_subsets {
        text += &format!("I = {} {}: w_o^H ~ w_o w_o^I", i, i.diagram(n));
        if let Some(word) = w.word_nodes() {
            text += &format!(" via w = s{word:?}");
        }
        text += "\n";
    }
    let query = json!({
        "type": datum.simple_type().to_string(),
        "subset": h,
        "diagram": h.diagram(n),
    });
    Ok((report("involution", query, &s), text))
}
