//! Command-line interface. [`run`] is the whole program; the binary only
//! forwards its arguments and exit code.
//!
//! Exit codes: 0 on success, 1 on parse or usage errors, 2 when an input
//! fails a precondition (not a planar flag complex, standing assumptions,
//! hypotheses of the requested computation).

use crate::bisim::{bisimilar, minimal_quotient, TwoColoredGraph};
use crate::classify::{boundary_features, full_report_with, render_text, ReportOptions};
use crate::decomp::visual_decomposition_tree;
use crate::graph::SimplicialGraph;
use crate::io::{
    colored_summary, colored_to_dot, parse_colored, parse_document, tree_to_dot, tree_to_json, Format, ParseError,
};
use crate::planar::flag_planar_complex;
use crate::relhyp::{minimal_peripheral_structure, planar_peripheral_structure, PeripheralCollection};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "racg", version, about = "Classify right-angled Coxeter groups with planar nerves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full classification report for each input (files or directories).
    Classify {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// Also write the visual decomposition tree as DOT to this path.
        #[arg(long, value_name = "PATH")]
        emit_tree: Option<PathBuf>,
        /// Enumerate all embeddings (graphs up to 14 vertices) and report
        /// whether the verdicts depend on the embedding.
        #[arg(long)]
        embedding_check: bool,
        /// Worker threads for batch classification.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// The two-colored visual decomposition tree (DOT, or JSON with --json).
    Tree {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Also write the tree as DOT to this path.
        #[arg(long, value_name = "PATH")]
        emit_tree: Option<PathBuf>,
    },
    /// Decide bisimilarity of two trees (tree JSON, or graphs whose trees are computed).
    Bisim {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// The minimal peripheral structure.
    Peripheral {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Boundary features.
    Features {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

/// A failure with its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(path: &Path, e: ParseError) -> Self {
        Failure { code: 1, message: format!("{}:{}:{}: parse error: expected {}", path.display(), e.line, e.column, e.expected) }
    }

    fn precondition(path: &Path, what: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: format!("{}: {what}", path.display()) }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure { code: 1, message: format!("{}: {e}", path.display()) }
    }
}

/// Runs the program with `args` (including the program name) and returns
/// the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = match cli.command {
        Command::Classify { inputs, common, emit_tree, embedding_check, jobs } => {
            classify(&inputs, &common, emit_tree.as_deref(), embedding_check, jobs, out, err)
        }
        Command::Tree { input, common, emit_tree } => tree(&input, &common, emit_tree.as_deref(), out),
        Command::Bisim { a, b, common } => bisim(&a, &b, &common, out),
        Command::Peripheral { input, common } => peripheral(&input, &common, out),
        Command::Features { input, common } => features(&input, &common, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn read_graph(path: &Path, common: &Common) -> Result<(Option<String>, SimplicialGraph), Failure> {
    let text = std::fs::read(path).map_err(|e| Failure::io(path, e))?;
    let format = common.format.unwrap_or_else(|| Format::from_path(path));
    let text = std::str::from_utf8(&text).map_err(|_| Failure::parse(path, ParseError {
        line: 1,
        column: 1,
        expected: "UTF-8 text".into(),
    }))?;
    let doc = parse_document(text, format).map_err(|e| Failure::parse(path, e))?;
    let g = doc.to_graph().map_err(|e| Failure::parse(path, e))?;
    Ok((doc.name, g))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::io(path, e))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

/// Files named directly, plus the regular files directly inside named
/// directories, sorted.
fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)
                .map_err(|e| Failure::io(p, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file())
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

struct Classified {
    code: i32,
    stdout: String,
    stderr: String,
}

fn classify_one(path: &Path, common: &Common, emit_tree: Option<&Path>, embedding_check: bool) -> Classified {
    let fail = |f: Failure| Classified { code: f.code, stdout: String::new(), stderr: f.message + "\n" };
    let (name, g) = match read_graph(path, common) {
        Ok(x) => x,
        Err(f) => return fail(f),
    };
    let delta = match flag_planar_complex(&g) {
        Ok(d) => d,
        Err(e) => return fail(Failure::precondition(path, format!("not a planar flag complex: {e}"))),
    };
    let opts = ReportOptions { name: name.or_else(|| Some(path.display().to_string())), embedding_check };
    let report = full_report_with(&delta, &opts);
    let mut stderr = String::new();
    let mut code = 0;
    if let Some(reason) = &report.standing.reason {
        code = 2;
        stderr = format!(
            "{}: StandingAssumptionsViolated: clause ({}) {reason}\n",
            path.display(),
            report.standing.clause.unwrap_or(0)
        );
    }
    if let Some(p) = emit_tree {
        match visual_decomposition_tree(&delta) {
            Ok(t) => {
                if let Err(f) = write_file(p, &tree_to_dot(&t)) {
                    return fail(f);
                }
            }
            Err(e) => stderr.push_str(&format!("{}: no tree emitted: {e}\n", path.display())),
        }
    }
    let stdout = if common.json { to_json(&report) + "\n" } else { render_text(&report) };
    Classified { code, stdout, stderr }
}

fn classify(
    inputs: &[PathBuf],
    common: &Common,
    emit_tree: Option<&Path>,
    embedding_check: bool,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let files = expand_inputs(inputs)?;
    if emit_tree.is_some() && files.len() > 1 {
        return Err(Failure { code: 1, message: "--emit-tree needs a single input".into() });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure { code: 1, message: format!("cannot start worker threads: {e}") })?;
    let results: Vec<Classified> =
        pool.install(|| files.par_iter().map(|f| classify_one(f, common, emit_tree, embedding_check)).collect());
    let batch = files.len() > 1;
    if batch && common.json {
        let reports: Vec<serde_json::Value> = results
            .iter()
            .filter(|r| !r.stdout.is_empty())
            .map(|r| serde_json::from_str(&r.stdout).expect("report is JSON"))
            .collect();
        let _ = writeln!(out, "{}", to_json(&reports));
    }
    for (f, r) in files.iter().zip(&results) {
        if !(batch && common.json) {
            if batch {
                let _ = writeln!(out, "== {} ==", f.display());
            }
            let _ = write!(out, "{}", r.stdout);
        }
        let _ = write!(err, "{}", r.stderr);
    }
    let codes: Vec<i32> = results.iter().map(|r| r.code).collect();
    Ok(if codes.contains(&1) {
        1
    } else if codes.contains(&2) {
        2
    } else {
        0
    })
}

fn tree(input: &Path, common: &Common, emit_tree: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let (_, g) = read_graph(input, common)?;
    let delta = flag_planar_complex(&g).map_err(|e| Failure::precondition(input, format!("not a planar flag complex: {e}")))?;
    let t = visual_decomposition_tree(&delta).map_err(|e| Failure::precondition(input, e))?;
    if let Some(p) = emit_tree {
        write_file(p, &tree_to_dot(&t))?;
    }
    let text = if common.json { tree_to_json(&t) + "\n" } else { tree_to_dot(&t) };
    let _ = write!(out, "{text}");
    Ok(0)
}

/// A tree JSON (with `nodes`) is read directly; anything else is read as a
/// graph whose visual decomposition tree is computed.
fn read_colored(path: &Path, common: &Common) -> Result<TwoColoredGraph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::io(path, e))?;
    let text = String::from_utf8_lossy(&bytes);
    let format = common.format.unwrap_or_else(|| Format::from_path(path));
    let is_tree = format == Format::Json
        && serde_json::from_str::<serde_json::Value>(&text).map(|v| v.get("nodes").is_some()).unwrap_or(false);
    if is_tree {
        return parse_colored(&text).map_err(|e| Failure::parse(path, e));
    }
    let (_, g) = read_graph(path, common)?;
    let delta = flag_planar_complex(&g).map_err(|e| Failure::precondition(path, format!("not a planar flag complex: {e}")))?;
    let t = visual_decomposition_tree(&delta).map_err(|e| Failure::precondition(path, e))?;
    Ok(TwoColoredGraph::from_tree(&t))
}

fn bisim(a: &Path, b: &Path, common: &Common, out: &mut dyn Write) -> Result<i32, Failure> {
    let ga = read_colored(a, common)?;
    let gb = read_colored(b, common)?;
    let verdict = bisimilar(&ga, &gb);
    let (qa, qb) = (minimal_quotient(&ga), minimal_quotient(&gb));
    if common.json {
        #[derive(Serialize)]
        struct Out {
            bisimilar: bool,
            quotients: [crate::io::ColoredGraphOut; 2],
        }
        let o = Out { bisimilar: verdict, quotients: [colored_summary(&qa), colored_summary(&qb)] };
        let _ = writeln!(out, "{}", to_json(&o));
    } else {
        let _ = writeln!(out, "{}", if verdict { "bisimilar" } else { "not bisimilar" });
        let _ = write!(out, "{}", colored_to_dot(&qa, "quotient_a"));
        let _ = write!(out, "{}", colored_to_dot(&qb, "quotient_b"));
    }
    Ok(0)
}

/// The planar construction when the graph is a planar flag complex, and
/// the closure otherwise.
fn structure_for(path: &Path, g: &SimplicialGraph) -> Result<(Option<PeripheralCollection>, &'static str), Failure> {
    match flag_planar_complex(g) {
        Ok(d) => planar_peripheral_structure(&d).map(|s| (s, "planar")).map_err(|e| Failure::precondition(path, e)),
        Err(_) => minimal_peripheral_structure(g).map(|s| (s, "closure")).map_err(|e| Failure::precondition(path, e)),
    }
}

fn peripheral(input: &Path, common: &Common, out: &mut dyn Write) -> Result<i32, Failure> {
    let (_, g) = read_graph(input, common)?;
    let (s, method) = structure_for(input, &g)?;
    if common.json {
        #[derive(Serialize)]
        struct Member {
            vertices: Vec<String>,
            tag: crate::relhyp::MemberTag,
        }
        #[derive(Serialize)]
        struct Out {
            method: &'static str,
            thick: bool,
            members: Vec<Member>,
        }
        let members = s
            .as_ref()
            .map(|c| c.members.iter().zip(&c.tags).map(|(m, t)| Member { vertices: g.labels_of(m), tag: *t }).collect())
            .unwrap_or_default();
        let _ = writeln!(out, "{}", to_json(&Out { method, thick: s.is_none(), members }));
    } else {
        match &s {
            None => {
                let _ = writeln!(out, "thick: no proper peripheral structure");
            }
            Some(c) if c.is_empty() => {
                let _ = writeln!(out, "hyperbolic: empty peripheral structure");
            }
            Some(c) => {
                for (m, t) in c.members.iter().zip(&c.tags) {
                    let _ = writeln!(out, "{{{}}} {}", g.labels_of(m).join(","), format!("{t:?}").to_lowercase());
                }
            }
        }
    }
    Ok(0)
}

fn features(input: &Path, common: &Common, out: &mut dyn Write) -> Result<i32, Failure> {
    let (_, g) = read_graph(input, common)?;
    let delta = flag_planar_complex(&g).map_err(|e| Failure::precondition(input, format!("not a planar flag complex: {e}")))?;
    let (s, _) = structure_for(input, &g)?;
    let standing = crate::classify::check_standing_assumptions(&delta).is_ok();
    let f = boundary_features(&delta, s.as_ref(), standing);
    if common.json {
        let _ = writeln!(out, "{}", to_json(&f));
    } else {
        let v = serde_json::to_value(&f).expect("features serialize");
        for (k, val) in v.as_object().expect("object") {
            let _ = writeln!(out, "{k}: {val}");
        }
    }
    Ok(0)
}
