//! `uwm`: verify, standardize, build, compose, count and search unit weighing
//! matrices.
//!
//! Exit codes: 0 success or true, 1 checked and false, 2 usage or input error,
//! 3 search budget exhausted, 4 existence undecided.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use uwm_core::blocks::{BlockId, XValue};
use uwm_core::compose::{
    compose_from_parts, count_decompositions, exists_uw, exists_w_real, Existence, PartMultiset,
};
use uwm_core::format::{parse_matrix, serialize_matrix};
use uwm_core::matrix::canonical_form_with_budget;
use uwm_core::search::{dfs_classify, uw75_refute, SearchConfig, DEFAULT_NODE_BUDGET};
use uwm_core::{Error, UnitMatrix};

// Writes to stdout, ignoring a closed pipe (`uwm ... | head`).
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(io::stdout(), $($t)*);
    }};
}

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;

#[derive(Parser)]
#[command(
    name = "uwm",
    version,
    about = "Exact tools for unit weighing matrices"
)]
struct Cli {
    /// Structured output on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check W W* = w I exactly.
    Verify {
        /// Matrix file, or `-` for stdin.
        file: PathBuf,
    },
    /// Rewrite a matrix in standard form.
    Standardize {
        file: PathBuf,
        /// Emit the lexicographically least standard form of the class instead.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write one of the named blocks.
    Block {
        /// I1, B2, UW33, UW43, W5, W6, W7, W8, E2m, F5 or UW65.
        label: String,
        #[arg(long)]
        m: Option<usize>,
        /// `x = ζ_12^K`, or `var` for the formal variable.
        #[arg(long)]
        x: Option<XValue>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Direct sum of blocks named by a decomposition such as "5*,4".
    Compose {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        parts: String,
        #[arg(long)]
        x: Option<XValue>,
        #[arg(long)]
        real: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Number of block decompositions for each order up to N.
    Count {
        #[arg(long)]
        weight: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        real: bool,
    },
    /// Whether a UW(n, w) (or, with --real, a real W(n, w)) exists.
    Exists {
        n: usize,
        w: usize,
        #[arg(long)]
        real: bool,
    },
    /// Classify UW(n, w) with entries among the L-th roots of unity.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        #[arg(long = "L", default_value_t = 12)]
        order: u32,
        /// Node budget; defaults to UWM_BUDGET, then 10^9.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        parallel: bool,
        /// Stop after this many rows and count prefixes.
        #[arg(long)]
        row_limit: Option<usize>,
    },
    /// Print the certificate that no UW(7, 5) exists.
    #[command(name = "refute-75")]
    Refute75,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            Error::NotWeighing => EXIT_FALSE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn load(path: &PathBuf) -> Result<UnitMatrix, Failure> {
    Ok(parse_matrix(&read_input(path)?)?)
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("UWM_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("UWM_BUDGET must be a node count, got {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn print_json(value: &impl Serialize) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn write_matrix(
    m: &UnitMatrix,
    output: &Option<PathBuf>,
    json: bool,
    extra: serde_json::Value,
) -> Outcome {
    let text = serialize_matrix(m);
    if let Some(path) = output {
        fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if json {
        let mut v = json!({
            "n": m.n(),
            "w": m.weight(),
            "order": m.order(),
            "vars": m.vars(),
            "matrix": text,
        });
        if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        print_json(&v);
    } else if output.is_none() {
        out!("{text}");
    }
    Ok(0)
}

fn verify(file: &PathBuf, json: bool) -> Outcome {
    let m = load(file)?;
    let violation = m.gram_violation();
    if json {
        print_json(&json!({
            "n": m.n(),
            "w": m.weight(),
            "order": m.order(),
            "vars": m.vars(),
            "weighing": violation.is_none(),
            "violation": violation.as_ref().map(|(i, j, v)| json!({
                "rows": [i + 1, j + 1],
                "value": v.to_string(),
            })),
        }));
    } else {
        match &violation {
            None => outln!("ok: UW({},{}) over L={}", m.n(), m.weight(), m.order()),
            Some((i, j, v)) => outln!(
                "fail: rows {} and {} have inner product {} (expected {})",
                i + 1,
                j + 1,
                v,
                if i == j { m.weight() } else { 0 }
            ),
        }
    }
    Ok(if violation.is_none() { 0 } else { EXIT_FALSE })
}

fn standardize(
    file: &PathBuf,
    canonical: bool,
    budget_flag: Option<u64>,
    output: &Option<PathBuf>,
    json: bool,
) -> Outcome {
    let m = load(file)?;
    if canonical {
        let b = budget(budget_flag)?;
        let c = canonical_form_with_budget(&m, b)?;
        write_matrix(&c, output, json, json!({ "canonical": true }))
    } else {
        let st = m.standardize_with_trace()?;
        let transforms = serde_json::to_value(&st.transforms).expect("serializable");
        write_matrix(
            &st.matrix,
            output,
            json,
            json!({ "canonical": false, "transforms": transforms }),
        )
    }
}

fn exists(n: usize, w: usize, real: bool, json: bool) -> Outcome {
    let answer = if real {
        exists_w_real(n, w)
    } else {
        exists_uw(n, w)
    };
    if json {
        print_json(&json!({ "n": n, "w": w, "real": real, "answer": answer }));
    } else {
        outln!("{answer}");
    }
    Ok(match answer {
        Existence::Exists => 0,
        Existence::NotExists => EXIT_FALSE,
        Existence::Unknown => EXIT_UNKNOWN,
    })
}

fn count(weight: usize, max_n: usize, real: bool, json: bool) -> Outcome {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        rows.push((n, count_decompositions(n, weight, real)?));
    }
    if json {
        let counts: Vec<_> = rows
            .iter()
            .map(|(n, c)| json!({ "n": n, "count": c.to_string() }))
            .collect();
        print_json(&json!({ "weight": weight, "real": real, "counts": counts }));
    } else {
        let mut out = io::stdout().lock();
        for (n, c) in rows {
            let _ = writeln!(out, "{n}\t{c}");
        }
    }
    Ok(0)
}

const ALPHABET_NOTE: &str =
    "note: entries restricted to the L-th roots of unity; results are exact for that alphabet only";

fn search(cfg: SearchConfig, json: bool) -> Outcome {
    let out = dfs_classify(&cfg)?;
    let matrices: Vec<String> = out.matrices.iter().map(serialize_matrix).collect();
    if json {
        let mut v = serde_json::to_value(&out).expect("serializable");
        v["matrices"] = json!(matrices);
        v["classes"] = json!(matrices.len());
        print_json(&v);
    } else {
        outln!("{ALPHABET_NOTE}");
        outln!(
            "UW({},{}) over L={}: {} nodes",
            cfg.n,
            cfg.w,
            cfg.order,
            out.nodes
        );
        if let Some(p) = out.prefixes {
            outln!(
                "{p} admissible prefixes of {} rows",
                cfg.row_limit.unwrap_or(cfg.n)
            );
            return Ok(0);
        }
        outln!(
            "{} classes from {} standard forms{}",
            matrices.len(),
            out.standard_forms,
            if out.exact_classes {
                ""
            } else {
                " (some classes may repeat: canonicalization budget exhausted)"
            }
        );
        for m in &matrices {
            outln!();
            out!("{m}");
        }
    }
    Ok(if out.prefixes.is_some() || !matrices.is_empty() {
        0
    } else {
        EXIT_FALSE
    })
}

fn refute75(json: bool) -> Outcome {
    let cert = uw75_refute();
    let ok = cert.verify();
    if json {
        let mut v = serde_json::to_value(&cert).expect("serializable");
        v["verified"] = json!(ok);
        print_json(&v);
    } else {
        outln!("{cert}");
        outln!("re-verified: {ok}");
    }
    Ok(if ok { 0 } else { EXIT_FALSE })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Verify { file } => verify(&file, json),
        Command::Standardize {
            file,
            canonical,
            budget,
            output,
        } => standardize(&file, canonical, budget, &output, json),
        Command::Block {
            label,
            m,
            x,
            output,
        } => {
            let id = BlockId::new(&label, m, x)?;
            write_matrix(&id.build(), &output, json, json!({ "block": label }))
        }
        Command::Compose {
            weight,
            parts,
            x,
            real,
            output,
        } => {
            let p = PartMultiset::parse(weight, &parts, real)?;
            let m = compose_from_parts(&p, x)?;
            write_matrix(&m, &output, json, json!({ "parts": p.to_string() }))
        }
        Command::Count {
            weight,
            max_n,
            real,
        } => count(weight, max_n, real, json),
        Command::Exists { n, w, real } => exists(n, w, real, json),
        Command::Search {
            n,
            w,
            order,
            budget: b,
            parallel,
            row_limit,
        } => {
            let mut cfg = SearchConfig::new(n, w, order)
                .with_budget(budget(b)?)
                .with_parallel(parallel);
            cfg.row_limit = row_limit;
            search(cfg, json)
        }
        Command::Refute75 => refute75(json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if json {
                print_json(&json!({ "error": f.message, "exit_code": f.code }));
            }
            eprintln!("uwm: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
