use std::path::PathBuf;
use std::process::{Command, Output};

use uwm_core::blocks::block_w7;
use uwm_core::compose::count_decompositions;
use uwm_core::format::serialize_matrix;

fn uwm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uwm"))
        .args(args)
        .env_remove("UWM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

/// Compares against `tests/golden/<name>`; set `UWM_BLESS=1` to rewrite.
fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UWM_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {name}"));
    assert_eq!(actual, expected, "golden {name}");
}

#[test]
fn exists_exit_codes() {
    let o = uwm(&["exists", "5", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not_exists");
    assert_eq!(uwm(&["exists", "8", "3"]).status.code(), Some(0));
    assert_eq!(uwm(&["exists", "5", "4", "--real"]).status.code(), Some(1));
    assert_eq!(uwm(&["exists", "9", "6"]).status.code(), Some(4));
    golden(
        "exists_7_5.json",
        &stdout(&uwm(&["--json", "exists", "7", "5"])),
    );
}

#[test]
fn verify_w7_file() {
    let path = scratch("w7.txt", &serialize_matrix(&block_w7()));
    let o = uwm(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    golden(
        "verify_w7.json",
        &stdout(&uwm(&["--json", "verify", path.to_str().unwrap()])),
    );
}

#[test]
fn verify_rejects() {
    let bad = scratch("bad.txt", "uwm n=2 w=2 L=4 vars=0\nz0 z0\nz0 z1\n");
    let o = uwm(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail: rows 1 and 2"));

    let syntax = scratch("syntax.txt", "uwm n=2 w=2 L=4 vars=0\nz0 q1\nz0 z2\n");
    let o = uwm(&["verify", syntax.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 4"));

    let counts = scratch("counts.txt", "uwm n=2 w=2 L=4 vars=0\nz0 0\nz0 z2\n");
    assert_eq!(
        uwm(&["verify", counts.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(uwm(&["verify", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn count_table_output() {
    let o = uwm(&["count", "--weight", "4", "--max-n", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 100);
    for (i, line) in lines.iter().enumerate() {
        let expected = count_decompositions(i + 1, 4, false).unwrap();
        assert_eq!(*line, format!("{}\t{}", i + 1, expected));
    }
    assert_eq!(lines[99], "100\t502179");
    golden(
        "count_w4_n8.json",
        &stdout(&uwm(&["--json", "count", "--weight", "4", "--max-n", "8"])),
    );
}

#[test]
fn block_and_compose() {
    golden("block_b2.txt", &stdout(&uwm(&["block", "B2"])));
    golden(
        "block_e4_var.json",
        &stdout(&uwm(&["--json", "block", "E2m", "--m", "2", "--x", "var"])),
    );
    let o = uwm(&["compose", "--weight", "4", "--parts", "5*,4", "--x", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("c9.txt", &stdout(&o));
    assert_eq!(
        uwm(&["verify", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert_eq!(
        uwm(&["block", "E2m", "--m", "1", "--x", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        uwm(&["compose", "--weight", "4", "--parts", "5*", "--real"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn standardize_output() {
    let scrambled = block_w7().random_equivalence_scramble(11);
    let path = scratch("scrambled.txt", &serialize_matrix(&scrambled));
    let o = uwm(&["standardize", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let direct = scrambled.standardize().unwrap();
    assert_eq!(stdout(&o), serialize_matrix(&direct));
    let c = uwm(&["standardize", "--canonical", path.to_str().unwrap()]);
    let d = uwm(&["standardize", "--canonical", "-"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(d.status.code(), Some(2), "empty stdin is a parse error");
    let sym = scratch(
        "sym.txt",
        &stdout(&uwm(&["block", "E2m", "--m", "2", "--x", "var"])),
    );
    assert_eq!(
        uwm(&["standardize", sym.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn search_results_and_budget() {
    let o = uwm(&["search", "--n", "5", "--w", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 classes"));
    golden(
        "search_5_4.json",
        &stdout(&uwm(&[
            "--json",
            "search",
            "--n",
            "5",
            "--w",
            "4",
            "--parallel",
        ])),
    );
    assert_eq!(
        uwm(&["search", "--n", "3", "--w", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        uwm(&["search", "--n", "7", "--w", "5", "--budget", "50"])
            .status
            .code(),
        Some(3)
    );
    let env = Command::new(env!("CARGO_BIN_EXE_uwm"))
        .args(["search", "--n", "7", "--w", "5"])
        .env("UWM_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
    let bad_env = Command::new(env!("CARGO_BIN_EXE_uwm"))
        .args(["search", "--n", "3", "--w", "2"])
        .env("UWM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
    let prefixes = uwm(&["search", "--n", "5", "--w", "4", "--row-limit", "2"]);
    assert_eq!(prefixes.status.code(), Some(0));
    assert!(stdout(&prefixes).contains("admissible prefixes"));
}

#[test]
fn refutation() {
    let o = uwm(&["refute-75"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: UNSAT"));
    assert!(text.contains("assignments checked: 32"));
    golden("refute_75.json", &stdout(&uwm(&["--json", "refute-75"])));
}

#[test]
fn usage_errors() {
    assert_eq!(uwm(&[]).status.code(), Some(2));
    assert_eq!(uwm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(uwm(&["exists", "five", "3"]).status.code(), Some(2));
    assert_eq!(uwm(&["--help"]).status.code(), Some(0));
}
