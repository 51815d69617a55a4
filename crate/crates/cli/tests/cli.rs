use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetraposet"))
        .args(args)
        .env_remove("TETRAPOSET_NMAX")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

const SAMPLE_ASM: &str = "[[0,1,0,0],[1,-1,0,1],[0,0,1,0],[0,1,0,0]]";

#[test]
fn count_examples() {
    assert_eq!(
        stdout(&["count", "--n", "3", "--colors", "byog"]).trim(),
        "7"
    );
    assert_eq!(
        stdout(&["count", "--n", "4", "--colors", "rgy"]).trim(),
        "96"
    );
    assert_eq!(stdout(&["count", "--n", "1", "--colors", ""]).trim(), "1");
    assert_eq!(stdout(&["count", "--n", "6"]).trim(), "352");
}

#[test]
fn count_with_q_is_exact_json() {
    let v = json(&["count", "--n", "4", "--colors", "bg", "--pyramid", "--q"]);
    assert_eq!(v["count"], 14);
    assert_eq!(v["rank_gf"], serde_json::json!([1, 3, 3, 3, 2, 1, 1]));
    assert!(v.get("wall_time_ms").is_none());
    let timed = json(&["count", "--n", "3", "--timing"]);
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn non_admissible_sets_count_but_have_no_formula() {
    assert_eq!(
        stdout(&["count", "--n", "4", "--colors", "rbs"]).trim(),
        "42"
    );
    let out = run(&["rankgf", "--n", "4", "--colors", "rbs", "--formula"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        run(&["formulas", "--n", "4", "--colors", "rbs"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["count", "--colors", "bg"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--n", "3", "--colors", "xyz"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["count", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--n", "3", "--trapezoid", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumeration_is_deterministic_and_complete() {
    let a = stdout(&[
        "enumerate",
        "--n",
        "4",
        "--colors",
        "bgoy",
        "--format",
        "json",
    ]);
    let b = stdout(&[
        "enumerate",
        "--n",
        "4",
        "--colors",
        "bgoy",
        "--format",
        "json",
    ]);
    assert_eq!(a, b);
    let lines: Vec<Value> = a
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 42);
    let mut tally = [0u64; 11];
    for l in &lines {
        tally[l["size"].as_u64().unwrap() as usize] += 1;
    }
    let gf = json(&["rankgf", "--n", "4", "--colors", "bgoy"]);
    let want: Vec<u64> = gf["rank_gf"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    assert_eq!(tally[..want.len()], want[..]);
    let arrays = stdout(&[
        "enumerate",
        "--n",
        "3",
        "--colors",
        "bgoy",
        "--emit",
        "arrays",
    ]);
    assert_eq!(arrays.lines().count(), 7);
}

#[test]
fn rankgf_formula_certificates() {
    for colors in ["", "r", "go", "bg", "ry", "gyo"] {
        let v = json(&["rankgf", "--n", "4", "--colors", colors, "--formula"]);
        assert_eq!(v["pass"], true, "{colors}");
        assert_eq!(v["computed"], v["expected"]);
    }
    assert_eq!(
        json(&["rankgf", "--n", "4", "--colors", "ry", "--formula"])["dual"],
        true
    );
}

#[test]
fn formulas_table() {
    let v = json(&["formulas", "--n", "6"]);
    let sets = v["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 40);
    let rgy = sets.iter().find(|s| s["colors"] == "rgy").unwrap();
    assert_eq!(rgy["count"], Value::Null);
    assert_eq!(rgy["known_count"], 161422);
    let asm = sets.iter().find(|s| s["colors"] == "bgoy").unwrap();
    assert_eq!(asm["count"], 7436);
}

#[test]
fn verify_suites_pass() {
    let v = json(&["verify", "--suite", "formulas", "--n-max", "5"]);
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_u64().unwrap() >= 40);
    for (suite, n) in [("expansions", "4"), ("trapezoid", "5"), ("bijections", "4")] {
        let out = run(&["verify", "--suite", suite, "--n-max", n]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
    let c = json(&["verify", "--suite", "trapezoid", "--n-max", "5"]);
    assert_eq!(c["checks"], 15);
    let first = &c["results"][0];
    assert!(first.get("computed").is_some() && first.get("expected").is_some());
}

#[test]
fn nmax_environment_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_tetraposet"))
        .args([
            "verify",
            "--suite",
            "trapezoid",
            "--n-max",
            "5",
            "--format",
            "json",
        ])
        .env("TETRAPOSET_NMAX", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n_max"], 2);
    assert_eq!(v["checks"], 3);
}

#[test]
fn biject_asm_routes() {
    let tri = stdout(&[
        "biject", "--from", "asm", "--to", "monotone", "--input", SAMPLE_ASM,
    ]);
    assert_eq!(tri.trim(), "[[2],[1,4],[1,3,4],[1,2,3,4]]");
    let y: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "triangle",
        "--to",
        "yplus",
        "--input",
        tri.trim(),
    ]))
    .unwrap();
    assert_eq!(
        y["rows"],
        serde_json::json!([[1, 1, 1, 2], [2, 3, 4], [3, 4], [4]])
    );
    let back = stdout(&[
        "biject",
        "--from",
        "yplus",
        "--to",
        "asm",
        "--input",
        &y.to_string(),
    ]);
    assert_eq!(back.trim(), SAMPLE_ASM);
}

#[test]
fn biject_tournament_and_tableau() {
    let v: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "tournament",
        "--to",
        "yplus",
        "--n",
        "4",
        "--input",
        "[]",
    ]))
    .unwrap();
    assert_eq!(
        v["rows"],
        serde_json::json!([[1, 1, 1, 1], [2, 2, 2], [3, 3], [4]])
    );
    let t: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "yplus",
        "--to",
        "tournament",
        "--input",
        "[[1,2,1],[2,2],[3]]",
    ]))
    .unwrap();
    assert_eq!(t["upsets"], serde_json::json!([[1, 2]]));
    let tt: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "ssyt",
        "--to",
        "tournament-tableau",
        "--input",
        "[[1,2,4],[3,3],[4]]",
    ]))
    .unwrap();
    assert_eq!(
        tt["upsets"],
        serde_json::json!([[1, 3], [1, 4], [2, 3], [3, 4]])
    );
}

#[test]
fn biject_dyck_and_tspp_round_trips() {
    let ideal: Value = serde_json::from_str(&stdout(&[
        "biject", "--from", "dyck", "--to", "ideal", "--input", "UUUDDUDD",
    ]))
    .unwrap();
    assert_eq!(ideal["size"], 4);
    let path = stdout(&[
        "biject",
        "--from",
        "ideal",
        "--to",
        "dyck",
        "--input",
        &ideal.to_string(),
    ]);
    assert_eq!(path.trim(), "UUUDDUDD");
    let ideal: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "tspp",
        "--to",
        "ideal",
        "--input",
        "[[2,1],[1,0]]",
    ]))
    .unwrap();
    assert_eq!(ideal["size"], 2);
    let pp: Value = serde_json::from_str(&stdout(&[
        "biject",
        "--from",
        "ideal",
        "--to",
        "tspp",
        "--input",
        &ideal.to_string(),
    ]))
    .unwrap();
    assert_eq!(pp["heights"], serde_json::json!([[2, 1], [1, 0]]));
}

#[test]
fn biject_refusals() {
    let out = run(&[
        "biject", "--from", "asm", "--to", "tsscpp", "--input", SAMPLE_ASM,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("open problem"));
    assert_eq!(
        run(&["biject", "--from", "dyck", "--to", "asm", "--input", "UD"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "biject",
            "--from",
            "asm",
            "--to",
            "monotone",
            "--input",
            "[[1,1],[0,0]]"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["biject", "--from", "asm", "--to", "monotone", "--input", "not json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("tetraposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.csv");
    let out = run(&[
        "count",
        "--n",
        "3",
        "--colors",
        "bgoy",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "n,colors,kind,trapezoid,dual,count\n3,bgoy,tetra,,false,7\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}
