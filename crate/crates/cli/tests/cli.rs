use std::path::PathBuf;
use std::process::{Command, Output};

fn cache_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("octoplane-cli-test-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

fn run_in(cache: &PathBuf, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoplane"))
        .args(args)
        .env("OCTOPLANE_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_in(&cache_dir("default"), args)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["algebra-check", "--bogus"])), 2);
    assert_eq!(code(&run(&["algebra-check", "--algebra", "H"])), 2);
    assert_eq!(code(&run(&["plane-axioms", "--samples", "0"])), 2);
    assert_eq!(code(&run(&["mult-table", "--format", "csv"])), 2);
    assert_eq!(code(&run(&["lie", "nonsense"])), 2);
}

#[test]
fn algebra_checks_pass() {
    let o = run(&["algebra-check", "--algebra", "O", "--samples", "50", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["zero_divisor"].is_null());

    let o = run(&["algebra-check", "--algebra", "Os", "--samples", "50", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["zero_divisor"].is_array());
}

#[test]
fn json_is_reproducible_without_timestamp() {
    let args = ["plane-axioms", "--algebra", "Os", "--samples", "20", "--seed", "3", "--format", "json", "--no-timestamp"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v.get("timestamp").is_none());
    assert!(v["axiom_failures"]["degenerate_pairs"].as_u64().is_some());
    let with = run(&["plane-axioms", "--samples", "5", "--format", "json"]);
    assert!(json(&with)["timestamp"].is_u64());
}

#[test]
fn octonion_plane_axioms_hold() {
    let o = run(&["plane-axioms", "--algebra", "O", "--samples", "30", "--seed", "0"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn mult_table_lists_signed_units() {
    let o = run(&["mult-table", "--algebra", "Os", "--format", "json", "--no-timestamp"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["mu"], 1);
    assert_eq!(v["table"].as_array().unwrap().len(), 8);
    // 1 * i_k = i_k
    assert_eq!(v["table"][0][5], serde_json::json!([5, 1]));
}

#[test]
fn lie_expectations_set_exit_code() {
    let cache = cache_dir("lie");
    let ok = run_in(&cache, &["lie", "der-alg", "--algebra", "O", "--expect", "g2(-14)", "--expect-dim", "14"]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));
    let bad = run_in(&cache, &["lie", "der-alg", "--algebra", "O", "--expect", "g2(2)"]);
    assert_eq!(code(&bad), 1);
    let bad_dim = run_in(&cache, &["lie", "so", "--algebra", "Os", "--expect-dim", "27"]);
    assert_eq!(code(&bad_dim), 1);
}

#[test]
fn hyperbolic_jordan_derivations() {
    let o = run(&["lie", "der-jordan", "--algebra", "O", "--gamma", "++-", "--expect", "f4(-20)", "--no-cache"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn split_e6_and_stabilizer() {
    let cache = cache_dir("e6");
    let o = run_in(&cache, &["lie", "e6", "--algebra", "Os", "--expect", "e6(6)"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run_in(&cache, &["lie", "stabilizer", "--parent", "f4", "--point", "E11", "--expect-dim", "36"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn cached_report_matches_fresh_one() {
    let cache = cache_dir("roundtrip");
    let args = ["lie", "tri", "--algebra", "Os", "--format", "json", "--no-timestamp"];
    let first = run_in(&cache, &args);
    assert_eq!(code(&first), 0);
    let files: Vec<_> = std::fs::read_dir(&cache).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run_in(&cache, &args);
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert_eq!(v["name"], "so(4,4)");
    assert_eq!(v["dim"], 28);
    assert_eq!(v["closed"], true);
    assert_eq!(v["basis_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn translation_audit_lists_documented_components() {
    let o = run(&["translation-audit", "--algebra", "O", "--samples", "50", "--format", "json", "--no-timestamp"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    for c in v["components"].as_array().unwrap() {
        if c["disagreements"].as_u64().unwrap() > 0 {
            assert_eq!(c["documented"], true);
            assert_eq!(c["evaluations"].as_array().unwrap().len(), 50);
        }
    }
}

#[test]
fn table_csv_marks_unconstructed_cells() {
    let cache = cache_dir("table");
    let o = run_in(&cache, &["table", "--format", "csv"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("space,collineation,isometry,quadrangle_fixing,source"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(text.contains("E6(2) [paper; not constructed]"));
    assert!(text.contains("F4(-20)"));
}
