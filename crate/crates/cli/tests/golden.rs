//! Compares each subcommand's JSON output with `docs/golden/<name>.json`.
//! Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::{Path, PathBuf};

use serde_json::Value;

const CASES: &[(&str, &[&str])] = &[
    ("search", &["search", "--bound", "1000"]),
    ("map", &["map", "to-xyz", "--", "-2", "8", "6"]),
    ("pagliani", &["pagliani", "--up-to", "100000"]),
    ("fibers", &["fibers"]),
    ("heights", &["heights"]),
    ("mw", &["mw", "translate"]),
    ("eta", &["eta", "--n", "100"]),
    ("ap", &["ap", "--up-to", "100"]),
    ("count", &["count", "--up-to", "31"]),
    ("verify", &["verify", "--all"]),
];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/golden")
}

fn run_json(cache: &Path, args: &[&str]) -> Value {
    let mut argv = vec!["cubesum", "--format", "json", "--cache", cache.to_str().unwrap()];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cubesum_cli::run(argv, &mut out, &mut err);
    assert!(code <= 1, "{args:?}: {}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).unwrap()
}

fn mask_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            if let Some(t) = map.get_mut("elapsed_ms") {
                *t = Value::String("0".into());
            }
            map.values_mut().for_each(mask_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(mask_timing),
        _ => {}
    }
}

fn check(name: &str, mut actual: Value) {
    mask_timing(&mut actual);
    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&actual).unwrap() + "\n").unwrap();
        return;
    }
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let want: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(actual, want, "{name} differs from {}", path.display());
}

#[test]
fn subcommands_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("coefficients.txt");
    for (name, args) in CASES {
        check(name, run_json(&cache, args));
    }
}

#[test]
fn cache_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("coefficients.txt");
    run_json(&cache, &["cache", "build", "--max", "60"]);
    check("cache", run_json(&cache, &["cache", "show"]));
}
