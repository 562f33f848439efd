use std::path::Path;
use std::process::Command;

use cubesum_cli::records::*;
use cubesum_cli::verify::VerificationReport;
use serde::de::DeserializeOwned;
use serde::Serialize;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(cache: &Path, args: &[&str]) -> Run {
    let cache = cache.to_str().unwrap();
    let argv: Vec<&str> = ["cubesum", "--cache", cache].into_iter().chain(args.iter().copied()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cubesum_cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    run_with(&dir.path().join("coefficients.txt"), args)
}

fn json<T: DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let r = run(&full);
    assert!(r.code <= 1, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", r.stdout))
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let parsed: T = json(args);
    let again: T = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
    parsed
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "--p", "7", "--n", "1"]).code, 0);
    assert_eq!(run(&["count", "--p", "5", "--n", "2"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);

    let bad: &[&[&str]] = &[
        &["frobnicate"],
        &["search", "--bound", "10", "--colour"],
        &["search"],
        &["search", "--bound", "0"],
        &["map", "to-xyz", "3", "3", "5"],
        &["map", "to-mkl", "1", "1", "1"],
        &["count", "--p", "9"],
        &["eta", "--spec", "1:5"],
        &["ap", "--p", "3"],
        &["count", "--p", "7", "--up-to", "20"],
    ];
    for args in bad {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
    assert!(run(&["frobnicate"]).stderr.contains("Usage"));
}

#[test]
fn binary_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_cubesum"))
        .args(["--cache", cache.to_str().unwrap(), "count", "--p", "7", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lib = run_with(&cache, &["count", "--p", "7", "--n", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_cubesum")).arg("--nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_seven() {
    let records: Vec<CountRecord> = round_trip(&["count", "--p", "7", "--n", "1"]);
    assert_eq!(records.len(), 2);
    for r in &records {
        assert_eq!((r.brute.as_str(), r.formula.as_str()), ("61", "61"));
        assert!(r.matches);
    }
}

#[test]
fn search_annotations() {
    let records: Vec<SolutionRecord> = round_trip(&["search", "--bound", "1000"]);
    let first = &records[0];
    assert_eq!((first.x.as_str(), first.y.as_str(), first.z.as_str()), ("8", "3", "12"));
    assert_eq!(first.pagliani_u.as_deref(), Some("2"));
    let family: Vec<PaglianiRecord> = json(&["pagliani", "--up-to", "1000"]);
    let annotated: Vec<&str> = records.iter().filter_map(|r| r.pagliani_u.as_deref()).collect();
    assert_eq!(annotated, family.iter().map(|r| r.u.as_str()).collect::<Vec<_>>());
}

#[test]
fn every_record_type_round_trips() {
    let _: MapRecord = round_trip(&["map", "to-xyz", "--", "-2", "8", "6"]);
    let _: MapRecord = round_trip(&["map", "to-mkl", "3", "8", "12"]);
    let p: Vec<PaglianiRecord> = round_trip(&["pagliani", "--up-to", "100"]);
    assert!(p.iter().any(|r| r.u == "2" && r.k == "8"));
    let id: PaglianiIdentityRecord = round_trip(&["pagliani", "--identity"]);
    assert!(id.identity_holds);
    let f: Vec<FiberRecord> = round_trip(&["fibers"]);
    assert_eq!(f.len(), 4);
    let _: Vec<FiberRecord> = round_trip(&["fibers", "--surface", "eps2"]);
    let h: HeightsRecord = round_trip(&["heights"]);
    assert_eq!(h.det_ns, "-48");
    let _: HeightsRecord = round_trip(&["heights", "--convention", "canonical", "--torsion", "2"]);
    let s: Vec<SectionRecord> = round_trip(&["mw", "combo", "--a", "2", "--b", "-1"]);
    assert_eq!(s.len(), 1);
    let t: Vec<SectionRecord> = round_trip(&["mw", "translate"]);
    assert_eq!(t.len(), 2);
    let e: EtaRecord = round_trip(&["eta", "--n", "50"]);
    assert_eq!(e.terms[0].a_n, "1");
    let a: Vec<ApRecord> = round_trip(&["ap", "--up-to", "60"]);
    assert!(a.iter().all(|r| r.agree));
    let _: Vec<CoefficientRecord> = round_trip(&["ap", "--coefficients", "40"]);
    let _: Vec<CountRecord> = round_trip(&["count", "--up-to", "13"]);
    let v: VerificationReport = round_trip(&["verify", "--check", "fiber-table"]);
    assert!(v.all_pass());
}

#[test]
fn csv_has_header_and_rows() {
    let r = run(&["--format", "csv", "ap", "--up-to", "20"]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert!(lines[0].starts_with("agree,"));
    assert_eq!(lines.len(), 1 + 6);
}

#[test]
fn verify_is_deterministic() {
    let a: VerificationReport = json(&["verify", "--all"]);
    let b: VerificationReport = json(&["verify", "--all"]);
    assert_eq!(a.without_timing(), b.without_timing());
    assert_eq!(a.checks.len(), 12);
    let criteria: Vec<String> = a.checks.iter().map(|c| c.criterion.clone()).collect();
    let want: Vec<String> = (1..=12).map(|i| i.to_string()).collect();
    assert_eq!(criteria, want);
}

#[test]
fn cache_regenerates_identically() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("coefficients.txt");
    let args = ["--format", "json", "ap", "--coefficients", "120"];
    let cold = run_with(&cache, &args);
    assert!(cache.exists());
    let warm = run_with(&cache, &args);
    assert_eq!(cold.stdout, warm.stdout);

    std::fs::remove_file(&cache).unwrap();
    assert_eq!(run_with(&cache, &args).stdout, cold.stdout);

    let text = std::fs::read_to_string(&cache).unwrap();
    std::fs::write(&cache, text.replacen("v1", "v0", 1)).unwrap();
    assert_eq!(run_with(&cache, &args).stdout, cold.stdout);
    assert!(std::fs::read_to_string(&cache).unwrap().starts_with("cubesum-cache v1"));

    let primes = ["ap", "--up-to", "100"];
    let with_cache = run_with(&cache, &primes);
    assert_eq!(run_with(&cache, &["cache", "clear"]).code, 0);
    assert!(!cache.exists());
    assert_eq!(run_with(&cache, &primes).stdout, with_cache.stdout);
}

#[test]
fn cache_show_requires_a_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("none.txt");
    assert_eq!(run_with(&cache, &["cache", "show"]).code, 2);
    assert_eq!(run_with(&cache, &["cache", "build", "--max", "30"]).code, 0);
    let shown = run_with(&cache, &["cache", "show"]);
    assert!(shown.stdout.starts_with("cubesum-cache v1 convention=modular-coefficient max=30"));
    let path = run_with(&cache, &["cache", "path"]);
    assert_eq!(path.stdout.trim(), cache.to_str().unwrap());
}

#[test]
fn progress_goes_to_stderr() {
    let out = Command::new(env!("CARGO_BIN_EXE_cubesum"))
        .args(["--progress", "search", "--bound", "300"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("search: 300/300"));
    assert!(!String::from_utf8_lossy(&out.stdout).contains("search:"));
}
