use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use boolspec::format::parse_point_set;
use boolspec_cli::envelope::{Payload, ReportEnvelope};

fn boolspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolspec")).args(args).env_remove("BOOLSPEC_MAX_N").output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("boolspec-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let path = scratch(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn envelope(out: &Output) -> ReportEnvelope {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_ball_points_and_table_agree() {
    let points = write("ball.txt", "n=3\n# Hamming ball\n000\n100\n010\n\n001\n");
    let table = write("ball.tt", "n=3\n17\n");
    let a = boolspec(&["--reproducible", "analyze", "--input", &points]);
    let b = boolspec(&["--reproducible", "analyze", "--input", &table]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(b.status.code(), Some(0), "{}", stderr(&b));
    let (a, b) = (envelope(&a), envelope(&b));
    assert_eq!(a.input_digest, b.input_digest);
    assert_eq!(a.payload, b.payload);
    assert_eq!(a.timing_ms, None);
    let Payload::Analysis(report) = a.payload else { panic!("wrong payload") };
    assert_eq!(report.energy, 40);
    assert_eq!(report.spectral_support, 5);
    assert_eq!(report.total_influence.to_f64(), 1.5);
    assert_eq!(report.theorem.as_ref().unwrap().comparison.ratio_float, Some(1000.0));
}

#[test]
fn envelope_round_trips_through_json() {
    let points = write("rt.txt", "n=4\n0000\n1100\n0x7\n1111\n");
    let out = boolspec(&["analyze", "--input", &points]);
    let parsed = envelope(&out);
    assert!(parsed.timing_ms.is_some());
    let again: ReportEnvelope = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
    assert_eq!(parsed.schema_version, "1");
    assert_eq!(parsed.command[0], "analyze");
    assert_eq!(parsed.input_digest.len(), 16);
}

#[test]
fn analyze_csv_has_one_row() {
    let points = write("csv.txt", "n=3\n000\n100\n010\n001\n");
    let out = boolspec(&["--csv", "analyze", "--input", &points]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
    assert!(lines[1].starts_with("3,4,40,12,"), "{}", lines[1]);
}

#[test]
fn parse_errors_exit_2_with_line() {
    let bad = write("bad.txt", "n=3\n000\n1x0\n");
    let out = boolspec(&["analyze", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let out = boolspec(&["analyze", "--input", &write("range.txt", "n=2\n0x4\n")]);
    assert_eq!(out.status.code(), Some(2));

    let out = boolspec(&["analyze", "--input", "/nonexistent/file"]);
    assert_eq!(out.status.code(), Some(2));

    let out = boolspec(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn constant_function_is_degenerate_not_a_violation() {
    let full = write("full.txt", "n=2\n00\n01\n10\n11\n");
    let out = boolspec(&["analyze", "--input", &full]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let Payload::Analysis(report) = envelope(&out).payload else { panic!() };
    assert!(report.degenerate);
    assert!(!report.warnings.is_empty());
}

#[test]
fn max_n_from_environment_and_flag() {
    let points = write("n4.txt", "n=4\n0000\n");
    let out = Command::new(env!("CARGO_BIN_EXE_boolspec"))
        .args(["analyze", "--input", &points])
        .env("BOOLSPEC_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = boolspec(&["--max-n", "3", "analyze", "--input", &points]);
    assert_eq!(out.status.code(), Some(2));
    let out = boolspec(&["--max-n", "4", "analyze", "--input", &points]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generate_writes_parseable_sets() {
    let out = boolspec(&["--seed", "5", "generate", "--kind", "sidon", "--n", "8", "--m", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let set = parse_point_set(&stdout(&out)).unwrap();
    assert_eq!(set.len(), 12);
    assert!(boolspec::generators::is_sidon(&set));

    let out =
        boolspec(&["generate", "--kind", "affine-subspace", "--n", "4", "--basis", "1100,0x6", "--shift", "0001"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(parse_point_set(&stdout(&out)).unwrap().len(), 4);

    let path = scratch("ball-out.txt");
    let out = boolspec(&[
        "generate",
        "--kind",
        "hamming-ball",
        "--n",
        "5",
        "--radius",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(parse_point_set(&fs::read_to_string(path).unwrap()).unwrap().len(), 16);
}

#[test]
fn unreachable_sidon_target_is_flagged() {
    let out = boolspec(&["generate", "--kind", "sidon", "--n", "3", "--m", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert!(parse_point_set(&stdout(&out)).unwrap().len() < 8);
}

#[test]
fn exhaust_limits_and_sampling() {
    let out = boolspec(&["exhaust", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--sample"));

    let out = boolspec(&["--reproducible", "exhaust", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let Payload::Exhaustive(summary) = envelope(&out).payload else { panic!() };
    assert_eq!(summary.functions_checked, 256);
    assert!(summary.is_clean());

    let out = boolspec(&["--seed", "9", "exhaust", "--n", "6", "--sample", "300", "--cross-check"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let Payload::Exhaustive(summary) = envelope(&out).payload else { panic!() };
    assert_eq!(summary.functions_checked, 300);
}

#[test]
fn exhaust_writes_tables() {
    let dir = scratch("tables");
    let out = boolspec(&["exhaust", "--n", "2", "--tables-out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());
    for f in files {
        let text = fs::read_to_string(f).unwrap();
        assert!(boolspec::format::parse_truth_table(&text).is_ok());
    }
}

#[test]
fn search_outputs() {
    let trace = scratch("trace.csv");
    let best = scratch("best.txt");
    let out = boolspec(&[
        "--reproducible",
        "search",
        "--n",
        "3",
        "--restarts",
        "10",
        "--iters",
        "500",
        "--trace-out",
        trace.to_str().unwrap(),
        "--best-out",
        best.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let Payload::Search(summary) = envelope(&out).payload else { panic!() };
    assert_eq!(summary.records, 10 * 501);
    let minimum = boolspec::exhaustive::enumerate(3).unwrap().min_ratio.unwrap();
    assert_eq!(summary.best_objective, minimum);
    assert_eq!(parse_point_set(&fs::read_to_string(best).unwrap()).unwrap(), summary.best);
    let trace = fs::read_to_string(trace).unwrap();
    assert_eq!(trace.lines().next(), Some("restart,iteration,cardinality,objective_float,accepted"));
    assert_eq!(trace.lines().count(), 1 + summary.records);

    let out = boolspec(&["search", "--n", "3", "--restarts", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_rows_and_ranges() {
    let out = boolspec(&["sweep", "--family", "subspace", "--family", "ball", "--n-range", "2..4", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("ball,"));
    assert!(rows[5].starts_with("subspace,"));

    for bad in ["5..3", "3", "a..b"] {
        let out = boolspec(&["sweep", "--family", "ball", "--n-range", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
}
