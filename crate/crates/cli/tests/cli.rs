use std::io::Write;
use std::process::{Command, Output};

use tcc_cli::report::{CodeJson, SimulationReport, SpectrumReport, VerifyReport};

fn tcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn spectrum_reports() {
    let o = tcc(&["spectrum", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let r: SpectrumReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        r.spectrum.iter().map(|e| (e.eigenvalue, e.multiplicity)).collect::<Vec<_>>(),
        vec![(0, 1), (1, 1)]
    );
    assert!(r.diagonalizable);
    assert_eq!(r.scan_matches, Some(true));
    assert_eq!(r.diagonal, Some(vec![0, 1]));

    let o = tcc(&["spectrum", "--n", "3", "--p", "3", "--x", "1", "--y", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("{1:2}"));
    assert!(text.contains("defective"));

    assert_eq!(code(&tcc(&["spectrum", "--n", "1", "--p", "3", "--x", "1", "--y", "1"])), 1);
    assert_eq!(code(&tcc(&["spectrum", "--n", "2", "--p", "4", "--x", "1", "--y", "1"])), 1);
    assert_eq!(code(&tcc(&["spectrum", "--n", "2", "--p", "3", "--x", "3", "--y", "1"])), 1);
    assert_eq!(code(&tcc(&["spectrum", "--n", "2"])), 1);
}

#[test]
fn build_reports_generator() {
    let o = tcc(&["build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let r: CodeJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.dimension, 1);
    assert_eq!(r.generator, Some(vec![vec![1, 1, 1, 1]]));
    assert_eq!(r.min_distance, None);

    let o = tcc(&["build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "1", "--json"]);
    let r: CodeJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.dimension >= 2);
}

#[test]
fn matrix_file_input() {
    let dir = tempdir();
    let good = dir.join("zero.txt");
    std::fs::File::create(&good).unwrap().write_all(b"3 2 2\n0 0\n0 0\n").unwrap();
    let o = tcc(&["analyze", "--matrix-file", good.to_str().unwrap(), "--a", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let r: CodeJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.length, r.dimension, r.min_distance), (4, 4, Some(1)));
    assert_eq!(r.x, None);
    assert_eq!(r.rate, "4/4");

    let bad = dir.join("bad.txt");
    std::fs::File::create(&bad).unwrap().write_all(b"3 2 2\n0 0\n0 x\n").unwrap();
    let o = tcc(&["build", "--matrix-file", bad.to_str().unwrap(), "--a", "1"]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3, column 3"), "{err}");

    let o = tcc(&["build", "--matrix-file", "/nonexistent/tcc.txt", "--a", "1"]);
    assert_eq!(code(&o), 1);
    std::fs::remove_dir_all(dir).ok();
}

fn tempdir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("tcc-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn analyze_reports_parameters() {
    let o = tcc(&["analyze", "--n", "3", "--p", "7", "--x", "2", "--y", "1", "--a", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let r: CodeJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (r.length, r.dimension, r.min_distance, r.mds, r.detect, r.correct),
        (9, 1, Some(9), Some(true), Some(8), Some(4))
    );
    assert_eq!(r.rate, "1/9");

    let o = tcc(&["analyze", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2"]);
    let text = stdout(&o);
    assert!(text.contains("[4, 1, 4]"));
    assert!(text.contains("rate: 1/4"));

    // A = J2 + 2I2 over GF(3) is invertible, so a = 0 leaves only B = 0
    let o = tcc(&["analyze", "--n", "2", "--p", "3", "--x", "1", "--y", "2", "--a", "0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("zero code"));
}

#[test]
fn verify_default_sweep_passes() {
    let o = tcc(&["verify", "--json"]);
    assert_eq!(code(&o), 0);
    let r: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.summary.mismatched, 0);
    assert!(r.summary.hypothesis_rows > 0);
    let mut sorted = r.rows.clone();
    sorted.sort_by_key(|r| (r.p, r.n, r.x, r.y, r.a));
    assert_eq!(sorted, r.rows);
    for row in &r.rows {
        if row.a == 1 {
            assert!(row.matches_theorem.is_none());
            assert!(row.dim >= 2);
        }
        if row.y == 0 {
            assert!(!row.hypotheses_met);
            assert_eq!(row.note.as_deref(), Some("outside theorem: y = 0"));
        }
        assert_eq!(row.matches_theorem.is_some(), row.hypotheses_met);
    }
    assert_eq!(code(&tcc(&["verify", "--p-max", "17"])), 3);
    assert_eq!(code(&tcc(&["verify", "--n-max", "7"])), 3);
    assert_eq!(code(&tcc(&["verify", "--n-max", "1"])), 1);
}

#[test]
fn simulate_outcomes() {
    let base = ["simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2"];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        tcc(&args)
    };

    let o = run(&["--t", "4", "--exhaustive", "--json"]);
    assert_eq!(code(&o), 0);
    let r: SimulationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.trials, 161_280);
    assert!(r.pass && r.within_capacity);

    let o = run(&["--t", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));

    let o = run(&["--t", "9", "--json"]);
    assert_eq!(code(&o), 2);
    let r: SimulationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.pass && !r.within_capacity);
    assert!(r.successes < r.trials);

    // C(16,8)·12^8·13 is far past the sweep guard
    let o = tcc(&[
        "simulate", "--n", "4", "--p", "13", "--x", "3", "--y", "1", "--a", "2", "--t", "8", "--exhaustive",
    ]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8(o.stderr).unwrap().contains("without --exhaustive"));

    assert_eq!(code(&run(&["--t", "10"])), 1);

    let o = tcc(&["simulate", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "1", "--t", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("hypotheses unmet"));

    // invertible A with a != 1 leaves only the zero code
    let o = tcc(&["simulate", "--n", "3", "--p", "5", "--x", "1", "--y", "1", "--a", "2", "--t", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn commands_are_deterministic() {
    let args = ["simulate", "--n", "2", "--p", "5", "--x", "2", "--y", "1", "--a", "3", "--t", "2", "--seed", "9", "--json"];
    assert_eq!(tcc(&args).stdout, tcc(&args).stdout);
    let v = ["verify", "--p-max", "5", "--n-max", "3"];
    assert_eq!(tcc(&v).stdout, tcc(&v).stdout);
}
