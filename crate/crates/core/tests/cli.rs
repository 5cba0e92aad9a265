use std::process::Command;

use freebraid::cli::ClassifyReport;
use freebraid::CensusReport;

fn freebraid(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_freebraid"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

fn classify(family: &str, rank: &str, word: &str) -> ClassifyReport {
    let (out, code) = freebraid(&[
        "classify", "--type", family, "--rank", rank, "--word", word, "--format", "json",
    ]);
    assert_eq!(code, 0);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_examples() {
    let r = classify("A", "2", "1,2,1");
    assert_eq!((r.length, r.n), (3, 1));
    assert!(r.freely_braided && r.content_maximal && r.smooth);
    assert_eq!(r.poincare, vec![1, 2, 2, 1]);

    let r = classify("A", "3", "2,1,3,2");
    assert!(r.fully_commutative && !r.content_maximal && !r.smooth);
    assert_eq!(r.poincare, vec![1, 3, 5, 4, 1]);

    let r = classify("A", "3", "1,2,1,3,2,1");
    assert!(!r.freely_braided);

    let r = classify("A", "3", "");
    assert_eq!(r.length, 0);
    assert!(r.smooth);
}

#[test]
fn counts_and_series() {
    assert_eq!(
        freebraid(&["count-cm", "--type", "D", "--rank", "5"]),
        ("201\n".into(), 0)
    );
    let (out, _) = freebraid(&["series", "--type", "E", "--order", "8"]);
    assert_eq!(out, "652, 2096, 6739\n");
    let (out, _) = freebraid(&["series", "--type", "A", "--order", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([0, 2, 6, 19, 61, 196]));
}

#[test]
fn census_is_deterministic_across_jobs() {
    let args = |jobs: &'static str| {
        [
            "census",
            "--type",
            "D",
            "--rank",
            "5",
            "--classes",
            "--format",
            "json",
            "--jobs",
            jobs,
        ]
    };
    let (one, c1) = freebraid(&args("1"));
    let (four, c4) = freebraid(&args("4"));
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
    let r: CensusReport = serde_json::from_str(&one).unwrap();
    assert_eq!(r.content_maximal, 201);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", one);
}

#[test]
fn custom_graph_file_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.graph");
    std::fs::write(
        &path,
        "# path on three vertices\nrank 3\nedge 1 2\nedge 2 3\n",
    )
    .unwrap();
    let out_path = dir.path().join("out.csv");
    let (_, code) = freebraid(&[
        "census",
        "--graph",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(out_path).unwrap();
    assert_eq!(text.lines().nth(1), Some("custom,3,24,14,20,19"));
}

#[test]
fn failures_exit_nonzero() {
    let (out, code) = freebraid(&[
        "verify",
        "--suite",
        "chain-classes",
        "--type",
        "D",
        "--rank",
        "4",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample ("), "{out}");
    assert_eq!(
        freebraid(&["census", "--type", "E", "--rank", "9", "--max-length", "2"]).1,
        2
    );
    assert_eq!(
        freebraid(&["classify", "--type", "A", "--rank", "3", "--word", "1,5"]).1,
        2
    );
    assert_eq!(
        freebraid(&["classify", "--type", "A", "--rank", "3", "--graph", "x", "--word", "1"]).1,
        2
    );
}
