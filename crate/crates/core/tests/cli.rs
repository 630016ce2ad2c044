use std::process::{Command, Output};

use plucking::search::report::read_jsonl;
use plucking::QPolynomial;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plucking"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn assert_run(args: &[&str], code: i32, out: &str) {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o).trim_end(), out, "{args:?}");
}

fn assert_code(args: &[&str], code: i32) -> Output {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    o
}

#[test]
fn compute() {
    assert_run(
        &["compute", "--tree", "(()(()()))"],
        0,
        "1 + 2*q + 2*q^2 + 2*q^3 + q^4",
    );
    assert_run(&["compute", "--tree", "()"], 0, "1");
    let o = assert_code(&["compute", "--tree", "(()("], 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error at byte"));
}

#[test]
fn delay() {
    assert_run(
        &["delay", "--hedgehog", "32123"],
        0,
        "q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7",
    );
    assert_run(&["delay", "--tree", "(2((3))1)"], 0, "q^3");
    assert_run(
        &["delay", "--hedgehog", "1^2 4^2 1^2"],
        0,
        "q^2 + 5*q^3 + 12*q^4 + 18*q^5 + 19*q^6 + 17*q^7 + 17*q^8 + 19*q^9 + 18*q^10 \
         + 12*q^11 + 5*q^12 + q^13",
    );
    assert_code(&["delay", "--hedgehog", "3x"], 2);
    assert_code(&["delay", "--tree", "(0)"], 2);
}

#[test]
fn closed_form() {
    assert_run(
        &[
            "closed-form",
            "--family",
            "anti-unimodal",
            "--delays",
            "3,2,1,2,3",
        ],
        0,
        "q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7",
    );
    assert_code(
        &[
            "closed-form",
            "--family",
            "14k1",
            "--k",
            "2",
            "--cross-check",
        ],
        0,
    );
    assert_code(
        &[
            "closed-form",
            "--family",
            "anti-unimodal",
            "--delays",
            "1,2,1",
        ],
        2,
    );
    assert_code(
        &[
            "closed-form",
            "--family",
            "1a3k1b",
            "--a",
            "2",
            "--k",
            "1",
            "--b",
            "2",
            "--cross-check",
        ],
        0,
    );
    assert_run(
        &["closed-form", "--family", "delay12", "--delays", "212"],
        0,
        "q + q^2",
    );
    assert_code(&["closed-form", "--family", "14k1"], 2);
}

#[test]
fn check_and_factor() {
    let o = assert_code(&["check", "--poly", "0,0,1,4,5,4,5,4,1"], 0);
    assert!(stdout(&o).starts_with("unimodal=false "));
    assert_run(
        &["check", "--poly", "1,2,2,1"],
        0,
        "unimodal=true strictly_unimodal=true symmetric=true",
    );
    assert_code(&["check", "--poly", ""], 2);
    assert_run(
        &["factor", "--poly", "0,0,0,1,3,4,3,1"],
        0,
        "q^3 [3]_q [2]_q^2",
    );
    assert_code(&["factor", "--poly", "0"], 2);
}

#[test]
fn json_output_round_trips() {
    let o = assert_code(&["compute", "--tree", "(()(()()))", "--output", "json"], 0);
    let q: QPolynomial = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(q, QPolynomial::from_i64s(&[1, 2, 2, 2, 1]));
    let o = assert_code(
        &[
            "closed-form",
            "--family",
            "14k1",
            "--k",
            "12",
            "--output",
            "json",
        ],
        0,
    );
    let q: QPolynomial = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(q, plucking::plucking::family_1_4k_1(12).unwrap());
}

#[test]
fn batch_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.txt");
    std::fs::write(&path, "(()(()()))\n# comment\n\n()\n").unwrap();
    assert_run(
        &["compute", "--file", path.to_str().unwrap()],
        0,
        "1 + 2*q + 2*q^2 + 2*q^3 + q^4\n1",
    );
    std::fs::write(&path, "32123\n(2((3))1)\n").unwrap();
    assert_run(
        &["delay", "--file", path.to_str().unwrap()],
        0,
        "q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7\nq^3",
    );
    std::fs::write(&path, "()\n(()\n").unwrap();
    let o = assert_code(&["compute", "--file", path.to_str().unwrap()], 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn scan_and_verify() {
    let o = assert_code(
        &["verify", "--suite", "conjecture12", "--max-leaves", "8"],
        0,
    );
    let summary: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["total"], 510);
    assert_eq!(summary["non_unimodal"], serde_json::json!([]));

    let o = assert_code(&["scan", "--max-leaves", "5", "--values", "1,2,4"], 1);
    assert!(stdout(&o).contains("\"21412\""));

    let o = assert_code(&["verify", "--suite", "paper-all"], 0);
    let summary: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["passed"], 13);

    for suite in ["garstka", "14k1", "two-branch", "prop33"] {
        assert_code(&["verify", "--suite", suite], 0);
    }
    assert_code(&["verify", "--suite", "nonsense"], 2);
    assert_code(&["scan", "--max-leaves", "0"], 2);
    assert_code(&["scan", "--max-leaves", "3", "--unknown-flag"], 2);
}

#[test]
fn reports_are_byte_identical_across_runs_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "1", "4"] {
        let path = dir.path().join(format!("r{}.jsonl", outputs.len()));
        let o = assert_code(
            &[
                "scan",
                "--max-leaves",
                "6",
                "--values",
                "1,2,3",
                "--jobs",
                jobs,
                "--out",
                path.to_str().unwrap(),
            ],
            0,
        );
        outputs.push((std::fs::read(&path).unwrap(), o.stdout));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let records = read_jsonl(outputs[0].0.as_slice()).unwrap();
    assert_eq!(records.len(), 3 + 9 + 27 + 81 + 243 + 729);
    assert!(records.iter().all(|r| r.is_consistent()));

    let mut general = Vec::new();
    for jobs in ["1", "3"] {
        let path = dir.path().join(format!("g{jobs}.csv"));
        assert_code(
            &[
                "scan",
                "--mode",
                "general-trees",
                "--max-leaves",
                "7",
                "--max-value",
                "2",
                "--seed",
                "5",
                "--jobs",
                jobs,
                "--format",
                "csv",
                "--out",
                path.to_str().unwrap(),
            ],
            0,
        );
        general.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(general[0], general[1]);
}
