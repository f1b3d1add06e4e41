use std::path::Path;
use std::process::{Command, Output};

use laughlin::{build_circuit, Circuit, QubitProgram, Variant};

fn laughlin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laughlin"))
        .args(args)
        .output()
        .expect("binary should start")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_simulate_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let circuit = dir.path().join("c4.txt");
    let out = laughlin(&["build", "-n", "4", "--out", path_str(&circuit)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("v_gates=6"));

    let from_file = laughlin(&["simulate", "--circuit", path_str(&circuit)]);
    let direct = laughlin(&["simulate", "-n", "4"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&direct));
    // 4! nonzero amplitudes plus the header
    assert_eq!(stdout(&direct).lines().count(), 25);
}

#[test]
fn circuit_text_is_byte_identical_after_reemission() {
    for variant in Variant::ALL {
        for n in 2..=10 {
            let text = build_circuit(n, variant).unwrap().to_text();
            assert_eq!(Circuit::parse(&text).unwrap().to_text(), text, "n={n} {variant}");
        }
    }
}

#[test]
fn compile_to_file_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let ir = dir.path().join("q.txt");
    let out = laughlin(&["--encoding", "unary", "compile", "-n", "3", "--out", path_str(&ir)]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&ir).unwrap();
    let program = QubitProgram::parse(&text).unwrap();
    assert_eq!(program.to_text(), text);
    assert!(stdout(&out).contains("qubits=9"));

    let streamed = laughlin(&["--encoding", "unary", "compile", "-n", "3"]);
    assert_eq!(stdout(&streamed), text);
}

#[test]
fn verify_prints_a_passing_record() {
    let out = laughlin(&["verify", "-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    assert!(line.starts_with("n=5 variant=antisym distance="));
    assert!(line.trim_end().ends_with("pass=true"));
}

#[test]
fn json_output_is_valid() {
    let out = laughlin(&["--json", "--variant", "sym", "verify", "-n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["variant"], "sym");
    assert_eq!(v["pass"], true);
}

#[test]
fn exit_codes() {
    // verification ran and failed
    assert_eq!(laughlin(&["verify", "-n", "4", "--tol", "0"]).status.code(), Some(1));
    // usage and domain errors
    assert_eq!(laughlin(&["bogus"]).status.code(), Some(2));
    assert_eq!(laughlin(&["entropy", "-n", "4", "-k", "4"]).status.code(), Some(2));
    assert_eq!(laughlin(&["--variant", "nope", "verify", "-n", "3"]).status.code(), Some(2));
    // missing file
    assert_eq!(laughlin(&["simulate", "--circuit", "/nonexistent/c.txt"]).status.code(), Some(3));
    // resource guards
    assert_eq!(laughlin(&["verify", "-n", "9"]).status.code(), Some(4));
    assert_eq!(laughlin(&["qverify", "-n", "7", "--max-qubits", "10"]).status.code(), Some(4));
}

#[test]
fn malformed_circuit_reports_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "laughlin n=3 variant=antisym\ninput 0 1 2\nv stage=2 k=1 wires=0,1 p=1/3\n").unwrap();
    let out = laughlin(&["simulate", "--circuit", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn entropy_trace_ends_at_the_binomial_value() {
    let out = laughlin(&["entropy", "-n", "6", "-k", "3", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let s: f64 = last
        .split_whitespace()
        .find_map(|f| f.strip_prefix("S="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((s - 20f64.log2()).abs() < 1e-10, "{last}");
}
