use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
}

fn edense(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_edense")).args(args).output().expect("binary runs");
    Run { code: out.status.code().expect("exit code"), stdout: String::from_utf8(out.stdout).expect("utf-8") }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let run = edense(&all);
    (run.code, serde_json::from_str(&run.stdout).expect("valid json"))
}

fn finding<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["findings"].as_array().unwrap().iter().find(|f| f["name"] == name).unwrap_or_else(|| {
        panic!("no finding {name:?} in {report:#}")
    })
}

fn has_line(run: &Run, line: &str) -> bool {
    run.stdout.lines().any(|l| l == line)
}

#[test]
fn chain3_is_a_semilattice_but_not_a_group() {
    let run = edense(&["analyze", &data("chain3.table")]);
    assert_eq!(run.code, 0);
    assert!(has_line(&run, "semilattice: true"));
    assert!(has_line(&run, "group: false"));
    assert!(has_line(&run, "1: W = {0, 1} V = {1} L = {0, 1, 2}"));
}

#[test]
fn z3e_is_e_unitary_with_two_idempotents() {
    let run = edense(&["analyze", &data("z3e.table")]);
    assert_eq!(run.code, 0);
    assert!(has_line(&run, "e-unitary: true"));
    assert!(has_line(&run, "E = {0, 3}"));
}

#[test]
fn fixture_and_file_agree() {
    let a = edense(&["analyze", &data("b2.table")]);
    let b = edense(&["analyze", "--fixture", "B2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_table_reports_the_line() {
    let (code, r) = json(&["analyze", &data("malformed.table")]);
    assert_eq!(code, 1);
    let f = finding(&r, "table: parses");
    assert_eq!(f["pass"], false);
    assert!(f["witness"].as_str().unwrap().starts_with("line 3:"), "{f}");
}

#[test]
fn non_associative_table_is_rejected() {
    for cmd in ["analyze", "verify"] {
        let (code, r) = json(&[cmd, &data("nonassociative.table")]);
        assert_eq!(code, 1);
        assert_eq!(finding(&r, "table: associative")["pass"], false);
    }
}

#[test]
fn z3e_modulo_its_idempotents_has_three_cosets() {
    let run = edense(&["cosets", &data("z3e.table"), "--subsemigroup", "0 3"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(has_line(&run, "cosets: 3"));
    for c in ["0 3", "1 4", "2 5"] {
        assert!(has_line(&run, c));
    }
    assert!(has_line(&run, "self-conjugate: true"));
}

#[test]
fn z6_modulo_even_residues_has_two_cosets() {
    let run = edense(&["cosets", &data("z6.table"), "--subsemigroup", "0 2 4"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(has_line(&run, "cosets: 2"));
    assert!(has_line(&run, "1 3 5"));
}

#[test]
fn non_closed_subset_is_rejected() {
    let (code, r) = json(&["cosets", "--fixture", "Z6", "--subsemigroup", "2"]);
    assert_eq!(code, 1);
    let f = finding(&r, "cosets: H is a closed E-dense subsemigroup");
    assert!(f["witness"].as_str().unwrap().contains("not a subsemigroup"));
}

#[test]
fn wagner_preston_and_munn_acts_validate() {
    for args in [vec!["act", "--fixture", "Z3E"], vec!["act", "--fixture", "B2", "--kind", "munn"]] {
        let (code, r) = json(&args);
        assert_eq!(code, 0);
        assert_eq!(finding(&r, "act validates")["pass"], true);
    }
    let run = edense(&["act", &data("z3e.table")]);
    assert!(has_line(&run, "grading: 0 0 0 3 3 3"));
}

#[test]
fn act_files_are_validated() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.act");
    std::fs::write(&bad, "3 1\n0\n0\n-\n").unwrap();
    let (code, r) = json(&["act", "--fixture", "CHAIN3", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(finding(&r, "act validates")["witness"].as_str().unwrap().contains("composition"));

    let good = dir.path().join("good.act");
    std::fs::write(&good, "3 1\n0\n0\n0\n").unwrap();
    assert_eq!(edense(&["act", "--fixture", "CHAIN3", "--file", good.to_str().unwrap()]).code, 0);
}

#[test]
fn c_u_of_a_derived_category_is_built() {
    for file in ["z2_derived.category", "z3_band.category"] {
        let (code, r) = json(&["build-cu", &data(file)]);
        assert_eq!(code, 0, "{r:#}");
        assert_eq!(finding(&r, "C_u: E-dense")["pass"], true);
    }
}

#[test]
fn modexp_massey_omura_recovers_the_plaintext() {
    let run = edense(&["crypto-demo", "--prime", "11", "--protocol", "mo", "--seed", "1"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("recovered = 2 (matches plaintext)"));
}

#[test]
fn z3e_key_spaces_have_two_elements() {
    for protocol in ["mo", "elgamal"] {
        let run = edense(&["crypto-demo", "--fixture", "Z3E", "--protocol", protocol, "--seed", "5"]);
        assert_eq!(run.code, 0);
        let sizes: Vec<&str> = run.stdout.lines().filter(|l| l.starts_with("K(")).collect();
        assert_eq!(sizes.len(), 3);
        assert!(sizes.iter().all(|l| l.ends_with("|K|=2")), "{sizes:?}");
    }
}

#[test]
fn crypto_demo_rejects_bad_inputs() {
    let (code, r) = json(&["crypto-demo", "--prime", "4"]);
    assert_eq!(code, 1);
    assert_eq!(finding(&r, "crypto: setup")["witness"], "4 is not prime");
    let (code, r) = json(&["crypto-demo", "--fixture", "NOPE"]);
    assert_eq!(code, 1);
    assert!(finding(&r, "crypto: setup")["witness"].as_str().unwrap().contains("unknown fixture"));
}

#[test]
fn coset_suite_passes_on_z3e() {
    let (code, r) = json(&["verify", &data("z3e.table"), "--suite", "cosets"]);
    assert_eq!(code, 0);
    assert!(r["findings"].as_array().unwrap().iter().all(|f| f["pass"] == true));
}

#[test]
fn fixture_verification_fails_only_the_weak_inverse_claims() {
    let (code, r) = json(&["verify", "--fixtures"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = r["findings"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["pass"] == false)
        .map(|f| f["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["weak-inverses: W(s') = sW(s)s", "weak-inverses: W(s') = W(s*)"]);
}

#[test]
fn json_report_round_trips() {
    let (code, r) = json(&["cosets", "--fixture", "Z3E", "--subsemigroup", "0 3"]);
    assert_eq!(r["command"], "cosets");
    assert_eq!(r["exit_status"], code);
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), r);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["crypto-demo", "--prime", "13", "--protocol", "elgamal", "--seed", "42"],
        vec!["verify", "--fixtures", "--suite", "crypto"],
    ] {
        assert_eq!(edense(&args).stdout, edense(&args).stdout);
    }
}
