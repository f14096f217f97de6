use std::path::Path;
use std::process::Command;

use proxkit::run;

fn cli(args: &[&str]) -> proxkit::Outcome {
    run(std::iter::once("proxkit").chain(args.iter().copied()))
}

fn row<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

fn binary(args: &[&str], corpus: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_proxkit")).args(args).env("PROXKIT_CORPUS", corpus).output().unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = cli(&["validate", "B2", "--leq"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    for s in ["S1", "S2", "S3", "S4", "S5", "S6", "S8"] {
        assert_eq!(row(&ok.stdout, s), Some("pass"));
    }

    let m3 = cli(&["validate", "M3"]);
    assert_eq!(m3.code, 1);
    assert_eq!(row(&m3.stdout, "distributive"), Some("fail (1,2,3) = (x,y,z)"));

    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("cut.json");
    std::fs::write(&truncated, "{\"elements\": [\"a\",").unwrap();
    let bad = cli(&["validate", truncated.to_str().unwrap()]);
    assert_eq!(bad.code, 2);
    assert!(bad.stdout.is_empty());
    assert!(bad.stderr.contains("cut.json:1:18:"), "{}", bad.stderr);
}

#[test]
fn validate_reports_axiom_failures() {
    let out = cli(&["validate", "B2", "--relation", "B2-prec0"]);
    assert_eq!(out.code, 1);
    assert_eq!(row(&out.stdout, "S5"), Some("fail (1) = (a)"));
    assert_eq!(row(&out.stdout, "subordination"), Some("yes"));

    let dir = tempfile::tempdir().unwrap();
    let bad_index = dir.path().join("bad.json");
    std::fs::write(&bad_index, r#"{"kind": "lattice", "elements": ["0", "1"], "leq": [[0, 5]]}"#).unwrap();
    let out = cli(&["validate", bad_index.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("out of range"), "{}", out.stderr);
}

#[test]
fn missing_file_is_invalid_input() {
    let out = cli(&["validate", "no-such-fixture"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("no-such-fixture"));
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn dualize_examples() {
    let c3 = cli(&["dualize", "C3"]);
    assert_eq!(c3.code, 0);
    assert_eq!(row(&c3.stdout, "points"), Some("2"));
    assert_eq!(row(&c3.stdout, "classes"), Some("2"));
    assert_eq!(row(&c3.stdout, "sigma"), Some("pass"));

    let prec0 = cli(&["dualize", "B2", "--relation", "B2-prec0"]);
    assert_eq!(prec0.code, 0);
    assert_eq!(row(&prec0.stdout, "R"), Some("[[0,0],[0,1],[1,0],[1,1]]"));
    assert_eq!(row(&prec0.stdout, "classes"), Some("1"));
    assert!(row(&prec0.stdout, "sigma").unwrap().starts_with("skipped"));

    let c1 = cli(&["dualize", "C1"]);
    assert_eq!(c1.code, 0);
    assert_eq!(row(&c1.stdout, "points"), Some("0"));
}

#[test]
fn dualize_output_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b2.json");
    let path = out.to_str().unwrap();
    let d = cli(&["--out", path, "dualize", "B2"]);
    assert_eq!(d.code, 0, "{}", d.stderr);
    let v = cli(&["validate", path]);
    assert_eq!(v.code, 0, "{}", v.stdout);
    assert_eq!(row(&v.stdout, "kind"), Some("gleason"));
    let dot = cli(&["dot", path]);
    assert_eq!(dot.code, 0);
    assert!(dot.stdout.starts_with("digraph {"));
}

#[test]
fn morphism_examples() {
    let bad = cli(&["morphism", "B2", "C2", "B2-C2-join-breaker"]);
    assert_eq!(bad.code, 1);
    assert_eq!(row(&bad.stdout, "H0"), Some("pass"));
    assert_eq!(row(&bad.stdout, "H1"), Some("fail (1,2,1,2) = (a,b,a,b)"));
    assert_eq!(row(&bad.stdout, "ofc"), Some("fail (0,0,0,1)"));

    let good = cli(&["morphism", "C2", "C3", "C2-C3-embed"]);
    assert_eq!(good.code, 0, "{}", good.stdout);
    assert_eq!(row(&good.stdout, "xi"), Some("[0,0]"));

    let inline = cli(&["morphism", "B2", "C2", "0,1,0,1"]);
    assert_eq!(inline.code, 0, "{}", inline.stdout);
    assert_eq!(row(&inline.stdout, "dvc"), Some("pass"));

    assert_eq!(cli(&["morphism", "B2", "C2", "0,1"]).code, 2);
}

#[test]
fn exhaust_examples() {
    let c3 = cli(&["exhaust", "C3", "--check", "collapse"]);
    assert_eq!(c3.code, 0);
    assert_eq!(row(&c3.stdout, "scanned"), Some("512"));
    assert_eq!(row(&c3.stdout, "survivors"), Some("1"));

    let lemma = cli(&["exhaust", "B2", "--check", "lemma-correspondence", "--workers", "3"]);
    assert_eq!(lemma.code, 0);
    assert_eq!(row(&lemma.stdout, "qualifying"), Some("16"));

    let stream = cli(&["exhaust", "C2"]);
    assert_eq!(stream.code, 0);
    assert_eq!(stream.stdout.lines().filter(|l| l.starts_with("relation ")).count(), 2);

    let big = cli(&["exhaust", "B3", "--check", "iff-s8"]);
    assert_eq!(big.code, 2);
    assert!(big.stderr.contains("--sample"), "{}", big.stderr);

    let sampled = cli(&["exhaust", "B3", "--check", "iff-s8", "--sample", "300", "--seed", "2"]);
    assert_eq!(sampled.code, 0, "{}", sampled.stdout);
    assert_eq!(row(&sampled.stdout, "qualifying"), Some("300"));

    assert_eq!(cli(&["exhaust", "C3", "--check", "nonsense"]).code, 2);
    assert_eq!(cli(&["exhaust", "C3", "--axioms", "S1,S7"]).code, 2);
}

#[test]
fn generate_examples() {
    let a = cli(&["generate", "--poset", "5", "--seed", "7"]);
    let b = cli(&["generate", "--poset", "5", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, cli(&["generate", "--poset", "5", "--seed", "8"]).stdout);
    assert_eq!(cli(&["generate", "--poset", "99"]).code, 2);

    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("sub.json");
    let g = cli(&["--out", sub.to_str().unwrap(), "generate", "--subordination", "B3", "--seed", "4"]);
    assert_eq!(g.code, 0, "{}", g.stderr);
    let v = cli(&["validate", sub.to_str().unwrap()]);
    for s in ["S1", "S2", "S3", "S4"] {
        assert_eq!(row(&v.stdout, s), Some("pass"), "{}", v.stdout);
    }
    assert_eq!(row(&v.stdout, "subordination"), Some("yes"));
}

#[test]
fn dot_examples() {
    let c3 = cli(&["dot", "C3"]);
    assert_eq!(c3.code, 0);
    assert!(c3.stdout.contains("rankdir=BT"));
    let full = cli(&["dot", "B2", "--relation", "B2-prec0", "--dual"]);
    assert_eq!(full.code, 0);
    assert!(full.stdout.contains("cluster"), "{}", full.stdout);
    assert!(full.stdout.contains("dashed"), "{}", full.stdout);
}

#[test]
fn json_output() {
    let out = cli(&["--json", "validate", "M3"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["distributive"]["verdict"], "fail");
    assert_eq!(v["distributive"]["witness"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["status"], "fail");
}

#[test]
fn corpus_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tiny.json"), r#"{"kind": "lattice", "elements": ["0", "1"], "leq": [[0, 1]]}"#).unwrap();
    let out = binary(&["validate", "tiny"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let missing = binary(&["validate", "B2"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
}
