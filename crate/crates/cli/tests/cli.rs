use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ontoalign_core::ntriples::read_alignment_file;

const FIRST: &str = r#"<http://a.example/alice> <http://a.example/wasBornIn> <http://a.example/paris> .
<http://a.example/bob> <http://a.example/wasBornIn> <http://a.example/paris> .
<http://a.example/alice> <http://a.example/label> "Alice" .
<http://a.example/bob> <http://a.example/label> "Bob" .
<http://a.example/paris> <http://a.example/label> "Paris" .
"#;

const SECOND: &str = r#"<http://b.example/a2> <http://b.example/bornIn> <http://b.example/p2> .
<http://b.example/b2> <http://b.example/bornIn> <http://b.example/p2> .
<http://b.example/a2> <http://b.example/name> "Alice" .
<http://b.example/b2> <http://b.example/name> "Bob" .
<http://b.example/p2> <http://b.example/name> "Paris" .
"#;

fn ontoalign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ontoalign"))
        .arg("-q")
        .args(args)
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn alice(dir: &Path) -> (PathBuf, PathBuf) {
    let (a, b) = (dir.join("first.nt"), dir.join("second.nt"));
    std::fs::write(&a, FIRST).unwrap();
    std::fs::write(&b, SECOND).unwrap();
    (a, b)
}

fn generated(dir: &Path, extra: &[&str]) -> PathBuf {
    let out = dir.join("fixture");
    let mut args = vec!["generate", "--seed", "5", "--instances", "300", "--out", s(&out)];
    args.extend_from_slice(extra);
    let o = ontoalign(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn manifest_value(dir: &Path, key: &str) -> Option<String> {
    let text = std::fs::read_to_string(dir.join("manifest.txt")).unwrap();
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
}

#[test]
fn align_writes_three_tables_and_a_manifest() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = alice(tmp.path());
    let out = tmp.path().join("out");
    let o = ontoalign(&["align", s(&a), s(&b), "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["instances.tsv", "relations.tsv", "classes.tsv", "manifest.txt"] {
        assert!(out.join(f).is_file(), "{f} missing");
    }
    assert_eq!(manifest_value(&out, "result.converged").as_deref(), Some("true"));
    assert_eq!(manifest_value(&out, "input.first.statements").as_deref(), Some("10"));

    let (rows, bad) = read_alignment_file(&out.join("instances.tsv")).unwrap();
    assert_eq!(bad, 0);
    let pairs: Vec<(&str, &str)> = rows.iter().map(|r| (r.left.as_str(), r.right.as_str())).collect();
    assert!(pairs.contains(&("http://a.example/alice", "http://b.example/a2")));
    assert!(pairs.contains(&("http://a.example/paris", "http://b.example/p2")));
}

#[test]
fn missing_input_is_a_usage_error() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, _) = alice(tmp.path());
    let o = ontoalign(&["align", s(&a), s(&tmp.path().join("nope.nt")), "--out", s(tmp.path())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn strict_run_that_hits_the_limit_exits_with_four() {
    let tmp = tempfile::tempdir().unwrap();
    let fx = generated(tmp.path(), &[]);
    let out = tmp.path().join("out");
    let (first, second) = (fx.join("first.nt"), fx.join("second.nt"));
    let args = [
        "align",
        s(&first),
        s(&second),
        "--out",
        s(&out),
        "--max-iterations",
        "1",
    ];
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(ontoalign(&strict).status.code(), Some(4));
    assert_eq!(ontoalign(&args).status.code(), Some(0));
    assert_eq!(manifest_value(&out, "result.converged").as_deref(), Some("false"));
}

#[test]
fn zero_iterations_give_empty_tables() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = alice(tmp.path());
    let out = tmp.path().join("out");
    let o = ontoalign(&["align", s(&a), s(&b), "--out", s(&out), "--max-iterations", "0"]);
    assert!(o.status.success());
    for f in ["instances.tsv", "relations.tsv", "classes.tsv"] {
        assert!(read_alignment_file(&out.join(f)).unwrap().0.is_empty(), "{f}");
    }
    assert_eq!(manifest_value(&out, "result.converged").as_deref(), Some("false"));
}

#[test]
fn functionality_dump() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, _) = alice(tmp.path());
    let dump = tmp.path().join("fun.tsv");
    let o = ontoalign(&["functionality", s(&a), "--output", s(&dump)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dump).unwrap();
    // two people born in one city: 2 subjects over 2 pairs, 1 object over 2 pairs
    assert!(text.contains("http://a.example/wasBornIn\t1.000000\t0.500000\n"), "{text}");
    assert!(text.contains("http://a.example/label\t1.000000\t1.000000\n"), "{text}");
}

#[test]
fn eval_against_the_gold_standard() {
    let tmp = tempfile::tempdir().unwrap();
    let fx = generated(tmp.path(), &[]);
    let gold = fx.join("gold_instances.tsv");
    let out = tmp.path().join("out");
    let o = ontoalign(&["align", s(&fx.join("first.nt")), s(&fx.join("second.nt")), "--out", s(&out)]);
    assert!(o.status.success());

    let report = tmp.path().join("report.tsv");
    let o = ontoalign(&[
        "eval",
        "--alignment",
        s(&out.join("instances.tsv")),
        "--gold",
        s(&gold),
        "--report",
        s(&report),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("precision\t1.000000\n") && text.contains("recall\t1.000000\n"), "{text}");

    let empty = tmp.path().join("empty.tsv");
    std::fs::write(&empty, "").unwrap();
    let o = ontoalign(&["eval", "--alignment", s(&empty), "--gold", s(&gold), "--report", s(&report)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("recall\t0.000000\n"), "{text}");
}

#[test]
fn theta_does_not_change_the_instance_table() {
    let tmp = tempfile::tempdir().unwrap();
    let fx = generated(tmp.path(), &["--attribute-drop", "0.2", "--literal-perturbation", "0.1"]);
    let mut tables = Vec::new();
    for theta in ["0.2", "0.01"] {
        let out = tmp.path().join(theta);
        let o = ontoalign(&[
            "align",
            s(&fx.join("first.nt")),
            s(&fx.join("second.nt")),
            "--out",
            s(&out),
            "--theta",
            theta,
        ]);
        assert!(o.status.success());
        tables.push(std::fs::read(out.join("instances.tsv")).unwrap());
    }
    assert!(!tables[0].is_empty());
    assert_eq!(tables[0], tables[1]);
}

#[test]
fn replay_reproduces_the_outputs() {
    let tmp = tempfile::tempdir().unwrap();
    let fx = generated(tmp.path(), &["--format-drift"]);
    let (a, b) = (tmp.path().join("out"), tmp.path().join("again"));
    let o = ontoalign(&[
        "align",
        s(&fx.join("first.nt")),
        s(&fx.join("second.nt")),
        "--out",
        s(&a),
        "--negative-evidence",
        "--threads",
        "2",
    ]);
    assert!(o.status.success());
    let o = ontoalign(&["replay", s(&a.join("manifest.txt")), "--out", s(&b)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["instances.tsv", "relations.tsv", "classes.tsv", "manifest.txt"] {
        assert_eq!(std::fs::read(a.join(f)).unwrap(), std::fs::read(b.join(f)).unwrap(), "{f}");
    }

    std::fs::write(fx.join("second.nt"), "").unwrap();
    let o = ontoalign(&["replay", s(&a.join("manifest.txt")), "--out", s(&b)]);
    assert_eq!(o.status.code(), Some(3));
}
