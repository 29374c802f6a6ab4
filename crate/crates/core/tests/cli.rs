use std::process::{Command, Output};

fn spin9(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spin9")).args(args).output().unwrap()
}

#[test]
fn bpt_suite_reports_the_defect() {
    let out = spin9(&["verify", "--suite", "bpt"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("defect_total=108"));
    assert!(text.contains("bpt_defect=108"));
    for line in text.lines() {
        let status = line.split_whitespace().nth(1).unwrap();
        assert!(line.starts_with("summary ") || status == "PASS", "{line}");
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = spin9(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));
    assert_eq!(spin9(&["bench", "bogus"]).status.code(), Some(2));
}

#[test]
fn omega8_export_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    for p in [&a, &b] {
        let out = spin9(&["export", "omega8", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 702);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["indices"].as_array().unwrap().len(), 8);
    }
    let csv = spin9(&["export", "omega8", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 702);
}

#[test]
fn unwritable_destination_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("no").join("such").join("file");
    assert_eq!(spin9(&["export", "bpt", "--out", p.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn conjecture_verdict_is_deterministic() {
    let a = spin9(&["conjecture"]);
    let b = spin9(&["conjecture", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("conjecture: ") && first.ends_with("(convention=antisymmetric)"), "{first}");
}

#[test]
fn bench_numbers_do_not_depend_on_jobs() {
    let strip = |o: Output| {
        String::from_utf8(o.stdout)
            .unwrap()
            .split_whitespace()
            .filter(|kv| !kv.starts_with("wall_ms=") && !kv.starts_with("pairs_per_sec="))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let one = strip(spin9(&["bench", "stabilizer-assembly", "--jobs", "1"]));
    assert!(one.contains("rows=12870 cols=256"), "{one}");
    assert_eq!(one, strip(spin9(&["bench", "stabilizer-assembly", "--jobs", "3"])));
    let w = strip(spin9(&["bench", "wedge"]));
    assert!(w.contains("term_pairs="));
    assert_eq!(w, strip(spin9(&["bench", "wedge", "--jobs", "2"])));
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["verify", "--suite", "exterior", "--seed", "42", "--samples", "20"];
    let (a, b) = (spin9(&args), spin9(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
