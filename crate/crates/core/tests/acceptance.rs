//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use spin9::bpt;
use spin9::canonical::{self, ExportFormat, TwoForms};
use spin9::exterior::{lie_derivative, pullback};
use spin9::operators::{build_involutions, rotation, standard_family, RationalCirclePoint};
use spin9::rational::{frac, int};
use spin9::stabilizer;
use spin9::suites::{self, RunConfig, Suite};
use spin9::{Octonion, VerificationReport, Vector16};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn timed<F: FnOnce() -> Outcome>(limit: Duration, f: F) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.passed &= took < limit;
    o.detail = format!("{} time={:.2}s limit={}s", o.detail, took.as_secs_f64(), limit.as_secs());
    o
}

/// All listed checks present and passing.
fn checks(report: &VerificationReport, ids: &[&str]) -> Outcome {
    let missing: Vec<&str> = ids.iter().copied().filter(|id| !report.get(id).is_some_and(|c| c.passed)).collect();
    let detail = ids
        .iter()
        .filter_map(|id| report.get(id))
        .flat_map(|c| c.values.iter().filter(|(k, _)| k != "cases").map(|(k, v)| format!("{k}={v}")))
        .collect::<Vec<_>>()
        .join(" ");
    if missing.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("failing={}", missing.join(",")))
    }
}

fn first_block() -> Vec<Vector16> {
    (0..8).map(Vector16::basis).collect()
}

fn c1() -> Outcome {
    timed(Duration::from_secs(10), || {
        let t = TwoForms::new(&build_involutions());
        let omega = canonical::canonical_8form_literal(&t);
        let v = omega.eval(&first_block()).unwrap();
        let oracle = canonical::eval_via_w_tilde();
        outcome(v == int(-20160) && v == oracle, format!("omega8_eval={v} oracle={oracle}"))
    })
}

fn c2() -> Outcome {
    let omega = canonical::canonical_8form();
    let a = canonical::export_coefficients(omega, ExportFormat::JsonLines);
    let b = canonical::export_coefficients(omega, ExportFormat::JsonLines);
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    outcome(omega.len() == 702 && lines == 702 && a == b, format!("omega8_terms={} export_lines={lines}", omega.len()))
}

fn c3() -> Outcome {
    timed(Duration::from_secs(60), || {
        let f = standard_family();
        let omega = canonical::canonical_8form();
        let pairs: Vec<(usize, usize)> = (0..9).flat_map(|i| (i + 1..9).map(move |j| (i, j))).collect();
        let lie = pairs.iter().filter(|&&(k, l)| lie_derivative(omega, &f.pair(k, l)).is_zero()).count();
        let mut fixed = 0;
        for p in [(frac(3, 5), frac(4, 5)), (frac(5, 13), frac(12, 13))] {
            let p = RationalCirclePoint::rotation(p.0, p.1).unwrap();
            fixed += pairs.iter().filter(|&&(k, l)| pullback(omega, &rotation(f, k, l, &p).unwrap()) == *omega).count();
        }
        outcome(lie == 36 && fixed == 72, format!("lie_zero={lie}/36 rotations_fixing={fixed}/72"))
    })
}

fn c4() -> Outcome {
    let u = Octonion::unit;
    let cases = [((0, 0, 1, 1), -24), ((0, 0, 1, 2), -8), ((0, 1, 2, 3), -8), ((0, 1, 2, 4), -8)];
    let mut ok = true;
    let mut vals = Vec::new();
    for ((a, b, c, d), want) in cases {
        let start = Instant::now();
        let w = canonical::w_tilde(&u(a), &u(b), &u(c), &u(d));
        ok &= w == int(want) && start.elapsed() < Duration::from_secs(1);
        vals.push(w.to_string());
    }
    outcome(ok, format!("values={}", vals.join(",")))
}

fn c5(canonical_report: &VerificationReport) -> Outcome {
    checks(
        canonical_report,
        &["canonical.omega_square_sum_vanishes", "canonical.sigma_square_sum_vanishes", "canonical.cyclic_identity"],
    )
}

fn c6() -> Outcome {
    timed(Duration::from_secs(600), || {
        let r = suites::run(Suite::Stabilizer, &RunConfig::default()).unwrap();
        let exclusions = r.checks().iter().filter(|c| c.id.starts_with("stabilizer.lambda")).all(|c| c.passed);
        let base = checks(&r, &["stabilizer.kernel", "stabilizer.lambda1.boost(5/4,3/4)", "stabilizer.lambda3.witness"]);
        outcome(base.passed && exclusions, base.detail)
    })
}

fn c7(curv: &VerificationReport) -> Outcome {
    checks(
        curv,
        &[
            "curvature.agree_on_basis",
            "curvature.agree_on_random",
            "curvature.bianchi",
            "curvature.pair_symmetries",
            "curvature.averaging",
            "curvature.sandwich_sum",
        ],
    )
}

fn c8(curv: &VerificationReport) -> Outcome {
    checks(curv, &["curvature.pinching_endpoints", "curvature.pinching"])
}

fn c9(canonical_report: &VerificationReport) -> Outcome {
    checks(canonical_report, &["canonical.friedrich.flat", "canonical.friedrich.twisted"])
}

fn c10() -> Outcome {
    timed(Duration::from_secs(30), || {
        let r = suites::run(Suite::Bpt, &RunConfig::default()).unwrap();
        let base = checks(&r, &["bpt.defect", "bpt.reduced_set", "bpt.full_and_reduced_agree"]);
        let direct = bpt::bpt_invariance_defect().total() == int(108);
        outcome(base.passed && direct, base.detail)
    })
}

fn c11() -> Outcome {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_spin9")).args(["conjecture", "--jobs", jobs]).output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    let (a, b, c) = (run("1"), run("1"), run("4"));
    let verdict = a.1.lines().next().unwrap_or("").to_string();
    let definitive = verdict == "conjecture: EQUAL (convention=antisymmetric)"
        || verdict == "conjecture: NOT-EQUAL (convention=antisymmetric)";
    let ok = definitive && a == b && a == c && a.0 == Some(0);
    outcome(ok, format!("verdict={}", verdict.trim_start_matches("conjecture: ").replace(' ', "")))
}

fn c12() -> Outcome {
    let (direct, forms, same) = stabilizer::symplectic_oracle().unwrap();
    outcome(direct == 10 && forms == 10 && same, format!("sp4_dim={forms} direct_dim={direct}"))
}

fn main() {
    let config = RunConfig::default();
    let canonical_report = suites::run(Suite::Canonical, &config).unwrap();
    let curv = suites::run(Suite::Curvature, &config).unwrap();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("anchor_value", c1()),
        ("term_count", c2()),
        ("invariance", c3()),
        ("w_tilde_anchors", c4()),
        ("vanishing_identities", c5(&canonical_report)),
        ("stabilizer", c6()),
        ("curvature_equivalence", c7(&curv)),
        ("pinching", c8(&curv)),
        ("friedrich", c9(&canonical_report)),
        ("bpt_audit", c10()),
        ("conjecture", c11()),
        ("oracle_anchor", c12()),
    ];
    let mut failed = 0;
    for (n, (name, o)) in criteria.iter().enumerate() {
        println!("criterion {:02} {name} {} {}", n + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
