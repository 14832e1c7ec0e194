use std::process::Command;

use cyclic_shuffle::error::Error;
use cyclic_shuffle::sweep::{run_sweep_with, ClosedForms, Sample, SweepConfig, Theorem};
use cyclic_shuffle::theorems::CyclicShufflePair;
use cyclic_shuffle::{cyclic_stanley_rhs, report, run_sweep, LinearPerm, QPoly};

fn config(max_total: usize, theorems: &[Theorem]) -> SweepConfig {
    SweepConfig {
        max_total,
        oracle_bound: max_total.min(5),
        theorems: theorems.iter().copied().collect(),
        ..SweepConfig::default()
    }
}

fn off_by_one_cyclic(pair: &CyclicShufflePair, k: i64) -> QPoly {
    let good = cyclic_stanley_rhs(pair, k);
    if k == 1 {
        good.add(&QPoly::monomial(1, 0))
    } else {
        good
    }
}

fn shifted_stanley(s: &LinearPerm, p: &LinearPerm, k: i64) -> cyclic_shuffle::Result<QPoly> {
    Ok(cyclic_shuffle::stanley_rhs(s, p, k)?.shift(1))
}

fn report_json(r: &cyclic_shuffle::VerificationReport) -> String {
    report::to_json(r)
        .lines()
        .filter(|l| !l.contains("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn correct_forms_pass() {
    let r = run_sweep(&config(6, &Theorem::ALL)).unwrap();
    assert!(r.passed(), "{}", report::to_text(&r));
    assert_eq!(r.exit_status(), 0);
    assert!(r.cases_checked > 0);
    assert_eq!(r.rollup.values().map(|x| x.cases).sum::<u64>(), r.cases_checked);
}

#[test]
fn corrupted_cyclic_form_is_caught() {
    let forms = ClosedForms {
        cyclic: off_by_one_cyclic,
        ..ClosedForms::default()
    };
    let r = run_sweep_with(&config(5, &[Theorem::Cyclic]), &forms).unwrap();
    assert!(!r.failures.is_empty());
    assert_eq!(r.exit_status(), 1);
    let f = &r.failures[0];
    assert_eq!(f.theorem, Theorem::Cyclic);
    assert_eq!(f.k, Some(1));
    assert_ne!(f.expected, f.actual);
    assert!(report::to_tsv(&r).lines().count() == 2 + r.failures.len());
}

#[test]
fn corrupted_linear_form_is_caught() {
    let forms = ClosedForms {
        stanley: shifted_stanley,
        ..ClosedForms::default()
    };
    let r = run_sweep_with(&config(4, &[Theorem::Stanley]), &forms).unwrap();
    assert_eq!(r.exit_status(), 1);
    assert!(r.failures.iter().all(|f| f.theorem == Theorem::Stanley));
}

#[test]
fn corrupted_count_is_caught() {
    fn plus_one(m: i64, n: i64, r: i64, s: i64, k: i64) -> cyclic_shuffle::Result<u64> {
        Ok(cyclic_shuffle::agrr_count(m, n, r, s, k)? + 1)
    }
    let forms = ClosedForms {
        agrr: plus_one,
        ..ClosedForms::default()
    };
    let r = run_sweep_with(&config(4, &[Theorem::Agrr]), &forms).unwrap();
    assert_eq!(r.exit_status(), 1);
}

#[test]
fn reports_are_deterministic() {
    let c = config(6, &Theorem::ALL);
    let a = run_sweep(&c).unwrap();
    let b = run_sweep(&c).unwrap();
    assert_eq!(report_json(&a), report_json(&b));
}

#[test]
fn sampled_runs_reproduce() {
    let mut c = config(5, &Theorem::ALL);
    c.sample = Some(Sample {
        count: 12,
        seed: 99,
        total: 9,
    });
    let a = run_sweep(&c).unwrap();
    let b = run_sweep(&c).unwrap();
    assert!(a.passed());
    assert_eq!(a.sampled_pairs.len(), 24);
    assert_eq!(report_json(&a), report_json(&b));

    c.sample = Some(Sample {
        count: 12,
        seed: 100,
        total: 9,
    });
    let d = run_sweep(&c).unwrap();
    assert_ne!(a.sampled_pairs, d.sampled_pairs);
}

#[test]
fn resource_guards_and_bad_configs() {
    let mut c = config(10, &Theorem::ALL);
    assert!(matches!(run_sweep(&c), Err(Error::ResourceGuard { .. })));
    c.max_total = 6;
    c.sample = Some(Sample {
        count: 1,
        seed: 0,
        total: 17,
    });
    assert!(matches!(run_sweep(&c), Err(Error::ResourceGuard { .. })));
    c.sample = None;
    c.theorems.clear();
    assert!(matches!(run_sweep(&c), Err(Error::InvalidConfig(_))));
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-shuffle"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn cli_exit_codes() {
    assert_eq!(cli(&["stats", "4,1,3,2", "--cyclic"]).0, 0);
    assert_eq!(cli(&["stats", "4,0"]).0, 2);
    assert_eq!(cli(&["stats", "4,4"]).0, 2);
    assert_eq!(cli(&["no-such-command"]).0, 2);
    let (code, _, err) = cli(&["shuffles", "--sigma", "6,3", "--pi", "3,1"]);
    assert_eq!(code, 3, "{err}");
    assert_eq!(cli(&["verify", "--max-total", "12"]).0, 4);
    assert_eq!(cli(&["verify", "--max-total", "3", "--output", "/nonexistent/dir/r.json"]).0, 5);
}

#[test]
fn cli_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.tsv");
    let (code, stdout, _) = cli(&[
        "verify",
        "--max-total",
        "4",
        "--format",
        "tsv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# schema=1 "));
    assert_eq!(text.lines().nth(1), Some("theorem\tpair\tk\texpected\tactual\twitness"));
    assert_eq!(text.lines().count(), 2);
}
