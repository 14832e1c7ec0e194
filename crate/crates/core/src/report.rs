//! Rendering of verification reports.

use std::fmt::Write as _;

use crate::sweep::{OutputFormat, VerificationReport};

pub fn render(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Tsv => to_tsv(report),
        OutputFormat::Text => to_text(report),
    }
}

pub fn to_json(report: &VerificationReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn opt_poly(p: &Option<crate::QPoly>) -> String {
    p.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into())
}

/// One row per failure after a summary comment line. Cells never contain
/// tabs or newlines.
pub fn to_tsv(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# schema={} cases_checked={} failures={} elapsed_ms={}",
        report.schema,
        report.cases_checked,
        report.failures.len(),
        report.elapsed.as_millis()
    );
    out.push_str("theorem\tpair\tk\texpected\tactual\twitness\n");
    for f in &report.failures {
        let k = f.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            f.theorem,
            f.pair,
            k,
            opt_poly(&f.expected),
            opt_poly(&f.actual),
            f.witness.replace(['\t', '\n'], " ")
        );
    }
    out
}

pub fn to_text(report: &VerificationReport) -> String {
    let c = &report.config;
    let theorems: Vec<_> = c.theorems.iter().map(|t| t.name()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "schema {}", report.schema);
    let _ = writeln!(
        out,
        "config: max_total={} oracle_bound={} theorems={}",
        c.max_total,
        c.oracle_bound,
        theorems.join(",")
    );
    if let Some(s) = &c.sample {
        let _ = writeln!(out, "sample: count={} seed={} total={}", s.count, s.seed, s.total);
    }
    let _ = writeln!(out, "cases checked: {}", report.cases_checked);
    for (t, r) in &report.rollup {
        let _ = writeln!(out, "  {:<10} cases={} failures={}", t.name(), r.cases, r.failures);
    }
    let _ = writeln!(out, "failures: {}", report.failures.len());
    for f in &report.failures {
        let k = f.k.map(|k| format!(" k={k}")).unwrap_or_default();
        let _ = writeln!(out, "  [{}] {}{}: {}", f.theorem, f.pair, k, f.witness);
    }
    let _ = writeln!(out, "elapsed: {} ms", report.elapsed.as_millis());
    let _ = writeln!(out, "result: {}", if report.passed() { "PASS" } else { "FAIL" });
    out
}
