//! Deterministic `key: value` rendering of a decision report.

use std::fmt::Write as _;

use lti_bounded::kernel::{ChainStatus, SignChainReport};
use lti_bounded::{DecisionReport, IntPoly};

/// Coefficients in descending order, space separated.
pub fn coeff_list(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn status(s: ChainStatus) -> String {
    match s {
        ChainStatus::AllNonzeroMinors => "all-nonzero".into(),
        ChainStatus::S1 { m } => format!("gcd-reached m={m}"),
        ChainStatus::S2 { k } => format!("degree-drop k={k}"),
        ChainStatus::NotStepOne => "initial-gap".into(),
    }
}

fn chain(out: &mut String, prefix: &str, c: &SignChainReport) {
    let signs: Vec<&str> = c
        .leading_signs
        .iter()
        .map(|&s| if s > 0 { "+" } else { "-" })
        .collect();
    let minors: Vec<String> = c.leading_minors.iter().map(ToString::to_string).collect();
    writeln!(out, "{prefix}.status: {}", status(c.status)).unwrap();
    writeln!(out, "{prefix}.leading_signs: {}", signs.join(" ")).unwrap();
    writeln!(out, "{prefix}.leading_minors: {}", minors.join(" ")).unwrap();
}

pub fn render(report: &DecisionReport, timings: bool) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| writeln!(out, "{k}: {v}").unwrap();
    kv("verdict", report.verdict.answer().into());
    kv("mode", report.mode.to_string());
    kv("explanation", report.explanation());
    kv("denominator", report.denominator.to_string());
    kv("denominator_ignored", report.denominator_ignored.to_string());
    kv("minimal_polynomial.degree", report.minimal_poly.degree().to_string());
    kv(
        "minimal_polynomial.coeffs",
        coeff_list(&report.minimal_poly.to_poly()),
    );
    kv("scaled_polynomial", coeff_list(&report.scaled_poly));
    if let Some(m) = &report.moebius {
        kv("moebius.transformed", coeff_list(&m.transformed));
        kv("moebius.delta", m.delta.to_string());
        kv("moebius.output", coeff_list(&m.output));
    }
    kv("kernel.input", coeff_list(&report.kernel_input));
    kv("kernel.reason", report.kernel.reason.to_string());
    if let Some(c) = &report.kernel.chain {
        chain(&mut out, "kernel.chain", c);
    }
    if !report.kernel.p_ext0.is_zero() {
        writeln!(out, "kernel.gcd_part: {}", coeff_list(&report.kernel.p_ext0)).unwrap();
    }
    if let Some(c) = &report.kernel.sturm {
        chain(&mut out, "kernel.sturm", c);
    }
    let b = &report.bit_stats;
    for (k, v) in [
        ("bits.input", b.input),
        ("bits.minpoly_powers", b.minpoly_powers),
        ("bits.minpoly_solver", b.minpoly_solver),
        ("bits.scaled_polynomial", b.scaled_poly),
        ("bits.kernel_minors", b.kernel_minors),
    ] {
        writeln!(out, "{k}: {v}").unwrap();
    }
    if timings {
        for t in &report.timings {
            writeln!(out, "time.{}_us: {}", t.stage, t.elapsed.as_micros()).unwrap();
        }
        writeln!(out, "time.total_us: {}", report.total_time().as_micros()).unwrap();
    }
    out
}
