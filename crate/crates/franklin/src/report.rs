//! Text and JSON renderings of a [`VerificationReport`].

use std::fmt::Write as _;

use franklin_core::verifier::{PropertyId, Status, VerificationReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStyle {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    magic_sum: u64,
    properties: Vec<JsonProperty<'a>>,
    is_franklin: bool,
}

#[derive(Serialize)]
struct JsonProperty<'a> {
    id: &'a str,
    /// `null` when the property was not evaluated.
    pass: Option<bool>,
    checked: usize,
    failures: usize,
    violations: Vec<JsonViolation<'a>>,
}

#[derive(Serialize)]
struct JsonViolation<'a> {
    property: &'a str,
    location: String,
    expected: u64,
    actual: u64,
}

pub fn render(report: &VerificationReport, style: ReportStyle) -> String {
    match style {
        ReportStyle::Text => render_text(report),
        ReportStyle::Json => render_json(report),
    }
}

pub fn render_json(report: &VerificationReport) -> String {
    let properties = report
        .results()
        .iter()
        .map(|r| JsonProperty {
            id: r.id.name(),
            pass: match r.status {
                Status::Pass => Some(true),
                Status::Fail => Some(false),
                Status::NotApplicable => None,
            },
            checked: r.checked,
            failures: r.failures,
            violations: report
                .violations_for(r.id)
                .map(|v| JsonViolation {
                    property: v.property.name(),
                    location: v.location.to_string(),
                    expected: v.expected,
                    actual: v.actual,
                })
                .collect(),
        })
        .collect();
    let doc = JsonReport {
        n: report.order(),
        magic_sum: report.constants().magic_sum(),
        properties,
        is_franklin: report.is_franklin(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

pub fn render_text(report: &VerificationReport) -> String {
    let consts = report.constants();
    let mut out = String::new();
    let _ = writeln!(out, "order {}  N = {}  magic sum = {}", consts.order(), consts.complement(), consts.magic_sum());
    for (title, ids) in [("definition properties", PropertyId::DEFINITION), ("construction lemmas", PropertyId::PROOF)]
    {
        let _ = writeln!(out, "{title}:");
        for &id in ids {
            let r = report.result(id);
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a ",
            };
            if r.status == Status::NotApplicable {
                let _ = writeln!(out, "  {tag}  {id}");
                continue;
            }
            let _ = write!(out, "  {tag}  {:<22}{} checked", id.name(), r.checked);
            if r.failures > 0 {
                let _ = write!(out, ", {} failed", r.failures);
            }
            out.push('\n');
            let shown: Vec<_> = report.violations_for(id).collect();
            for v in &shown {
                let _ = writeln!(out, "        {}: expected {}, got {}", v.location, v.expected, v.actual);
            }
            if shown.len() < r.failures {
                let _ = writeln!(out, "        ... {} more", r.failures - shown.len());
            }
        }
    }
    let verdict = if report.is_franklin() { "Franklin square" } else { "not a Franklin square" };
    let _ = writeln!(out, "result: {verdict}");
    out
}
