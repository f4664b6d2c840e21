use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::mass::{MassFunction, PignisticDistribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

/// Outcome of one fusion run.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionReport {
    pub rule: String,
    pub params: BTreeMap<String, String>,
    pub experts: usize,
    /// Focal sets with positive mass, in bitmask order.
    pub masses: MassFunction,
    /// Global conflict `k` of the (possibly discounted) inputs.
    pub conflict: f64,
    /// `None` when all the combined mass sits on ∅.
    pub pignistic: Option<PignisticDistribution>,
    /// Wall-clock time of the combination, when timing was requested.
    pub duration: Option<Duration>,
}

fn fixed(value: f64) -> String {
    format!("{value:.6}")
}

pub fn format_report(report: &FusionReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => format_text(report),
        ReportFormat::Json => format_json(report),
        ReportFormat::Csv => format_csv(report),
    }
}

fn params_line(report: &FusionReport) -> String {
    if report.params.is_empty() {
        "-".to_string()
    } else {
        report
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn format_text(report: &FusionReport) -> String {
    let frame = report.masses.frame();
    let rows: Vec<(String, f64)> = report.masses.iter().map(|(s, m)| (frame.format(s), m)).collect();
    let width = rows
        .iter()
        .map(|(e, _)| e.chars().count())
        .chain(frame.labels().iter().map(|l| l.chars().count()))
        .chain(["focal set".len(), "conflict".len()])
        .max()
        .unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {}", "rule", report.rule);
    let _ = writeln!(out, "{:<width$}  {}", "params", params_line(report));
    let _ = writeln!(out, "{:<width$}  {}", "experts", report.experts);
    let _ = writeln!(out, "{:<width$}  {}", "conflict", fixed(report.conflict));
    out.push('\n');
    let _ = writeln!(out, "{:<width$}  {:>8}", "focal set", "mass");
    for (expr, mass) in &rows {
        let _ = writeln!(out, "{expr:<width$}  {:>8}", fixed(*mass));
    }
    out.push('\n');
    match &report.pignistic {
        Some(bet) => {
            let _ = writeln!(out, "{:<width$}  {:>8}", "singleton", "betP");
            for (label, p) in bet.iter() {
                let _ = writeln!(out, "{label:<width$}  {:>8}", fixed(p));
            }
            let _ = writeln!(out, "{:<width$}  {}", "decision", bet.decision());
        }
        None => {
            let _ = writeln!(out, "pignistic undefined: all mass on the empty set");
        }
    }
    if let Some(d) = report.duration {
        let _ = writeln!(out, "{:<width$}  {:.3} ms", "duration", d.as_secs_f64() * 1e3);
    }
    out
}

fn format_csv(report: &FusionReport) -> String {
    let frame = report.masses.frame();
    let mut out = String::from("focal_set,mass\n");
    for (set, mass) in report.masses.iter() {
        let _ = writeln!(out, "{},{}", frame.format(set), fixed(mass));
    }
    out
}

fn format_json(report: &FusionReport) -> String {
    let frame = report.masses.frame();
    let masses: Map<String, Value> = report
        .masses
        .iter()
        .map(|(s, m)| (frame.format(s), json!(m)))
        .collect();
    let pignistic = match &report.pignistic {
        Some(bet) => Value::Object(bet.iter().map(|(l, p)| (l.to_string(), json!(p))).collect()),
        None => Value::Null,
    };
    let params: Map<String, Value> = report
        .params
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    let duration = report
        .duration
        .map_or(Value::Null, |d| json!(d.as_secs_f64() * 1e3));
    let doc = json!({
        "rule": report.rule,
        "params": params,
        "experts": report.experts,
        "masses": masses,
        "conflict": report.conflict,
        "pignistic": pignistic,
        "duration_ms": duration,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::frame::Frame;

    fn vacuous_report() -> FusionReport {
        let f = Arc::new(Frame::new(["A", "B"]).unwrap());
        let m = MassFunction::vacuous(&f);
        FusionReport {
            rule: "dempster".into(),
            params: BTreeMap::new(),
            experts: 2,
            pignistic: Some(m.pignistic().unwrap()),
            masses: m,
            conflict: 0.0,
            duration: None,
        }
    }

    #[test]
    fn json_vacuous() {
        let text = format_report(&vacuous_report(), ReportFormat::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["masses"], json!({"THETA": 1.0}));
        assert!(text.contains("\"THETA\": 1.0"));
        assert_eq!(v["duration_ms"], Value::Null);
    }

    #[test]
    fn text_header_names_rule() {
        let mut report = vacuous_report();
        report.rule = "mdpcr".into();
        report.params = BTreeMap::from([("alpha".into(), "pairwise".into()), ("delta".into(), "min".into())]);
        let text = format_report(&report, ReportFormat::Text);
        let first: Vec<&str> = text.lines().take(2).collect();
        assert!(first[0].starts_with("rule") && first[0].ends_with("mdpcr"));
        assert!(first[1].ends_with("alpha=pairwise delta=min"));
        assert!(text.contains("THETA      1.000000"));
    }

    #[test]
    fn six_decimals_round_half_even() {
        // 2^-7 = 0.0078125 and 3·2^-7 = 0.0234375 are exact ties at 6 decimals.
        assert_eq!(fixed(0.0078125), "0.007812");
        assert_eq!(fixed(0.0234375), "0.023438");
        assert_eq!(fixed(1.0), "1.000000");
    }

    #[test]
    fn csv_rows() {
        let text = format_report(&vacuous_report(), ReportFormat::Csv);
        assert_eq!(text, "focal_set,mass\nTHETA,1.000000\n");
    }
}
