//! Output rendering: one-line product, full worked solution, or a single
//! JSON object.

use acfactor::{render_trace, FactorReport, Ring, Step, Verdict};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// One line, e.g. `(2x+1)(2x+3)`, with any unit/content prefixed.
    Text,
    /// The step trace rendered as a worked solution.
    Worked,
    /// Newline-terminated single-object JSON.
    Structured,
}

pub fn render_result<R: Ring>(report: &FactorReport<R>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => report.factorization.verdict.to_string(),
        OutputFormat::Worked => render_trace(&report.trace),
        OutputFormat::Structured => structured(report).to_string(),
    }
}

/// Exit status for a completed run: 0 factored, 2 irreducible,
/// 3 not applicable. (Usage and parse errors exit 1.)
pub fn exit_code<R: Ring>(report: &FactorReport<R>) -> i32 {
    match report.factorization.verdict {
        Verdict::Factored { .. } => 0,
        Verdict::Irreducible { .. } => 2,
        Verdict::NotApplicable { .. } => 3,
    }
}

fn structured<R: Ring>(report: &FactorReport<R>) -> Value {
    let verdict = &report.factorization.verdict;
    let mut object = json!({
        "status": status(verdict),
        "ring": R::ring_name(),
        "input": report.factorization.input.to_string(),
        "unit": "1",
        "content": "1",
        "factors": [],
        "trace": trace_records(report),
    });
    match verdict {
        Verdict::Factored {
            unit,
            content,
            first,
            second,
        } => {
            object["unit"] = json!(unit.to_string());
            object["content"] = json!(content.to_string());
            object["factors"] = json!([
                {"leading": first.leading.to_string(), "constant": first.constant.to_string()},
                {"leading": second.leading.to_string(), "constant": second.constant.to_string()},
            ]);
        }
        Verdict::Irreducible { content, .. } => {
            object["content"] = json!(content.to_string());
        }
        Verdict::NotApplicable { reason } => {
            object["reason"] = json!(reason);
        }
    }
    object
}

fn status<R: Ring>(verdict: &Verdict<R>) -> &'static str {
    match verdict {
        Verdict::Factored { .. } => "factored",
        Verdict::Irreducible { .. } => "irreducible",
        Verdict::NotApplicable { .. } => "not_applicable",
    }
}

fn trace_records<R: Ring>(report: &FactorReport<R>) -> Vec<Value> {
    report
        .trace
        .steps
        .iter()
        .map(|step| match step {
            Step::Content { gcd, primitive } => json!({
                "type": "content",
                "gcd": gcd.to_string(),
                "primitive": primitive.to_string(),
            }),
            Step::Product { ac } => json!({
                "type": "product",
                "ac": ac.to_string(),
            }),
            Step::Candidate { b1, b2, accepted } => json!({
                "type": "candidate",
                "b1": b1.to_string(),
                "b2": b2.to_string(),
                "accepted": accepted,
            }),
            Step::Rewrite { a, b1, b2, c } => json!({
                "type": "rewrite",
                "a": a.to_string(),
                "b1": b1.to_string(),
                "b2": b2.to_string(),
                "c": c.to_string(),
            }),
            Step::GroupArray(array) => json!({
                "type": "group_array",
                "cells": [
                    [array.cells[0][0].text(), array.cells[0][1].text()],
                    [array.cells[1][0].text(), array.cells[1][1].text()],
                ],
                "row_labels": [array.row_labels[0].text(), array.row_labels[1].text()],
                "col_labels": [array.col_labels[0].text(), array.col_labels[1].text()],
            }),
            Step::Outcome(verdict) => json!({
                "type": "result",
                "status": status(verdict),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use acfactor::{factor_quadratic, Int, Trinomial};

    fn report_for(a: i128, b: i128, c: i128) -> FactorReport<Int> {
        let t = Trinomial::new(Int::new(a), Int::new(b), Int::new(c)).unwrap();
        factor_quadratic(&t).unwrap()
    }

    #[test]
    fn text_format_matches_the_introductory_example() {
        let report = report_for(4, 8, 3);
        assert_eq!(render_result(&report, OutputFormat::Text), "(2x+1)(2x+3)");
        assert_eq!(exit_code(&report), 0);
    }

    #[test]
    fn worked_format_contains_the_array_lines() {
        let report = report_for(15, -29, -14);
        let text = render_result(&report, OutputFormat::Worked);
        assert!(text.contains("15x^2 | -35x"), "{text}");
        assert!(text.contains("6x | -14"), "{text}");
    }

    #[test]
    fn structured_format_has_the_declared_fields() {
        let report = report_for(4, 8, 3);
        let value: Value =
            serde_json::from_str(&render_result(&report, OutputFormat::Structured)).unwrap();
        assert_eq!(value["status"], "factored");
        assert_eq!(value["ring"], "integers");
        assert_eq!(value["unit"], "1");
        assert_eq!(value["content"], "1");
        assert_eq!(value["factors"][0]["leading"], "2");
        assert_eq!(value["factors"][0]["constant"], "1");
        assert_eq!(value["factors"][1]["constant"], "3");
        assert!(value["trace"].as_array().unwrap().len() >= 4);

        let report = report_for(1, 1, 1);
        let value: Value =
            serde_json::from_str(&render_result(&report, OutputFormat::Structured)).unwrap();
        assert_eq!(value["status"], "irreducible");
        assert_eq!(value["factors"].as_array().unwrap().len(), 0);
        assert_eq!(exit_code(&report), 2);

        let report = report_for(1, 1, 0);
        let value: Value =
            serde_json::from_str(&render_result(&report, OutputFormat::Structured)).unwrap();
        assert_eq!(value["status"], "not_applicable");
        assert_eq!(value["reason"], "c=0, factor x directly");
        assert_eq!(exit_code(&report), 3);
    }
}
