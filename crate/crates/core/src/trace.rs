//! Step-by-step record of a factoring run and its worked-solution rendering.

use crate::quadratic::{term_string, Trinomial, Verdict};
use crate::ring::Ring;

/// Ordered log of what the pipeline did, paired with the trinomial it ran on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace<R: Ring> {
    pub input: Trinomial<R>,
    pub steps: Vec<Step<R>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step<R: Ring> {
    /// Content extraction; `gcd * primitive = input`.
    Content { gcd: R, primitive: Trinomial<R> },
    /// The product `a*c` of the primitive coefficients.
    Product { ac: R },
    /// One tested middle-term candidate; `b1 * b2 = a*c` always holds,
    /// `accepted` marks whether `b1 + b2` hit `b`.
    Candidate { b1: R, b2: R, accepted: bool },
    /// The primitive trinomial rewritten with the split middle term:
    /// `a x^2 + b1 x + b2 x + c`, where `b1 + b2 = b`.
    Rewrite { a: R, b1: R, b2: R, c: R },
    /// The 2x2 grouping array with its GCD-derived row and column labels.
    GroupArray(GroupArray<R>),
    /// Where the run ended up.
    Outcome(Verdict<R>),
}

/// One monomial entry of the grouping array: `coeff * x^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrayTerm<R: Ring> {
    pub coeff: R,
    pub power: u8,
}

impl<R: Ring> ArrayTerm<R> {
    pub fn text(&self) -> String {
        term_string(&self.coeff, self.power)
    }
}

/// The four rewritten terms laid out in a 2x2 array, with labels such that
/// `cell(i, j) = row_labels[i] * col_labels[j]`. Reading the row labels as
/// one factor and the column labels as the other gives the factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupArray<R: Ring> {
    pub cells: [[ArrayTerm<R>; 2]; 2],
    pub row_labels: [ArrayTerm<R>; 2],
    pub col_labels: [ArrayTerm<R>; 2],
}

/// Renders the trace as the fixed-width worked solution: content step,
/// factor-pair search log, middle-term rewrite, grouping array, result.
pub fn render_trace<R: Ring>(trace: &StepTrace<R>) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line(format!("factoring: {}", trace.input));
    line(format!("ring: {}", R::ring_name()));

    let mut primitive = trace.input;
    let mut search_open = false;
    for step in &trace.steps {
        match step {
            Step::Content { gcd, primitive: p } => {
                primitive = *p;
                if gcd.is_unit() {
                    line(format!("content: {gcd} (already primitive)"));
                } else {
                    line(format!("content: {gcd}; primitive part: {p}"));
                }
            }
            Step::Product { ac } => {
                line(format!(
                    "a*c = {} * {} = {ac}",
                    term_string(&primitive.a, 0),
                    term_string(&primitive.c, 0)
                ));
            }
            Step::Candidate { b1, b2, accepted } => {
                if !search_open {
                    line(format!(
                        "searching for b1 + b2 = {} with b1 * b2 = a*c:",
                        term_string(&primitive.b, 0)
                    ));
                    search_open = true;
                }
                let sum = *b1 + *b2;
                let mark = if *accepted { "   <-- found" } else { "" };
                line(format!("  {}{mark}", sum_line(b1, b2, &sum)));
            }
            Step::Rewrite { a, b1, b2, c } => {
                let mut s = String::new();
                crate::quadratic::push_term(&mut s, a, 2);
                crate::quadratic::push_term(&mut s, b1, 1);
                crate::quadratic::push_term(&mut s, b2, 1);
                crate::quadratic::push_term(&mut s, c, 0);
                line(format!("rewrite: {s}"));
            }
            Step::GroupArray(array) => {
                line("group into a 2x2 array (labels from the first-column GCD, the rest by division):".to_string());
                for row in render_array(array) {
                    line(format!("  {row}"));
                }
            }
            Step::Outcome(verdict) => {
                line(format!("result: {verdict}"));
                if verdict.is_factored() {
                    line(format!(
                        "check: expanding the result reproduces {}",
                        trace.input
                    ));
                }
            }
        }
    }
    out
}

/// `b1 + b2 = sum` with the second operand's sign folded into the join,
/// mirroring how the sums are written by hand.
fn sum_line<R: Ring>(b1: &R, b2: &R, sum: &R) -> String {
    let lhs = term_string(b1, 0);
    let rhs = term_string(b2, 0);
    let joined = match rhs.strip_prefix('-') {
        Some(rest) => format!("{lhs} - {rest}"),
        None => format!("{lhs} + {rhs}"),
    };
    format!("{joined} = {}", term_string(sum, 0))
}

fn render_array<R: Ring>(array: &GroupArray<R>) -> Vec<String> {
    let row_texts = [array.row_labels[0].text(), array.row_labels[1].text()];
    let width = row_texts.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut rows = Vec::with_capacity(3);
    rows.push(format!(
        "{:width$} | {} | {}",
        "",
        array.col_labels[0].text(),
        array.col_labels[1].text()
    ));
    for (label, cells) in row_texts.iter().zip(&array.cells) {
        rows.push(format!(
            "{label:width$} | {} | {}",
            cells[0].text(),
            cells[1].text()
        ));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_quadratic;
    use crate::integer::Int;
    use crate::quadratic::Trinomial;

    fn zt(a: i128, b: i128, c: i128) -> Trinomial<Int> {
        Trinomial::new(Int::new(a), Int::new(b), Int::new(c)).unwrap()
    }

    #[test]
    fn worked_solution_shows_the_array_and_labels() {
        let report = factor_quadratic(&zt(6, 7, -24)).unwrap();
        let text = render_trace(&report.trace);
        assert!(text.contains("6x^2 | 16x"), "missing top row:\n{text}");
        assert!(text.contains("-9x | -24"), "missing bottom row:\n{text}");
        assert!(text.contains("| 3x | 8"), "missing column labels:\n{text}");
        assert!(text.contains("rewrite: 6x^2+16x-9x-24"), "{text}");
        assert!(text.contains("result: (2x-3)(3x+8)"), "{text}");

        let report = factor_quadratic(&zt(15, -29, -14)).unwrap();
        let text = render_trace(&report.trace);
        assert!(text.contains("15x^2 | -35x"), "{text}");
        assert!(text.contains("6x | -14"), "{text}");
        assert!(text.contains("| 3x | -7"), "{text}");
        for label in ["5x", "2", "3x", "-7"] {
            assert!(text.contains(label), "missing label {label}:\n{text}");
        }
        assert!(text.contains("42 - 5 = 37"), "candidate log:\n{text}");
        assert!(text.contains("-35 + 6 = -29   <-- found"), "{text}");
    }

    #[test]
    fn irreducible_trace_renders_without_an_array() {
        let report = factor_quadratic(&zt(1, 1, 1)).unwrap();
        let text = render_trace(&report.trace);
        assert!(text.contains("searching for b1 + b2 = 1"), "{text}");
        assert!(text.contains("result: irreducible: x^2+x+1"), "{text}");
        assert!(
            !text.contains('|'),
            "no array for an irreducible input:\n{text}"
        );
    }

    #[test]
    fn content_step_renders_both_ways() {
        let report = factor_quadratic(&zt(2, 4, 2)).unwrap();
        let text = render_trace(&report.trace);
        assert!(
            text.contains("content: 2; primitive part: x^2+2x+1"),
            "{text}"
        );

        let report = factor_quadratic(&zt(4, 8, 3)).unwrap();
        let text = render_trace(&report.trace);
        assert!(text.contains("content: 1 (already primitive)"), "{text}");
    }
}
