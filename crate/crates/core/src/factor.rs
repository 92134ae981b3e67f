//! The factoring pipeline: split the middle coefficient `b` into `b1 + b2`
//! with `b1 * b2 = a*c`, recover the binomials by GCD grouping, normalize,
//! and verify by expansion.

use crate::error::{Error, Result};
use crate::quadratic::{
    content_extract, expand, Factorization, LinearBinomial, SplitPair, Trinomial, Verdict,
};
use crate::ring::{Ring, Unit, DEFAULT_MAX_AC};
use crate::trace::{ArrayTerm, GroupArray, Step, StepTrace};

#[derive(Debug, Clone, Copy)]
pub struct FactorOptions {
    /// Bound on `norm(a*c)` of the primitive part; inputs whose split search
    /// would have to factor anything larger are rejected with
    /// [`Error::InputTooLarge`].
    pub max_ac: u128,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            max_ac: DEFAULT_MAX_AC,
        }
    }
}

/// A factorization together with the step trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport<R: Ring> {
    pub factorization: Factorization<R>,
    pub trace: StepTrace<R>,
}

/// Searches for `(b1, b2)` with `b1 * b2 = a*c` and `b1 + b2 = b`.
///
/// The search is exhaustive over associate classes: every unordered factor
/// pair of `a*c` is visited once, via the canonical divisors `d` with
/// `norm(d)^2 <= norm(a*c)` in ascending `(norm, re, im)` order, crossed with
/// the unit group in its declared order. Within a pair, the middle terms are
/// ordered the way the sums are worked by hand: when `a*c` is canonical
/// (positive, for integers) the divisor side carries the unit and comes
/// first; otherwise the cofactor side does, so the larger factor carries the
/// sign of `b`. The first candidate whose sum hits `b` wins; `None` is
/// returned only after every candidate fails.
///
/// # Panics
///
/// The trinomial must be primitive with `c != 0`.
pub fn find_split<R: Ring>(t: &Trinomial<R>, opts: &FactorOptions) -> Result<Option<SplitPair<R>>> {
    let mut steps = Vec::new();
    search_split(t, opts, &mut steps)
}

fn search_split<R: Ring>(
    t: &Trinomial<R>,
    opts: &FactorOptions,
    steps: &mut Vec<Step<R>>,
) -> Result<Option<SplitPair<R>>> {
    assert!(!t.c.is_zero(), "find_split requires c != 0");
    assert!(
        t.a.gcd(&t.b).gcd(&t.c).is_unit(),
        "find_split requires a primitive trinomial"
    );

    let ac = t.a.checked_mul(&t.c).ok_or(Error::InputTooLarge)?;
    let ac_norm = ac.checked_norm().ok_or(Error::InputTooLarge)?;
    if ac_norm > opts.max_ac {
        return Err(Error::InputTooLarge);
    }
    steps.push(Step::Product { ac });

    let ac_canonical = ac.is_canonical();
    let divisors = ac.factor_into_primes(opts.max_ac)?.divisors();
    for d in divisors {
        let d_norm = d.norm();
        // Divisors are norm-sorted; only the small half leads a pair.
        match d_norm.checked_mul(d_norm) {
            Some(sq) if sq <= ac_norm => {}
            _ => break,
        }
        let cofactor = ac.exact_div(&d).expect("canonical divisor divides a*c");
        for &v in R::units() {
            let v_inv = Unit::new(v).expect("unit group element").inverse().value();
            let (b1, b2) = if ac_canonical {
                (v * d, v_inv * cofactor)
            } else {
                (v * cofactor, v_inv * d)
            };
            let accepted = b1.checked_add(&b2) == Some(t.b);
            steps.push(Step::Candidate { b1, b2, accepted });
            if accepted {
                return Ok(Some(SplitPair { b1, b2 }));
            }
        }
    }
    Ok(None)
}

/// Factors a primitive trinomial by grouping, given a valid split:
/// `A = gcd(a, b1)`, `C = a / A`, `D = b1 / A`, `B = c / D`, returning
/// `(Ax + B, Cx + D)` whose product is exactly the input.
///
/// # Panics
///
/// The split must satisfy `b1 * b2 = a*c` and `b1 + b2 = b`, and the
/// trinomial must be primitive. An expansion mismatch after a valid split is
/// a defect and also panics rather than returning a wrong answer.
pub fn group_factor<R: Ring>(
    t: &Trinomial<R>,
    split: &SplitPair<R>,
) -> (LinearBinomial<R>, LinearBinomial<R>) {
    assert!(
        split.b1 * split.b2 == t.a * t.c && split.b1 + split.b2 == t.b,
        "group_factor requires a valid split of the trinomial"
    );
    assert!(
        t.a.gcd(&t.b).gcd(&t.c).is_unit(),
        "group_factor requires a primitive trinomial"
    );

    let a_lead = t.a.gcd(&split.b1);
    let c_lead = t.a.exact_div(&a_lead).expect("gcd divides a");
    let d_const = split.b1.exact_div(&a_lead).expect("gcd divides b1");
    // gcd(C, D) is a unit and D divides C*c (= b2*D up to regrouping), so D
    // divides c; B*C = a*c/b1 = b2 then forces the cross terms to sum to b.
    let b_const =
        t.c.exact_div(&d_const)
            .expect("D divides c for a valid split");

    let f1 = LinearBinomial {
        leading: a_lead,
        constant: b_const,
    };
    let f2 = LinearBinomial {
        leading: c_lead,
        constant: d_const,
    };
    let check =
        expand(Unit::one(), R::one(), &f1, &f2).expect("verification expansion stays in range");
    assert!(
        check == *t,
        "defect: grouping produced ({f1})({f2}) which does not expand to {t}"
    );
    (f1, f2)
}

/// Runs the whole pipeline on `t` with default options.
pub fn factor_quadratic<R: Ring>(t: &Trinomial<R>) -> Result<FactorReport<R>> {
    factor_quadratic_with(t, &FactorOptions::default())
}

/// Content extraction, split search, grouping, unit normalization, ordering,
/// and a final verification that the result expands back to the input.
pub fn factor_quadratic_with<R: Ring>(
    t: &Trinomial<R>,
    opts: &FactorOptions,
) -> Result<FactorReport<R>> {
    if t.a.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if !(t.a.within_input_bound() && t.b.within_input_bound() && t.c.within_input_bound()) {
        return Err(Error::InputTooLarge);
    }

    let mut steps = Vec::new();
    if t.c.is_zero() {
        let verdict = Verdict::NotApplicable {
            reason: "c=0, factor x directly",
        };
        steps.push(Step::Outcome(verdict.clone()));
        return Ok(report(t, verdict, steps));
    }

    let (content, primitive) = content_extract(t);
    steps.push(Step::Content {
        gcd: content,
        primitive,
    });

    let split = match search_split(&primitive, opts, &mut steps)? {
        Some(split) => split,
        None => {
            let verdict = Verdict::Irreducible { content, primitive };
            steps.push(Step::Outcome(verdict.clone()));
            return Ok(report(t, verdict, steps));
        }
    };
    steps.push(Step::Rewrite {
        a: primitive.a,
        b1: split.b1,
        b2: split.b2,
        c: primitive.c,
    });

    let (f1, f2) = group_factor(&primitive, &split);
    steps.push(Step::GroupArray(derive_array(&primitive, &split)));

    let (u1, f1) = f1.canonicalize();
    let (u2, f2) = f2.canonicalize();
    let unit = u1 * u2;
    let (first, second) = if f1.sort_key() <= f2.sort_key() {
        (f1, f2)
    } else {
        (f2, f1)
    };

    let verdict = Verdict::Factored {
        unit,
        content,
        first,
        second,
    };
    let check =
        expand(unit, content, &first, &second).expect("verification expansion stays in range");
    assert!(
        check == *t,
        "defect: factorization {verdict} does not expand to {t}"
    );
    steps.push(Step::Outcome(verdict.clone()));
    Ok(report(t, verdict, steps))
}

fn report<R: Ring>(t: &Trinomial<R>, verdict: Verdict<R>, steps: Vec<Step<R>>) -> FactorReport<R> {
    FactorReport {
        factorization: Factorization { input: *t, verdict },
        trace: StepTrace { input: *t, steps },
    }
}

/// Builds the 2x2 grouping array for the rewritten terms
/// `[a x^2, b1 x; b2 x, c]`. The first column's GCD is computed directly;
/// the remaining labels follow by division, and every cell is the product of
/// its row and column labels.
fn derive_array<R: Ring>(t: &Trinomial<R>, split: &SplitPair<R>) -> GroupArray<R> {
    let col0 = t.a.gcd(&split.b2);
    let row0 = t.a.exact_div(&col0).expect("column GCD divides a");
    let col1 = split.b1.exact_div(&row0).expect("row label divides b1");
    let row1 = split.b2.exact_div(&col0).expect("column GCD divides b2");
    GroupArray {
        cells: [
            [
                ArrayTerm {
                    coeff: t.a,
                    power: 2,
                },
                ArrayTerm {
                    coeff: split.b1,
                    power: 1,
                },
            ],
            [
                ArrayTerm {
                    coeff: split.b2,
                    power: 1,
                },
                ArrayTerm {
                    coeff: t.c,
                    power: 0,
                },
            ],
        ],
        row_labels: [
            ArrayTerm {
                coeff: row0,
                power: 1,
            },
            ArrayTerm {
                coeff: row1,
                power: 0,
            },
        ],
        col_labels: [
            ArrayTerm {
                coeff: col0,
                power: 1,
            },
            ArrayTerm {
                coeff: col1,
                power: 0,
            },
        ],
    }
}
