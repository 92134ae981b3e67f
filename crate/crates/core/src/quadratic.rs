//! Polynomial value types over a generic coefficient ring, the expansion
//! oracle, and content extraction.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, SortKey, Unit};

/// The quadratic `a*x^2 + b*x + c` with `a != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trinomial<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R: Ring> Trinomial<R> {
    pub fn new(a: R, b: R, c: R) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(Trinomial { a, b, c })
    }
}

impl<R: Ring> fmt::Display for Trinomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        push_term(&mut s, &self.a, 2);
        push_term(&mut s, &self.b, 1);
        push_term(&mut s, &self.c, 0);
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

/// A linear factor `leading*x + constant` with `leading != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearBinomial<R: Ring> {
    pub leading: R,
    pub constant: R,
}

impl<R: Ring> LinearBinomial<R> {
    pub fn new(leading: R, constant: R) -> Result<Self> {
        if leading.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(LinearBinomial { leading, constant })
    }

    /// Multiplies both coefficients by a unit; the represented factor changes
    /// only by that unit.
    pub fn scale(&self, unit: Unit<R>) -> Self {
        LinearBinomial {
            leading: unit * self.leading,
            constant: unit * self.constant,
        }
    }

    /// The associate with canonical leading coefficient, plus the unit `u`
    /// such that `u * canonical_form = self`.
    pub fn canonicalize(&self) -> (Unit<R>, Self) {
        let (u, lead) = self.leading.canonical_associate();
        let scaled = LinearBinomial {
            leading: lead,
            constant: u.inverse() * self.constant,
        };
        (u, scaled)
    }

    /// Ordering key: leading coefficient first, then constant term.
    pub fn sort_key(&self) -> (SortKey, SortKey) {
        (self.leading.sort_key(), self.constant.sort_key())
    }
}

impl<R: Ring> fmt::Display for LinearBinomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        push_term(&mut s, &self.leading, 1);
        push_term(&mut s, &self.constant, 0);
        f.write_str(&s)
    }
}

/// The middle-term split: `b1 * b2 = a*c` and `b1 + b2 = b` for the
/// trinomial it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitPair<R: Ring> {
    pub b1: R,
    pub b2: R,
}

/// Result of the factoring pipeline, always paired with the original input
/// so a reported factorization can be audited against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<R: Ring> {
    pub input: Trinomial<R>,
    pub verdict: Verdict<R>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<R: Ring> {
    /// `unit * content * first * second` expands exactly to the input.
    /// Both binomials carry canonical leading coefficients and are ordered
    /// by `LinearBinomial::sort_key`.
    Factored {
        unit: Unit<R>,
        content: R,
        first: LinearBinomial<R>,
        second: LinearBinomial<R>,
    },
    /// The primitive part admits no split into linear factors. The content
    /// has still been extracted: `input = content * primitive`.
    Irreducible { content: R, primitive: Trinomial<R> },
    /// The pipeline does not apply (constant term zero).
    NotApplicable { reason: &'static str },
}

impl<R: Ring> Verdict<R> {
    pub fn is_factored(&self) -> bool {
        matches!(self, Verdict::Factored { .. })
    }
}

impl<R: Ring> fmt::Display for Verdict<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Factored {
                unit,
                content,
                first,
                second,
            } => {
                if unit.value() == -R::one() {
                    write!(f, "-")?;
                } else if !unit.is_one() {
                    write!(f, "{unit}")?;
                }
                if !content.is_one() {
                    write!(f, "{}", wrap_composite(&content.to_string()))?;
                }
                write!(f, "{}{}", wrap_factor(first), wrap_factor(second))
            }
            Verdict::Irreducible { content, primitive } => {
                if content.is_one() {
                    write!(f, "irreducible: {primitive}")
                } else {
                    write!(
                        f,
                        "irreducible: {}({})",
                        wrap_composite(&content.to_string()),
                        primitive
                    )
                }
            }
            Verdict::NotApplicable { reason } => write!(f, "not applicable: {reason}"),
        }
    }
}

fn wrap_composite(s: &str) -> String {
    if s.contains('i') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Binomials whose coefficients already use parentheses get square brackets,
/// the way Gaussian factorizations are usually typeset.
fn wrap_factor<R: Ring>(b: &LinearBinomial<R>) -> String {
    let s = b.to_string();
    if s.contains('(') {
        format!("[{s}]")
    } else {
        format!("({s})")
    }
}

/// Multiplies `unit * content * f1 * f2` back out.
///
/// This is the independent verification oracle for every factoring result:
/// `(Ax+B)(Cx+D) = AC x^2 + (BC+AD) x + BD`, scaled by the unit and content.
/// Overflow surfaces as [`Error::InputTooLarge`].
pub fn expand<R: Ring>(
    unit: Unit<R>,
    content: R,
    f1: &LinearBinomial<R>,
    f2: &LinearBinomial<R>,
) -> Result<Trinomial<R>> {
    let scale = unit * content;
    let term = |x: &R, y: &R| -> Result<R> {
        let xy = x.checked_mul(y).ok_or(Error::InputTooLarge)?;
        scale.checked_mul(&xy).ok_or(Error::InputTooLarge)
    };
    let a = term(&f1.leading, &f2.leading)?;
    let cross = f1
        .constant
        .checked_mul(&f2.leading)
        .and_then(|bc| {
            f1.leading
                .checked_mul(&f2.constant)
                .and_then(|ad| bc.checked_add(&ad))
        })
        .ok_or(Error::InputTooLarge)?;
    let b = scale.checked_mul(&cross).ok_or(Error::InputTooLarge)?;
    let c = term(&f1.constant, &f2.constant)?;
    Trinomial::new(a, b, c)
}

/// Splits off the GCD of the three coefficients: returns `(g, t')` with
/// `g` canonical and `g * t' = t` coefficientwise. The coefficients of `t'`
/// have unit GCD.
pub fn content_extract<R: Ring>(t: &Trinomial<R>) -> (R, Trinomial<R>) {
    let g = t.a.gcd(&t.b).gcd(&t.c);
    if g.is_one() {
        return (g, *t);
    }
    let t_prime = Trinomial {
        a: t.a
            .exact_div(&g)
            .expect("content divides every coefficient"),
        b: t.b
            .exact_div(&g)
            .expect("content divides every coefficient"),
        c: t.c
            .exact_div(&g)
            .expect("content divides every coefficient"),
    };
    (g, t_prime)
}

/// Appends `coeff * x^power` to a polynomial string, joining signs the way
/// they are written by hand: `-` absorbs into the separator for plain
/// negative values, composite Gaussian coefficients get parentheses.
pub(crate) fn push_term<R: Ring>(out: &mut String, coeff: &R, power: u8) {
    if coeff.is_zero() && !(power == 0 && out.is_empty()) {
        return;
    }
    let (negative, mut body) = coeff_body(coeff);
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push('-');
    } else {
        out.push('+');
    }
    match power {
        0 => out.push_str(&body),
        _ => {
            if body == "1" {
                body.clear();
            }
            out.push_str(&body);
            out.push('x');
            if power == 2 {
                out.push_str("^2");
            }
        }
    }
}

/// Renders a single term (used for the grouping-array cells and labels).
pub(crate) fn term_string<R: Ring>(coeff: &R, power: u8) -> String {
    let mut s = String::new();
    push_term(&mut s, coeff, power);
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Splits a coefficient into a displayed sign and its body. Plain values
/// (integers, pure-real Gaussians) absorb their minus sign into the term
/// separator; anything with an imaginary part is parenthesized whole.
fn coeff_body<R: Ring>(coeff: &R) -> (bool, String) {
    let repr = coeff.to_string();
    if repr.contains('i') {
        return (false, format!("({repr})"));
    }
    match repr.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, repr),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussInt;
    use crate::integer::Int;
    use proptest::prelude::*;

    fn z(n: i128) -> Int {
        Int::new(n)
    }

    fn gi(re: i128, im: i128) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn zt(a: i128, b: i128, c: i128) -> Trinomial<Int> {
        Trinomial::new(z(a), z(b), z(c)).unwrap()
    }

    fn zb(leading: i128, constant: i128) -> LinearBinomial<Int> {
        LinearBinomial::new(z(leading), z(constant)).unwrap()
    }

    #[test]
    fn trinomial_requires_quadratic_term() {
        assert_eq!(
            Trinomial::new(z(0), z(1), z(2)),
            Err(Error::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn expand_integer_examples() {
        let t = expand(Unit::one(), z(1), &zb(2, 3), &zb(2, 1)).unwrap();
        assert_eq!(t, zt(4, 8, 3));

        let t = expand(Unit::one(), z(2), &zb(1, 1), &zb(1, 1)).unwrap();
        assert_eq!(t, zt(2, 4, 2));
    }

    #[test]
    fn expand_gaussian_example() {
        let f1 = LinearBinomial::new(gi(1, 2), gi(3, -1)).unwrap();
        let f2 = LinearBinomial::new(gi(1, -1), gi(2, -1)).unwrap();
        let t = expand(Unit::one(), gi(1, 1), &f1, &f2).unwrap();
        assert_eq!(t, Trinomial::new(gi(2, 4), gi(7, 5), gi(10, 0)).unwrap());
    }

    #[test]
    fn expand_overflow_is_reported() {
        let big = zb(i128::MAX / 2, 1);
        assert_eq!(
            expand(Unit::one(), z(4), &big, &big),
            Err(Error::InputTooLarge)
        );
    }

    #[test]
    fn content_examples() {
        let (g, t) = content_extract(&zt(4, 8, 3));
        assert_eq!((g, t), (z(1), zt(4, 8, 3)));

        let (g, t) = content_extract(&zt(2, 4, 2));
        assert_eq!((g, t), (z(2), zt(1, 2, 1)));

        let input = Trinomial::new(gi(2, 4), gi(7, 5), gi(10, 0)).unwrap();
        let (g, t) = content_extract(&input);
        assert_eq!(g, gi(1, 1));
        assert_eq!(t, Trinomial::new(gi(3, 1), gi(6, -1), gi(5, -5)).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(zt(4, 8, 3).to_string(), "4x^2+8x+3");
        assert_eq!(zt(1, 0, -3).to_string(), "x^2-3");
        assert_eq!(zt(-1, 1, 0).to_string(), "-x^2+x");
        assert_eq!(zb(2, -3).to_string(), "2x-3");
        assert_eq!(zb(-1, 1).to_string(), "-x+1");
        let t = Trinomial::new(gi(2, 4), gi(7, 5), gi(10, 0)).unwrap();
        assert_eq!(t.to_string(), "(2+4i)x^2+(7+5i)x+10");
        let b = LinearBinomial::new(gi(1, -1), gi(2, -1)).unwrap();
        assert_eq!(b.to_string(), "(1-i)x+(2-i)");
    }

    #[test]
    fn binomial_canonicalization() {
        let b = LinearBinomial::new(gi(1, -1), gi(2, -1)).unwrap();
        let (u, canon) = b.canonicalize();
        assert_eq!(canon.leading, gi(1, 1));
        assert_eq!(canon.scale(u), b);
    }

    proptest! {
        #[test]
        fn content_then_remultiply_roundtrips(
            a in -200i128..200, b in -200i128..200, c in -200i128..200,
        ) {
            prop_assume!(a != 0);
            let t = zt(a, b, c);
            let (g, t2) = content_extract(&t);
            prop_assert_eq!(g * t2.a, t.a);
            prop_assert_eq!(g * t2.b, t.b);
            prop_assert_eq!(g * t2.c, t.c);
            let inner = t2.a.gcd(&t2.b).gcd(&t2.c);
            prop_assert!(inner.is_unit());
        }

        #[test]
        fn expand_is_unit_bilinear(
            al in 1i128..50, ac in -50i128..50,
            bl in 1i128..50, bc in -50i128..50,
        ) {
            let f1 = zb(al, ac);
            let f2 = zb(bl, bc);
            for &v in Int::units() {
                let unit = Unit::new(v).unwrap();
                let lhs = expand(Unit::one(), z(1), &f1.scale(unit), &f2).unwrap();
                let rhs = expand(Unit::one(), z(1), &f1, &f2).unwrap();
                prop_assert_eq!(lhs.a, v * rhs.a);
                prop_assert_eq!(lhs.b, v * rhs.b);
                prop_assert_eq!(lhs.c, v * rhs.c);
            }
        }
    }
}
