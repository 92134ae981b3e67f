//! Polynomial text parser.
//!
//! Grammar (whitespace ignored everywhere, `*` optionally permitted between
//! a coefficient and `x`):
//!
//! ```text
//! polynomial := sign? term (sign term)*
//! term       := coeff ('*'? x-part)? | x-part
//! x-part     := 'x' ('^' digit+)?          -- exponent must be 0, 1, or 2
//! coeff      := '(' gauss ')' | digits 'i'? | 'i'
//! gauss      := sign? gpart (sign gpart)?  -- at most one real, one imaginary
//! gpart      := digits 'i'? | 'i'
//! ```
//!
//! Terms may appear in any order, missing powers read as zero, duplicate
//! powers are summed. Integer inputs are plain `digits`; anything mentioning
//! `i` is a Gaussian literal.

use std::fmt;

use acfactor::{GaussInt, Int, Ring, Trinomial, MAX_COEFFICIENT};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingChoice {
    Integers,
    Gaussian,
}

impl RingChoice {
    pub fn name(&self) -> &'static str {
        match self {
            RingChoice::Integers => "integers",
            RingChoice::Gaussian => "gaussian",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInput {
    pub ring: RingChoice,
    pub poly: ParsedPoly,
    pub source_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPoly {
    Integers(Trinomial<Int>),
    Gaussian(Trinomial<GaussInt>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input, with the byte position of the offending character.
    Syntax { position: usize, message: String },
    /// The collected polynomial is not a quadratic.
    Degree { message: String },
    /// A Gaussian literal appeared while the integer ring was requested.
    RingMismatch,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            ParseError::Degree { message } => write!(f, "degree error: {message}"),
            ParseError::RingMismatch => write!(
                f,
                "ring mismatch: Gaussian literal under --ring int (drop --ring or use --ring gaussian)"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses a trinomial. `ring = None` selects the integers but promotes to
/// the Gaussian integers as soon as an `i` literal appears.
pub fn parse_polynomial(text: &str, ring: Option<RingChoice>) -> Result<ParsedInput, ParseError> {
    let mut scanner = Scanner::new(text);
    let collected = scanner.polynomial()?;

    let ring = match ring {
        Some(RingChoice::Integers) if collected.saw_i => return Err(ParseError::RingMismatch),
        Some(choice) => choice,
        None => {
            if collected.saw_i {
                RingChoice::Gaussian
            } else {
                RingChoice::Integers
            }
        }
    };

    let [c0, c1, c2] = collected.coeffs;
    if c2 == GaussInt::new(0, 0) {
        return Err(ParseError::Degree {
            message: "the x^2 coefficient is zero after collecting terms".into(),
        });
    }
    let poly = match ring {
        RingChoice::Integers => ParsedPoly::Integers(
            Trinomial::new(Int::new(c2.re), Int::new(c1.re), Int::new(c0.re))
                .expect("nonzero leading coefficient"),
        ),
        RingChoice::Gaussian => {
            ParsedPoly::Gaussian(Trinomial::new(c2, c1, c0).expect("nonzero leading coefficient"))
        }
    };
    Ok(ParsedInput {
        ring,
        poly,
        source_text: text.to_string(),
    })
}

/// Parses a bare Gaussian value such as `-35`, `i`, or `1+2i` (no
/// parentheses). This is the element syntax used inside structured output.
pub fn parse_gauss(text: &str) -> Result<GaussInt, ParseError> {
    let mut scanner = Scanner::new(text);
    let value = scanner.gauss()?;
    scanner.skip_ws();
    if !scanner.at_end() {
        return Err(scanner.error("trailing input after a value"));
    }
    Ok(value)
}

struct Collected {
    /// Coefficients of x^0, x^1, x^2.
    coeffs: [GaussInt; 3],
    saw_i: bool,
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    saw_i: bool,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
            saw_i: false,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn polynomial(&mut self) -> Result<Collected, ParseError> {
        let mut coeffs = [GaussInt::new(0, 0); 3];
        let mut first = true;
        loop {
            let sign = self.sign(first)?;
            if first && self.at_end() {
                return Err(self.error("empty polynomial"));
            }
            let (coeff, power) = self.term()?;
            let signed = if sign < 0 { -coeff } else { coeff };
            coeffs[power] = coeffs[power]
                .checked_add(&signed)
                .ok_or_else(|| self.error("coefficient overflow while summing terms"))?;
            first = false;
            if self.at_end() {
                break;
            }
            match self.peek() {
                Some(b'+') | Some(b'-') => {}
                _ => return Err(self.error("expected '+' or '-' between terms")),
            }
        }
        Ok(Collected {
            coeffs,
            saw_i: self.saw_i,
        })
    }

    /// Consumes a term separator. The sign is optional before the first term
    /// and mandatory afterwards.
    fn sign(&mut self, first: bool) -> Result<i32, ParseError> {
        if self.eat(b'+') {
            Ok(1)
        } else if self.eat(b'-') {
            Ok(-1)
        } else if first {
            Ok(1)
        } else {
            Err(self.error("expected '+' or '-'"))
        }
    }

    /// One `coeff? x-part?` group; at least one of the two must be present.
    /// Returns the coefficient and the power it applies to.
    fn term(&mut self) -> Result<(GaussInt, usize), ParseError> {
        let coeff = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let value = self.gauss()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Some(value)
            }
            Some(b) if b.is_ascii_digit() => Some(self.number_atom()?),
            Some(b'i') => {
                self.pos += 1;
                self.saw_i = true;
                Some(GaussInt::new(0, 1))
            }
            _ => None,
        };
        if coeff.is_some() {
            self.eat(b'*');
        }
        let power = self.x_part(coeff.is_some())?;
        Ok((coeff.unwrap_or(GaussInt::new(1, 0)), power))
    }

    /// `x`, `x^1`, `x^2`, `x^0`, or nothing (power 0). When the term had no
    /// coefficient the `x` is mandatory.
    fn x_part(&mut self, had_coeff: bool) -> Result<usize, ParseError> {
        if !self.eat(b'x') {
            if had_coeff {
                return Ok(0);
            }
            return Err(self.error("expected a coefficient or 'x'"));
        }
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let exponent = self.digits()?;
        if exponent > 2 {
            return Err(ParseError::Syntax {
                position: at,
                message: format!("exponent must be 0, 1, or 2, got {exponent}"),
            });
        }
        Ok(exponent as usize)
    }

    /// Unsigned digits, optionally followed by `i`: `42` or `42i`.
    fn number_atom(&mut self) -> Result<GaussInt, ParseError> {
        let n = self.digits()?;
        if self.bytes.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            self.saw_i = true;
            Ok(GaussInt::new(0, n))
        } else {
            Ok(GaussInt::new(n, 0))
        }
    }

    /// A full signed Gaussian literal: `-3`, `i`, `2i`, `1+2i`, `-7-5i`, ...
    fn gauss(&mut self) -> Result<GaussInt, ParseError> {
        let mut value = GaussInt::new(0, 0);
        let mut seen_real = false;
        let mut seen_imag = false;
        let mut first = true;
        loop {
            let negative = if self.eat(b'-') {
                true
            } else if !self.eat(b'+') && !first {
                break;
            } else {
                false
            };
            let part = match self.peek() {
                Some(b) if b.is_ascii_digit() => self.number_atom()?,
                Some(b'i') => {
                    self.pos += 1;
                    self.saw_i = true;
                    GaussInt::new(0, 1)
                }
                _ => return Err(self.error("expected digits or 'i'")),
            };
            if part.im != 0 {
                if seen_imag {
                    return Err(self.error("more than one imaginary part"));
                }
                seen_imag = true;
            } else {
                if seen_real {
                    return Err(self.error("more than one real part"));
                }
                seen_real = true;
            }
            let signed = if negative { -part } else { part };
            value = value
                .checked_add(&signed)
                .ok_or_else(|| self.error("coefficient overflow"))?;
            first = false;
            if seen_real && seen_imag {
                break;
            }
        }
        if !(seen_real || seen_imag) {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    /// Unsigned decimal digits, bounded by the pipeline's coefficient limit.
    fn digits(&mut self) -> Result<i128, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut n: i128 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add((b - b'0') as i128))
                .filter(|&n| n <= MAX_COEFFICIENT)
                .ok_or_else(|| ParseError::Syntax {
                    position: start,
                    message: format!("number exceeds the supported magnitude ({MAX_COEFFICIENT})"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(n)
    }
}

/// Re-renders a parsed trinomial; `parse(render(t)) == t` for any valid `t`.
pub fn render_polynomial(input: &ParsedPoly) -> String {
    match input {
        ParsedPoly::Integers(t) => t.to_string(),
        ParsedPoly::Gaussian(t) => t.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(text: &str) -> Trinomial<Int> {
        match parse_polynomial(text, None).unwrap().poly {
            ParsedPoly::Integers(t) => t,
            other => panic!("expected integer parse, got {other:?}"),
        }
    }

    fn gauss_poly(text: &str) -> Trinomial<GaussInt> {
        match parse_polynomial(text, None).unwrap().poly {
            ParsedPoly::Gaussian(t) => t,
            other => panic!("expected gaussian parse, got {other:?}"),
        }
    }

    fn zt(a: i128, b: i128, c: i128) -> Trinomial<Int> {
        Trinomial::new(Int::new(a), Int::new(b), Int::new(c)).unwrap()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(int_poly("4x^2+8x+3"), zt(4, 8, 3));

        let t = gauss_poly("(2+4i)x^2+(7+5i)x+10");
        assert_eq!(
            t,
            Trinomial::new(
                GaussInt::new(2, 4),
                GaussInt::new(7, 5),
                GaussInt::new(10, 0)
            )
            .unwrap()
        );

        assert_eq!(int_poly("3+x^2"), zt(1, 0, 3));
    }

    #[test]
    fn terms_in_any_order_and_duplicates_summed() {
        assert_eq!(int_poly("3x + 4x^2 - x + 3"), zt(4, 2, 3));
        assert_eq!(int_poly("x^2+x^2+1"), zt(2, 0, 1));
        assert_eq!(int_poly("5 - 5 + x^2 + 1"), zt(1, 0, 1));
    }

    #[test]
    fn sign_and_notation_variants() {
        assert_eq!(int_poly("-x^2+3x-2"), zt(-1, 3, -2));
        assert_eq!(int_poly("4*x^2 + 8*x + 3"), zt(4, 8, 3));
        assert_eq!(int_poly("x^2 + x^1 + 7x^0"), zt(1, 1, 7));
        assert_eq!(
            gauss_poly("ix^2+2ix-i"),
            Trinomial::new(
                GaussInt::new(0, 1),
                GaussInt::new(0, 2),
                GaussInt::new(0, -1)
            )
            .unwrap()
        );
        assert_eq!(
            gauss_poly("(3-i)x^2+(-2+i)x+(-i)"),
            Trinomial::new(
                GaussInt::new(3, -1),
                GaussInt::new(-2, 1),
                GaussInt::new(0, -1)
            )
            .unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("4x^2++3", None) {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_polynomial("4x^3+1", None) {
            Err(ParseError::Syntax { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("exponent"));
            }
            other => panic!("expected exponent error, got {other:?}"),
        }
        match parse_polynomial("", None) {
            Err(ParseError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_polynomial("4x^2+(3", None) {
            Err(ParseError::Syntax { message, .. }) => assert!(message.contains("')'")),
            other => panic!("expected paren error, got {other:?}"),
        }
    }

    #[test]
    fn degree_must_be_two_after_collection() {
        for text in ["3x+1", "x^2-x^2+x", "5"] {
            match parse_polynomial(text, None) {
                Err(ParseError::Degree { .. }) => {}
                other => panic!("expected degree error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn ring_selection_and_mismatch() {
        let parsed = parse_polynomial("x^2+1", None).unwrap();
        assert_eq!(parsed.ring, RingChoice::Integers);

        let parsed = parse_polynomial("x^2+i", None).unwrap();
        assert_eq!(parsed.ring, RingChoice::Gaussian);

        // Requesting the Gaussian ring lifts integer input into it.
        let parsed = parse_polynomial("x^2+1", Some(RingChoice::Gaussian)).unwrap();
        assert!(matches!(parsed.poly, ParsedPoly::Gaussian(_)));

        assert_eq!(
            parse_polynomial("x^2+i", Some(RingChoice::Integers)),
            Err(ParseError::RingMismatch)
        );
        // Promotion is syntactic: an i that cancels still promotes.
        let parsed = parse_polynomial("x^2+ix-ix+1", None).unwrap();
        assert_eq!(parsed.ring, RingChoice::Gaussian);
    }

    #[test]
    fn coefficients_are_bounded() {
        let huge = "9".repeat(25);
        match parse_polynomial(&format!("{huge}x^2+1"), None) {
            Err(ParseError::Syntax { message, .. }) => assert!(message.contains("magnitude")),
            other => panic!("expected magnitude error, got {other:?}"),
        }
    }

    #[test]
    fn parse_gauss_values() {
        assert_eq!(parse_gauss("1+2i"), Ok(GaussInt::new(1, 2)));
        assert_eq!(parse_gauss("-i"), Ok(GaussInt::new(0, -1)));
        assert_eq!(parse_gauss("-35"), Ok(GaussInt::new(-35, 0)));
        assert_eq!(parse_gauss("3-i"), Ok(GaussInt::new(3, -1)));
        assert!(parse_gauss("3-").is_err());
        assert!(parse_gauss("1+2i+3").is_err());
    }
}
