//! The Gaussian integer backend: exact arithmetic on `re + im*i`, the
//! multiplicative norm, Euclidean division and GCD, and factorization by
//! splitting rational primes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::integer::Int;
use crate::ring::{PrimeFactorization, Ring, SortKey, Unit, MAX_COEFFICIENT};

/// A Gaussian integer `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: i128,
    pub im: i128,
}

impl GaussInt {
    pub const fn new(re: i128, im: i128) -> Self {
        GaussInt { re, im }
    }

    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn conj(&self) -> GaussInt {
        GaussInt::new(self.re, -self.im)
    }

    /// Division with remainder: `self = q * divisor + r` with
    /// `norm(r) < norm(divisor)`.
    ///
    /// The exact quotient's coordinates are rounded to the nearest integers
    /// (ties toward zero), which keeps the remainder norm at most half the
    /// divisor norm.
    pub fn euclidean_divmod(&self, divisor: &GaussInt) -> Result<(GaussInt, GaussInt)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm() as i128;
        let num = *self * divisor.conj();
        let q = GaussInt::new(round_div(num.re, n), round_div(num.im, n));
        let r = *self - q * *divisor;
        debug_assert!(r.norm() < divisor.norm());
        Ok((q, r))
    }
}

/// Nearest-integer division of `num` by `den > 0`, ties rounded toward zero.
fn round_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    let q = num.div_euclid(den);
    let r = num - q * den; // 0 <= r < den
    match (2 * r).cmp(&den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        // Tie: q and q+1 are equidistant; keep the one closer to zero.
        std::cmp::Ordering::Equal => {
            if q >= 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

impl From<i128> for GaussInt {
    fn from(re: i128) -> Self {
        GaussInt::new(re, 0)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, 1) => write!(f, "{re}+i"),
            (re, -1) => write!(f, "{re}-i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        self.checked_add(&rhs)
            .expect("integer overflow in exact arithmetic")
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re
                .checked_sub(rhs.re)
                .expect("integer overflow in exact arithmetic"),
            self.im
                .checked_sub(rhs.im)
                .expect("integer overflow in exact arithmetic"),
        )
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        self.checked_mul(&rhs)
            .expect("integer overflow in exact arithmetic")
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
}

const GAUSS_UNITS: [GaussInt; 4] = [
    GaussInt::new(1, 0),
    GaussInt::new(0, 1),
    GaussInt::new(-1, 0),
    GaussInt::new(0, -1),
];

impl Ring for GaussInt {
    fn ring_name() -> &'static str {
        "gaussian"
    }

    fn units() -> &'static [GaussInt] {
        &GAUSS_UNITS
    }

    fn norm(&self) -> u128 {
        self.checked_norm()
            .expect("integer overflow computing norm")
    }

    fn checked_norm(&self) -> Option<u128> {
        let re2 = self.re.checked_mul(self.re)?;
        let im2 = self.im.checked_mul(self.im)?;
        re2.checked_add(im2).map(|n| n as u128)
    }

    fn canonical_associate(&self) -> (Unit<GaussInt>, GaussInt) {
        if self.is_zero() {
            return (Unit::one(), *self);
        }
        // Exactly one of the four rotations lands in {re > 0, im >= 0}.
        let mut w = *self;
        for k in 0..4 {
            if w.re > 0 && w.im >= 0 {
                // w = i^k * self, so self = i^(4-k) * w.
                let unit = match k {
                    0 => GaussInt::new(1, 0),
                    1 => GaussInt::new(0, -1),
                    2 => GaussInt::new(-1, 0),
                    _ => GaussInt::new(0, 1),
                };
                return (Unit::new(unit).unwrap(), w);
            }
            w = w * GaussInt::I;
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }

    fn gcd(&self, other: &GaussInt) -> GaussInt {
        let mut a = *self;
        let mut b = *other;
        while !b.is_zero() {
            let (_, r) = a.euclidean_divmod(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.canonical_associate().1
    }

    fn exact_div(&self, divisor: &GaussInt) -> Result<GaussInt> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm() as i128;
        let num = *self * divisor.conj();
        if num.re % n != 0 || num.im % n != 0 {
            return Err(Error::NotDivisible);
        }
        Ok(GaussInt::new(num.re / n, num.im / n))
    }

    fn factor_into_primes(&self, bound: u128) -> Result<PrimeFactorization<GaussInt>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let norm = self.checked_norm().ok_or(Error::InputTooLarge)?;
        if norm > bound {
            return Err(Error::InputTooLarge);
        }
        let norm_factors = Int::new(norm as i128).factor_into_primes(bound)?;

        let mut remaining = *self;
        let mut factors: Vec<(GaussInt, u32)> = Vec::new();
        let divide_out = |remaining: &mut GaussInt, pi: GaussInt| -> u32 {
            let mut e = 0;
            while let Ok(q) = remaining.exact_div(&pi) {
                *remaining = q;
                e += 1;
            }
            e
        };

        for &(p, _) in &norm_factors.factors {
            let p = p.value();
            match split_rational_prime(p)? {
                PrimeSplit::Ramified { prime } | PrimeSplit::Inert { prime } => {
                    let e = divide_out(&mut remaining, prime);
                    debug_assert!(e > 0);
                    factors.push((prime, e));
                }
                PrimeSplit::Split { prime, conjugate } => {
                    // The two classes above p are independent: their exponents
                    // in self need not match, so test divisibility by both.
                    let e1 = divide_out(&mut remaining, prime);
                    if e1 > 0 {
                        factors.push((prime, e1));
                    }
                    let e2 = divide_out(&mut remaining, conjugate);
                    if e2 > 0 {
                        factors.push((conjugate, e2));
                    }
                    debug_assert!(e1 + e2 > 0);
                }
            }
        }

        assert!(
            remaining.is_unit(),
            "prime factorization left a non-unit cofactor: {remaining}"
        );
        factors.sort_by_key(|&(p, _)| p.sort_key());
        Ok(PrimeFactorization {
            unit: Unit::new(remaining).unwrap(),
            factors,
        })
    }

    fn sort_key(&self) -> SortKey {
        (self.norm(), self.re, self.im)
    }

    fn checked_add(&self, rhs: &GaussInt) -> Option<GaussInt> {
        Some(GaussInt::new(
            self.re.checked_add(rhs.re)?,
            self.im.checked_add(rhs.im)?,
        ))
    }

    fn checked_mul(&self, rhs: &GaussInt) -> Option<GaussInt> {
        let re = self
            .re
            .checked_mul(rhs.re)?
            .checked_sub(self.im.checked_mul(rhs.im)?)?;
        let im = self
            .re
            .checked_mul(rhs.im)?
            .checked_add(self.im.checked_mul(rhs.re)?)?;
        Some(GaussInt::new(re, im))
    }

    fn within_input_bound(&self) -> bool {
        self.re.unsigned_abs() <= MAX_COEFFICIENT as u128
            && self.im.unsigned_abs() <= MAX_COEFFICIENT as u128
    }
}

/// How a rational prime sits inside the Gaussian integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeSplit {
    /// `p = 2`: ramified, `2 = -i * (1+i)^2`.
    Ramified { prime: GaussInt },
    /// `p ≡ 1 (mod 4)`: two conjugate prime classes with `norm = p`.
    /// `prime` is the class whose canonical representative sorts first;
    /// the classes are not associates of each other.
    Split {
        prime: GaussInt,
        conjugate: GaussInt,
    },
    /// `p ≡ 3 (mod 4)`: `p` itself stays prime.
    Inert { prime: GaussInt },
}

/// Splits a rational prime into Gaussian primes.
///
/// For `p ≡ 1 (mod 4)` a square root of `-1 mod p` is found by computing
/// `n^((p-1)/4) mod p` for successive `n` until a non-residue yields a valid
/// root; `gcd(p, x + i)` then produces one prime above `p`.
pub fn split_rational_prime(p: i128) -> Result<PrimeSplit> {
    if p < 2 || !is_rational_prime(p as u128) {
        return Err(Error::NotPrime);
    }
    if p == 2 {
        return Ok(PrimeSplit::Ramified {
            prime: GaussInt::new(1, 1),
        });
    }
    if p % 4 == 3 {
        return Ok(PrimeSplit::Inert {
            prime: GaussInt::new(p, 0),
        });
    }
    let x = sqrt_of_minus_one(p as u128) as i128;
    let pi = GaussInt::new(p, 0).gcd(&GaussInt::new(x, 1));
    debug_assert_eq!(pi.norm(), p as u128);
    let conj = pi.conj().canonical_associate().1;
    // Deterministic labeling: the (norm, re, im)-smaller canonical
    // representative is the primary class.
    let (prime, conjugate) = if pi.sort_key() <= conj.sort_key() {
        (pi, conj)
    } else {
        (conj, pi)
    };
    Ok(PrimeSplit::Split { prime, conjugate })
}

fn is_rational_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    a * b % m
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A square root of `-1` modulo a prime `p ≡ 1 (mod 4)`.
fn sqrt_of_minus_one(p: u128) -> u128 {
    debug_assert_eq!(p % 4, 1);
    for n in 2.. {
        let x = pow_mod(n, (p - 1) / 4, p);
        if mul_mod(x, x, p) == p - 1 {
            return x;
        }
    }
    unreachable!("half of all residues are non-residues")
}
