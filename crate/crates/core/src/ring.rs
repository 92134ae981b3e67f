//! The coefficient-ring contract shared by every backend.
//!
//! A backend supplies exact arithmetic, a finite enumerable unit group,
//! canonical associate representatives, a GCD in canonical form, exact
//! division, and factorization into irreducibles. Everything downstream
//! (content extraction, the middle-term split search, grouping) is written
//! against this trait, so the pipeline is generic over the ring.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest coefficient magnitude accepted by the pipeline entry points.
///
/// Keeps every intermediate product (GCD remainders, conjugate products,
/// verification expansions) comfortably inside `i128`.
pub const MAX_COEFFICIENT: i128 = 1_000_000_000_000_000_000;

/// Default bound on `norm(a*c)` for the split search and on the inputs of
/// trial-division factorization.
pub const DEFAULT_MAX_AC: u128 = 1_000_000_000_000;

/// Total-order key used for deterministic enumeration and ordering:
/// `(norm, re, im)`.
pub type SortKey = (u128, i128, i128);

/// An exact element of a coefficient ring with effective unique factorization.
///
/// Arithmetic never rounds; overflow of the underlying representation is a
/// detected error (a panic in the operator impls, `None` from the checked
/// variants), never silent wraparound.
pub trait Ring:
    Copy
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    /// Short machine-readable name ("integers", "gaussian").
    fn ring_name() -> &'static str;

    /// The full (finite) unit group, in the ring's declared order.
    /// The first entry is always the multiplicative identity.
    fn units() -> &'static [Self];

    /// Euclidean size: `|n|` for integers, `re^2 + im^2` for Gaussian
    /// integers. Multiplicative, and zero only at zero.
    fn norm(&self) -> u128;

    /// `norm` computed with overflow detection.
    fn checked_norm(&self) -> Option<u128>;

    /// The unique representative of this element's associate class, together
    /// with the unit `u` satisfying `u * canonical = self`.
    ///
    /// Canonical form: the nonnegative associate for integers; the associate
    /// with `re > 0, im >= 0` for Gaussian integers. Zero maps to itself with
    /// unit one.
    fn canonical_associate(&self) -> (Unit<Self>, Self);

    /// Greatest common divisor under the divisibility ordering, returned in
    /// canonical form. `gcd(0, 0) = 0` by convention.
    fn gcd(&self, other: &Self) -> Self;

    /// Returns `q` with `q * divisor == self`, exactly.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// Factorization into a unit times canonical irreducibles.
    ///
    /// `bound` caps the norm of the input; larger inputs return
    /// [`Error::InputTooLarge`] rather than running unbounded trial division.
    fn factor_into_primes(&self, bound: u128) -> Result<PrimeFactorization<Self>>;

    /// Total order used wherever determinism matters (divisor enumeration,
    /// factor ordering): by norm, then real part, then imaginary part.
    fn sort_key(&self) -> SortKey;

    fn checked_add(&self, rhs: &Self) -> Option<Self>;

    fn checked_mul(&self, rhs: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        Self::units().contains(self)
    }

    /// True when the element is in canonical-associate form.
    fn is_canonical(&self) -> bool {
        self.canonical_associate().1 == *self
    }

    /// True when the magnitude is small enough for the pipeline to accept.
    fn within_input_bound(&self) -> bool;
}

/// An invertible ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit<R: Ring>(R);

impl<R: Ring> Unit<R> {
    pub fn new(value: R) -> Result<Self> {
        if value.is_unit() {
            Ok(Unit(value))
        } else {
            Err(Error::NotAUnit)
        }
    }

    pub fn one() -> Self {
        Unit(R::one())
    }

    pub fn value(&self) -> R {
        self.0
    }

    /// The inverse unit; the unit group is finite, so scan for it.
    pub fn inverse(&self) -> Self {
        for &u in R::units() {
            if u * self.0 == R::one() {
                return Unit(u);
            }
        }
        unreachable!("unit group is closed under inverses")
    }

    pub fn is_one(&self) -> bool {
        self.0 == R::one()
    }
}

impl<R: Ring> Mul<R> for Unit<R> {
    type Output = R;

    fn mul(self, rhs: R) -> R {
        self.0 * rhs
    }
}

impl<R: Ring> Mul for Unit<R> {
    type Output = Unit<R>;

    fn mul(self, rhs: Unit<R>) -> Unit<R> {
        Unit(self.0 * rhs.0)
    }
}

impl<R: Ring> Display for Unit<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        Display::fmt(&self.0, f)
    }
}

/// A unit times a product of canonical irreducibles with positive exponents.
///
/// No two listed primes are associates, every prime is in canonical form,
/// and `unit * prod(prime^exp)` reproduces the factored element exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization<R: Ring> {
    pub unit: Unit<R>,
    /// `(canonical prime, exponent)` pairs, ascending by `sort_key`.
    pub factors: Vec<(R, u32)>,
}

impl<R: Ring> PrimeFactorization<R> {
    /// Multiplies the factorization back out.
    pub fn value(&self) -> R {
        let mut acc = self.unit.value();
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc * p;
            }
        }
        acc
    }

    /// Every canonical divisor of the factored element, each exactly once,
    /// ascending by `sort_key`. The count is the product of `exponent + 1`
    /// over all primes.
    pub fn divisors(&self) -> Vec<R> {
        let mut out = vec![R::one()];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for &d in &out {
                let mut acc = d;
                next.push(acc);
                for _ in 0..e {
                    acc = acc * p;
                    next.push(acc.canonical_associate().1);
                }
            }
            out = next;
        }
        out.sort_by_key(|d| d.sort_key());
        out
    }
}
