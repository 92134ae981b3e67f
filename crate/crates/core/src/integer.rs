//! The integer backend: exact signed arithmetic on `i128` with checked
//! overflow, sign-canonical associates, Euclidean GCD, and trial-division
//! factorization.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{PrimeFactorization, Ring, SortKey, Unit, MAX_COEFFICIENT};

/// A signed exact integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(i128);

impl Int {
    pub const fn new(value: i128) -> Self {
        Int(value)
    }

    pub const fn value(&self) -> i128 {
        self.0
    }

    /// Returns `s >= 0` with `s*s == self` when the value is a perfect
    /// square, `None` otherwise.
    pub fn is_perfect_square(&self) -> Option<Int> {
        if self.0 < 0 {
            return None;
        }
        let s = (self.0 as u128).isqrt();
        if s * s == self.0 as u128 {
            Some(Int(s as i128))
        } else {
            None
        }
    }
}

impl From<i128> for Int {
    fn from(value: i128) -> Self {
        Int(value)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int(self
            .0
            .checked_add(rhs.0)
            .expect("integer overflow in exact arithmetic"))
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        Int(self
            .0
            .checked_sub(rhs.0)
            .expect("integer overflow in exact arithmetic"))
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int(self
            .0
            .checked_mul(rhs.0)
            .expect("integer overflow in exact arithmetic"))
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(self
            .0
            .checked_neg()
            .expect("integer overflow in exact arithmetic"))
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Int {
    fn one() -> Self {
        Int(1)
    }
}

const INT_UNITS: [Int; 2] = [Int(1), Int(-1)];

impl Ring for Int {
    fn ring_name() -> &'static str {
        "integers"
    }

    fn units() -> &'static [Int] {
        &INT_UNITS
    }

    fn norm(&self) -> u128 {
        self.0.unsigned_abs()
    }

    fn checked_norm(&self) -> Option<u128> {
        Some(self.0.unsigned_abs())
    }

    fn canonical_associate(&self) -> (Unit<Int>, Int) {
        if self.0 < 0 {
            (Unit::new(Int(-1)).unwrap(), Int(-self.0))
        } else {
            (Unit::one(), *self)
        }
    }

    fn gcd(&self, other: &Int) -> Int {
        let mut a = self.0.unsigned_abs();
        let mut b = other.0.unsigned_abs();
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        Int(a as i128)
    }

    fn exact_div(&self, divisor: &Int) -> Result<Int> {
        if divisor.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0 % divisor.0 != 0 {
            return Err(Error::NotDivisible);
        }
        self.0
            .checked_div(divisor.0)
            .map(Int)
            .ok_or(Error::InputTooLarge)
    }

    fn factor_into_primes(&self, bound: u128) -> Result<PrimeFactorization<Int>> {
        if self.0 == 0 {
            return Err(Error::ZeroInput);
        }
        if self.norm() > bound {
            return Err(Error::InputTooLarge);
        }
        let unit = if self.0 < 0 { Int(-1) } else { Int(1) };
        let mut n = self.0.unsigned_abs();
        let mut factors = Vec::new();
        let mut push = |p: u128, e: u32| {
            if e > 0 {
                factors.push((Int(p as i128), e));
            }
        };
        let mut e2 = 0;
        while n.is_multiple_of(2) {
            n /= 2;
            e2 += 1;
        }
        push(2, e2);
        let mut d = 3u128;
        while d * d <= n {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            push(d, e);
            d += 2;
        }
        push(n, u32::from(n > 1));
        Ok(PrimeFactorization {
            unit: Unit::new(unit).unwrap(),
            factors,
        })
    }

    fn sort_key(&self) -> SortKey {
        (self.norm(), self.0, 0)
    }

    fn checked_add(&self, rhs: &Int) -> Option<Int> {
        self.0.checked_add(rhs.0).map(Int)
    }

    fn checked_mul(&self, rhs: &Int) -> Option<Int> {
        self.0.checked_mul(rhs.0).map(Int)
    }

    fn within_input_bound(&self) -> bool {
        self.0.unsigned_abs() <= MAX_COEFFICIENT as u128
    }
}
