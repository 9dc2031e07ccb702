use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::ArithError;

/// Arbitrary-precision rational numbers, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A commutative ring containing the rationals (or, for the integer counting
/// ring, the integers), with exact arithmetic.
///
/// Operators are taken by value on the left and by reference on the right so
/// that accumulation loops can reuse allocations.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_rational(r: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    /// Multiplicative inverse, when `self` is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// Whether every nonzero element is a unit.
    fn is_field() -> bool {
        true
    }

    /// The exact quotient `self / d`, when it exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.try_inv().map(|inv| self.clone() * &inv)
    }

    /// Integer power; negative exponents need `self` to be a unit.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }

    fn checked_div(&self, d: &Self) -> Result<Self, ArithError> {
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        self.exact_div(d).ok_or_else(|| ArithError::NotInvertible(d.to_string()))
    }

    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        self.try_inv().ok_or_else(|| ArithError::NotInvertible(self.to_string()))
    }
}

/// `x - 1/x`.
pub fn sigma<R: Ring>(x: &R) -> Result<R, ArithError> {
    Ok(x.clone() - &x.inv()?)
}

/// `1/x`.
pub fn bar<R: Ring>(x: &R) -> Result<R, ArithError> {
    x.inv()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_i128(r: &Rational) -> Option<i128> {
    if r.is_integer() {
        r.numer().to_i128()
    } else {
        None
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Machine integers for the counting transfer, where every weight is an
/// integer. Overflow panics (overflow checks are on in every profile).
impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_rational(r: &Rational) -> Self {
        rational_to_i128(r).expect("value is not an integer in range")
    }
    fn try_inv(&self) -> Option<Self> {
        match self {
            1 | -1 => Some(*self),
            _ => None,
        }
    }
    fn is_field() -> bool {
        false
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if *d != 0 && self % d == 0 {
            Some(self / d)
        } else {
            None
        }
    }
}

/// Factorial as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
