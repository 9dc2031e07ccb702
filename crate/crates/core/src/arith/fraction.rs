//! Fractions over an integral domain, without gcd normalization.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::ring::{Rational, Ring};
use super::ArithError;

/// `num / den` with `den ≠ 0`. Equality is by cross-multiplication, so the
/// representation is not canonical. A denominator that divides the
/// numerator exactly is cleared on construction.
#[derive(Clone, Debug)]
pub struct Fraction<R: Ring> {
    num: R,
    den: R,
}

impl<R: Ring> Fraction<R> {
    pub fn new(num: R, den: R) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_ring(num: R) -> Self {
        Fraction { num, den: R::one() }
    }

    fn normalized(num: R, den: R) -> Self {
        if num.is_zero() {
            return Fraction { num, den: R::one() };
        }
        if den.is_one() {
            return Fraction { num, den };
        }
        if let Some(q) = num.exact_div(&den) {
            return Fraction { num: q, den: R::one() };
        }
        Fraction { num, den }
    }

    pub fn numer(&self) -> &R {
        &self.num
    }

    pub fn denom(&self) -> &R {
        &self.den
    }

    /// The underlying ring element, when the denominator has been cleared.
    pub fn to_ring(&self) -> Option<R> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.exact_div(&self.den)
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> Result<S, ArithError>) -> Result<S, ArithError> {
        let n = f(&self.num)?;
        let d = f(&self.den)?;
        n.checked_div(&d)
    }
}

impl<R: Ring> PartialEq for Fraction<R> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * &other.den == other.num.clone() * &self.den
    }
}

impl<R: Ring> fmt::Display for Fraction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<R: Ring> Add<&Fraction<R>> for Fraction<R> {
    type Output = Self;
    fn add(self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(self.num + &rhs.num, self.den);
        }
        let num = self.num * &rhs.den + rhs.num.clone() * &self.den;
        Self::normalized(num, self.den * &rhs.den)
    }
}

impl<R: Ring> Add for Fraction<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<R: Ring> Sub<&Fraction<R>> for Fraction<R> {
    type Output = Self;
    fn sub(self, rhs: &Self) -> Self {
        self + &-rhs.clone()
    }
}

impl<R: Ring> Sub for Fraction<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + &-rhs
    }
}

impl<R: Ring> Mul<&Fraction<R>> for Fraction<R> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        Self::normalized(self.num * &rhs.num, self.den * &rhs.den)
    }
}

impl<R: Ring> Mul for Fraction<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<R: Ring> AddAssign<&Fraction<R>> for Fraction<R> {
    fn add_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::from_ring(R::zero())) + rhs;
    }
}

impl<R: Ring> SubAssign<&Fraction<R>> for Fraction<R> {
    fn sub_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::from_ring(R::zero())) - rhs;
    }
}

impl<R: Ring> MulAssign<&Fraction<R>> for Fraction<R> {
    fn mul_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::from_ring(R::zero())) * rhs;
    }
}

impl<R: Ring> Neg for Fraction<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Fraction { num: -self.num, den: self.den }
    }
}

impl<R: Ring> Ring for Fraction<R> {
    fn zero() -> Self {
        Self::from_ring(R::zero())
    }
    fn one() -> Self {
        Self::from_ring(R::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_ring(R::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }
}
