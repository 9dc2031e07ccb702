//! A tagged exact value used at API boundaries (CLI, reports).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

use super::cyclotomic::{forward_ops, Cyclotomic};
use super::fraction::Fraction;
use super::laurent::LaurentPoly;
use super::ring::{Rational, Ring};
use super::ArithError;

pub type RationalFunction = Fraction<LaurentPoly<Rational>>;

#[derive(Clone, Debug)]
pub enum ExactScalar {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
    /// Quotient of Laurent polynomials with rational coefficients.
    Function(RationalFunction),
}

impl ExactScalar {
    /// Demotes to the simplest tag that represents the value.
    pub fn simplify(self) -> Self {
        match self {
            ExactScalar::Cyclotomic(c) => match c.to_rational() {
                Some(r) => ExactScalar::Rational(r),
                None => ExactScalar::Cyclotomic(c),
            },
            ExactScalar::Function(f) => match f.to_ring().and_then(|p| p.as_constant()) {
                Some(r) => ExactScalar::Rational(r),
                None => ExactScalar::Function(f),
            },
            r => r,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.clone().simplify() {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExactScalar::Rational(_) => "rational",
            ExactScalar::Cyclotomic(_) => "cyclotomic",
            ExactScalar::Function(_) => "function",
        }
    }

    fn binary(
        &self,
        other: &Self,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        cyc: impl Fn(&Cyclotomic, &Cyclotomic) -> Result<Cyclotomic, ArithError>,
        fun: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    ) -> Result<Self, ArithError> {
        use ExactScalar::*;
        Ok(match (self, other) {
            (Rational(a), Rational(b)) => Rational(rat(a, b)),
            (Cyclotomic(a), Cyclotomic(b)) => Cyclotomic(cyc(a, b)?),
            (Cyclotomic(a), Rational(b)) => Cyclotomic(cyc(a, &Ring::from_rational(b))?),
            (Rational(a), Cyclotomic(b)) => Cyclotomic(cyc(&Ring::from_rational(a), b)?),
            (Function(a), Function(b)) => Function(fun(a, b)),
            (Function(a), Rational(b)) => Function(fun(a, &Ring::from_rational(b))),
            (Rational(a), Function(b)) => Function(fun(&Ring::from_rational(a), b)),
            (a, b) => {
                return Err(ArithError::IncompatibleDomains(format!("{} and {}", a.kind(), b.kind())));
            }
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.binary(other, |a, b| a + b, |a, b| a.try_add(b), |a, b| a.clone() + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.binary(other, |a, b| a - b, |a, b| a.try_sub(b), |a, b| a.clone() - b)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.binary(other, |a, b| a * b, |a, b| a.try_mul(b), |a, b| a.clone() * b)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.inv()?)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<Cyclotomic> for ExactScalar {
    fn from(c: Cyclotomic) -> Self {
        ExactScalar::Cyclotomic(c)
    }
}

impl From<LaurentPoly<Rational>> for ExactScalar {
    fn from(p: LaurentPoly<Rational>) -> Self {
        ExactScalar::Function(Fraction::from_ring(p))
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.try_sub(other).is_ok_and(|d| d.is_zero())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Cyclotomic(c) => write!(f, "{c}"),
            ExactScalar::Function(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

forward_ops!(ExactScalar);

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Cyclotomic(c) => ExactScalar::Cyclotomic(-c),
            ExactScalar::Function(p) => ExactScalar::Function(-p),
        }
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::Rational(Ring::zero())
    }
    fn one() -> Self {
        ExactScalar::Rational(Ring::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => Ring::is_zero(r),
            ExactScalar::Cyclotomic(c) => c.is_zero(),
            ExactScalar::Function(p) => p.is_zero(),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        ExactScalar::Rational(r.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        match self {
            ExactScalar::Rational(r) => r.try_inv().map(ExactScalar::Rational),
            ExactScalar::Cyclotomic(c) => c.try_inv().map(ExactScalar::Cyclotomic),
            ExactScalar::Function(p) => p.try_inv().map(ExactScalar::Function),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, sigma};

    #[test]
    fn sigma_examples() {
        let one = ExactScalar::one();
        assert!(sigma(&one).unwrap().is_zero());
        let two = ExactScalar::from(rational(2, 1));
        assert_eq!(sigma(&two).unwrap(), ExactScalar::from(rational(3, 2)));
        let w = ExactScalar::from(Cyclotomic::zeta(12, 4));
        let expected = Cyclotomic::from_poly(12, vec![rational(-1, 1), rational(0, 1), rational(2, 1)]);
        assert_eq!(sigma(&w).unwrap(), ExactScalar::from(expected));
        assert!(sigma(&ExactScalar::zero()).is_err());
    }

    #[test]
    fn promotion_and_incompatibility() {
        let x = ExactScalar::from(LaurentPoly::<Rational>::var(0));
        let half = ExactScalar::from(rational(1, 2));
        let s = x.try_add(&half).unwrap();
        assert_eq!(s.kind(), "function");
        let z = ExactScalar::from(Cyclotomic::zeta(8, 1));
        assert!(matches!(x.try_mul(&z), Err(ArithError::IncompatibleDomains(_))));
        let r = z.try_mul(&z.inv().unwrap()).unwrap().simplify();
        assert_eq!(r.kind(), "rational");
    }

    #[test]
    fn sigma_of_laurent_non_unit_is_rejected() {
        // x + 1 is invertible as a rational function, so σ is defined there.
        let x = ExactScalar::from(LaurentPoly::<Rational>::var(0) + &LaurentPoly::one());
        assert!(sigma(&x).is_ok());
        let p = LaurentPoly::<Rational>::var(0) + &LaurentPoly::one();
        assert!(sigma(&p).is_err());
    }
}
