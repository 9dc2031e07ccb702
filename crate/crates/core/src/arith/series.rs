//! Truncated Laurent series `Σ c_k t^k` over a field.
//!
//! Every stored coefficient is exact. Truncation only forgets terms at or
//! beyond the absolute precision, so evaluating an expression on a curve
//! `x = x₀ + c·t` and reading off the `t⁰` coefficient gives the exact limit
//! at a removable singularity.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::ring::{Rational, Ring};
use super::ArithError;

/// Relative precision given to the inverse of an exact non-monomial series.
pub const DEFAULT_PRECISION: usize = 24;

#[derive(Clone, Debug)]
pub struct Series<F: Ring> {
    /// Exponent of `coeffs[0]`.
    val: i64,
    coeffs: Vec<F>,
    /// Absolute precision: coefficients of `t^k` for `k >= prec` are unknown.
    /// `None` for exact (finite) series.
    prec: Option<i64>,
}

impl<F: Ring> Series<F> {
    pub fn constant(c: F) -> Self {
        Self::build(0, vec![c], None)
    }

    /// `a + b·t`.
    pub fn linear(a: F, b: F) -> Self {
        Self::build(0, vec![a, b], None)
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Self::linear(F::zero(), F::one())
    }

    pub fn from_coeffs(val: i64, coeffs: Vec<F>, prec: Option<i64>) -> Self {
        Self::build(val, coeffs, prec)
    }

    fn build(mut val: i64, mut coeffs: Vec<F>, prec: Option<i64>) -> Self {
        if let Some(p) = prec {
            let keep = (p - val).max(0) as usize;
            coeffs.truncate(keep);
        }
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Series { val: prec.unwrap_or(0), coeffs: Vec::new(), prec },
            Some(k) => {
                coeffs.drain(..k);
                val += k as i64;
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
                Series { val, coeffs, prec }
            }
        }
    }

    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    /// Coefficient of `t^k`, if known.
    pub fn coeff(&self, k: i64) -> Result<F, ArithError> {
        if self.prec.is_some_and(|p| k >= p) {
            return Err(ArithError::PrecisionLoss);
        }
        if self.coeffs.is_empty() || k < self.val {
            return Ok(F::zero());
        }
        Ok(self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(F::zero))
    }

    /// The value at `t = 0`; fails on a pole or exhausted precision.
    pub fn limit(&self) -> Result<F, ArithError> {
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(ArithError::Vanishing("denominator of limit".into()));
            }
        }
        self.coeff(0)
    }

    fn end(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<F: Ring> PartialEq for Series<F> {
    /// Equality up to the smaller precision.
    fn eq(&self, other: &Self) -> bool {
        let d = self.clone() - other;
        d.coeffs.is_empty()
    }
}

impl<F: Ring> fmt::Display for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})*t^{}", self.val + i as i64));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        if let Some(p) = self.prec {
            parts.push(format!("O(t^{p})"));
        }
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Ring> Add<&Series<F>> for Series<F> {
    type Output = Self;
    fn add(self, rhs: &Self) -> Self {
        let prec = min_prec(self.prec, rhs.prec);
        let lo = match (self.valuation(), rhs.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Self::build(0, Vec::new(), prec),
        };
        let mut hi = self.end().max(rhs.end());
        if let Some(p) = prec {
            hi = hi.min(p);
        }
        let len = (hi - lo).max(0) as usize;
        let mut coeffs = vec![F::zero(); len];
        for s in [&self, rhs] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let k = s.val + i as i64 - lo;
                if (0..len as i64).contains(&k) {
                    coeffs[k as usize] += c;
                }
            }
        }
        Self::build(lo, coeffs, prec)
    }
}

impl<F: Ring> Add for Series<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<F: Ring> Sub<&Series<F>> for Series<F> {
    type Output = Self;
    fn sub(self, rhs: &Self) -> Self {
        self + &-rhs.clone()
    }
}

impl<F: Ring> Sub for Series<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + &-rhs
    }
}

impl<F: Ring> Mul<&Series<F>> for Series<F> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        let (va, vb) = match (self.valuation(), rhs.valuation()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                let exact_zero = |s: &Self| s.coeffs.is_empty() && s.prec.is_none();
                if exact_zero(&self) || exact_zero(rhs) {
                    return Self::zero();
                }
                // Otherwise some factor is O(t^p); add the lowest possible exponents.
                let lb = |s: &Self| s.valuation().or(s.prec).unwrap();
                return Self::build(0, Vec::new(), Some(lb(&self) + lb(rhs)));
            }
        };
        let prec = min_prec(self.prec.map(|p| p + vb), rhs.prec.map(|p| p + va));
        let lo = va + vb;
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - lo).max(0) as usize);
        }
        let mut coeffs = vec![F::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            if i >= len || x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += &(x.clone() * y);
            }
        }
        Self::build(lo, coeffs, prec)
    }
}

impl<F: Ring> Mul for Series<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<F: Ring> AddAssign<&Series<F>> for Series<F> {
    fn add_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::constant(F::zero())) + rhs;
    }
}

impl<F: Ring> SubAssign<&Series<F>> for Series<F> {
    fn sub_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::constant(F::zero())) - rhs;
    }
}

impl<F: Ring> MulAssign<&Series<F>> for Series<F> {
    fn mul_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::constant(F::zero())) * rhs;
    }
}

impl<F: Ring> Neg for Series<F> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl<F: Ring> Ring for Series<F> {
    fn zero() -> Self {
        Self::constant(F::zero())
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    /// True for the exact zero and for series known to vanish to their
    /// precision.
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        let v = self.valuation()?;
        let c0inv = self.coeffs[0].try_inv()?;
        let rel = match self.prec {
            Some(p) => (p - v) as usize,
            None if self.coeffs.len() == 1 => 1,
            None => DEFAULT_PRECISION,
        };
        let mut inv: Vec<F> = Vec::with_capacity(rel);
        inv.push(c0inv.clone());
        for k in 1..rel {
            let mut s = F::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                s += &(self.coeffs[j].clone() * &inv[k - j]);
            }
            inv.push(-(s * &c0inv));
        }
        let prec = if self.prec.is_none() && self.coeffs.len() == 1 { None } else { Some(-v + rel as i64) };
        Some(Self::build(-v, inv, prec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rational;

    type S = Series<Rational>;

    fn r(n: i64) -> Rational {
        rational(n, 1)
    }

    #[test]
    fn geometric_inverse() {
        let s = S::linear(r(1), r(-1));
        let inv = s.inv().unwrap();
        for k in 0..DEFAULT_PRECISION as i64 {
            assert_eq!(inv.coeff(k).unwrap(), r(1));
        }
        assert!(inv.coeff(DEFAULT_PRECISION as i64).is_err());
    }

    #[test]
    fn removable_singularity() {
        // (x^2 - 1)/(x - 1) at x = 1 + t
        let x = S::linear(r(1), r(1));
        let num = x.clone() * &x - &S::one();
        let den = x - &S::one();
        let q = num * &den.inv().unwrap();
        assert_eq!(q.limit().unwrap(), r(2));
    }

    #[test]
    fn pole_is_reported() {
        let t = S::t();
        let inv = t.inv().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert!(inv.limit().is_err());
    }

    #[test]
    fn sigma_limit() {
        // σ(u)/σ(u v̄) at u = 1 + t, v = 1 + 2t tends to (2)/(2·(1-2)) = -1
        let u = S::linear(r(1), r(1));
        let v = S::linear(r(1), r(2));
        let su = crate::arith::sigma(&u).unwrap();
        let suv = crate::arith::sigma(&(u * &v.inv().unwrap())).unwrap();
        assert_eq!((su * &suv.inv().unwrap()).limit().unwrap(), r(-1));
    }
}
