//! Elements of the cyclotomic fields `Q(ζ_N)` in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`, reduced modulo the cyclotomic polynomial `Φ_N`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{self, Rational};
use super::ArithError;

/// Integer coefficients of `Φ_n`, lowest degree first (monic).
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_monic(&num, &cached_phi(d));
        }
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_phi(n: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(cyclotomic_polynomial(n));
    phi_cache().write().unwrap().insert(n, p.clone());
    p
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// An element of `Q(ζ_N)`.
///
/// Conductor 1 stands for plain rationals; such elements combine with any
/// conductor. Arithmetic between two different conductors above 1 panics
/// (use the `try_*` methods or [`Cyclotomic::embed`] first). Equality is
/// decided in the common field, so `ζ_4` and `ζ_8^2` compare equal.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    /// `ζ_n^k` with `ζ_n = e^{2πi/n}`; `k` may be negative.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        if n <= 2 {
            let v = if n == 2 && k == 1 { -1 } else { 1 };
            return Cyclotomic::from_rational(Rational::from_integer(BigInt::from(v)));
        }
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Cyclotomic::from_poly(n, poly)
    }

    /// Builds the element `Σ c_i ζ_n^i` from an arbitrary-length polynomial.
    pub fn from_poly(n: u32, poly: Vec<Rational>) -> Self {
        if n <= 2 {
            let z = if n == 2 { -Rational::one() } else { Rational::one() };
            let mut acc = Rational::zero();
            let mut p = Rational::one();
            for c in &poly {
                acc += c * &p;
                p *= &z;
            }
            return Cyclotomic::from_rational(acc);
        }
        let phi = cached_phi(n);
        Cyclotomic { conductor: n, coeffs: reduce(poly, &phi) }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates, of length `φ(N)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image in `Q(ζ_m)` for a multiple `m` of the conductor, via
    /// `ζ_N = ζ_m^{m/N}`.
    pub fn embed(&self, m: u32) -> Result<Self, ArithError> {
        if self.conductor == m {
            return Ok(self.clone());
        }
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(ArithError::ConductorMismatch(self.conductor, m));
        }
        let step = (m / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Cyclotomic::from_poly(m, poly))
    }

    fn common_conductor(&self, other: &Self) -> Result<u32, ArithError> {
        match (self.conductor, other.conductor) {
            (1, m) | (m, 1) => Ok(m),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ArithError::ConductorMismatch(a, b)),
        }
    }

    fn lift(&self, m: u32) -> Self {
        if self.conductor == m {
            self.clone()
        } else {
            let mut coeffs = vec![Rational::zero(); euler_phi(m)];
            coeffs[0] = self.coeffs[0].clone();
            Cyclotomic { conductor: m, coeffs }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let m = self.common_conductor(other)?;
        let (a, b) = (self.lift(m), other.lift(m));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(Cyclotomic { conductor: m, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let m = self.common_conductor(other)?;
        if m == 1 {
            return Ok(Cyclotomic::from_rational(&self.coeffs[0] * &other.coeffs[0]));
        }
        if self.conductor == 1 || other.conductor == 1 {
            let (s, v) = if self.conductor == 1 { (&self.coeffs[0], other) } else { (&other.coeffs[0], self) };
            let coeffs = v.coeffs.iter().map(|c| c * s).collect();
            return Ok(Cyclotomic { conductor: m, coeffs });
        }
        let d = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(Cyclotomic { conductor: m, coeffs: reduce(prod, &cached_phi(m)) })
    }

    /// Inverse by the extended Euclidean algorithm in `Q[x]` against `Φ_N`.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        if self.coeffs.iter().all(Zero::is_zero) {
            return Err(ArithError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Cyclotomic::from_rational(self.coeffs[0].recip()));
        }
        let phi: Vec<Rational> = cached_phi(self.conductor).iter().map(|c| Rational::from_integer(c.clone())).collect();
        let (g, s) = upoly::ext_gcd(&self.coeffs, &phi);
        // g is a nonzero constant since Φ_N is irreducible.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic::from_poly(self.conductor, s))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut poly = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Cyclotomic::from_poly(self.conductor, poly)
    }

    /// Floating-point approximation, for display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.conductor.max(1) as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn reduce(mut poly: Vec<Rational>, phi: &[BigInt]) -> Vec<Rational> {
    let d = phi.len() - 1;
    if poly.len() < d {
        poly.resize(d, Rational::zero());
        return poly;
    }
    for k in (d..poly.len()).rev() {
        let c = std::mem::replace(&mut poly[k], Rational::zero());
        if c.is_zero() {
            continue;
        }
        for (i, p) in phi[..d].iter().enumerate() {
            if !p.is_zero() {
                poly[k - d + i] -= &c * Rational::from_integer(p.clone());
            }
        }
    }
    poly.truncate(d);
    poly
}

/// Dense univariate polynomials over `Q`, lowest degree first.
pub(crate) mod upoly {
    use super::Rational;
    use num_traits::Zero;

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn sub_scaled_shift(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, Rational::zero());
        }
        for (i, x) in b.iter().enumerate() {
            a[i + shift] -= c * x;
        }
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder of `a / b`, `b` nonzero.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        let lead = b.last().expect("division by zero polynomial").clone();
        if r.len() < b.len() {
            return (vec![], r);
        }
        let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() / &lead;
            sub_scaled_shift(&mut r, &b, &c, shift);
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    /// Returns `(g, s)` with `s·a ≡ g (mod m)`, `g = gcd(a, m)`.
    pub fn ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::from_integer(1.into())]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let qs = mul(&q, &s1);
            let mut s2 = s0.clone();
            if s2.len() < qs.len() {
                s2.resize(qs.len(), Rational::zero());
            }
            for (i, x) in qs.iter().enumerate() {
                s2[i] -= x;
            }
            trim(&mut s2);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        (r0, s0)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.conductor.lcm(&other.conductor);
        match (self.embed(m), other.embed(m)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.try_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.try_sub(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.try_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> AddAssign<&'a $t> for $t {
            fn add_assign(&mut self, rhs: &'a $t) {
                *self = self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"));
            }
        }
        impl<'a> SubAssign<&'a $t> for $t {
            fn sub_assign(&mut self, rhs: &'a $t) {
                *self = self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"));
            }
        }
        impl<'a> MulAssign<&'a $t> for $t {
            fn mul_assign(&mut self, rhs: &'a $t) {
                *self = self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"));
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(Cyclotomic);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl ring::Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Cyclotomic::from_rational(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}
