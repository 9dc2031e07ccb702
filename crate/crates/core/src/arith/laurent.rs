//! Sparse multivariate Laurent polynomials.
//!
//! Variables are identified by index. A monomial stores its exponent vector
//! with trailing zeros removed, so polynomials in different numbers of
//! variables mix freely.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::ring::{Rational, Ring};
use super::ArithError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(mut exps: Vec<i32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize, e: i32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Monomial::new(v)
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Monomial::new((0..len).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn div(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Monomial::new((0..len).map(|i| self.exp(i) - other.exp(i)).collect())
    }

    pub fn inv(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }
}

/// Lexicographic on zero-padded exponent vectors; a group order on `Z^k`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C: Ring> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i, 1), C::one())
    }

    pub fn var_pow(i: usize, e: i32) -> Self {
        Self::term(Monomial::var(i, e), C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next()
    }

    /// Constant value, when the polynomial has no non-trivial monomial.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Number of variable slots in use.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    /// `(min, max)` exponent of variable `i`, or `None` for the zero polynomial.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exp(i));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c)))
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            let v = x.clone() * c;
            if !v.is_zero() {
                out.terms.insert(m.mul(mono), v);
            }
        }
        out
    }

    /// Evaluation in any ring, mapping coefficients through `coeff`.
    /// Negative exponents require the image of the variable to be a unit.
    pub fn eval_with<R: Ring>(&self, point: &[R], coeff: impl Fn(&C) -> R) -> Result<R, ArithError> {
        let nv = self.num_vars();
        if point.len() < nv {
            return Err(ArithError::IncompatibleDomains(format!(
                "polynomial uses {nv} variables, point has {}",
                point.len()
            )));
        }
        // Cache powers lazily per variable.
        let mut inverses: Vec<Option<R>> = vec![None; nv];
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if e < 0 {
                    if inverses[i].is_none() {
                        inverses[i] = Some(point[i].inv()?);
                    }
                    inverses[i].as_ref().unwrap()
                } else {
                    &point[i]
                };
                t *= &base.powi(e.unsigned_abs() as i64).expect("non-negative power");
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[C]) -> Result<C, ArithError> {
        self.eval_with(point, |c| c.clone())
    }

    /// Substitutes `x_i ↦ images[i]` (variables beyond `images` stay fixed).
    pub fn substitute(&self, images: &[LaurentPoly<C>]) -> Result<Self, ArithError> {
        let nv = self.num_vars().max(images.len());
        let point: Vec<Self> = (0..nv).map(|i| images.get(i).cloned().unwrap_or_else(|| Self::var(i))).collect();
        self.eval_with(&point, |c| Self::constant(c.clone()))
    }

    /// Substitution `x_i ↦ c·x^m` by a monomial, done termwise.
    pub fn substitute_monomial(&self, i: usize, mono: &Monomial, c: &C) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            let e = m.exp(i);
            let mut rest = m.0.clone();
            if i < rest.len() {
                rest[i] = 0;
            }
            let factor = c.powi(e as i64).ok_or_else(|| ArithError::NotInvertible(c.to_string()))?;
            let mono_e = Monomial(mono.0.iter().map(|k| k * e).collect());
            out.add_term(Monomial::new(rest).mul(&mono_e), &(x.clone() * &factor));
        }
        Ok(out)
    }

    /// Renames variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let len = perm.iter().copied().max().map_or(0, |x| x + 1).max(m.0.len());
            let mut v = vec![0; len];
            for (i, &e) in m.0.iter().enumerate() {
                let j = perm.get(i).copied().unwrap_or(i);
                v[j] += e;
            }
            (Monomial::new(v), c.clone())
        }))
    }

    /// `x_i ↦ 1/x_i` for every listed variable.
    pub fn invert_vars(&self, vars: &[usize]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut v = m.0.clone();
            for &i in vars {
                if i < v.len() {
                    v[i] = -v[i];
                }
            }
            (Monomial::new(v), c.clone())
        }))
    }

    /// Partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.exp(i) != 0).map(|(m, c)| {
            let e = m.exp(i);
            let mut v = m.0.clone();
            v[i] -= 1;
            (Monomial::new(v), c.clone() * &C::from_i64(e as i64))
        }))
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            let compound = cs.contains(' ');
            let neg = !compound && cs.starts_with('-');
            let mag = if neg { &cs[1..] } else { cs.as_str() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("x{i}"));
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let coeff_is_one = mag == "1";
            if factors.is_empty() {
                out.push_str(if compound { &cs } else { mag });
            } else {
                if compound {
                    out.push_str(&format!("({cs})*"));
                } else if !coeff_is_one {
                    out.push_str(mag);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl<C: Ring> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl<C: Ring> Add<&LaurentPoly<C>> for LaurentPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: &Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Ring> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.terms.len() < rhs.terms.len() {
            rhs + &self
        } else {
            self + &rhs
        }
    }
}

impl<C: Ring> Sub<&LaurentPoly<C>> for LaurentPoly<C> {
    type Output = Self;
    fn sub(mut self, rhs: &Self) -> Self {
        self -= rhs;
        self
    }
}

impl<C: Ring> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<C: Ring> Mul<&LaurentPoly<C>> for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1.clone() * c2));
            }
        }
        out
    }
}

impl<C: Ring> Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<C: Ring> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<C: Ring> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c.clone());
        }
    }
}

impl<C: Ring> MulAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn mul_assign(&mut self, rhs: &Self) {
        *self = std::mem::replace(self, Self::zero()) * rhs;
    }
}

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: &Rational) -> Self {
        LaurentPoly::constant(C::from_rational(r))
    }
    /// Units are the monomials with unit coefficient.
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Self::term(m.inv(), c.try_inv()?))
    }
    fn is_field() -> bool {
        false
    }
    /// Division by the leading term in lex order. The quotient's exponents
    /// are confined to the box forced by per-variable degrees, which also
    /// bounds the loop when the division is not exact.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.try_inv() {
            return Some(self.clone() * &inv);
        }
        let nv = self.num_vars().max(d.num_vars());
        let mut lo = Vec::with_capacity(nv);
        let mut hi = Vec::with_capacity(nv);
        for i in 0..nv {
            let (a0, a1) = self.degree_range(i).unwrap();
            let (b0, b1) = d.degree_range(i).unwrap();
            if a1 - a0 < b1 - b0 {
                return None;
            }
            lo.push(a0 - b0);
            hi.push(a1 - b1);
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let m = rm.div(&dm);
            if (0..nv).any(|i| m.exp(i) < lo[i] || m.exp(i) > hi[i]) {
                return None;
            }
            let c = rc.exact_div(&dc)?;
            rem -= &d.mul_monomial(&m, &c);
            quot.add_term(m, &c);
        }
        Some(quot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rational;
    use proptest::prelude::*;

    type P = LaurentPoly<Rational>;

    fn x(i: usize) -> P {
        P::var(i)
    }

    fn c(n: i64) -> P {
        P::from_i64(n)
    }

    #[test]
    fn monomial_order_is_padded_lex() {
        let a = Monomial::new(vec![1, 0, 0]);
        let b = Monomial::new(vec![0, 5]);
        assert!(a > b);
        assert_eq!(a.exps(), &[1]);
        assert!(Monomial::new(vec![0, -1]) < Monomial::one());
    }

    #[test]
    fn sigma_of_monomial() {
        let s = crate::arith::sigma(&x(0)).unwrap();
        assert_eq!(s, x(0) - P::var_pow(0, -1));
        assert!(crate::arith::sigma(&(x(0) + c(1))).is_err());
    }

    #[test]
    fn exact_division() {
        let a = x(0) * x(1) - P::var_pow(2, -3) + c(2);
        let b = x(0) - x(1) * x(1) + P::var_pow(1, -1);
        let p = a.clone() * &b;
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!((p + &c(1)).exact_div(&b), None);
        assert_eq!(x(0).exact_div(&(x(0) + x(1))), None);
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = x(0) * x(0) - P::var_pow(1, -1) * &c(3);
        let v = p.eval(&[rational(2, 1), rational(3, 1)]).unwrap();
        assert_eq!(v, rational(3, 1));
        let sub = p.substitute(&[x(1), x(0)]).unwrap();
        assert_eq!(sub, x(1) * x(1) - P::var_pow(0, -1) * &c(3));
        let mono = p.substitute_monomial(0, &Monomial::var(2, -1), &rational(2, 1)).unwrap();
        assert_eq!(mono, P::var_pow(2, -2) * &c(4) - P::var_pow(1, -1) * &c(3));
        assert!(p.eval(&[rational(1, 1), rational(0, 1)]).is_err());
    }

    #[test]
    fn degree_and_derivative() {
        let p = P::var_pow(1, -2) + P::var_pow(1, 3) * x(0);
        assert_eq!(p.degree_range(1), Some((-2, 3)));
        assert_eq!(p.derivative(1), P::var_pow(1, -3) * &c(-2) + P::var_pow(1, 2) * x(0) * &c(3));
        assert_eq!(p.invert_vars(&[1]), P::var_pow(1, 2) + P::var_pow(1, -3) * x(0));
    }

    #[test]
    fn rendering() {
        let p = x(0) * x(0) * &P::from_rational(&rational(-3, 2)) + P::var_pow(1, -1) + c(4);
        assert_eq!(p.render(&["q", "u"]), "-3/2*q^2 + 4 + u^-1");
        assert_eq!(P::zero().render(&[]), "0");
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((-2i32..3, -2i32..3, -1i32..2), -5i64..6, 1i64..4), 0..5).prop_map(|ts| {
            P::from_terms(ts.into_iter().map(|((a, b, c), n, d)| (Monomial::new(vec![a, b, c]), rational(n, d))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * (b.clone() * &c));
            prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            prop_assert_eq!(a.clone() - &a, P::zero());
        }

        #[test]
        fn evaluation_is_multiplicative(a in arb_poly(), b in arb_poly(),
                                        v in prop::collection::vec((1i64..50, 1i64..50), 3)) {
            let pt: Vec<Rational> = v.into_iter().map(|(n, d)| rational(n, d)).collect();
            let lhs = (a.clone() * &b).eval(&pt).unwrap();
            prop_assert_eq!(lhs, a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
        }

        #[test]
        fn division_undoes_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((a.clone() * &b).exact_div(&b), Some(a));
        }
    }
}
