//! Determinant formulas for the partition function and Okada's identity.
//!
//! All functions take `q` and the spectral parameters in any field `R` and
//! return the un-cleared value. A vanishing denominator is reported as
//! `ArithError::Vanishing` naming the factor.

use crate::arith::{
    det_exact, rational, sigma, ArithError, Cyclotomic, Fraction, LaurentPoly, Matrix, Rational, Ring, Series,
};
use crate::error::{Error, Result};
use crate::report::{Report, Status};
use crate::sample::PointSampler;
use crate::vertex::{partition_function_eval, partition_function_symbolic, Sector, WeightContext};

fn vanishing(name: impl Into<String>) -> Error {
    Error::Arith(ArithError::Vanishing(name.into()))
}

/// `x` if nonzero, else an error naming it.
fn nonzero<R: Ring>(x: R, name: impl FnOnce() -> String) -> Result<R> {
    if x.is_zero() {
        Err(vanishing(name()))
    } else {
        Ok(x)
    }
}

fn inv<R: Ring>(x: &R, name: &str) -> Result<R> {
    if x.is_zero() {
        return Err(vanishing(name));
    }
    Ok(x.inv()?)
}

struct Common<R: Ring> {
    q2: R,
    sq: R,
    sq2: R,
    sq4: R,
}

impl<R: Ring> Common<R> {
    fn new(q: &R) -> Result<Self> {
        let q2 = q.clone() * q;
        let sq = sigma(q)?;
        let sq2 = sigma(&q2)?;
        let sq4 = sigma(&(q2.clone() * &q2))?;
        Ok(Common { q2, sq, sq2, sq4 })
    }

    /// `σ(q²)^n / (σ(q)^{2n} σ(q⁴)^{n²})`.
    fn leading(&self, n: usize) -> Result<R> {
        let num = self.sq2.powi(n as i64).unwrap();
        let den = self.sq.powi(2 * n as i64).unwrap() * &self.sq4.powi((n * n) as i64).unwrap();
        Ok(num * &inv(&den, "sigma(q)^(2n) sigma(q^4)^(n^2)")?)
    }

    /// `∏_{i<j≤n} (σ(q²u_iu_j)σ(q²ū_iū_j)/σ(u_iū_j))²`.
    fn pair_product(&self, u: &[R], n: usize) -> Result<R> {
        let mut acc = R::one();
        for i in 0..n {
            for j in i + 1..n {
                let uu = u[i].clone() * &u[j];
                let num = sigma(&(self.q2.clone() * &uu))? * &sigma(&(self.q2.clone() * &uu.inv()?))?;
                let den = nonzero(sigma(&(u[i].clone() * &u[j].inv()?))?, || format!("sigma(u{}/u{})", i + 1, j + 1))?;
                let f = num * &den.inv()?;
                acc *= &(f.clone() * &f);
            }
        }
        Ok(acc)
    }

    /// `(q²+q̄²+a²+b̄²) / (σ(q²ab)σ(q²āb̄))`.
    fn entry(&self, a: &R, b: &R, name: impl Fn() -> String) -> Result<R> {
        let q2bar = self.q2.inv()?;
        let num = self.q2.clone() + &q2bar + &(a.clone() * a) + &(b.clone() * b).inv()?;
        let ab = a.clone() * b;
        let den = sigma(&(self.q2.clone() * &ab))? * &sigma(&(self.q2.clone() * &ab.inv()?))?;
        Ok(num * &nonzero(den, name)?.inv()?)
    }

    /// The `n×n` block of rows `i ≤ n`, columns `j ≤ cols`; `flip` uses `ū`.
    fn rows(&self, u: &[R], n: usize, cols: usize, flip: bool) -> Result<Matrix<R>> {
        let v: Vec<R> =
            if flip { u.iter().map(|x| x.inv()).collect::<std::result::Result<_, _>>()? } else { u.to_vec() };
        (0..n)
            .map(|i| {
                (0..cols)
                    .map(|j| {
                        self.entry(&v[i], &v[j], || {
                            format!("sigma(q^2 u{} u{}) sigma(q^2 /(u{} u{}))", i + 1, j + 1, i + 1, j + 1)
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_len<R>(u: &[R], min: usize) -> Result<usize> {
    if u.len() < min {
        return Err(Error::Input(format!("need at least {min} spectral parameters")));
    }
    Ok(u.len())
}

/// Last-row entries of the theorem determinants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LastRow {
    /// `(u_{n+1}-1)/(u_j²-1)`.
    Full,
    /// `1/(1-u_j²)`.
    Plus,
    /// `u_{n+1}/(u_j²-1)`.
    Minus,
}

/// Evaluates `prefactor × (det₁ + det₂)` for the chosen last row.
fn theorem_value<R: Ring>(q: &R, u: &[R], last_row: LastRow) -> Result<R> {
    let n = check_len(u, 1)? - 1;
    let c = Common::new(q)?;
    let last = u[n].clone();
    let lastbar = last.inv()?;

    let mut pre = c.leading(n)?;
    for i in 0..n {
        let ui = &u[i];
        let uibar = ui.inv()?;
        let uu = ui.clone() * &last;
        let num = sigma(ui)?
            * &sigma(&(q.clone() * ui))?
            * &sigma(&(q.clone() * &uibar))?
            * &sigma(&(c.q2.clone() * &uu))?
            * &sigma(&(c.q2.clone() * &uu.inv()?))?;
        let den = nonzero(sigma(&(ui.clone() * &lastbar))?, || format!("sigma(u{}/u{})", i + 1, n + 1))?;
        pre *= &(num * &den.inv()?);
    }
    pre *= &c.pair_product(u, n)?;

    let mut total = R::zero();
    for flip in [false, true] {
        let v: Vec<R> =
            if flip { u.iter().map(|x| x.inv()).collect::<std::result::Result<_, _>>()? } else { u.to_vec() };
        let mut m = c.rows(u, n, n + 1, flip)?;
        let vl = v[n].clone();
        let row = (0..=n)
            .map(|j| {
                let d = v[j].clone() * &v[j] - &R::one();
                let d = nonzero(d, || format!("u{}^2 - 1", j + 1))?;
                let num = match last_row {
                    LastRow::Full => vl.clone() - &R::one(),
                    LastRow::Plus => -R::one(),
                    LastRow::Minus => vl.clone(),
                };
                Ok(num * &d.inv()?)
            })
            .collect::<Result<Vec<R>>>()?;
        m.push(row);
        total += &det_exact(&m)?;
    }
    Ok(pre * &total)
}

/// Right-hand side of the two-determinant formula for `Z(u_1..u_{n+1})`.
pub fn rhs_theorem_full<R: Ring>(q: &R, u: &[R]) -> Result<R> {
    theorem_value(q, u, LastRow::Full)
}

/// The two-determinant formulas for `(Z₊, Z₋)`; singular at `u_{n+1} = ±1`.
pub fn rhs_pm<R: Ring>(q: &R, u: &[R]) -> Result<(R, R)> {
    Ok((theorem_value(q, u, LastRow::Plus)?, theorem_value(q, u, LastRow::Minus)?))
}

/// The first determinant of the theorem before the prefactor, for the
/// column-degeneracy check.
pub fn theorem_first_determinant<R: Ring>(q: &R, u: &[R]) -> Result<R> {
    let n = check_len(u, 1)? - 1;
    let c = Common::new(q)?;
    let mut m = c.rows(u, n, n + 1, false)?;
    let last = u[n].clone() - &R::one();
    let row = (0..=n)
        .map(|j| {
            let d = nonzero(u[j].clone() * &u[j] - &R::one(), || format!("u{}^2 - 1", j + 1))?;
            Ok(last.clone() * &d.inv()?)
        })
        .collect::<Result<Vec<R>>>()?;
    m.push(row);
    Ok(det_exact(&m)?)
}

/// The single-determinant formula for `Z(u_1..u_n, 1)`; `u` holds `u_1..u_n`.
pub fn rhs_corollary_u1<R: Ring>(q: &R, u: &[R]) -> Result<R> {
    let n = check_len(u, 1)?;
    let c = Common::new(q)?;
    let mut pre = c.leading(n)?;
    for ui in u {
        let uibar = ui.inv()?;
        pre *= &(sigma(&(q.clone() * ui))?
            * &sigma(&(q.clone() * &uibar))?
            * &sigma(&(c.q2.clone() * ui))?
            * &sigma(&(c.q2.clone() * &uibar))?);
    }
    pre *= &c.pair_product(u, n)?;
    let m = c.rows(u, n, n, false)?;
    Ok(pre * &det_exact(&m)?)
}

/// `rhs_corollary_u1` at `u_1 = … = u_n = 1`, where the prefactor and the
/// determinant are separately singular: evaluated on the curve
/// `u_i = 1 + i·t` and read off at `t = 0`.
pub fn rhs_corollary_u1_at_one(q: &Cyclotomic, n: usize) -> Result<Cyclotomic> {
    type S = Series<Cyclotomic>;
    let qs = S::constant(q.clone());
    let u: Vec<S> =
        (1..=n).map(|i| S::linear(Cyclotomic::one(), Cyclotomic::from_rational(rational(i as i64, 1)))).collect();
    let v = rhs_corollary_u1(&qs, &u)?;
    Ok(v.limit()?)
}

/// Both sides of Okada's identity
/// `det[(a_i-b_j)/(x_i-y_j)] = (-1)^{k(k+1)/2} / ∏(x_i-y_j) · det(M)`,
/// where row `2i-1` of `M` is `(1, a_i, x_i, a_ix_i, …, x_i^{k-1}, a_ix_i^{k-1})`
/// and row `2i` the same with `b_i, y_i`.
pub fn okada_sides<R: Ring>(a: &[R], b: &[R], x: &[R], y: &[R]) -> Result<(R, R)> {
    let k = a.len();
    if b.len() != k || x.len() != k || y.len() != k {
        return Err(Error::Input("a, b, x, y must have equal length".into()));
    }
    let mut prod = R::one();
    let mut left: Matrix<R> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let d = nonzero(x[i].clone() - &y[j], || format!("x{} - y{}", i + 1, j + 1))?;
            prod *= &d;
            row.push((a[i].clone() - &b[j]) * &d.inv()?);
        }
        left.push(row);
    }
    let lhs = det_exact(&left)?;
    let alt_row = |c: &R, z: &R| -> Vec<R> {
        let mut row = Vec::with_capacity(2 * k);
        let mut p = R::one();
        for _ in 0..k {
            row.push(p.clone());
            row.push(c.clone() * &p);
            p *= z;
        }
        row
    };
    let mut m: Matrix<R> = Vec::with_capacity(2 * k);
    for i in 0..k {
        m.push(alt_row(&a[i], &x[i]));
        m.push(alt_row(&b[i], &y[i]));
    }
    let mut rhs = det_exact(&m)? * &prod.inv()?;
    if (k * (k + 1) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

pub fn okada_check<R: Ring>(a: &[R], b: &[R], x: &[R], y: &[R]) -> Result<bool> {
    let (l, r) = okada_sides(a, b, x, y)?;
    Ok(l == r)
}

/// `rhs_theorem_full` against the vertex model at `trials` seeded points,
/// plus the exact symbolic identity at `n = 1`.
pub fn verify_theorem_full(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    if n == 1 {
        type F = Fraction<LaurentPoly<Rational>>;
        let v = |k: usize| F::from_ring(LaurentPoly::var(k));
        let q = v(0);
        let rhs = rhs_theorem_full(&q, &[v(1), v(2)])?;
        let z = partition_function_symbolic(1, Sector::All, 1)?;
        let lhs = WeightContext::new(q)?.unclear(1, &F::from_ring(z.poly))?;
        report.check("theorem-full", "n=1 symbolic", lhs == rhs);
    }
    let mut sampler = PointSampler::new(seed);
    for t in 0..trials {
        let (ok, witness) = sampler.accept(|s| {
            let q = s.rational();
            let u = s.rationals(n + 1);
            let ctx = WeightContext::new(q.clone())?;
            let z = partition_function_eval(n, &u, &ctx, Sector::All)?;
            let rhs = rhs_theorem_full(&q, &u)?;
            let (p, m) = rhs_pm(&q, &u)?;
            let zp = partition_function_eval(n, &u, &ctx, Sector::Up)?;
            Ok((rhs == z && p == zp && m == z - &zp, format!("q={q}, u={u:?}")))
        })?;
        report.push("theorem-full", format!("n={n} point {t}"), Status::from_bool(ok), (!ok).then_some(witness));
    }
    Ok(report)
}

/// `rhs_corollary_u1` against the vertex model with `u_{n+1} = 1` at
/// `trials` seeded points, and its vanishing at `u_1 = ±q^{±2}`.
pub fn verify_corollary_u1(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let mut sampler = PointSampler::new(seed);
    for t in 0..trials {
        let (ok, witness) = sampler.accept(|s| {
            let q = s.rational();
            let mut u = s.rationals(n);
            let rhs = rhs_corollary_u1(&q, &u)?;
            u.push(Rational::from_integer(1.into()));
            let z = partition_function_eval(n, &u, &WeightContext::new(q.clone())?, Sector::All)?;
            Ok((rhs == z, format!("q={q}, u={u:?}")))
        })?;
        report.push("corollary-u1", format!("n={n} point {t}"), Status::from_bool(ok), (!ok).then_some(witness));
    }
    for t in 0..trials.min(5) {
        let (zeros, witness) = sampler.accept(|s| {
            let q = s.rational();
            let q2 = q.clone() * &q;
            let rest = s.rationals(n - 1);
            let mut all = true;
            for u1 in [q2.clone(), -q2.clone(), q2.inv()?, -q2.inv()?] {
                let mut u = vec![u1];
                u.extend(rest.iter().cloned());
                all &= rhs_corollary_u1(&q, &u)?.is_zero();
            }
            Ok((all, format!("q={q}, u2..={rest:?}")))
        })?;
        report.push(
            "corollary-u1-vanishing",
            format!("n={n} point {t}"),
            Status::from_bool(zeros),
            (!zeros).then_some(witness),
        );
    }
    Ok(report)
}

/// Okada's identity at `trials` seeded rational instances of size `k`.
pub fn verify_okada(k: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let mut sampler = PointSampler::new(seed);
    for t in 0..trials {
        let (ok, witness) = sampler.accept(|s| {
            let (a, b, x, y) = (s.rationals(k), s.rationals(k), s.rationals(k), s.rationals(k));
            Ok((okada_check(&a, &b, &x, &y)?, format!("a={a:?}, b={b:?}, x={x:?}, y={y:?}")))
        })?;
        report.push("okada", format!("k={k} instance {t}"), Status::from_bool(ok), (!ok).then_some(witness));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        rational(a, b)
    }

    #[test]
    fn okada_k1_by_hand() {
        let (l, rr) = okada_sides(&[r(3, 1)], &[r(1, 2)], &[r(5, 1)], &[r(2, 3)]).unwrap();
        assert_eq!(l, r(5, 2) / r(13, 3));
        assert_eq!(l, rr);
    }

    #[test]
    fn okada_random() {
        let mut s = PointSampler::new(11);
        for k in 1..=4 {
            for _ in 0..5 {
                let (a, b, x, y) = (s.rationals(k), s.rationals(k), s.rationals(k), s.rationals(k));
                assert!(okada_check(&a, &b, &x, &y).unwrap());
            }
        }
        assert!(okada_check(&[r(1, 1)], &[r(2, 1)], &[r(3, 1)], &[r(3, 1)]).is_err());
    }

    #[test]
    fn theorem_matches_model_order_two() {
        let q = r(5, 3);
        let u = vec![r(2, 1), r(-7, 4), r(3, 5)];
        let ctx = WeightContext::new(q.clone()).unwrap();
        let z = partition_function_eval(2, &u, &ctx, Sector::All).unwrap();
        assert_eq!(rhs_theorem_full(&q, &u).unwrap(), z);
        let (p, m) = rhs_pm(&q, &u).unwrap();
        assert_eq!(p, partition_function_eval(2, &u, &ctx, Sector::Up).unwrap());
        assert_eq!(m, partition_function_eval(2, &u, &ctx, Sector::Down).unwrap());
    }

    #[test]
    fn theorem_matches_model_random() {
        let mut s = PointSampler::new(5);
        for n in 1..=3 {
            for _ in 0..3 {
                let ok = s
                    .accept(|s| {
                        let q = s.rational();
                        let u = s.rationals(n + 1);
                        let ctx = WeightContext::new(q.clone())?;
                        let z = partition_function_eval(n, &u, &ctx, Sector::All)?;
                        Ok((rhs_theorem_full(&q, &u)? == z, String::new()))
                    })
                    .unwrap()
                    .0;
                assert!(ok, "n={n}");
            }
        }
    }

    #[test]
    fn suites() {
        for n in 1..=2 {
            let r = verify_theorem_full(n, 2, 9).unwrap();
            assert!(r.passed() && r.len() == 2 + (n == 1) as usize);
            assert!(verify_corollary_u1(n, 2, 9).unwrap().passed());
        }
        assert_eq!(verify_okada(3, 4, 1).unwrap().len(), 4);
    }

    #[test]
    fn theorem_symbolic_order_one() {
        type F = Fraction<LaurentPoly<Rational>>;
        let v = |k: usize| F::from_ring(LaurentPoly::var(k));
        let q = v(0);
        let rhs = rhs_theorem_full(&q, &[v(1), v(2)]).unwrap();
        let z = partition_function_symbolic(1, Sector::All, 1).unwrap();
        let ctx = WeightContext::new(q.clone()).unwrap();
        let lhs = ctx.unclear(1, &F::from_ring(z.poly)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn corollary_matches_model() {
        let q = r(-4, 7);
        let u = vec![r(3, 2), r(5, 1), r(-2, 9)];
        let ctx = WeightContext::new(q.clone()).unwrap();
        let mut full = u.clone();
        full.push(r(1, 1));
        let z = partition_function_eval(3, &full, &ctx, Sector::All).unwrap();
        assert_eq!(rhs_corollary_u1(&q, &u).unwrap(), z);
    }

    #[test]
    fn counts_through_the_limit() {
        let q = Cyclotomic::zeta(12, 1);
        assert_eq!(rhs_corollary_u1_at_one(&q, 1).unwrap(), Cyclotomic::from_rational(r(3, 1)));
        assert_eq!(rhs_corollary_u1_at_one(&q, 2).unwrap(), Cyclotomic::from_rational(r(15, 1)));
        assert_eq!(rhs_corollary_u1(&q, &[Cyclotomic::one()]).unwrap(), Cyclotomic::from_rational(r(3, 1)));
    }

    #[test]
    fn vanishing_at_q_squared() {
        let q = r(3, 2);
        let q2 = q.clone() * &q;
        for u1 in [q2.clone(), -q2.clone(), q2.inv().unwrap(), -q2.inv().unwrap()] {
            assert_eq!(rhs_corollary_u1(&q, &[u1, r(7, 5)]).unwrap(), r(0, 1));
        }
    }

    #[test]
    fn singular_inputs_are_named() {
        let q = r(3, 2);
        let e = rhs_theorem_full(&q, &[r(2, 1), r(2, 1)]).unwrap_err();
        assert_eq!(e, vanishing("sigma(u1/u2)"));
        assert!(rhs_pm(&q, &[r(2, 1), r(1, 1)]).is_err());
    }

    #[test]
    fn column_degeneracy() {
        let q = r(3, 2);
        for last in [r(5, 4), r(-5, 4)] {
            let u = vec![r(5, 4), r(7, 3), last];
            assert_eq!(theorem_first_determinant(&q, &u).unwrap(), r(0, 1));
        }
    }
}
