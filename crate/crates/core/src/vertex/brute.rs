//! Direct summation over odd DASASM triangles.

use serde::Serialize;

use super::{vertex_parameter, Sector, WeightContext};
use crate::arith::{LaurentPoly, Rational, Ring};
use crate::bijection::{config_from_triangle, for_each_triangle, OddDasasmTriangle};
use crate::error::{Error, Result};

/// Largest order for which the symbolic sum is produced by default.
pub const SYMBOLIC_MAX_ORDER: usize = 3;

/// Product of cleared weights of the configuration attached to `t`.
fn cleared_term<R: Ring>(t: &OddDasasmTriangle, u: &[R], ctx: &WeightContext<R>) -> Result<R> {
    let n = t.order();
    let c = config_from_triangle(t);
    let mut acc = R::one();
    for i in 1..=n {
        for j in i..=2 * n + 2 - i {
            let p = vertex_parameter(n, i, j, u);
            acc *= &ctx.weight_cleared(c.local(i, j)?, &p)?;
        }
    }
    Ok(acc)
}

/// Cleared partition function summed configuration by configuration.
pub fn brute_force_eval<R: Ring>(n: usize, u: &[R], ctx: &WeightContext<R>, sector: Sector, max: usize) -> Result<R> {
    if n > max {
        return Err(Error::Resource(format!("order {n} exceeds the brute-force bound {max}")));
    }
    if u.len() != n + 1 {
        return Err(Error::Input(format!("expected {} spectral parameters, got {}", n + 1, u.len())));
    }
    let mut acc = R::zero();
    let mut err = None;
    for_each_triangle(n, |t| {
        if err.is_some() {
            return;
        }
        let keep = match sector {
            Sector::All => true,
            Sector::Up => t.central_entry() == 1,
            Sector::Down => t.central_entry() == -1,
        };
        if keep {
            match cleared_term(t, u, ctx) {
                Ok(x) => acc += &x,
                Err(e) => err = Some(e),
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// `σ(q)^{2n} σ(q⁴)^{n²} Z` as a Laurent polynomial in `q = x_0` and
/// `u_k = x_k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClearedPartitionFunction {
    pub n: usize,
    #[serde(serialize_with = "render_poly")]
    pub poly: LaurentPoly<Rational>,
}

fn render_poly<S: serde::Serializer>(p: &LaurentPoly<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl ClearedPartitionFunction {
    pub fn variable_names(&self) -> Vec<String> {
        std::iter::once("q".to_string()).chain((1..=self.n + 1).map(|k| format!("u{k}"))).collect()
    }

    pub fn render(&self) -> String {
        let names = self.variable_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.poly.render(&refs)
    }

    /// Value at `q` and `u_1..u_{n+1}`.
    pub fn eval<R: Ring>(&self, q: &R, u: &[R]) -> Result<R> {
        let point: Vec<R> = std::iter::once(q.clone()).chain(u.iter().cloned()).collect();
        Ok(self.poly.eval_with(&point, R::from_rational)?)
    }
}

pub fn partition_function_symbolic(n: usize, sector: Sector, max: usize) -> Result<ClearedPartitionFunction> {
    // Integer coefficients keep the expansion cheap; they are converted once.
    type P = LaurentPoly<i128>;
    let ctx = WeightContext::new(P::var(0))?;
    let u: Vec<P> = (1..=n + 1).map(P::var).collect();
    let p = brute_force_eval(n, &u, &ctx, sector, max)?;
    let poly = LaurentPoly::from_terms(p.terms().map(|(m, c)| (m.clone(), Rational::from_integer((*c).into()))));
    Ok(ClearedPartitionFunction { n, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, sigma, Cyclotomic};
    use crate::vertex::partition_function_cleared;

    type P = LaurentPoly<Rational>;

    #[test]
    fn order_zero_is_one() {
        let z = partition_function_symbolic(0, Sector::All, 3).unwrap();
        assert_eq!(z.poly, P::one());
    }

    #[test]
    fn order_one_three_terms() {
        let z = partition_function_symbolic(1, Sector::All, 3).unwrap();
        let q = P::var(0);
        let (u1, u2) = (P::var(1), P::var(2));
        let s = |x: P| sigma(&x).unwrap();
        let bar = |x: &P| x.inv().unwrap();
        let q2 = q.clone() * &q;
        let q4 = q2.clone() * &q2;
        let expected = s(q2.clone() * &bar(&u1) * &bar(&u2)) * &s(q.clone() * &bar(&u1)) * &s(q.clone())
            + s(q.clone() * &u1) * &s(q.clone() * &bar(&u1)) * &s(q4.clone())
            + s(q.clone() * &u1) * &s(q2.clone() * &u1 * &u2) * &s(q.clone());
        assert_eq!(z.poly, expected);
    }

    #[test]
    fn example_term_appears_in_order_three() {
        // The configuration of the order-3 example triangle.
        let t: OddDasasmTriangle = "0 0 1 0 0 0 0\n1 -1 0 1 0\n0 1 -1\n-1".parse().unwrap();
        let q = P::var(0);
        let ctx = WeightContext::new(q.clone()).unwrap();
        let u: Vec<P> = (1..=4).map(P::var).collect();
        let term = cleared_term(&t, &u, &ctx).unwrap();
        let s = |x: P| sigma(&x).unwrap();
        let b = |k: usize| u[k - 1].inv().unwrap();
        let q2 = q.clone() * &q;
        let q4 = q2.clone() * &q2;
        let expected = s(q.clone() * &u[0])
            * &s(q2.clone() * &u[0] * &u[1])
            * &s(q2.clone() * &b(1) * &b(4))
            * &s(q2.clone() * &b(1) * &b(3))
            * &s(q2.clone() * &b(1) * &b(2))
            * &s(q.clone() * &b(1))
            * &s(q2.clone() * &u[1] * &u[3])
            * &s(q.clone() * &b(2))
            * &s(q.clone() * &u[2])
            * &s(q.clone()).powi(2).unwrap()
            * &s(q4).powi(4).unwrap();
        assert_eq!(term, expected);
    }

    #[test]
    fn order_two_counts_at_zeta12() {
        let z = partition_function_symbolic(2, Sector::All, 3).unwrap();
        let q = Cyclotomic::zeta(12, 1);
        let one = Cyclotomic::one();
        let v = z.eval(&q, &[one.clone(), one.clone(), one]).unwrap();
        let ctx = WeightContext::new(q).unwrap();
        assert_eq!(ctx.unclear(2, &v).unwrap(), Cyclotomic::from_rational(rational(15, 1)));
    }

    #[test]
    fn agrees_with_transfer() {
        let ctx = WeightContext::new(rational(-7, 5)).unwrap();
        let u = vec![rational(2, 3), rational(9, 2), rational(-3, 1), rational(5, 7)];
        for s in [Sector::All, Sector::Up, Sector::Down] {
            let a = brute_force_eval(3, &u, &ctx, s, 3).unwrap();
            let b = partition_function_cleared(3, &u, &ctx, s).unwrap();
            assert_eq!(a, b);
        }
    }
}
