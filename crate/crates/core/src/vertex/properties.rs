//! Specializations and global properties of the partition function.

use std::fmt;
use std::str::FromStr;

use super::{partition_function_cleared, partition_function_symbolic, ClearedPartitionFunction, Sector, WeightContext};
use crate::arith::{sigma, Cyclotomic, LaurentPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::report::{Report, Status};
use crate::sample::PointSampler;

type P = LaurentPoly<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `u_1 = q`.
    Spec1,
    /// `u_1 u_2 = q²`.
    Spec2,
    /// `u_1 u_{n+1} = q²`.
    Spec3,
    /// `u_n = q²`, `u_{n+1} = 1`: the partition function vanishes.
    Spec4,
}

impl Specialization {
    pub const ALL: [Specialization; 4] =
        [Specialization::Spec1, Specialization::Spec2, Specialization::Spec3, Specialization::Spec4];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Spec1 => "spec1",
            Specialization::Spec2 => "spec2",
            Specialization::Spec3 => "spec3",
            Specialization::Spec4 => "spec4",
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            Specialization::Spec2 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Specialization::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown specialization {s:?}")))
    }
}

fn prod<R: Ring>(it: impl IntoIterator<Item = R>) -> R {
    it.into_iter().fold(R::one(), |a, x| a * &x)
}

/// Both sides of a specialization identity in cleared form. `u` holds
/// `u_1..u_{n+1}`; the constrained entries are overwritten. `cleared(k, v)`
/// evaluates the cleared order-`k` partition function at `v`.
pub fn specialization_sides<R: Ring>(
    prop: Specialization,
    n: usize,
    q: &R,
    u: &[R],
    cleared: &dyn Fn(usize, &[R]) -> Result<R>,
) -> Result<(R, R)> {
    if n < prop.min_order() || u.len() != n + 1 {
        return Err(Error::Input(format!("{prop} needs order at least {} and n+1 parameters", prop.min_order())));
    }
    let s = |x: R| -> Result<R> { Ok(sigma(&x)?) };
    let q2 = q.clone() * q;
    let q3 = q2.clone() * q;
    let q4 = q2.clone() * &q2;
    let sq = s(q.clone())?;
    let sq4 = s(q4)?;
    let mut u = u.to_vec();
    match prop {
        Specialization::Spec1 => {
            u[0] = q.clone();
            let lhs = cleared(n, &u)?;
            let mut f = q.clone() + &q.inv()?;
            for ui in &u[1..n] {
                f *= &s(q3.clone() * ui)?.powi(2).unwrap();
            }
            f *= &s(q3.clone() * &u[n])?;
            let rhs = f * &sq.powi(2).unwrap() * &cleared(n - 1, &u[1..])?;
            Ok((lhs, rhs))
        }
        Specialization::Spec2 => {
            u[1] = q2.clone() * &u[0].inv()?;
            let lhs = cleared(n, &u)?;
            let (u1, u2) = (u[0].clone(), u[1].clone());
            let mut f = s(u1.clone())? * &s(q.clone() * &u1)? * &s(u2.clone())? * &s(q.clone() * &u2)?;
            for ui in &u[2..n] {
                let t = s(q2.clone() * &u1 * ui)? * &s(q2.clone() * &u2 * ui)?;
                f *= &t.powi(2).unwrap();
            }
            f *= &s(q2.clone() * &u1 * &u[n])?;
            f *= &s(q2.clone() * &u2 * &u[n])?;
            let rhs = f * &sq4.powi(2).unwrap() * &cleared(n - 2, &u[2..])?;
            Ok((lhs, rhs))
        }
        Specialization::Spec3 => {
            u[n] = q2.clone() * &u[0].inv()?;
            let lhs = cleared(n, &u)?;
            let u1 = u[0].clone();
            let mut f = s(q.clone() * &u1)? * &(s(q.clone() * &u1.inv()?)? + &sq);
            f *= &prod(
                u[1..n]
                    .iter()
                    .map(|ui| Ok(s(q2.clone() * &u1 * ui)? * &s(q2.clone() * ui * &u[n])?))
                    .collect::<Result<Vec<R>>>()?,
            );
            let mut rest: Vec<R> = u[1..n].to_vec();
            rest.push(u1);
            let rhs = f * &sq4 * &cleared(n - 1, &rest)?;
            Ok((lhs, rhs))
        }
        Specialization::Spec4 => {
            u[n - 1] = q2;
            u[n] = R::one();
            Ok((cleared(n, &u)?, R::zero()))
        }
    }
}

/// Symbolic check from the cleared polynomials of orders `0..=n`.
fn symbolic_case(prop: Specialization, n: usize, polys: &[ClearedPartitionFunction]) -> Result<bool> {
    let q = P::var(0);
    let u: Vec<P> = (1..=n + 1).map(P::var).collect();
    let cleared = |k: usize, v: &[P]| -> Result<P> {
        let point: Vec<P> = std::iter::once(q.clone()).chain(v.iter().cloned()).collect();
        Ok(polys[k].poly.eval_with(&point, |c| P::constant(c.clone()))?)
    };
    let (l, r) = specialization_sides(prop, n, &q, &u, &cleared)?;
    Ok(l == r)
}

/// Symbolic checks for orders up to `symbolic_max`, then `trials` seeded
/// random rational points for each order in `symbolic_max+1..=n`.
pub fn verify_specialization(
    prop: Specialization,
    n: usize,
    symbolic_max: usize,
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new();
    let sym_top = n.min(symbolic_max);
    let polys = (0..=sym_top)
        .map(|k| partition_function_symbolic(k, Sector::All, sym_top.max(super::SYMBOLIC_MAX_ORDER)))
        .collect::<Result<Vec<_>>>()?;
    for k in prop.min_order()..=sym_top {
        report.check(prop.name(), format!("n={k} symbolic"), symbolic_case(prop, k, &polys)?);
    }
    let mut sampler = PointSampler::new(seed);
    for k in (sym_top + 1).max(prop.min_order())..=n {
        for t in 0..trials {
            let (ok, witness) = sampler.accept(|s| {
                let q = s.rational();
                let u = s.rationals(k + 1);
                let ctx = WeightContext::new(q.clone())?;
                let cleared = |m: usize, v: &[Rational]| partition_function_cleared(m, v, &ctx, Sector::All);
                let (l, r) = specialization_sides(prop, k, &q, &u, &cleared)?;
                Ok((l == r, format!("q={q}, u={u:?}")))
            })?;
            report.push(prop.name(), format!("n={k} point {t}"), Status::from_bool(ok), (!ok).then_some(witness));
        }
    }
    Ok(report)
}

/// Evenness, degree bounds, `u → ū` invariance and symmetry in `u_1..u_n`.
pub fn verify_global_properties(z: &ClearedPartitionFunction) -> Report {
    let n = z.n;
    let p = &z.poly;
    let mut report = Report::new();
    let case = |s: &str| format!("n={n} {s}");
    for i in 1..=n {
        let even = p.terms().all(|(m, _)| m.exp(i) % 2 == 0);
        report.check("global-even", case(&format!("u{i}")), even);
        let within = p.degree_range(i).is_none_or(|(lo, hi)| lo >= -2 * n as i32 && hi <= 2 * n as i32);
        report.check("global-degree", case(&format!("u{i}")), within);
    }
    let within = p.degree_range(n + 1).is_none_or(|(lo, hi)| lo >= -(n as i32) && hi <= n as i32);
    report.check("global-degree", case(&format!("u{}", n + 1)), within);
    let vars: Vec<usize> = (1..=n + 1).collect();
    report.check("global-reciprocal", case("u -> 1/u"), p.invert_vars(&vars) == *p);
    for i in 1..n {
        let mut perm: Vec<usize> = (0..=n + 1).collect();
        perm.swap(i, i + 1);
        report.check("global-symmetric", case(&format!("u{} <-> u{}", i, i + 1)), p.permute_vars(&perm) == *p);
    }
    report
}

/// `∏(u_i+ū_i)(u_iu_{n+1}+ū_iū_{n+1}) ∏_{i<j}(u_iu_j+ū_iū_j)²`.
pub fn ipi4_product<R: Ring>(n: usize, u: &[R]) -> Result<R> {
    let plus = |x: R| -> Result<R> { Ok(x.inv()? + &x) };
    let mut acc = R::one();
    for i in 0..n {
        acc *= &plus(u[i].clone())?;
        acc *= &plus(u[i].clone() * &u[n])?;
        for j in i + 1..n {
            let t = plus(u[i].clone() * &u[j])?;
            acc *= &(t.clone() * &t);
        }
    }
    Ok(acc)
}

/// At `q = e^{iπ/4}`: `(-iσ(q⁴))^{n²} Z` equals [`ipi4_product`] and the
/// central entry -1 sector vanishes, at `trials` seeded rational points.
pub fn verify_ipi4(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let ctx = WeightContext::new(Cyclotomic::zeta(8, 1))?;
    let minus_i = Cyclotomic::zeta(8, 6);
    let scale = minus_i.powi((n * n) as i64).unwrap() * &ctx.sigma_q().powi(-2 * n as i64).unwrap();
    let mut report = Report::new();
    let mut sampler = PointSampler::new(seed);
    for t in 0..trials {
        let (ok, zero, witness) = sampler.accept(|s| {
            let u = s.rationals(n + 1);
            let uc: Vec<Cyclotomic> = u.iter().cloned().map(Cyclotomic::from_rational).collect();
            let all = partition_function_cleared(n, &uc, &ctx, Sector::All)?;
            let down = partition_function_cleared(n, &uc, &ctx, Sector::Down)?;
            let rhs = Cyclotomic::from_rational(ipi4_product(n, &u)?);
            Ok((all * &scale == rhs, down.is_zero(), format!("u={u:?}")))
        })?;
        report.push("ipi4", format!("n={n} point {t}"), Status::from_bool(ok), (!ok).then(|| witness.clone()));
        report.push("ipi4-minus", format!("n={n} point {t}"), Status::from_bool(zero), (!zero).then_some(witness));
    }
    Ok(report)
}
