//! The six-vertex model on `T_n`: weights, partition functions and checks
//! of the local relations and specializations.

mod brute;
pub mod properties;
pub mod relations;
mod transfer;

pub use brute::{brute_force_eval, partition_function_symbolic, ClearedPartitionFunction, SYMBOLIC_MAX_ORDER};
pub use transfer::{
    count_configurations, partition_function_cleared, partition_function_eval, partition_function_pm, transfer,
    unit_weights_at_zeta12, VertexWeights, COUNT_MAX_ORDER,
};

use crate::arith::{sigma, ArithError, Ring};
use crate::bijection::{Boundary, Bulk, LocalConfig};

/// Which configurations a partition function sums over, by the orientation of
/// the edge above the bottom vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sector {
    All,
    /// Bottom edge up: central entry 1.
    Up,
    /// Bottom edge down: central entry -1.
    Down,
}

impl Sector {
    pub fn pick<R: Ring>(self, up: R, down: R) -> R {
        match self {
            Sector::All => up + &down,
            Sector::Up => up,
            Sector::Down => down,
        }
    }
}

/// The global parameter `q` with the quantities every weight needs.
#[derive(Clone, Debug)]
pub struct WeightContext<R: Ring> {
    q: R,
    q2: R,
    sigma_q: R,
    sigma_q4: R,
}

impl<R: Ring> WeightContext<R> {
    pub fn new(q: R) -> Result<Self, ArithError> {
        let q2 = q.clone() * &q;
        let sigma_q = sigma(&q)?;
        let q4 = q2.clone() * &q2;
        let sigma_q4 = sigma(&q4)?;
        Ok(WeightContext { q, q2, sigma_q, sigma_q4 })
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    pub fn sigma_q(&self) -> &R {
        &self.sigma_q
    }

    pub fn sigma_q4(&self) -> &R {
        &self.sigma_q4
    }

    /// `σ(q²u)`, `σ(q²ū)`, `σ(q⁴)` for the six bulk configurations.
    pub fn bulk_cleared(&self, u: &R) -> Result<[R; 6], ArithError> {
        let a = sigma(&(self.q2.clone() * u))?;
        let b = sigma(&(self.q2.clone() * &u.inv()?))?;
        let c = self.sigma_q4.clone();
        Ok([a.clone(), a, b.clone(), b, c.clone(), c])
    }

    pub fn left_cleared(&self, u: &R) -> Result<[R; 4], ArithError> {
        let a = sigma(&(self.q.clone() * u))?;
        let c = self.sigma_q.clone();
        Ok([a.clone(), a, c.clone(), c])
    }

    pub fn right_cleared(&self, u: &R) -> Result<[R; 4], ArithError> {
        let a = sigma(&(self.q.clone() * &u.inv()?))?;
        let c = self.sigma_q.clone();
        Ok([a.clone(), a, c.clone(), c])
    }

    /// Table weight times `σ(q⁴)` (bulk) or `σ(q)` (boundary); polynomial
    /// in `q` and `u`.
    pub fn weight_cleared(&self, c: LocalConfig, u: &R) -> Result<R, ArithError> {
        Ok(match c {
            LocalConfig::Top | LocalConfig::Bottom { .. } => R::one(),
            LocalConfig::Bulk(b) => self.bulk_cleared(u)?[bulk_index(b)].clone(),
            LocalConfig::Left(b) => self.left_cleared(u)?[boundary_index(b)].clone(),
            LocalConfig::Right(b) => self.right_cleared(u)?[boundary_index(b)].clone(),
        })
    }

    /// The clearing factor of a single vertex.
    pub fn vertex_clearing(&self, c: LocalConfig) -> R {
        match c {
            LocalConfig::Top | LocalConfig::Bottom { .. } => R::one(),
            LocalConfig::Bulk(_) => self.sigma_q4.clone(),
            LocalConfig::Left(_) | LocalConfig::Right(_) => self.sigma_q.clone(),
        }
    }

    pub fn weight(&self, c: LocalConfig, u: &R) -> Result<R, ArithError> {
        let f = self.vertex_clearing(c);
        if f.is_zero() {
            let name = if matches!(c, LocalConfig::Bulk(_)) { "sigma(q^4)" } else { "sigma(q)" };
            return Err(ArithError::Vanishing(name.into()));
        }
        self.weight_cleared(c, u)?.checked_div(&f)
    }

    /// `σ(q)^{2n} σ(q⁴)^{n²}`.
    pub fn clearing_factor(&self, n: usize) -> R {
        let a = self.sigma_q.powi(2 * n as i64).expect("non-negative power");
        let b = self.sigma_q4.powi((n * n) as i64).expect("non-negative power");
        a * &b
    }

    /// Divides a cleared value by the clearing factor.
    pub fn unclear(&self, n: usize, cleared: &R) -> Result<R, ArithError> {
        let f = self.clearing_factor(n);
        if f.is_zero() {
            let name = if self.sigma_q.is_zero() { "sigma(q)" } else { "sigma(q^4)" };
            return Err(ArithError::Vanishing(name.into()));
        }
        cleared.checked_div(&f)
    }
}

pub(crate) fn bulk_index(b: Bulk) -> usize {
    Bulk::ALL.iter().position(|&x| x == b).unwrap()
}

pub(crate) fn boundary_index(b: Boundary) -> usize {
    Boundary::ALL.iter().position(|&x| x == b).unwrap()
}

/// Spectral parameter at vertex `(i, j)` of `T_n`: `u_i u_{min(j, 2n+2-j)}` in
/// the bulk and `u_i` on the boundary. `u` holds `u_1..u_{n+1}`.
pub fn vertex_parameter<R: Ring>(n: usize, i: usize, j: usize, u: &[R]) -> R {
    if j == i || j == 2 * n + 2 - i {
        u[i - 1].clone()
    } else {
        let m = j.min(2 * n + 2 - j);
        u[i - 1].clone() * &u[m - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, Cyclotomic, LaurentPoly, Rational};

    fn zeta12() -> WeightContext<Cyclotomic> {
        WeightContext::new(Cyclotomic::zeta(12, 1)).unwrap()
    }

    fn all_configs() -> Vec<LocalConfig> {
        let mut v: Vec<LocalConfig> = Bulk::ALL.iter().map(|&b| LocalConfig::Bulk(b)).collect();
        v.extend(Boundary::ALL.iter().map(|&b| LocalConfig::Left(b)));
        v.extend(Boundary::ALL.iter().map(|&b| LocalConfig::Right(b)));
        v.extend([LocalConfig::Top, LocalConfig::Bottom { up: true }, LocalConfig::Bottom { up: false }]);
        v
    }

    #[test]
    fn unit_weights_at_zeta12() {
        let ctx = zeta12();
        let one = Cyclotomic::one();
        for c in all_configs() {
            assert_eq!(ctx.weight(c, &one).unwrap(), one, "{c:?}");
        }
    }

    #[test]
    fn boundary_reductions() {
        type P = LaurentPoly<Rational>;
        let q = P::var(0);
        let ctx = WeightContext::new(q.clone()).unwrap();
        let qbar = q.inv().unwrap();
        assert!(ctx.weight_cleared(LocalConfig::Left(Boundary::K2), &qbar).unwrap().is_zero());
        assert!(ctx.weight_cleared(LocalConfig::Right(Boundary::K2), &q).unwrap().is_zero());
        let r = WeightContext::new(rational(5, 3)).unwrap();
        assert_eq!(r.weight(LocalConfig::Right(Boundary::K1), &rational(1, 1)).unwrap(), rational(1, 1));
    }

    #[test]
    fn cleared_values() {
        type P = LaurentPoly<Rational>;
        let q = P::var(0);
        let u = P::var(1);
        let ctx = WeightContext::new(q.clone()).unwrap();
        let s = |x: P| sigma(&x).unwrap();
        let q2 = q.clone() * &q;
        assert_eq!(ctx.weight_cleared(LocalConfig::Bulk(Bulk::B1), &u).unwrap(), s(q2.clone() * &u));
        assert_eq!(ctx.weight_cleared(LocalConfig::Bulk(Bulk::B5), &u).unwrap(), s(q2.clone() * &q2));
        assert_eq!(ctx.weight_cleared(LocalConfig::Left(Boundary::K3), &u).unwrap(), s(q.clone()));
    }

    #[test]
    fn singular_q_is_a_domain_error() {
        let ctx = WeightContext::new(Cyclotomic::zeta(8, 1)).unwrap();
        let one = Cyclotomic::one();
        assert!(matches!(ctx.weight(LocalConfig::Bulk(Bulk::B1), &one), Err(ArithError::Vanishing(_))));
        assert!(ctx.weight_cleared(LocalConfig::Bulk(Bulk::B1), &one).is_ok());
        assert!(ctx.weight(LocalConfig::Left(Boundary::K1), &one).is_ok());
    }
}
