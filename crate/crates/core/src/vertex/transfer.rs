//! Row-transfer evaluation of the partition function.
//!
//! Rows are swept top to bottom and each row left to right. The state is a
//! dense vector indexed by `(mask << 1) | h`, where bit `k` of `mask` is the
//! vertical edge at slot `k` of the current row (above the vertex if not yet
//! visited, below it otherwise; 1 = points up) and `h` is the pending
//! horizontal edge (1 = points right).

use super::{vertex_parameter, Sector, WeightContext};
use crate::arith::{ArithError, Cyclotomic, Ring};
use crate::bijection::{Arrow, Boundary, Bulk};
use crate::error::{Error, Result};

/// Largest order accepted by [`count_configurations`] unless overridden; the
/// state vector at order `n` holds `2^{2n+2}` integers.
pub const COUNT_MAX_ORDER: usize = 11;

/// Weights of the local configurations at one vertex, in the order of
/// `Bulk::ALL` or `Boundary::ALL`.
#[derive(Clone, Debug)]
pub enum VertexWeights<R> {
    Bulk([R; 6]),
    Left([R; 4]),
    Right([R; 4]),
}

struct BulkBits {
    h_in: usize,
    a: usize,
    b: usize,
    h_out: usize,
}

fn bulk_bits() -> [BulkBits; 6] {
    Bulk::ALL.map(|c| {
        let [left, below, right, above] = c.arrows();
        BulkBits {
            h_in: (left == Arrow::In) as usize,
            a: (above == Arrow::Out) as usize,
            b: (below == Arrow::In) as usize,
            h_out: (right == Arrow::Out) as usize,
        }
    })
}

fn io(b: bool) -> Arrow {
    if b {
        Arrow::In
    } else {
        Arrow::Out
    }
}

fn boundary_slot(up: Arrow, side: Arrow) -> usize {
    let k = Boundary::classify(up, side);
    Boundary::ALL.iter().position(|&x| x == k).unwrap()
}

/// Runs the transfer sweep and returns the `(bottom up, bottom down)` sums.
/// `weights(i, j)` supplies the weights at vertex `(i, j)`.
pub fn transfer<R: Ring>(
    n: usize,
    mut weights: impl FnMut(usize, usize) -> std::result::Result<VertexWeights<R>, ArithError>,
) -> std::result::Result<(R, R), ArithError> {
    let bits = bulk_bits();
    let mut w = 2 * n + 1;
    let mut v = vec![R::zero(); 1 << (w + 1)];
    v[((1 << w) - 1) << 1] = R::one();

    for i in 1..=n {
        for k in 0..w {
            let j = i + k;
            let bit = 1usize << (k + 1);
            match weights(i, j)? {
                VertexWeights::Left(wt) => {
                    for idx in (0..v.len()).filter(|x| x & (bit | 1) == 0) {
                        let a0 = std::mem::replace(&mut v[idx], R::zero());
                        let a1 = std::mem::replace(&mut v[idx | bit], R::zero());
                        if a0.is_zero() && a1.is_zero() {
                            continue;
                        }
                        for h in 0..2 {
                            let side = io(h == 0);
                            let t = wt[boundary_slot(io(true), side)].clone() * &a0
                                + wt[boundary_slot(io(false), side)].clone() * &a1;
                            v[idx | h] = t;
                        }
                    }
                }
                VertexWeights::Right(wt) => {
                    for idx in (0..v.len()).filter(|x| x & (bit | 1) == 0) {
                        let mut acc = R::zero();
                        for a in 0..2 {
                            for h in 0..2 {
                                let x = std::mem::replace(&mut v[idx | (a * bit) | h], R::zero());
                                if x.is_zero() {
                                    continue;
                                }
                                acc += &(wt[boundary_slot(io(a == 0), io(h == 1))].clone() * &x);
                            }
                        }
                        v[idx] = acc;
                    }
                }
                VertexWeights::Bulk(wt) => {
                    for idx in (0..v.len()).filter(|x| x & (bit | 1) == 0) {
                        let at = |a: usize, h: usize| idx | (a * bit) | h;
                        let vals = [
                            [
                                std::mem::replace(&mut v[at(0, 0)], R::zero()),
                                std::mem::replace(&mut v[at(0, 1)], R::zero()),
                            ],
                            [
                                std::mem::replace(&mut v[at(1, 0)], R::zero()),
                                std::mem::replace(&mut v[at(1, 1)], R::zero()),
                            ],
                        ];
                        if vals.iter().flatten().all(|x| x.is_zero()) {
                            continue;
                        }
                        for (c, cb) in bits.iter().enumerate() {
                            let x = &vals[cb.a][cb.h_in];
                            if x.is_zero() {
                                continue;
                            }
                            let t = wt[c].clone() * x;
                            v[at(cb.b, cb.h_out)] += &t;
                        }
                    }
                }
            }
        }
        // Drop the two boundary slots, which are now empty.
        let nw = w - 2;
        let mut nv = vec![R::zero(); 1 << (nw + 1)];
        for (idx, x) in v.iter_mut().enumerate() {
            if idx & 1 == 0 && !x.is_zero() {
                let mask = (idx >> 2) & ((1 << nw) - 1);
                nv[mask << 1] = std::mem::replace(x, R::zero());
            }
        }
        v = nv;
        w = nw;
    }
    debug_assert_eq!(w, 1);
    let up = std::mem::replace(&mut v[2], R::zero());
    let down = std::mem::replace(&mut v[0], R::zero());
    Ok((up, down))
}

fn cleared_weights<'a, R: Ring>(
    n: usize,
    u: &'a [R],
    ctx: &'a WeightContext<R>,
) -> impl FnMut(usize, usize) -> std::result::Result<VertexWeights<R>, ArithError> + 'a {
    move |i, j| {
        let p = vertex_parameter(n, i, j, u);
        Ok(if j == i {
            VertexWeights::Left(ctx.left_cleared(&p)?)
        } else if j == 2 * n + 2 - i {
            VertexWeights::Right(ctx.right_cleared(&p)?)
        } else {
            VertexWeights::Bulk(ctx.bulk_cleared(&p)?)
        })
    }
}

fn check_params<R>(n: usize, u: &[R]) -> Result<()> {
    if u.len() != n + 1 {
        return Err(Error::Input(format!("expected {} spectral parameters, got {}", n + 1, u.len())));
    }
    Ok(())
}

/// The cleared partition function `σ(q)^{2n} σ(q⁴)^{n²} Z` (or a sector of it)
/// at an exact point.
pub fn partition_function_cleared<R: Ring>(n: usize, u: &[R], ctx: &WeightContext<R>, sector: Sector) -> Result<R> {
    check_params(n, u)?;
    let (up, down) = transfer(n, cleared_weights(n, u, ctx))?;
    Ok(sector.pick(up, down))
}

/// The un-cleared partition function at a point where `σ(q)σ(q⁴) ≠ 0`.
pub fn partition_function_eval<R: Ring>(n: usize, u: &[R], ctx: &WeightContext<R>, sector: Sector) -> Result<R> {
    let c = partition_function_cleared(n, u, ctx, sector)?;
    Ok(ctx.unclear(n, &c)?)
}

/// `(Z₊, Z₋)` from `Z(u)` and `Z(u₁..u_n, -u_{n+1})`.
pub fn partition_function_pm<R: Ring>(n: usize, u: &[R], ctx: &WeightContext<R>) -> Result<(R, R)> {
    check_params(n, u)?;
    let z = partition_function_eval(n, u, ctx, Sector::All)?;
    let mut flipped = u.to_vec();
    flipped[n] = -flipped[n].clone();
    let mut zf = partition_function_eval(n, &flipped, ctx, Sector::All)?;
    if n % 2 == 1 {
        zf = -zf;
    }
    let half = R::from_rational(&crate::arith::rational(1, 2));
    let plus = (z.clone() + &zf) * &half;
    let minus = (z - &zf) * &half;
    Ok((plus, minus))
}

/// Whether every un-cleared weight equals 1 at `u = 1`, `q = e^{iπ/6}`.
pub fn unit_weights_at_zeta12() -> bool {
    let Ok(ctx) = WeightContext::new(Cyclotomic::zeta(12, 1)) else {
        return false;
    };
    let one = Cyclotomic::one();
    let f4 = ctx.sigma_q4().clone();
    let f1 = ctx.sigma_q().clone();
    let (Ok(b), Ok(l), Ok(r)) = (ctx.bulk_cleared(&one), ctx.left_cleared(&one), ctx.right_cleared(&one)) else {
        return false;
    };
    b.iter().all(|x| *x == f4) && l.iter().chain(r.iter()).all(|x| *x == f1)
}

/// `(Z₊, Z₋)` at `u = 1`, `q = e^{iπ/6}`, i.e. the numbers of DASASMs of order
/// `2n+1` with central entry 1 and -1. Since every weight is 1 there, the
/// sweep runs over the integers.
pub fn count_configurations(n: usize, max: usize) -> Result<(i128, i128)> {
    if n > max {
        return Err(Error::Resource(format!("order {n} exceeds the counting bound {max}")));
    }
    if !unit_weights_at_zeta12() {
        return Err(Error::Arith(ArithError::IncompatibleDomains("weights at the counting point are not 1".into())));
    }
    let n_copy = n;
    Ok(transfer(n, move |i, j| {
        Ok(if j == i {
            VertexWeights::Left([1; 4])
        } else if j == 2 * n_copy + 2 - i {
            VertexWeights::Right([1; 4])
        } else {
            VertexWeights::Bulk([1; 6])
        })
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, Rational};

    #[test]
    fn small_counts() {
        let got: Vec<(i128, i128)> = (0..=4).map(|n| count_configurations(n, COUNT_MAX_ORDER).unwrap()).collect();
        assert_eq!(got, vec![(1, 0), (2, 1), (9, 6), (72, 54), (990, 792)]);
        assert!(count_configurations(12, COUNT_MAX_ORDER).is_err());
    }

    #[test]
    fn cyclotomic_counts() {
        let ctx = WeightContext::new(Cyclotomic::zeta(12, 1)).unwrap();
        let one = Cyclotomic::one();
        let z = partition_function_eval(2, &[one.clone(), one.clone(), one.clone()], &ctx, Sector::All).unwrap();
        assert_eq!(z, Cyclotomic::from_rational(rational(15, 1)));
        let (p, m) = partition_function_pm(1, &[one.clone(), one], &ctx).unwrap();
        assert_eq!((p, m), (Cyclotomic::from_rational(rational(2, 1)), Cyclotomic::from_rational(rational(1, 1))));
    }

    #[test]
    fn sectors_add_up() {
        let ctx = WeightContext::new(rational(3, 2)).unwrap();
        let u: Vec<Rational> = vec![rational(2, 1), rational(-5, 3), rational(7, 4)];
        let all = partition_function_eval(2, &u, &ctx, Sector::All).unwrap();
        let up = partition_function_eval(2, &u, &ctx, Sector::Up).unwrap();
        let down = partition_function_eval(2, &u, &ctx, Sector::Down).unwrap();
        assert_eq!(all, up.clone() + &down);
        let (p, m) = partition_function_pm(2, &u, &ctx).unwrap();
        assert_eq!((p, m), (up, down));
    }

    #[test]
    fn wrong_parameter_count() {
        let ctx = WeightContext::new(rational(3, 2)).unwrap();
        assert!(partition_function_eval(2, &[rational(2, 1)], &ctx, Sector::All).is_err());
    }
}
