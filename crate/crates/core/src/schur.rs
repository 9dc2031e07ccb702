//! Partitions, semistandard tableaux, Schur polynomials and the Schur-form
//! evaluations of the partition function at `q = e^{iπ/6}`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith::{det_exact, factorial, ArithError, Cyclotomic, LaurentPoly, Rational, Ring};
use crate::bijection::{for_each_triangle, statistic_m};
use crate::error::{Error, Result};
use crate::report::{Report, Status};
use crate::sample::PointSampler;
use crate::vertex::{partition_function_eval, Sector, WeightContext};

/// Largest `|λ|` for which tableaux are listed one by one.
pub const SSYT_MAX_SIZE: usize = 24;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n, n-1, n-1, …, 2, 2, 1, 1)`, of length `2n-1`.
    pub fn staircase(n: usize) -> Self {
        let mut parts = Vec::new();
        if n > 0 {
            parts.push(n);
            for k in (1..n).rev() {
                parts.extend([k, k]);
            }
        }
        Partition(parts)
    }

    /// `(n, n, …, 2, 2, 1, 1)`, of length `2n`.
    pub fn doubled_staircase(n: usize) -> Self {
        Partition((1..=n).rev().flat_map(|k| [k, k]).collect())
    }

    /// Every partition with at most `rows` parts, each at most `cols`.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` (1-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A semistandard Young tableau with entries in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ssyt {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Ssyt {
    /// `#(i, T)` for `i = 1..=k`.
    pub fn content(&self, k: usize) -> Vec<usize> {
        let mut c = vec![0; k];
        for &e in self.rows.iter().flatten() {
            c[e - 1] += 1;
        }
        c
    }
}

/// Visits every tableau of shape `λ` with entries at most `k`, filling cells
/// row by row.
pub fn for_each_ssyt(lambda: &Partition, k: usize, mut visit: impl FnMut(&Ssyt)) {
    if lambda.len() > k {
        return;
    }
    let shape = lambda.parts().to_vec();
    let mut t = Ssyt { shape: lambda.clone(), rows: shape.iter().map(|&l| vec![0; l]).collect() };
    // Height of column c, for the room left below a cell.
    let height = |c: usize| shape.iter().filter(|&&l| l > c).count();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        k: usize,
        height: &dyn Fn(usize) -> usize,
        t: &mut Ssyt,
        visit: &mut dyn FnMut(&Ssyt),
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(t);
            return;
        };
        let lo = {
            let left = if c > 0 { t.rows[r][c - 1] } else { 1 };
            let above = if r > 0 { t.rows[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        let hi = k + r + 1 - height(c);
        for v in lo..=hi {
            t.rows[r][c] = v;
            rec(idx + 1, cells, k, height, t, visit);
        }
    }
    rec(0, &cells, k, &height, &mut t, &mut visit);
}

pub fn enumerate_ssyt(lambda: &Partition, k: usize) -> Result<Vec<Ssyt>> {
    if lambda.size() > SSYT_MAX_SIZE {
        return Err(Error::Resource(format!("|λ| = {} exceeds the tableau bound {SSYT_MAX_SIZE}", lambda.size())));
    }
    let mut out = Vec::new();
    for_each_ssyt(lambda, k, |t| out.push(t.clone()));
    Ok(out)
}

/// `∏_{i<j≤k}(λ_i-λ_j-i+j) / ∏_{i<k} i!`.
pub fn ssyt_count_weyl(lambda: &Partition, k: usize) -> BigInt {
    if lambda.len() > k {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 1..=k {
        for j in i + 1..=k {
            num *= BigInt::from(lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64);
        }
    }
    let den = (1..k as u64).fold(BigInt::one(), |a, i| a * factorial(i));
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "tableau count formula is not integral");
    q
}

/// `det(x_i^{λ_j+k-j}) / ∏_{i<j}(x_i-x_j)`; the points must be distinct.
pub fn schur_bialternant<R: Ring>(lambda: &Partition, x: &[R]) -> Result<R> {
    let k = x.len();
    if lambda.len() > k {
        return Ok(R::zero());
    }
    let mut vdm = R::one();
    for i in 0..k {
        for j in i + 1..k {
            let d = x[i].clone() - &x[j];
            if d.is_zero() {
                return Err(Error::Arith(ArithError::Vanishing(format!(
                    "x{} - x{} (coincident points need the tableau sum)",
                    i + 1,
                    j + 1
                ))));
            }
            vdm *= &d;
        }
    }
    let m: Vec<Vec<R>> =
        x.iter().map(|xi| (1..=k).map(|j| xi.powi((lambda.part(j) + k - j) as i64).unwrap()).collect()).collect();
    Ok(det_exact(&m)? * &vdm.inv()?)
}

/// `Σ_T ∏ x_i^{#(i,T)}` over every tableau, one term per tableau.
pub fn schur_tableau_sum<R: Ring>(lambda: &Partition, x: &[R]) -> Result<R> {
    if lambda.size() > SSYT_MAX_SIZE {
        return Err(Error::Resource(format!("|λ| = {} exceeds the tableau bound {SSYT_MAX_SIZE}", lambda.size())));
    }
    let k = x.len();
    let mut acc = R::zero();
    for_each_ssyt(lambda, k, |t| {
        let term = t.content(k).iter().zip(x).fold(R::one(), |a, (&e, xi)| a * &xi.powi(e as i64).unwrap());
        acc += &term;
    });
    Ok(acc)
}

/// The tableau sum, grouped by the sub-tableau of entries below `k`:
/// `s_λ(x_1..x_k) = Σ_μ s_μ(x_1..x_{k-1}) x_k^{|λ|-|μ|}` over `μ` interlacing
/// `λ`. Valid at any point, including coincident ones.
pub fn schur_ssyt<R: Ring>(lambda: &Partition, x: &[R]) -> R {
    let mut memo = HashMap::new();
    branch(lambda.parts(), x, &mut memo)
}

fn branch<R: Ring>(lambda: &[usize], x: &[R], memo: &mut HashMap<(usize, Vec<usize>), R>) -> R {
    let k = x.len();
    if lambda.len() > k {
        return R::zero();
    }
    if lambda.is_empty() {
        return R::one();
    }
    if let Some(v) = memo.get(&(k, lambda.to_vec())) {
        return v.clone();
    }
    let size: usize = lambda.iter().sum();
    let mut acc = R::zero();
    let mut mu = vec![0; lambda.len()];
    interlacing(lambda, 0, &mut mu, &mut |mu| {
        let mut m = mu.to_vec();
        while m.last() == Some(&0) {
            m.pop();
        }
        let msize: usize = m.iter().sum();
        let s = branch(&m, &x[..k - 1], memo);
        if !s.is_zero() {
            acc += &(s * &x[k - 1].powi((size - msize) as i64).unwrap());
        }
    });
    memo.insert((k, lambda.to_vec()), acc.clone());
    acc
}

fn interlacing(lambda: &[usize], i: usize, mu: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == lambda.len() {
        visit(mu);
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    for v in lo..=lambda[i] {
        mu[i] = v;
        interlacing(lambda, i + 1, mu, visit);
    }
}

/// The bialternant at distinct points, the tableau sum otherwise.
pub fn schur<R: Ring>(lambda: &Partition, x: &[R]) -> R {
    let distinct = (0..x.len()).all(|i| (i + 1..x.len()).all(|j| x[i] != x[j]));
    if distinct {
        if let Ok(v) = schur_bialternant(lambda, x) {
            return v;
        }
    }
    schur_ssyt(lambda, x)
}

/// `(k · d/dx s_λ(1,…,1,x)|_{x=1}, |λ| · |SSYT_λ(k)|)`, the left side from
/// differentiating the tableau sum with a symbolic last argument.
pub fn schur_derivative_sides(lambda: &Partition, k: usize) -> (Rational, Rational) {
    type P = LaurentPoly<Rational>;
    if k == 0 {
        return (<Rational as Ring>::zero(), <Rational as Ring>::zero());
    }
    let mut x = vec![P::one(); k - 1];
    x.push(P::var(0));
    let s = schur_ssyt(lambda, &x);
    let d = s.derivative(0).eval(&[<Rational as Ring>::one()]).unwrap();
    let lhs = d * Rational::from_integer(BigInt::from(k));
    let rhs = Rational::from_integer(ssyt_count_weyl(lambda, k) * BigInt::from(lambda.size()));
    (lhs, rhs)
}

/// `3^{-n(n-1)/2}`.
fn third_power<R: Ring>(n: usize) -> R {
    let e = (n * n.saturating_sub(1) / 2) as u32;
    R::from_rational(&Rational::new(BigInt::one(), BigInt::from(3).pow(e)))
}

/// `(u_1², ū_1², …, u_n², ū_n²)`.
fn squares<R: Ring>(u: &[R]) -> Result<Vec<R>> {
    let mut out = Vec::with_capacity(2 * u.len() + 1);
    for ui in u {
        let s = ui.clone() * ui;
        let sbar = s.inv()?;
        out.push(s);
        out.push(sbar);
    }
    Ok(out)
}

/// `s_{λ(n)}(u_1², ū_1², …, u_n², ū_n², y)`.
fn staircase_at<R: Ring>(n: usize, u: &[R], y: R) -> Result<R> {
    let mut x = squares(&u[..n])?;
    x.push(y);
    Ok(schur(&Partition::staircase(n), &x))
}

fn check_params<R>(n: usize, u: &[R], want: usize) -> Result<()> {
    if u.len() != want {
        return Err(Error::Input(format!("order {n} needs {want} spectral parameters, got {}", u.len())));
    }
    Ok(())
}

/// Schur form of `Z(u_1..u_{n+1})` at `q = e^{iπ/6}`.
pub fn schur_theorem_rhs<R: Ring>(n: usize, u: &[R]) -> Result<R> {
    check_params(n, u, n + 1)?;
    let v = u[n].clone();
    let vbar = v.inv()?;
    let d = v.clone() + &R::one();
    if d.is_zero() {
        return Err(Error::Arith(ArithError::Vanishing(format!("u{} + 1", n + 1))));
    }
    let dbar = vbar.clone() + &R::one();
    let v2 = v.clone() * &v;
    let t1 = v.powi(n as i64).unwrap() * &d.inv()? * &staircase_at(n, u, v2.inv()?)?;
    let t2 = vbar.powi(n as i64).unwrap() * &dbar.inv()? * &staircase_at(n, u, v2)?;
    Ok(third_power::<R>(n) * &(t1 + &t2))
}

/// Schur form of `Z(u_1..u_n, 1)` at `q = e^{iπ/6}`; `u` holds `u_1..u_n`.
pub fn schur_corollary_u1<R: Ring>(n: usize, u: &[R]) -> Result<R> {
    check_params(n, u, n)?;
    Ok(third_power::<R>(n) * &staircase_at(n, u, R::one())?)
}

/// Schur forms of `(Z₊, Z₋)` at `q = e^{iπ/6}`; singular at `u_{n+1} = ±1`.
pub fn schur_pm<R: Ring>(n: usize, u: &[R]) -> Result<(R, R)> {
    check_params(n, u, n + 1)?;
    let v = u[n].clone();
    let vbar = v.inv()?;
    let v2 = v.clone() * &v;
    let v2bar = v2.inv()?;
    let d = R::one() - &v2;
    if d.is_zero() {
        return Err(Error::Arith(ArithError::Vanishing(format!("1 - u{}^2", n + 1))));
    }
    let dbar = R::one() - &v2bar;
    let s_lo = staircase_at(n, u, v2bar)?;
    let s_hi = staircase_at(n, u, v2)?;
    let (vn, vbn) = (v.powi(n as i64).unwrap(), vbar.powi(n as i64).unwrap());
    let plus = vn.clone() * &d.inv()? * &s_lo + &(vbn.clone() * &dbar.inv()? * &s_hi);
    let minus = -(vn * &v * &d.inv()? * &s_lo) - &(vbn * &vbar * &dbar.inv()? * &s_hi);
    let c = third_power::<R>(n);
    Ok((c.clone() * &plus, c * &minus))
}

/// `(Z₊, Z₋)` at `u_{n+1} = 1`, `q = e^{iπ/6}` through the derivative of the
/// Schur function in its last argument; `u` holds `u_1..u_n`.
pub fn schur_pm_at_one<R: Ring>(n: usize, u: &[R]) -> Result<(R, R)> {
    check_params(n, u, n)?;
    let mut x: Vec<LaurentPoly<R>> = squares(u)?.into_iter().map(LaurentPoly::constant).collect();
    x.push(LaurentPoly::var(0));
    let s = schur_ssyt(&Partition::staircase(n), &x);
    let one = [R::one()];
    let s1 = s.eval(&one)?;
    let ds = s.derivative(0).eval(&one)?;
    let two_ds = ds.clone() + &ds;
    let c = third_power::<R>(n);
    let plus = two_ds.clone() - &(R::from_i64(n as i64 - 1) * &s1);
    let minus = R::from_i64(n as i64) * &s1 - &two_ds;
    Ok((c.clone() * &plus, c * &minus))
}

fn exact_quotient(num: BigInt, den: BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{what} is not integral");
    q
}

/// `∏_{i=0}^n (3i)!/(n+i)!`.
pub fn dasasm_count_formula(n: usize) -> BigInt {
    let n = n as u64;
    let num = (0..=n).fold(BigInt::one(), |a, i| a * factorial(3 * i));
    let den = (0..=n).fold(BigInt::one(), |a, i| a * factorial(n + i));
    exact_quotient(num, den, "DASASM product formula")
}

/// `3^{-n(n-1)/2} |SSYT_{λ(n)}(2n+1)|`.
pub fn dasasm_count_via_tableaux(n: usize) -> BigInt {
    let c = ssyt_count_weyl(&Partition::staircase(n), 2 * n + 1);
    exact_quotient(c, BigInt::from(3).pow((n * n.saturating_sub(1) / 2) as u32), "tableau count over a power of 3")
}

/// `((n+1)/(2n+1) · D_n, n/(2n+1) · D_n)`.
pub fn dasasm_pm_count_formula(n: usize) -> (BigInt, BigInt) {
    let d = dasasm_count_formula(n);
    let den = BigInt::from(2 * n + 1);
    (
        exact_quotient(&d * BigInt::from(n + 1), den.clone(), "central entry 1 count"),
        exact_quotient(&d * BigInt::from(n), den, "central entry -1 count"),
    )
}

/// `V_n`, the number of VHSASMs of order `2n+1`; `V_0 = 1`.
pub fn vhsasm_count(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let n64 = n as u64;
    let a = (n64 - 1) / 2;
    let num = factorial(2 * n64) * factorial((3 * n64 - 1) / 2) * dasasm_count_formula(n);
    let den = BigInt::from(3).pow(a as u32) * factorial(3 * n64) * factorial(a);
    exact_quotient(num, den, "VHSASM formula")
}

/// `(Σ (-1)^M, Σ_+ (-1)^M, Σ_- (-1)^M)` over the order-`n` triangles.
pub fn signed_sums(n: usize) -> (i64, i64, i64) {
    let (mut plus, mut minus) = (0i64, 0i64);
    for_each_triangle(n, |t| {
        let s = if statistic_m(t).is_multiple_of(2) { 1 } else { -1 };
        if t.central_entry() == 1 {
            plus += s;
        } else {
            minus += s;
        }
    });
    (plus + minus, plus, minus)
}

/// Conjectured `(total, plus, minus)` signed sums. The total is the sum of
/// the two sectors, `(-1)^{n(n+1)/2} V_n`.
pub fn conjectured_signed_sums(n: usize) -> (BigInt, BigInt, BigInt) {
    let v = vhsasm_count(n);
    let sign = |e: usize| if e.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let s = sign(n * n.saturating_sub(1) / 2);
    let par = sign(n);
    let plus = &s * (&par - BigInt::from(3)) * &v / BigInt::from(2);
    let minus = &s * (&par + BigInt::from(3)) * &v / BigInt::from(2);
    (sign(n * (n + 1) / 2) * &v, plus, minus)
}

/// The signed enumeration at `q = e^{iπ/3}`: brute-force sums against the
/// conjectured forms, and against the partition function at `u = 1`.
pub fn conjecture_q3_check(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::Input("the signed enumeration is conjectured for n >= 1".into()));
    }
    let mut report = Report::new();
    let (total, plus, minus) = signed_sums(n);
    let (ct, cp, cm) = conjectured_signed_sums(n);
    for (name, got, want) in [("total", total, ct), ("plus", plus, cp), ("minus", minus, cm)] {
        let ok = BigInt::from(got) == want;
        let witness = (!ok).then(|| format!("sum {got}, conjectured {want}"));
        report.push("q3-conjecture", format!("n={n} {name}"), Status::conjecture(ok), witness);
    }
    let ctx = WeightContext::new(Cyclotomic::zeta(6, 1))?;
    let ones = vec![Cyclotomic::one(); n + 1];
    for (sector, want) in [(Sector::All, total), (Sector::Up, plus), (Sector::Down, minus)] {
        let z = partition_function_eval(n, &ones, &ctx, sector)?;
        report.check("q3-model", format!("n={n} {sector:?}"), z == Cyclotomic::from_i64(want));
    }
    Ok(report)
}

/// Both sides of the reciprocal-variable identity
/// `s_{λ(n)}(…, y^{-1}) = y^{-n} s_{(n,n,…,1,1)}(…, y)` with `y = u_{n+1}^{±2}`.
pub fn reciprocal_sides<R: Ring>(n: usize, u: &[R], y: &R) -> Result<(R, R)> {
    check_params(n, u, n)?;
    let mut x = squares(u)?;
    x.push(y.inv()?);
    let lhs = schur(&Partition::staircase(n), &x);
    *x.last_mut().unwrap() = y.clone();
    let rhs = y.powi(-(n as i64)).unwrap() * &schur(&Partition::doubled_staircase(n), &x);
    Ok((lhs, rhs))
}

/// `Z₋/Z₊` at `u = 1` from the Schur forms, as a reduced fraction.
pub fn central_ratio(n: usize) -> Result<Rational> {
    let (p, m) = schur_pm_at_one(n, &vec![<Rational as Ring>::one(); n])?;
    if Ring::is_zero(&p) {
        return Err(Error::Arith(ArithError::DivisionByZero));
    }
    Ok(m / p)
}

/// The Schur forms against the vertex model at `q = e^{iπ/6}`: the theorem
/// and its `±` parts at `trials` seeded rational points, the reciprocal
/// rewriting, and the `u = 1` values.
pub fn verify_schur(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let ctx = WeightContext::new(Cyclotomic::zeta(12, 1))?;
    let embed = |u: &[Rational]| -> Vec<Cyclotomic> { u.iter().cloned().map(Cyclotomic::from_rational).collect() };
    let mut sampler = PointSampler::new(seed);
    for t in 0..trials {
        let (ok, witness) = sampler.accept(|s| {
            let u = s.rationals(n + 1);
            let uc = embed(&u);
            let z = partition_function_eval(n, &uc, &ctx, Sector::All)?;
            let zp = partition_function_eval(n, &uc, &ctx, Sector::Up)?;
            let full = Cyclotomic::from_rational(schur_theorem_rhs(n, &u)?);
            let (p, m) = schur_pm(n, &u)?;
            let ok = full == z && Cyclotomic::from_rational(p) == zp && Cyclotomic::from_rational(m) == z - &zp;
            Ok((ok, format!("u={u:?}")))
        })?;
        report.push("schur-theorem", format!("n={n} point {t}"), Status::from_bool(ok), (!ok).then_some(witness));
    }
    for t in 0..trials.min(5) {
        let (ok, witness) = sampler.accept(|s| {
            let u = s.rationals(n);
            let v = s.rational();
            let v2 = v.clone() * &v;
            let mut ok = true;
            for y in [v2.clone(), v2.inv()?] {
                let (l, r) = reciprocal_sides(n, &u, &y)?;
                ok &= l == r;
            }
            Ok((ok, format!("u={u:?}, v={v}")))
        })?;
        report.push("schur-reciprocal", format!("n={n} point {t}"), Status::from_bool(ok), (!ok).then_some(witness));
    }
    let ones = vec![<Rational as Ring>::one(); n];
    let total = Rational::from_integer(dasasm_count_formula(n));
    report.check("schur-count", format!("n={n}"), schur_corollary_u1(n, &ones)? == total);
    let (p, m) = dasasm_pm_count_formula(n);
    let pm = schur_pm_at_one(n, &ones)?;
    report.check("schur-count-pm", format!("n={n}"), pm == (Rational::from_integer(p), Rational::from_integer(m)));
    Ok(report)
}

/// Bialternant, tableau sum and branching agree, the count formula matches
/// enumeration, and the derivative identity holds, for every `λ` in a
/// `rows × cols` box and every `k ≤ kmax`.
pub fn verify_schur_kit(rows: usize, cols: usize, kmax: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let mut sampler = PointSampler::new(seed);
    for lambda in Partition::all_in_box(rows, cols) {
        for k in 1..=kmax {
            let case = format!("{lambda} k={k}");
            let count = enumerate_ssyt(&lambda, k)?.len();
            report.check("ssyt-count", case.clone(), ssyt_count_weyl(&lambda, k) == BigInt::from(count));
            let ones = vec![<Rational as Ring>::one(); k];
            report.check(
                "schur-at-ones",
                case.clone(),
                schur_ssyt(&lambda, &ones) == Rational::from_integer(count.into()),
            );
            if lambda.len() <= k {
                let (l, r) = schur_derivative_sides(&lambda, k);
                report.check("schur-derivative", case.clone(), l == r);
            }
            let (ok, witness) = sampler.accept(|s| {
                let x = s.rationals(k);
                let bi = schur_bialternant(&lambda, &x)?;
                let ok = bi == schur_tableau_sum(&lambda, &x)? && bi == schur_ssyt(&lambda, &x);
                Ok((ok, format!("x={x:?}")))
            })?;
            report.push("schur-bialternant", case, Status::from_bool(ok), (!ok).then_some(witness));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        rational(a, b)
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::staircase(3).parts(), &[3, 2, 2, 1, 1]);
        assert_eq!(Partition::doubled_staircase(2).parts(), &[2, 2, 1, 1]);
        assert!(Partition::staircase(0).is_empty());
        assert_eq!(part(&[2, 1, 0, 0]).len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
        // C(4+4, 4) partitions fit in a 4×4 box.
        assert_eq!(Partition::all_in_box(4, 4).len(), 70);
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(enumerate_ssyt(&part(&[1]), 3).unwrap().len(), 3);
        assert_eq!(enumerate_ssyt(&part(&[2, 1]), 3).unwrap().len(), 8);
        assert_eq!(enumerate_ssyt(&part(&[2, 1, 1]), 5).unwrap().len(), 45);
        assert!(enumerate_ssyt(&part(&[1, 1, 1]), 2).unwrap().is_empty());
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3).unwrap().len(), 1);
    }

    #[test]
    fn tableaux_are_semistandard_and_distinct() {
        let ts = enumerate_ssyt(&part(&[3, 2, 2]), 4).unwrap();
        let set: std::collections::HashSet<_> = ts.iter().collect();
        assert_eq!(set.len(), ts.len());
        for t in &ts {
            for row in &t.rows {
                assert!(row.windows(2).all(|w| w[0] <= w[1]));
            }
            for w in t.rows.windows(2) {
                assert!(w[1].iter().zip(&w[0]).all(|(b, a)| b > a));
            }
        }
    }

    #[test]
    fn weyl_matches_enumeration() {
        for lambda in Partition::all_in_box(4, 4) {
            for k in 0..=5 {
                let count = enumerate_ssyt(&lambda, k).unwrap().len();
                assert_eq!(ssyt_count_weyl(&lambda, k), BigInt::from(count), "{lambda} k={k}");
            }
        }
        assert_eq!(ssyt_count_weyl(&Partition::empty(), 4), BigInt::one());
    }

    #[test]
    fn bialternant_small() {
        let (a, b) = (r(2, 3), r(-5, 7));
        assert_eq!(schur_bialternant(&part(&[1]), &[a.clone(), b.clone()]).unwrap(), a.clone() + &b);
        assert!(schur_bialternant(&part(&[1]), &[a.clone(), a.clone()]).is_err());
        assert_eq!(schur(&part(&[1]), &[r(1, 1), r(1, 1), r(1, 1)]), r(3, 1));
    }

    #[test]
    fn three_forms_agree() {
        let mut s = PointSampler::new(3);
        for lambda in Partition::all_in_box(4, 4) {
            for k in 1..=4 {
                let x = s.rationals(k);
                let Ok(bi) = schur_bialternant(&lambda, &x) else { continue };
                assert_eq!(bi, schur_tableau_sum(&lambda, &x).unwrap(), "{lambda} k={k}");
                assert_eq!(bi, schur_ssyt(&lambda, &x), "{lambda} k={k}");
            }
        }
    }

    #[test]
    fn symmetric() {
        let mut s = PointSampler::new(8);
        let lambda = part(&[3, 1, 1]);
        let mut x = s.rationals(4);
        let v = schur_ssyt(&lambda, &x);
        x.swap(0, 3);
        assert_eq!(schur_ssyt(&lambda, &x), v);
        x.swap(1, 2);
        assert_eq!(schur_ssyt(&lambda, &x), v);
    }

    #[test]
    fn derivative_identity() {
        for lambda in Partition::all_in_box(4, 4) {
            for k in lambda.len().max(1)..=4 {
                let (l, rr) = schur_derivative_sides(&lambda, k);
                assert_eq!(l, rr, "{lambda} k={k}");
            }
        }
    }

    #[test]
    fn counts() {
        let table = [1u64, 3, 15, 126, 1782, 42471, 1706562, 115640460];
        let plus = [1u64, 2, 9, 72, 990, 23166, 918918, 61674912];
        let minus = [0u64, 1, 6, 54, 792, 19305, 787644, 53965548];
        for n in 0..8 {
            assert_eq!(dasasm_count_formula(n), BigInt::from(table[n]));
            assert_eq!(dasasm_pm_count_formula(n), (BigInt::from(plus[n]), BigInt::from(minus[n])));
        }
        for n in 0..=8 {
            assert_eq!(dasasm_count_via_tableaux(n), dasasm_count_formula(n));
        }
        let v: Vec<BigInt> = (1..=5).map(vhsasm_count).collect();
        assert_eq!(v, [1, 1, 2, 6, 33].map(BigInt::from));
    }

    #[test]
    fn corollary_counts() {
        for (n, want) in [(0, 1), (1, 3), (2, 15), (3, 126)] {
            assert_eq!(schur_corollary_u1(n, &vec![r(1, 1); n]).unwrap(), r(want, 1));
            let mut u = vec![r(1, 1); n + 1];
            u[n] = r(1, 1);
            assert_eq!(schur_theorem_rhs(n, &u).unwrap(), r(want, 1));
        }
    }

    #[test]
    fn pm_counts() {
        assert_eq!(schur_pm_at_one(1, &[r(1, 1)]).unwrap(), (r(2, 1), r(1, 1)));
        assert_eq!(schur_pm_at_one(2, &[r(1, 1), r(1, 1)]).unwrap(), (r(9, 1), r(6, 1)));
        for n in 1..=4 {
            assert_eq!(central_ratio(n).unwrap(), r(n as i64, n as i64 + 1));
        }
    }

    #[test]
    fn theorem_matches_model() {
        let ctx = WeightContext::new(Cyclotomic::zeta(12, 1)).unwrap();
        let mut s = PointSampler::new(21);
        for n in 1..=3 {
            for _ in 0..3 {
                let u = s.rationals(n + 1);
                let uc: Vec<Cyclotomic> = u.iter().cloned().map(Cyclotomic::from_rational).collect();
                let z = partition_function_eval(n, &uc, &ctx, Sector::All).unwrap();
                assert_eq!(Cyclotomic::from_rational(schur_theorem_rhs(n, &u).unwrap()), z);
                let (p, m) = schur_pm(n, &u).unwrap();
                assert_eq!(
                    Cyclotomic::from_rational(p.clone()),
                    partition_function_eval(n, &uc, &ctx, Sector::Up).unwrap()
                );
                assert_eq!(
                    Cyclotomic::from_rational(m.clone()),
                    partition_function_eval(n, &uc, &ctx, Sector::Down).unwrap()
                );
            }
        }
    }

    #[test]
    fn pm_at_one_matches_model() {
        let ctx = WeightContext::new(Cyclotomic::zeta(12, 1)).unwrap();
        let u = vec![r(3, 2), r(-4, 5)];
        let (p, m) = schur_pm_at_one(2, &u).unwrap();
        let mut uc: Vec<Cyclotomic> = u.iter().cloned().map(Cyclotomic::from_rational).collect();
        uc.push(Cyclotomic::one());
        assert_eq!(Cyclotomic::from_rational(p.clone()), partition_function_eval(2, &uc, &ctx, Sector::Up).unwrap());
        assert_eq!(Cyclotomic::from_rational(m.clone()), partition_function_eval(2, &uc, &ctx, Sector::Down).unwrap());
    }

    #[test]
    fn cube_root_factor() {
        let u1 = Cyclotomic::zeta(12, 2);
        let v = schur_corollary_u1(2, &[u1, Cyclotomic::from_rational(r(5, 3))]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn singular_points() {
        assert!(schur_theorem_rhs(1, &[r(2, 1), r(-1, 1)]).is_err());
        assert!(schur_pm(1, &[r(2, 1), r(1, 1)]).is_err());
        assert!(schur_pm(1, &[r(2, 1), r(-1, 1)]).is_err());
    }

    #[test]
    fn reciprocal_identity() {
        let mut s = PointSampler::new(4);
        for n in 1..=3 {
            let u = s.rationals(n);
            let v = s.rational();
            let v2 = v.clone() * &v;
            for y in [v2.clone(), v2.inv().unwrap()] {
                let (l, rr) = reciprocal_sides(n, &u, &y).unwrap();
                assert_eq!(l, rr);
            }
        }
    }

    #[test]
    fn suites() {
        assert!(verify_schur(1, 2, 3).unwrap().passed());
        let kit = verify_schur_kit(2, 2, 3, 3).unwrap();
        assert!(kit.passed(), "{:?}", kit.failures().next());
    }

    #[test]
    fn q3_conjecture() {
        assert_eq!(signed_sums(1), (-1, -2, 1));
        for n in 1..=3 {
            let rep = conjecture_q3_check(n).unwrap();
            assert!(
                rep.records.iter().all(|c| matches!(c.status, Status::Pass | Status::ConjectureConfirmed)),
                "{rep:?}"
            );
        }
    }
}
