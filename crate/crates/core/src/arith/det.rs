//! Exact determinants.

use super::ring::Ring;
use super::ArithError;

/// Row-major dense matrix.
pub type Matrix<R> = Vec<Vec<R>>;

fn check_square<R>(m: &Matrix<R>) -> Result<usize, ArithError> {
    let k = m.len();
    if m.iter().any(|row| row.len() != k) {
        return Err(ArithError::NotSquare);
    }
    Ok(k)
}

/// Gaussian elimination with division; `R` must be a field.
pub fn det_gauss<R: Ring>(m: &Matrix<R>) -> Result<R, ArithError> {
    let k = check_square(m)?;
    let mut a = m.clone();
    let mut det = R::one();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return Ok(R::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot_inv = a[col][col].inv()?;
        det *= &a[col][col];
        for r in col + 1..k {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * &pivot_inv;
            for c in col..k {
                let t = f.clone() * &a[col][c];
                a[r][c] -= &t;
            }
        }
    }
    Ok(det)
}

/// Fraction-free Bareiss elimination; every division is exact.
pub fn det_bareiss<R: Ring>(m: &Matrix<R>) -> Result<R, ArithError> {
    let k = check_square(m)?;
    if k == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = R::one();
    for col in 0..k - 1 {
        let Some(p) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return Ok(R::zero());
        };
        if p != col {
            a.swap(p, col);
            sign = !sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let v = a[col][col].clone() * &a[r][c] - a[r][col].clone() * &a[col][c];
                a[r][c] = v.checked_div(&prev)?;
            }
        }
        prev = a[col][col].clone();
    }
    let d = a[k - 1][k - 1].clone();
    Ok(if sign { -d } else { d })
}

/// Determinant by the method suited to the ring.
pub fn det_exact<R: Ring>(m: &Matrix<R>) -> Result<R, ArithError> {
    if R::is_field() {
        det_gauss(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion along the first row; exponential, for cross-checks.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R, ArithError> {
    let k = check_square(m)?;
    if k == 0 {
        return Ok(R::one());
    }
    let mut acc = R::zero();
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Matrix<R> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].clone() * &det_cofactor(&minor)?;
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}
