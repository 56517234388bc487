use super::{LaurentPoly, Vars};
use crate::error::Result;

/// Determinant of a square matrix of polynomials: cofactor expansion up to
/// order 4, fraction-free elimination beyond.
pub fn poly_det(vars: &Vars, m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    if m.len() <= 4 {
        Ok(det_laplace(vars, m))
    } else {
        det_bareiss(vars, m)
    }
}

/// Cofactor expansion along the first row.
pub fn det_laplace(vars: &Vars, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    match n {
        0 => LaurentPoly::one(vars),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = LaurentPoly::zero(vars);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &det_laplace(vars, &minor);
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// Bareiss fraction-free elimination; every intermediate division is exact.
pub fn det_bareiss(vars: &Vars, m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one(vars));
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one(vars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero(vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}
