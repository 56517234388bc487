//! Factorial Schur polynomials and the shifted families `s*_μ`, `t*_μ`.

use num::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{
    factorial_power, partitions_iter, Partition, Series, ShiftSequence, ShiftedWeight, Signature,
};
use crate::error::{Error, Result};
use crate::exactpoly::{poly_det, vandermonde, LaurentPoly, UniPoly, Vars};
use crate::rational::{det, fmt_q, q, Q};

/// `(t | a)^k` as a polynomial in `t`.
pub fn factorial_power_poly(a: &ShiftSequence, k: usize) -> UniPoly {
    (1..=k).fold(UniPoly::one(), |acc, j| {
        acc.mul(&UniPoly::new(vec![-a.term(j), Q::one()]))
    })
}

fn exponents(mu: &Partition, n: usize) -> Result<Vec<usize>> {
    Ok(mu
        .padded(n)?
        .iter()
        .enumerate()
        .map(|(i, &m)| m + n - 1 - i)
        .collect())
}

/// `det[(x_j|a)^{μ_i+n-i}] / det[x_j^{n-i}]` at distinct points.
pub fn factorial_schur_ratio(mu: &Partition, points: &[Q], a: &ShiftSequence) -> Result<Q> {
    let n = points.len();
    let exps = exponents(mu, n)?;
    let mut denom = Q::one();
    for i in 0..n {
        for j in i + 1..n {
            denom *= &points[i] - &points[j];
        }
    }
    if denom.is_zero() {
        return Err(Error::RepeatedPoints);
    }
    let m: Vec<Vec<Q>> = exps
        .iter()
        .map(|&k| points.iter().map(|x| factorial_power(x, a, k)).collect())
        .collect();
    Ok(det(m) / denom)
}

/// `s_μ(x_1, ..., x_n | a)` at a point. Repeated points go through the
/// symbolic polynomial.
pub fn factorial_schur_eval(mu: &Partition, points: &[Q], a: &ShiftSequence) -> Result<Q> {
    match factorial_schur_ratio(mu, points, a) {
        Err(Error::RepeatedPoints) => factorial_schur_poly(mu, points.len(), a)?.evaluate(points),
        r => r,
    }
}

/// `s_μ(x_1, ..., x_n | a)` as a polynomial in `x1..xn`.
pub fn factorial_schur_poly(mu: &Partition, n: usize, a: &ShiftSequence) -> Result<LaurentPoly> {
    factorial_schur_poly_in(mu, &Vars::indexed("x", n), a)
}

pub fn factorial_schur_poly_in(
    mu: &Partition,
    vars: &Vars,
    a: &ShiftSequence,
) -> Result<LaurentPoly> {
    let n = vars.len();
    let exps = exponents(mu, n)?;
    let m: Vec<Vec<LaurentPoly>> = exps
        .iter()
        .map(|&k| {
            let f = factorial_power_poly(a, k);
            (0..n).map(|j| f.to_laurent(vars, j)).collect()
        })
        .collect();
    poly_det(vars, &m)?.exact_divide(&vandermonde(vars))
}

/// `s*_μ(λ) = s_μ(l_1, ..., l_n | 0, 1, 2, ...)` with `l_i = λ_i + n - i`.
pub fn s_star(mu: &Partition, lambda: &Signature) -> Result<Q> {
    let l = ShiftedWeight::new(Series::A, lambda);
    factorial_schur_eval(mu, l.values(), &ShiftSequence::Falling)
}

/// `t*_μ(λ) = s_μ(l_1², ..., l_n² | ε², (ε+1)², ...)` with
/// `l_i = λ_i + n - i + ε`. For D the last entry enters through `|λ_n|`.
pub fn t_star(series: Series, mu: &Partition, lambda: &Signature) -> Result<Q> {
    series.require_bcd()?;
    let lambda = if series == Series::D {
        lambda.abs_last()
    } else {
        lambda.clone()
    };
    let l = ShiftedWeight::new(series, &lambda);
    factorial_schur_eval(mu, &l.squares(), &series.shift_sequence())
}

/// `s*_μ` or `t*_μ` according to the series.
pub fn shifted_value(series: Series, mu: &Partition, lambda: &Signature) -> Result<Q> {
    match series {
        Series::A => s_star(mu, lambda),
        s => t_star(s, mu, lambda),
    }
}

/// Registry `lambda1..lambdan` for polynomials in the highest weight.
pub fn lambda_vars(n: usize) -> Vars {
    Vars::indexed("lambda", n)
}

fn shifted_images(series: Series, vars: &Vars, squared: bool) -> Vec<LaurentPoly> {
    let n = vars.len();
    (0..n)
        .map(|i| {
            let shift = q((n - 1 - i) as i64) + series.epsilon();
            let l = &LaurentPoly::var(vars, i) + &LaurentPoly::constant(vars, shift);
            if squared {
                &l * &l
            } else {
                l
            }
        })
        .collect()
}

/// `s*_μ` as a polynomial in `lambda1..lambdan`.
pub fn s_star_poly(mu: &Partition, n: usize) -> Result<LaurentPoly> {
    let vars = lambda_vars(n);
    let fs = factorial_schur_poly(mu, n, &ShiftSequence::Falling)?;
    fs.compose(&vars, &shifted_images(Series::A, &vars, false))
}

/// `t*_μ` as a polynomial in `lambda1..lambdan`.
pub fn t_star_poly(series: Series, mu: &Partition, n: usize) -> Result<LaurentPoly> {
    series.require_bcd()?;
    let vars = lambda_vars(n);
    let fs = factorial_schur_poly(mu, n, &series.shift_sequence())?;
    fs.compose(&vars, &shifted_images(series, &vars, true))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum VanishingKind {
    /// Nonzero at `λ ≠ μ` with `|λ| ≤ |μ|`.
    SmallWeight,
    /// Zero at `λ = μ`.
    Diagonal,
    /// Nonzero at `λ` with `λ_i < μ_i` for some `i`.
    NotContaining,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingFailure {
    pub lambda: String,
    pub value: String,
    pub kind: VanishingKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub series: Series,
    pub n: usize,
    pub mu: String,
    pub checked: usize,
    pub failures: Vec<VanishingFailure>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the vanishing characterization of `s*_μ` (A) or `t*_μ` (C/B/D)
/// over partitions `λ` of length `≤ n`: zero for `|λ| ≤ |μ|, λ ≠ μ`,
/// nonzero at `μ`, and zero for `μ ⊄ λ` up to `|λ| ≤ |μ| + extra`.
pub fn check_vanishing(
    series: Series,
    mu: &Partition,
    n: usize,
    extra: usize,
) -> Result<VanishingReport> {
    mu.padded(n)?;
    let mut report = VanishingReport {
        series,
        n,
        mu: mu.to_string(),
        checked: 0,
        failures: Vec::new(),
    };
    for lambda in partitions_iter(n, mu.size() + extra) {
        let v = shifted_value(series, mu, &lambda.to_signature(n)?)?;
        report.checked += 1;
        let kind = if lambda == *mu {
            v.is_zero().then_some(VanishingKind::Diagonal)
        } else if lambda.size() <= mu.size() && !v.is_zero() {
            Some(VanishingKind::SmallWeight)
        } else if !lambda.contains(mu) && !v.is_zero() {
            Some(VanishingKind::NotContaining)
        } else {
            None
        };
        if let Some(kind) = kind {
            report.failures.push(VanishingFailure {
                lambda: lambda.to_string(),
                value: fmt_q(&v),
                kind,
            });
        }
    }
    Ok(report)
}

/// `p(λ) = p(..., λ_{i+1} - 1, λ_i + 1, ...)` for each adjacent pair.
pub fn is_shifted_symmetric(p: &LaurentPoly) -> bool {
    let vars = p.vars().clone();
    let n = vars.len();
    (0..n.saturating_sub(1)).all(|i| {
        let mut images: Vec<LaurentPoly> = (0..n).map(|k| LaurentPoly::var(&vars, k)).collect();
        images[i] = &LaurentPoly::var(&vars, i + 1) - &LaurentPoly::one(&vars);
        images[i + 1] = &LaurentPoly::var(&vars, i) + &LaurentPoly::one(&vars);
        p.compose(&vars, &images).map(|r| r == *p).unwrap_or(false)
    })
}

/// Whether `p(λ)` is a symmetric polynomial in `l_i²`, `l_i = λ_i + n - i + ε`.
pub fn is_mstar_member(series: Series, p: &LaurentPoly) -> Result<bool> {
    series.require_bcd()?;
    if p.has_negative_exponents() {
        return Ok(false);
    }
    let n = p.nvars();
    let lv = Vars::indexed("l", n);
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| {
            let shift = q((n - 1 - i) as i64) + series.epsilon();
            &LaurentPoly::var(&lv, i) - &LaurentPoly::constant(&lv, shift)
        })
        .collect();
    let in_l = p.compose(&lv, &images)?;
    if !in_l.is_symmetric() {
        return Ok(false);
    }
    // invariance under l_i -> -l_i: every exponent even
    let even = in_l
        .terms()
        .all(|(m, _)| m.exps().iter().all(|e| e % 2 == 0));
    Ok(even)
}
