//! Binomial expansions of normalized characters, the Jacobi series behind
//! them, and the coherence sums across ranks.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use serde_json::json;

use crate::characters::{branch, character, chebyshev_t, chebyshev_u, dimension, weyl_dimension};
use crate::combinatorics::{
    c_norm, c_pm, factorial_power, interlacing_signatures, partitions_iter, Partition, Series,
    ShiftSequence, Signature,
};
use crate::error::{Error, Result};
use crate::exactpoly::{
    expand_in_schur, poly_det, schur, vandermonde, LaurentPoly, SchurExpansion, UniPoly, Vars,
};
use crate::rational::{binomial, binomial_q, factorial, fmt_q, q, qbig, qr, Q};
use crate::report::{CheckReport, Mismatch};
use crate::shifted::{s_star, t_star};

/// Comparison of a normalized character's Schur expansion with the predicted
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialReport {
    pub series: Series,
    pub n: usize,
    pub lambda: Signature,
    pub lhs: SchurExpansion,
    pub rhs: BTreeMap<Partition, Q>,
    pub mismatches: Vec<Mismatch>,
    /// Set when the left side is an infinite series compared up to this degree.
    pub truncated_at: Option<usize>,
}

impl BinomialReport {
    fn build(
        series: Series,
        lambda: &Signature,
        lhs: SchurExpansion,
        rhs: BTreeMap<Partition, Q>,
        truncated_at: Option<usize>,
    ) -> Self {
        let mut mismatches = Vec::new();
        let keys: std::collections::BTreeSet<&Partition> =
            lhs.support().chain(rhs.keys()).collect();
        for mu in keys {
            let l = lhs.get(mu);
            let r = rhs.get(mu).cloned().unwrap_or_else(Q::zero);
            if l != r {
                mismatches.push(Mismatch {
                    at: mu.to_string(),
                    lhs: fmt_q(&l),
                    rhs: fmt_q(&r),
                });
            }
        }
        BinomialReport {
            series,
            n: lambda.rank(),
            lambda: lambda.clone(),
            lhs,
            rhs,
            mismatches,
            truncated_at,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "series": self.series,
            "n": self.n,
            "lambda": self.lambda.to_string(),
            "status": if self.passed() { "pass" } else { "fail" },
            "mismatches": self.mismatches.iter().map(|m| json!({"mu": m.at, "lhs": m.lhs, "rhs": m.rhs})).collect::<Vec<_>>(),
        })
    }
}

/// Degree up to which a signature with negative entries is compared.
pub const GL_SERIES_DEGREE: usize = 6;

/// `s_λ(1+x)/s_λ(1)` against `Σ_μ s*_μ(λ)/c(n,μ) · s_μ(x)`.
///
/// For `λ_n < 0` the left side is a power series; it is computed from the
/// truncated numerator `det[(1+x_j)^{l_i}]`, whose homogeneous components are
/// alternating and divide exactly by the Vandermonde, and compared up to
/// [`GL_SERIES_DEGREE`].
pub fn verify_binomial_gl(lambda: &Signature) -> Result<BinomialReport> {
    let n = lambda.rank();
    let xv = Vars::indexed("x", n);
    let dim = weyl_dimension(Series::A, lambda)?;
    let (lhs_poly, bound, truncated) = if lambda.parts().iter().all(|&p| p >= 0) {
        let chi = character(Series::A, lambda)?;
        let images: Vec<LaurentPoly> = (0..n)
            .map(|i| &LaurentPoly::one(&xv) + &LaurentPoly::var(&xv, i))
            .collect();
        let bound = lambda.size() as usize;
        (chi.body.compose(&xv, &images)?, bound, None)
    } else {
        let d = GL_SERIES_DEGREE;
        (gl_series(lambda, &xv, d)?, d, Some(d))
    };
    let lhs = expand_in_schur(&lhs_poly.scale(&(Q::one() / &dim)))?;
    let mut rhs = BTreeMap::new();
    for mu in partitions_iter(n, bound) {
        let v = s_star(&mu, lambda)? / c_norm(n, &mu)?;
        if !v.is_zero() {
            rhs.insert(mu, v);
        }
    }
    Ok(BinomialReport::build(
        Series::A,
        lambda,
        lhs,
        rhs,
        truncated,
    ))
}

/// `det[(1+x_j)^{l_i}] / ∏(x_i - x_j)` through total degree `d`.
fn gl_series(lambda: &Signature, xv: &Vars, d: usize) -> Result<LaurentPoly> {
    let n = lambda.rank();
    let shift = n * n.saturating_sub(1) / 2;
    let top = d + shift;
    let m: Vec<Vec<LaurentPoly>> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let l = q(p + (n - 1 - i) as i64);
            let f = UniPoly::new((0..=top as u32).map(|m| binomial_q(&l, m)).collect());
            (0..n).map(|j| f.to_laurent(xv, j)).collect()
        })
        .collect();
    let num = poly_det(xv, &m)?.truncate(top as i64);
    let v = vandermonde(xv);
    let mut out = LaurentPoly::zero(xv);
    for k in 0..=d {
        let comp = num.homogeneous_component((k + shift) as i64);
        out = &out + &comp.exact_divide(&v)?;
    }
    Ok(out)
}

/// `χ_λ/χ_λ(1)` in `t = x²` against `Σ_μ t*_μ(λ)/c_±(n,μ) · s_μ(t)`.
pub fn verify_binomial_bcd(series: Series, lambda: &Partition, n: usize) -> Result<BinomialReport> {
    series.require_bcd()?;
    let sig = lambda.to_signature(n)?;
    let chi = character(series, &sig)?;
    let dim = chi.dimension();
    let t_body = chi.t_body.as_ref().expect("C/B/D characters carry t_body");
    let lhs = expand_in_schur(&t_body.scale(&(Q::one() / &dim)))?;
    let mut rhs = BTreeMap::new();
    for mu in partitions_iter(n, lambda.size()) {
        let v = t_star(series, &mu, &sig)? / c_pm(series, n, &mu)?;
        if !v.is_zero() {
            rhs.insert(mu, v);
        }
    }
    Ok(BinomialReport::build(series, &sig, lhs, rhs, None))
}

/// `d_{λμ} = det[C(λ_i + n - i, μ_j + n - j)]`, nonzero entries only.
pub fn lascoux_coeffs(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let lp = lambda.padded(n)?;
    let mut out = BTreeMap::new();
    for mu in partitions_iter(n, lambda.size()) {
        let mp = mu.padded(n)?;
        let m: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        qbig(binomial(
                            (lp[i] + n - 1 - i) as i64,
                            (mp[j] + n - 1 - j) as i64,
                        ))
                    })
                    .collect()
            })
            .collect();
        let d = crate::rational::det(m);
        if !d.is_zero() {
            out.insert(mu, d.to_integer());
        }
    }
    Ok(out)
}

/// `s_λ(1+x) = Σ_μ d_{λμ} s_μ(x)` and `d_{λμ} = dim(λ) s*_μ(λ)/c(n,μ)`.
pub fn verify_lascoux(lambda: &Partition, n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("lascoux", format!("n={n}/lambda={lambda}"));
    let d = lascoux_coeffs(lambda, n)?;
    let xv = Vars::indexed("x", n);
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| &LaurentPoly::one(&xv) + &LaurentPoly::var(&xv, i))
        .collect();
    let lhs = schur(lambda, n)?.compose(&xv, &images)?;
    let mut rhs = LaurentPoly::zero(&xv);
    for (mu, c) in &d {
        rhs = &rhs + &schur(mu, n)?.scale(&qbig(c.clone()));
    }
    report.compare("polynomial", &lhs, &rhs);
    let sig = lambda.to_signature(n)?;
    let dim = weyl_dimension(Series::A, &sig)?;
    for mu in partitions_iter(n, lambda.size()) {
        let dl = d.get(&mu).map(|c| qbig(c.clone())).unwrap_or_else(Q::zero);
        let predicted = &dim * s_star(&mu, &sig)? / c_norm(n, &mu)?;
        report.compare(mu.to_string(), &fmt_q(&dl), &fmt_q(&predicted));
    }
    Ok(report)
}

/// The Jacobi parameters `(α, β)` attached to C, B, D.
pub fn jacobi_parameters(series: Series) -> Result<(Q, Q)> {
    match series {
        Series::C => Ok((qr(1, 2), qr(1, 2))),
        Series::B => Ok((qr(1, 2), qr(-1, 2))),
        Series::D => Ok((qr(-1, 2), qr(-1, 2))),
        s => Err(Error::UnsupportedSeries(s)),
    }
}

/// Coefficients of `P_k^{(α,β)}(1+t) / P_k^{(α,β)}(1)` in powers of `t`, from
/// the hypergeometric sum.
pub fn normalized_jacobi(k: usize, alpha: &Q, beta: &Q) -> UniPoly {
    let s = alpha + beta + q(1);
    let coeffs = (0..=k)
        .map(|m| {
            let mut c = Q::one();
            for i in 0..m {
                let i = q(i as i64);
                c *= (q(k as i64) - &i) * (q(k as i64) + &s + &i)
                    / (q(2) * (&i + q(1)) * (alpha + &i + q(1)));
            }
            c
        })
        .collect();
    UniPoly::new(coeffs)
}

/// Checks the factorial-power form of the normalized Jacobi series term by
/// term, and the normalized Jacobi polynomial against the Chebyshev-type
/// numerator entries of the characters.
pub fn jacobi_expansion_check(k: usize, series: Series) -> Result<CheckReport> {
    let (alpha, beta) = jacobi_parameters(series)?;
    let eps = series.epsilon();
    let sign_half = if series == Series::D {
        qr(-1, 2)
    } else {
        qr(1, 2)
    };
    let mut report = CheckReport::new("jacobi", format!("{series}/k={k}"));
    let p = normalized_jacobi(k, &alpha, &beta);
    let x = &eps + q(k as i64);
    let a = ShiftSequence::Squares(eps.clone());
    for m in 0..=k + 2 {
        let mut den = qbig(factorial(m as u64)) * q(2).pow(m as i32);
        for i in 1..=m {
            den *= &sign_half + q(i as i64);
        }
        let factorial_form = factorial_power(&(&x * &x), &a, m) / den;
        report.compare(
            format!("t^{m}"),
            &fmt_q(&p.coeff(m)),
            &fmt_q(&factorial_form),
        );
    }
    // as a polynomial in x = 1 + t, compare with the Chebyshev quotients
    let in_x = p.affine_substitute(&q(1), &q(-1));
    let cheb = match series {
        Series::C => chebyshev_u(k),
        Series::B => (1..=k).fold(UniPoly::one(), |acc, j| {
            acc.add(&chebyshev_t(j).scale(&q(2)))
        }),
        _ => chebyshev_t(k),
    };
    let normalized = cheb.scale(&(Q::one() / cheb.eval(&q(1))));
    report.compare(
        "chebyshev",
        &format!("{:?}", in_x.coeffs()),
        &format!("{:?}", normalized.coeffs()),
    );
    Ok(report)
}

/// `dim(Λ) s*_μ(Λ)/c(n+1,μ) = Σ_{λ≺Λ} dim(λ) s*_μ(λ)/c(n,μ)`.
pub fn verify_coherence_gl(n: usize, mu: &Partition, big: &Signature) -> Result<CheckReport> {
    if big.rank() != n + 1 {
        return Err(Error::RankMismatch {
            expected: n + 1,
            got: big.rank(),
        });
    }
    let mut report = CheckReport::new("coherence", format!("A/n={n}/mu={mu}/Lambda={big}"));
    let lhs = weyl_dimension(Series::A, big)? * s_star(mu, big)? / c_norm(n + 1, mu)?;
    let c = c_norm(n, mu)?;
    let mut rhs = Q::zero();
    for lambda in interlacing_signatures(big) {
        rhs += weyl_dimension(Series::A, &lambda)? * s_star(mu, &lambda)? / &c;
    }
    report.compare("sum", &fmt_q(&lhs), &fmt_q(&rhs));
    Ok(report)
}

/// `dim(Λ) t*_μ(Λ)/c_±(n+1,μ) = Σ_λ [χ_Λ:χ_λ] dim(λ) t*_μ(λ)/c_±(n,μ)`.
pub fn verify_coherence_bcd(
    series: Series,
    n: usize,
    mu: &Partition,
    big: &Signature,
) -> Result<CheckReport> {
    series.require_bcd()?;
    if big.rank() != n + 1 {
        return Err(Error::RankMismatch {
            expected: n + 1,
            got: big.rank(),
        });
    }
    let mut report = CheckReport::new("coherence", format!("{series}/n={n}/mu={mu}/Lambda={big}"));
    let lhs = dimension(series, big)? * t_star(series, mu, big)? / c_pm(series, n + 1, mu)?;
    let c = c_pm(series, n, mu)?;
    let mut rhs = Q::zero();
    for (lambda, m) in branch(series, big)? {
        rhs += q(m as i64) * dimension(series, &lambda)? * t_star(series, mu, &lambda)? / &c;
    }
    report.compare("sum", &fmt_q(&lhs), &fmt_q(&rhs));
    Ok(report)
}

/// The rank `n+2 → n` identity obtained by composing two branchings.
pub fn verify_coherence_two_step(
    series: Series,
    n: usize,
    mu: &Partition,
    big: &Signature,
) -> Result<CheckReport> {
    if big.rank() != n + 2 {
        return Err(Error::RankMismatch {
            expected: n + 2,
            got: big.rank(),
        });
    }
    let value = |lambda: &Signature, rank: usize| -> Result<Q> {
        Ok(match series {
            Series::A => weyl_dimension(series, lambda)? * s_star(mu, lambda)? / c_norm(rank, mu)?,
            s => dimension(s, lambda)? * t_star(s, mu, lambda)? / c_pm(s, rank, mu)?,
        })
    };
    let step = |lambda: &Signature| -> Result<BTreeMap<Signature, u64>> {
        match series {
            Series::A => Ok(interlacing_signatures(lambda)
                .into_iter()
                .map(|s| (s, 1))
                .collect()),
            s => branch(s, lambda),
        }
    };
    let mut composed: BTreeMap<Signature, u64> = BTreeMap::new();
    for (mid, m1) in step(big)? {
        for (small, m2) in step(&mid)? {
            *composed.entry(small).or_insert(0) += m1 * m2;
        }
    }
    let mut rhs = Q::zero();
    for (lambda, m) in &composed {
        rhs += q(*m as i64) * value(lambda, n)?;
    }
    let mut report = CheckReport::new(
        "coherence-two-step",
        format!("{series}/n={n}/mu={mu}/Lambda={big}"),
    );
    report.compare("sum", &fmt_q(&value(big, n + 2)?), &fmt_q(&rhs));
    Ok(report)
}
