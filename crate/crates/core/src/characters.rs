//! Characters of `GL(n)`, `Sp(2n)`, `SO(2n+1)` and `O(2n)` as exact Laurent
//! polynomials, their dimensions, restriction to the previous rank, and the
//! Littlewood sums over even-row and even-column shapes.
//!
//! For series D the character is always the `O(2n)` one,
//! `χ^{so}_{(λ_1..λ_n)} + χ^{so}_{(λ_1..-λ_n)}`, which is `2χ^{so}_λ` when
//! `λ_n = 0`.
//!
//! Restriction to rank `n` is done by setting `z_{n+1} = 1`: the maximal
//! torus of `G(n)` sits inside that of `G(n+1)` with the last coordinate
//! trivial, and characters of `G(n)` are linearly independent, so the
//! decomposition of the substituted polynomial gives the multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

use num::{One, Zero};

use crate::combinatorics::{partitions_iter, Partition, Series, ShiftedWeight, Signature};
use crate::error::{Error, Result};
use crate::exactpoly::{
    alternant_ratio, monomial_alternant, poly_det, schur_in, vandermonde, LaurentPoly, UniPoly,
    Vars,
};
use crate::rational::{fmt_q, is_integer, q, qr, to_i64, Q};
use crate::report::CheckReport;

pub fn z_vars(n: usize) -> Vars {
    Vars::indexed("z", n)
}

pub fn t_vars(n: usize) -> Vars {
    Vars::indexed("t", n)
}

/// A character together with its highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    pub series: Series,
    pub n: usize,
    pub lambda: Signature,
    /// Laurent polynomial in `z1..zn`.
    pub body: LaurentPoly,
    /// For C/B/D, the same function in `t_i = z_i + z_i^{-1} - 2`.
    pub t_body: Option<LaurentPoly>,
}

impl CharacterPoly {
    /// Value at the identity.
    pub fn dimension(&self) -> Q {
        self.body
            .evaluate(&vec![Q::one(); self.n])
            .expect("no zero coordinates")
    }

    /// `t_body` for C/B/D, `body` for A.
    pub fn canonical(&self) -> &LaurentPoly {
        self.t_body.as_ref().unwrap_or(&self.body)
    }
}

/// `GL(n)` character `det[z_j^{l_i}] / ∏_{i<j}(z_i - z_j)`, `l_i = λ_i + n - i`.
pub fn gl_character(lambda: &Signature, n: usize) -> Result<CharacterPoly> {
    if lambda.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.rank(),
        });
    }
    let vars = z_vars(n);
    let exps: Vec<i32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + (n - 1 - i) as i64) as i32)
        .collect();
    let body = monomial_alternant(&vars, &exps).exact_divide(&vandermonde(&vars))?;
    Ok(CharacterPoly {
        series: Series::A,
        n,
        lambda: lambda.clone(),
        body,
        t_body: None,
    })
}

/// `∏_{i<j} (z_i + z_i^{-1} - z_j - z_j^{-1})`.
pub fn bcd_denominator(vars: &Vars) -> LaurentPoly {
    let n = vars.len();
    let u: Vec<LaurentPoly> = (0..n)
        .map(|i| &LaurentPoly::var(vars, i) + &LaurentPoly::var_pow(vars, i, -1))
        .collect();
    let mut acc = LaurentPoly::one(vars);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&u[i] - &u[j]);
        }
    }
    acc
}

/// Numerator entry in variable `j` for the shifted weight component `l_i`.
fn bcd_entry(series: Series, vars: &Vars, j: usize, shifted: i64) -> Result<LaurentPoly> {
    let zp = |e: i64| LaurentPoly::var_pow(vars, j, e as i32);
    match series {
        // (z^l - z^{-l}) / (z - z^{-1})
        Series::C => (&zp(shifted) - &zp(-shifted)).exact_divide(&(&zp(1) - &zp(-1))),
        // l = k + 1/2: (z^{k+1} - z^{-k}) / (z - 1)
        Series::B => {
            (&zp(shifted + 1) - &zp(-shifted)).exact_divide(&(&zp(1) - &LaurentPoly::one(vars)))
        }
        Series::D => Ok(&zp(shifted) + &zp(-shifted)),
        Series::A => Err(Error::UnsupportedSeries(series)),
    }
}

/// Character of `Sp(2n)`, `SO(2n+1)` or `O(2n)` with highest weight `λ`.
pub fn bcd_character(series: Series, lambda: &Partition, n: usize) -> Result<CharacterPoly> {
    series.require_bcd()?;
    let parts = lambda.padded(n)?;
    let vars = z_vars(n);
    // integer part of l_i; the ε shift is built into the entries
    let shifted: Vec<i64> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + n - 1 - i) as i64)
        .collect();
    let shifted: Vec<i64> = match series {
        Series::C => shifted.iter().map(|l| l + 1).collect(),
        _ => shifted,
    };
    let m: Vec<Vec<LaurentPoly>> = shifted
        .iter()
        .map(|&l| {
            (0..n)
                .map(|j| bcd_entry(series, &vars, j, l))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let body = poly_det(&vars, &m)?.exact_divide(&bcd_denominator(&vars))?;
    let t_body = to_t_body(&body)?;
    let lambda = lambda.to_signature(n)?;
    Ok(CharacterPoly {
        series,
        n,
        lambda,
        body,
        t_body: Some(t_body),
    })
}

static CHARACTER_CACHE: LazyLock<RwLock<HashMap<(Series, Signature), CharacterPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Character for any series, memoized. For D, `λ_n < 0` gives the same
/// `O(2n)` character as `|λ_n|`.
pub fn character(series: Series, lambda: &Signature) -> Result<CharacterPoly> {
    if !lambda.is_dominant(series) {
        return Err(Error::NotDominant {
            series,
            weight: lambda.to_string(),
        });
    }
    let key = (series, lambda.clone());
    if let Some(c) = CHARACTER_CACHE.read().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let n = lambda.rank();
    let c = match series {
        Series::A => gl_character(lambda, n)?,
        Series::D => {
            let mut c = bcd_character(series, &partition_of(&lambda.abs_last())?, n)?;
            c.lambda = lambda.clone();
            c
        }
        s => bcd_character(s, &partition_of(lambda)?, n)?,
    };
    CHARACTER_CACHE.write().unwrap().insert(key, c.clone());
    Ok(c)
}

fn partition_of(lambda: &Signature) -> Result<Partition> {
    lambda.to_partition().ok_or(Error::NegativeExponent)
}

/// Rewrites an inversion-invariant symmetric Laurent polynomial in `z` as a
/// polynomial in `t_i = z_i + z_i^{-1} - 2`.
pub fn to_t_body(body: &LaurentPoly) -> Result<LaurentPoly> {
    let n = body.nvars();
    let mut names: Vec<String> = body.vars().names().to_vec();
    names.extend((0..n).map(|i| format!("u#{i}")));
    let work = Vars::new(&names);
    let mut p = body.embed(&work, &(0..n).collect::<Vec<_>>());
    for i in 0..n {
        p = eliminate_inverse_pair(&p, i, n + i)?;
    }
    let u_vars = Vars::indexed("u", n);
    let in_u = p.restrict(&u_vars, &(n..2 * n).collect::<Vec<_>>())?;
    let tv = t_vars(n);
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| &LaurentPoly::var(&tv, i) + &LaurentPoly::constant(&tv, q(2)))
        .collect();
    in_u.compose(&tv, &images)
}

/// Replaces `z_i^k + z_i^{-k}` patterns by powers of `u = z_i + z_i^{-1}`,
/// highest power of `z_i` first.
fn eliminate_inverse_pair(p: &LaurentPoly, zi: usize, ui: usize) -> Result<LaurentPoly> {
    let vars = p.vars().clone();
    let sum = &LaurentPoly::var(&vars, zi) + &LaurentPoly::var_pow(&vars, zi, -1);
    let mut rem = p.clone();
    let mut out = LaurentPoly::zero(&vars);
    loop {
        let top = rem.terms().map(|(m, _)| m.exps()[zi]).max();
        let k = match top {
            Some(k) if k > 0 => k,
            _ => break,
        };
        let ck = LaurentPoly::from_terms(
            &vars,
            rem.terms()
                .filter(|(m, _)| m.exps()[zi] == k)
                .map(|(m, c)| {
                    let mut e = m.exps().to_vec();
                    e[zi] = 0;
                    (e, c.clone())
                }),
        );
        rem = &rem - &(&ck * &sum.pow(k as u32));
        out = &out + &(&ck * &LaurentPoly::var_pow(&vars, ui, k));
    }
    if rem.terms().any(|(m, _)| m.exps()[zi] != 0) {
        return Err(Error::NotInversionInvariant);
    }
    Ok(&out + &rem)
}

/// `t_body` mapped back through `t_i = z_i + z_i^{-1} - 2`.
pub fn from_t_body(t_body: &LaurentPoly) -> Result<LaurentPoly> {
    let n = t_body.nvars();
    let zv = z_vars(n);
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| {
            &(&LaurentPoly::var(&zv, i) + &LaurentPoly::var_pow(&zv, i, -1))
                - &LaurentPoly::constant(&zv, q(2))
        })
        .collect();
    t_body.compose(&zv, &images)
}

/// `χ_λ(1, ..., 1)`.
pub fn dimension(series: Series, lambda: &Signature) -> Result<Q> {
    Ok(character(series, lambda)?.dimension())
}

/// Weyl's product formula, computed without any polynomial arithmetic.
pub fn weyl_dimension(series: Series, lambda: &Signature) -> Result<Q> {
    if !lambda.is_dominant(series) {
        return Err(Error::NotDominant {
            series,
            weight: lambda.to_string(),
        });
    }
    let n = lambda.rank();
    let lambda = if series == Series::D {
        lambda.abs_last()
    } else {
        lambda.clone()
    };
    let l = ShiftedWeight::new(series, &lambda);
    let rho = ShiftedWeight::new(series, &Signature::zero(n));
    let (l, rho) = (l.values(), rho.values());
    let mut d = Q::one();
    match series {
        Series::A => {
            for i in 0..n {
                for j in i + 1..n {
                    d *= (&l[i] - &l[j]) / q((j - i) as i64);
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    d *= (&l[i] * &l[i] - &l[j] * &l[j]) / (&rho[i] * &rho[i] - &rho[j] * &rho[j]);
                }
            }
            match series {
                Series::D => d *= q(2),
                _ => {
                    for i in 0..n {
                        d *= &l[i] / &rho[i];
                    }
                }
            }
        }
    }
    Ok(d)
}

/// Coefficient of `z^λ` in the character `χ_λ`.
fn leading_coefficient(series: Series, lambda: &Signature) -> Q {
    let n = lambda.rank();
    if series == Series::D && n > 0 && lambda.parts()[n - 1] == 0 {
        q(2)
    } else {
        Q::one()
    }
}

/// Writes a symmetric (and, for C/B/D, inversion-invariant) Laurent
/// polynomial in `z1..zn` as a combination of characters of rank `n`.
pub fn decompose(series: Series, p: &LaurentPoly) -> Result<BTreeMap<Signature, Q>> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if series.is_bcd() && !p.is_inversion_invariant() {
        return Err(Error::NotInversionInvariant);
    }
    let vars = p.vars().clone();
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rem.leading_term() {
        let lambda = Signature::new(m.exps().iter().map(|&e| e as i64).collect())
            .map_err(|_| Error::NotSymmetric)?;
        if !lambda.is_dominant(series) {
            return Err(Error::NotDominant {
                series,
                weight: lambda.to_string(),
            });
        }
        let mult = c / leading_coefficient(series, &lambda);
        let chi = character(series, &lambda)?.body.with_vars(&vars);
        rem = &rem - &chi.scale(&mult);
        out.insert(lambda, mult);
    }
    Ok(out)
}

/// Multiplicities `[χ_Λ : χ_λ]` of the restriction from rank `n+1` to rank `n`.
pub fn branch(series: Series, big: &Signature) -> Result<BTreeMap<Signature, u64>> {
    let rank = big.rank();
    if rank < 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: rank,
        });
    }
    let n = rank - 1;
    let chi = character(series, big)?;
    let name = chi.body.vars().names()[n].clone();
    let restricted = chi
        .body
        .substitute(&[(name.as_str(), crate::exactpoly::Subst::Value(Q::one()))])?
        .restrict(&z_vars(n), &(0..n).collect::<Vec<_>>())?;
    decompose(series, &restricted)?
        .into_iter()
        .map(|(lambda, m)| match to_i64(&m) {
            Some(k) if k >= 0 && is_integer(&m) => Ok((lambda, k as u64)),
            _ => Err(Error::BadMultiplicity {
                weight: lambda.to_string(),
                multiplicity: fmt_q(&m),
            }),
        })
        .collect()
}

/// `Σ_λ [χ_Λ:χ_λ] dim(λ) = dim(Λ)` and, for A, agreement with interlacing.
pub fn check_branch(series: Series, big: &Signature) -> Result<CheckReport> {
    let mut report = CheckReport::new("branch", format!("{series}/{big}"));
    let b = branch(series, big)?;
    let mut total = Q::zero();
    for (lambda, &m) in &b {
        total += dimension(series, lambda)? * q(m as i64);
    }
    report.compare("dimension", &dimension(series, big)?, &total);
    if series == Series::A {
        let expected: BTreeMap<Signature, u64> = crate::combinatorics::interlacing_signatures(big)
            .into_iter()
            .map(|s| (s, 1))
            .collect();
        report.compare("interlacing", &fmt_branch(&expected), &fmt_branch(&b));
    }
    Ok(report)
}

/// `{(1,0): 1, (0,0): 2}` in descending weight order.
pub fn fmt_branch(b: &BTreeMap<Signature, u64>) -> String {
    let inner: Vec<String> = b.iter().rev().map(|(s, m)| format!("{s}: {m}")).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Chebyshev polynomial of the first kind, by the three-term recurrence.
pub fn chebyshev_t(k: usize) -> UniPoly {
    chebyshev(k, UniPoly::from_i64(&[0, 1]))
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(k: usize) -> UniPoly {
    chebyshev(k, UniPoly::from_i64(&[0, 2]))
}

fn chebyshev(k: usize, first: UniPoly) -> UniPoly {
    let two_x = UniPoly::from_i64(&[0, 2]);
    let (mut a, mut b) = (UniPoly::one(), first);
    if k == 0 {
        return a;
    }
    for _ in 1..k {
        let next = two_x.mul(&b).add(&a.scale(&q(-1)));
        a = b;
        b = next;
    }
    b
}

/// `(z^{k+1} - z^{-k-1})/(z - z^{-1}) = U_k((z+z^{-1})/2)` and
/// `z^k + z^{-k} = 2T_k((z+z^{-1})/2)` for `k ≤ max_k`.
pub fn chebyshev_identities(max_k: usize) -> Result<CheckReport> {
    let v = Vars::new(&["z"]);
    let zp = |e: i64| LaurentPoly::var_pow(&v, 0, e as i32);
    let half_u = (&zp(1) + &zp(-1)).scale(&qr(1, 2));
    let mut report = CheckReport::new("chebyshev", format!("k<={max_k}"));
    for k in 0..=max_k as i64 {
        let lhs = (&zp(k + 1) - &zp(-k - 1)).exact_divide(&(&zp(1) - &zp(-1)))?;
        report.compare(
            format!("U{k}"),
            &lhs,
            &chebyshev_u(k as usize).compose(&half_u),
        );
        let lhs = &zp(k) + &zp(-k);
        report.compare(
            format!("T{k}"),
            &lhs,
            &chebyshev_t(k as usize).compose(&half_u).scale(&q(2)),
        );
    }
    Ok(report)
}

/// The numerator entry as a polynomial in `t = z + z^{-1} - 2`.
fn entry_in_t(series: Series, shifted: usize) -> UniPoly {
    let g = match series {
        Series::C => chebyshev_u(shifted - 1),
        // Σ_{|j| ≤ k} z^j = 1 + Σ_{j=1}^{k} 2T_j
        Series::B => (1..=shifted).fold(UniPoly::one(), |acc, j| {
            acc.add(&chebyshev_t(j).scale(&q(2)))
        }),
        _ => chebyshev_t(shifted).scale(&q(2)),
    };
    // g is in x = u/2 = (t+2)/2
    g.affine_substitute(&qr(1, 2), &q(1))
}

/// The character expanded through coefficient determinants of the numerator
/// entries, without any Laurent division: `t_body` for C/B/D and `body` for
/// A (partitions only).
pub fn character_via_alternant(
    series: Series,
    lambda: &Partition,
    n: usize,
) -> Result<LaurentPoly> {
    let parts = lambda.padded(n)?;
    let shifted: Vec<usize> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + n - 1 - i)
        .collect();
    let (fs, vars): (Vec<UniPoly>, Vars) = match series {
        Series::A => (
            shifted.iter().map(|&l| UniPoly::monomial(l)).collect(),
            z_vars(n),
        ),
        Series::C => (
            shifted.iter().map(|&l| entry_in_t(series, l + 1)).collect(),
            t_vars(n),
        ),
        s => (
            shifted.iter().map(|&l| entry_in_t(s, l)).collect(),
            t_vars(n),
        ),
    };
    alternant_ratio(&fs, n)?.to_poly(&vars)
}

fn littlewood_compare(
    check: &str,
    n: usize,
    degree: usize,
    shape: impl Fn(&Partition) -> bool,
    diagonal: bool,
) -> Result<CheckReport> {
    let vars = Vars::indexed("x", n);
    let mut lhs = LaurentPoly::zero(&vars);
    for m in partitions_iter(n, degree).filter(|m| shape(m)) {
        lhs = &lhs + &schur_in(&m, &vars)?;
    }
    let d = degree as i64;
    let mut rhs = LaurentPoly::one(&vars);
    for i in 0..n {
        for j in i..n {
            if i == j && !diagonal {
                continue;
            }
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            let xy = LaurentPoly::monomial(&vars, e, Q::one());
            let geometric =
                (0..=degree as u32 / 2).fold(LaurentPoly::zero(&vars), |acc, k| &acc + &xy.pow(k));
            rhs = (&rhs * &geometric).truncate(d);
        }
    }
    let mut report = CheckReport::new(check, format!("n={n}/degree={degree}"));
    let mut monomials: Vec<Vec<i32>> = lhs
        .terms()
        .chain(rhs.terms())
        .map(|(m, _)| m.exps().to_vec())
        .collect();
    monomials.sort();
    monomials.dedup();
    for e in monomials {
        report.compare(
            format!("{e:?}"),
            &fmt_q(&lhs.coefficient(&e)),
            &fmt_q(&rhs.coefficient(&e)),
        );
    }
    Ok(report)
}

fn has_even_rows(m: &Partition) -> bool {
    m.parts().iter().all(|p| p % 2 == 0)
}

fn has_even_columns(m: &Partition) -> bool {
    has_even_rows(&m.transpose())
}

/// `Σ_{M even rows} s_M = ∏_{i≤j} (1 - x_i x_j)^{-1}` up to total degree `degree`.
pub fn littlewood_even_rows(n: usize, degree: usize) -> Result<CheckReport> {
    littlewood_compare("littlewood-rows", n, degree, has_even_rows, true)
}

/// `Σ_{M even columns} s_M = ∏_{i<j} (1 - x_i x_j)^{-1}` up to total degree `degree`.
pub fn littlewood_even_cols(n: usize, degree: usize) -> Result<CheckReport> {
    littlewood_compare("littlewood-cols", n, degree, has_even_columns, false)
}

/// `M = 2μ ∪ 2μ` for some `μ`, i.e. every row and every column even.
pub fn is_invariant_shape(m: &Partition) -> bool {
    has_even_rows(m) && has_even_columns(m)
}

/// Shapes `M` for which the relevant `GL(N)` module contains an invariant of
/// the series' group. The rule is the same for C, B and D.
pub fn invariant_shapes(series: Series) -> Result<fn(&Partition) -> bool> {
    series.require_bcd()?;
    Ok(is_invariant_shape)
}

/// Restricts `s_M` from `GL(N)` to the rank-`n` group and compares the
/// multiplicity of the trivial character with [`is_invariant_shape`]:
/// C runs over even-row `M` (`N = 2n`), B over even-column `M` (`N = 2n+1`).
pub fn invariant_shapes_empirical(
    series: Series,
    n: usize,
    max_size: usize,
) -> Result<CheckReport> {
    let (big_n, family): (usize, fn(&Partition) -> bool) = match series {
        Series::C => (2 * n, has_even_rows),
        Series::B => (2 * n + 1, has_even_columns),
        s => return Err(Error::UnsupportedSeries(s)),
    };
    let zv = z_vars(n);
    let mut images: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(&zv, i)).collect();
    images.extend((0..n).map(|i| LaurentPoly::var_pow(&zv, i, -1)));
    if series == Series::B {
        images.push(LaurentPoly::one(&zv));
    }
    let xv = Vars::indexed("x", big_n);
    let mut report = CheckReport::new("invariant-shapes", format!("{series}/n={n}"));
    for m in partitions_iter(big_n, max_size).filter(family) {
        let restricted = schur_in(&m, &xv)?.compose(&zv, &images)?;
        let mult = decompose(series, &restricted)?
            .get(&Signature::zero(n))
            .cloned()
            .unwrap_or_else(Q::zero);
        let expected = if is_invariant_shape(&m) {
            Q::one()
        } else {
            Q::zero()
        };
        report.compare(m.to_string(), &fmt_q(&mult), &fmt_q(&expected));
    }
    Ok(report)
}
