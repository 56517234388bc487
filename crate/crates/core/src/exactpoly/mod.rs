//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! Terms are kept in a `BTreeMap` ordered by the graded lexicographic order
//! on exponent vectors, so the last entry is always the leading term and
//! serialization is deterministic. Variables live in a named registry
//! ([`Vars`]); mixing polynomials from different registries is a programming
//! error and panics, while moving between registries is always explicit
//! ([`LaurentPoly::with_vars`], [`LaurentPoly::compose`]).

mod linalg;
mod symmetric;
mod univariate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

pub use linalg::{det_bareiss, det_laplace, poly_det};
pub use symmetric::{
    alternant_ratio, expand_in_schur, expand_in_schur_traced, monomial_alternant, power_sum,
    power_sum_in, schur, schur_in, vandermonde, SchurExpansion,
};
pub use univariate::UniPoly;

/// An ordered registry of variable names.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `prefix1, ..., prefixN`; a single variable is just `prefix`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        if n == 1 {
            return Vars::new(&[prefix]);
        }
        Vars((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn joined(&self) -> String {
        self.0.join(",")
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

/// Exponent vector with graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial with rational coefficients.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Q>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Q::one())
    }

    pub fn constant(vars: &Vars, c: Q) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, c: Q) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable with index `i`, raised to the power `e`.
    pub fn var_pow(vars: &Vars, i: usize, e: i32) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        Self::monomial(vars, exps, Q::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::var_pow(vars, i, 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i32>, Q)>>(vars: &Vars, terms: I) -> Self {
        let mut acc: HashMap<Vec<i32>, Q> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            *acc.entry(e).or_insert_with(Q::zero) += c;
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &Vars, acc: HashMap<Vec<i32>, Q>) -> Self {
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, exps: &[i32]) -> Q {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Coefficient of the zero exponent vector.
    pub fn constant_term(&self) -> Q {
        self.coefficient(&vec![0; self.nvars()])
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Maximal total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    /// Smallest exponent of each variable (zero for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut out = vec![i32::MAX; self.nvars()];
        for m in self.terms.keys() {
            for (o, &e) in out.iter_mut().zip(&m.0) {
                *o = (*o).min(e);
            }
        }
        out.iter()
            .map(|&e| if e == i32::MAX { 0 } else { e })
            .collect()
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let mut out = vec![i32::MIN; self.nvars()];
        for m in self.terms.keys() {
            for (o, &e) in out.iter_mut().zip(&m.0) {
                *o = (*o).max(e);
            }
        }
        out.iter()
            .map(|&e| if e == i32::MIN { 0 } else { e })
            .collect()
    }

    /// The part of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: i64) -> LaurentPoly {
        self.filter_terms(|m| m.degree() == d)
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: i64) -> LaurentPoly {
        self.filter_terms(|m| m.degree() <= d)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_vars(&self, other: &LaurentPoly) {
        if self.vars != other.vars {
            panic!(
                "{}",
                Error::VariableMismatch(self.vars.joined(), other.vars.joined())
            );
        }
    }

    pub fn scale(&self, c: &Q) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `c · x^exps`.
    pub fn mul_monomial(&self, exps: &[i32], c: &Q) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        let shift = Monomial(exps.to_vec());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(&shift), v * c))
                .collect(),
        }
    }

    fn add_scaled_shifted(&mut self, other: &LaurentPoly, shift: &Monomial, c: &Q) {
        for (m, v) in &other.terms {
            let key = m.mul(shift);
            let delta = v * c;
            match self.terms.get_mut(&key) {
                Some(cur) => {
                    *cur += delta;
                    if cur.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, delta);
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[Q]) -> Result<Q> {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, (&e, x)) in m.0.iter().zip(point).enumerate() {
                if e < 0 && x.is_zero() {
                    return Err(Error::ZeroToNegativePower(self.vars.names()[i].clone()));
                }
                t *= pow_q(x, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces variable `i` by `images[i]`, all living in `target`.
    ///
    /// A negative power needs an invertible image, i.e. a single nonzero term.
    pub fn compose(&self, target: &Vars, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        for img in images {
            assert!(
                img.vars == *target,
                "images must live in the target registry"
            );
        }
        let mut powers: Vec<HashMap<i32, LaurentPoly>> = vec![HashMap::new(); self.nvars()];
        let mut acc = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !powers[i].contains_key(&e) {
                    let p = power_of(&images[i], e)
                        .ok_or_else(|| Error::ZeroToNegativePower(self.vars.names()[i].clone()))?;
                    powers[i].insert(e, p);
                }
                t = &t * &powers[i][&e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes a subset of variables (by name) with values; the remaining
    /// variables are kept. The result lives in the same registry.
    pub fn substitute(&self, assignment: &[(&str, Subst)]) -> Result<LaurentPoly> {
        let mut images: Vec<LaurentPoly> = (0..self.nvars())
            .map(|i| LaurentPoly::var(&self.vars, i))
            .collect();
        for (name, s) in assignment {
            let i = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            images[i] = match s {
                Subst::Value(v) => LaurentPoly::constant(&self.vars, v.clone()),
                Subst::Poly(p) => {
                    self.check_vars(p);
                    p.clone()
                }
            };
        }
        self.compose(&self.vars, &images)
    }

    /// Reinterprets the exponent vectors in another registry of the same size.
    pub fn with_vars(&self, vars: &Vars) -> LaurentPoly {
        assert_eq!(vars.len(), self.nvars(), "registry size");
        LaurentPoly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Keeps the variables listed in `keep` (by index, in that order) and
    /// moves to `vars`. Fails if a dropped variable actually occurs.
    pub fn restrict(&self, vars: &Vars, keep: &[usize]) -> Result<LaurentPoly> {
        assert_eq!(vars.len(), keep.len(), "registry size");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 && !keep.contains(&i) {
                    return Err(Error::UnknownVariable(self.vars.names()[i].clone()));
                }
            }
            terms.insert(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        Ok(LaurentPoly {
            vars: vars.clone(),
            terms,
        })
    }

    /// Embeds into a larger registry: variable `i` goes to position `map[i]`.
    pub fn embed(&self, vars: &Vars, map: &[usize]) -> LaurentPoly {
        assert_eq!(map.len(), self.nvars(), "one target per variable");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    fn map_monomials(&self, f: impl Fn(&[i32]) -> Vec<i32>) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(f(&m.0)), c.clone()))
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> LaurentPoly {
        self.map_monomials(|e| {
            let mut e = e.to_vec();
            e.swap(i, j);
            e
        })
    }

    /// Applies `x_i ↦ x_i^{-1}`.
    pub fn invert_var(&self, i: usize) -> LaurentPoly {
        self.map_monomials(|e| {
            let mut e = e.to_vec();
            e[i] = -e[i];
            e
        })
    }

    /// Invariance under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars().saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Invariance under `z_i ↦ z_i^{-1}` for each variable separately.
    pub fn is_inversion_invariant(&self) -> bool {
        (0..self.nvars()).all(|i| self.invert_var(i) == *self)
    }

    /// Exact quotient `self / q` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials to ordinary polynomials with no
    /// monomial factor; the quotient is then an ordinary polynomial and is
    /// found by leading-term division.
    pub fn exact_divide(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(q);
        if q.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        let shift_p: Vec<i32> = self.min_exponents().iter().map(|e| -e).collect();
        let shift_q: Vec<i32> = q.min_exponents().iter().map(|e| -e).collect();
        let one = Q::one();
        let mut rem = self.mul_monomial(&shift_p, &one);
        let divisor = q.mul_monomial(&shift_q, &one);
        let (lead_m, lead_c) = {
            let (m, c) = divisor.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut quotient: HashMap<Vec<i32>, Q> = HashMap::new();
        while let Some((m, c)) = rem.leading_term() {
            let e: Vec<i32> = m.0.iter().zip(&lead_m.0).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return Err(Error::NotDivisible(format!("{self} by {q}")));
            }
            let t = c / &lead_c;
            rem.add_scaled_shifted(&divisor, &Monomial(e.clone()), &(-t.clone()));
            quotient.insert(e, t);
        }
        let back: Vec<i32> = shift_q.iter().zip(&shift_p).map(|(a, b)| a - b).collect();
        Ok(LaurentPoly::from_map(&self.vars, quotient).mul_monomial(&back, &one))
    }
}

/// A substitution value: a rational or a polynomial in the same registry.
#[derive(Clone, Debug)]
pub enum Subst {
    Value(Q),
    Poly(LaurentPoly),
}

fn pow_q(x: &Q, e: i32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn power_of(p: &LaurentPoly, e: i32) -> Option<LaurentPoly> {
    if e >= 0 {
        return Some(p.pow(e as u32));
    }
    if p.len() != 1 {
        return None;
    }
    let (m, c) = p.leading_term()?;
    let inv = LaurentPoly::monomial(&p.vars, m.0.iter().map(|x| -x).collect(), c.recip());
    Some(inv.pow(e.unsigned_abs()))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &Monomial::one(self.nvars()), &Q::one());
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &Monomial::one(self.nvars()), &-Q::one());
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut acc: HashMap<Vec<i32>, Q> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e: Vec<i32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        LaurentPoly::from_map(&self.vars, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Q::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn fmt_monomial(vars: &Vars, m: &Monomial) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            let v = &vars.names()[i];
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text form: terms in descending graded lexicographic order,
/// `coef*v1^e1*...*vk^ek`, unit coefficients and unit exponents omitted,
/// rationals as `p/q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mono = fmt_monomial(&self.vars, m);
            if mono.is_empty() {
                f.write_str(&fmt_q(&a))?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_q(&a), mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};
    use proptest::prelude::*;

    fn xy() -> Vars {
        Vars::new(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_display() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        let r = (&x + &y).scale(&qr(-3, 2));
        assert_eq!(r.to_string(), "-3/2*x - 3/2*y");
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
        let z = Vars::new(&["z"]);
        let zz = LaurentPoly::var(&z, 0)
            + LaurentPoly::var_pow(&z, 0, -1)
            + LaurentPoly::constant(&z, q(2));
        assert_eq!(zz.to_string(), "z + 2 + z^-1");
    }

    #[test]
    fn exact_division_examples() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(p.exact_divide(&(&x - &y)).unwrap(), &x + &y);
        assert_eq!(p.exact_divide(&LaurentPoly::one(&v)).unwrap(), p);
        let z = Vars::new(&["z"]);
        let zp = |e| LaurentPoly::var_pow(&z, 0, e);
        let num = &zp(2) - &zp(-2);
        let den = &zp(1) - &zp(-1);
        assert_eq!(num.exact_divide(&den).unwrap(), &zp(1) + &zp(-1));
        assert!(x.exact_divide(&(&x + &y)).is_err());
        assert!(x.exact_divide(&LaurentPoly::zero(&v)).is_err());
    }

    #[test]
    fn constant_terms() {
        let z = Vars::new(&["z"]);
        let p = LaurentPoly::var(&z, 0)
            + LaurentPoly::constant(&z, q(2))
            + LaurentPoly::var_pow(&z, 0, -1);
        assert_eq!(p.constant_term(), q(2));
        let v = xy();
        assert_eq!(
            LaurentPoly::monomial(&v, vec![1, -1], q(1)).constant_term(),
            q(0)
        );
        assert_eq!(LaurentPoly::one(&v).constant_term(), q(1));
    }

    #[test]
    fn substitution_examples() {
        let z = Vars::new(&["z"]);
        let p = LaurentPoly::var(&z, 0) + LaurentPoly::var_pow(&z, 0, -1);
        let at1 = p.substitute(&[("z", Subst::Value(q(1)))]).unwrap();
        assert_eq!(at1, LaurentPoly::constant(&z, q(2)));
        assert!(p.substitute(&[("z", Subst::Value(q(0)))]).is_err());
        assert!(p.substitute(&[("w", Subst::Value(q(0)))]).is_err());
        let v = xy();
        let s1 = LaurentPoly::var(&v, 0) + LaurentPoly::var(&v, 1);
        let r = s1.substitute(&[("y", Subst::Value(q(0)))]).unwrap();
        assert_eq!(r, LaurentPoly::var(&v, 0));
        assert_eq!(p.evaluate(&[q(2)]).unwrap(), qr(5, 2));
    }

    #[test]
    fn symmetry_predicates() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let s = &x + &y;
        assert!(s.is_symmetric());
        assert!(!s.is_inversion_invariant());
        assert!(!(&x - &y).is_symmetric());
        let z = Vars::new(&["z"]);
        let w = LaurentPoly::var(&z, 0) + LaurentPoly::var_pow(&z, 0, -1);
        assert!(w.is_inversion_invariant());
    }

    #[test]
    #[should_panic]
    fn mixing_registries_panics() {
        let a = LaurentPoly::var(&Vars::new(&["x"]), 0);
        let b = LaurentPoly::var(&Vars::new(&["y"]), 0);
        let _ = &a + &b;
    }

    fn arb_poly(vars: Vars, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-2i32..3, 3), -5i64..6, 1i64..4),
            1..max_terms,
        )
        .prop_map(move |ts| {
            LaurentPoly::from_terms(&vars, ts.into_iter().map(|(e, n, d)| (e, qr(n, d))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn divide_product_recovers_factor(
            a in arb_poly(Vars::new(&["x", "y", "z"]), 6),
            b in arb_poly(Vars::new(&["x", "y", "z"]), 6),
        ) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_divide(&a).unwrap(), b);
        }
    }
}
