use num::{One, Zero};

use super::{LaurentPoly, Vars};
use crate::rational::{q, Q};

/// A dense univariate polynomial, `coeffs[m]` multiplying `t^m`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Q::one()])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        UniPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Q {
        self.coeffs.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    pub fn scale(&self, s: &Q) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `self(arg)` for a Laurent polynomial argument, by Horner's rule.
    pub fn compose(&self, arg: &LaurentPoly) -> LaurentPoly {
        let vars = arg.vars().clone();
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPoly::zero(&vars), |acc, c| {
                &(&acc * arg) + &LaurentPoly::constant(&vars, c.clone())
            })
    }

    /// The same polynomial in variable `i` of `vars`.
    pub fn to_laurent(&self, vars: &Vars, i: usize) -> LaurentPoly {
        self.compose(&LaurentPoly::var(vars, i))
    }

    /// `self(a·t + b)`.
    pub fn affine_substitute(&self, a: &Q, b: &Q) -> UniPoly {
        let lin = UniPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            acc.mul(&lin).add(&UniPoly::new(vec![c.clone()]))
        })
    }
}
