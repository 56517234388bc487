//! Schur polynomials, power sums and expansion in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, RwLock};

use itertools::Itertools;
use num::{One, Zero};

use super::{poly_det, LaurentPoly, UniPoly, Vars};
use crate::combinatorics::{partitions_iter, Partition};
use crate::error::{Error, Result};
use crate::rational::{det, fmt_q, Q};

/// Coefficients of a symmetric polynomial in the Schur basis of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, Q>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        SchurExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Adds `c` to the coefficient of `mu`, dropping zeros.
    pub fn add(&mut self, mu: Partition, c: Q) {
        assert!(mu.length() <= self.n, "partition longer than the rank");
        let e = self.coeffs.entry(mu.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    pub fn get(&self, mu: &Partition) -> Q {
        self.coeffs.get(mu).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &Q) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.n);
        for (mu, c) in &self.coeffs {
            out.add(mu.clone(), c * s);
        }
        out
    }

    /// `Σ c_μ s_μ` as a polynomial in `vars`.
    pub fn to_poly(&self, vars: &Vars) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(vars);
        for (mu, c) in &self.coeffs {
            acc = &acc + &schur_in(mu, vars)?.scale(c);
        }
        Ok(acc)
    }

    /// `{"(2,1)": "1/2", ...}` in partition order.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(mu, c)| (mu.to_string(), serde_json::Value::String(fmt_q(c))))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (mu, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mu}: {}", fmt_q(c))?;
        }
        write!(f, "}}")
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det[x_j^{e_i}]` expanded over permutations; exponents may be negative.
pub fn monomial_alternant(vars: &Vars, exps: &[i32]) -> LaurentPoly {
    let n = exps.len();
    let terms = (0..n).permutations(n).map(|perm| {
        let mut e = vec![0; n];
        for (i, &j) in perm.iter().enumerate() {
            e[j] = exps[i];
        }
        (e, Q::from_integer(perm_sign(&perm).into()))
    });
    LaurentPoly::from_terms(vars, terms)
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(vars: &Vars) -> LaurentPoly {
    let n = vars.len();
    let exps: Vec<i32> = (0..n).map(|i| (n - 1 - i) as i32).collect();
    monomial_alternant(vars, &exps)
}

static SCHUR_CACHE: LazyLock<RwLock<HashMap<(Partition, usize), LaurentPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Schur polynomial `s_μ(x_1, ..., x_n)` by the bialternant formula.
pub fn schur(mu: &Partition, n: usize) -> Result<LaurentPoly> {
    schur_in(mu, &Vars::indexed("x", n))
}

/// Schur polynomial in an arbitrary registry.
pub fn schur_in(mu: &Partition, vars: &Vars) -> Result<LaurentPoly> {
    let n = vars.len();
    let parts = mu.padded(n)?;
    let key = (mu.clone(), n);
    if let Some(p) = SCHUR_CACHE.read().unwrap().get(&key) {
        return Ok(p.with_vars(vars));
    }
    let exps: Vec<i32> = parts
        .iter()
        .enumerate()
        .map(|(i, &m)| (m + n - 1 - i) as i32)
        .collect();
    let num = monomial_alternant(vars, &exps);
    let s = num.exact_divide(&vandermonde(vars))?;
    SCHUR_CACHE.write().unwrap().insert(key, s.clone());
    Ok(s)
}

/// `x_1^m + ... + x_n^m`.
pub fn power_sum(m: usize, n: usize) -> LaurentPoly {
    power_sum_in(m, &Vars::indexed("x", n))
}

pub fn power_sum_in(m: usize, vars: &Vars) -> LaurentPoly {
    (0..vars.len()).fold(LaurentPoly::zero(vars), |acc, i| {
        &acc + &LaurentPoly::var_pow(vars, i, m as i32)
    })
}

/// Expansion of a symmetric polynomial in the Schur basis by repeated
/// elimination of the leading monomial.
pub fn expand_in_schur(p: &LaurentPoly) -> Result<SchurExpansion> {
    expand_in_schur_traced(p).map(|(e, _)| e)
}

/// Same as [`expand_in_schur`], also returning the leading partitions in the
/// order they were eliminated.
pub fn expand_in_schur_traced(p: &LaurentPoly) -> Result<(SchurExpansion, Vec<Partition>)> {
    if p.has_negative_exponents() {
        return Err(Error::NegativeExponent);
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let vars = p.vars().clone();
    let n = vars.len();
    let mut out = SchurExpansion::new(n);
    let mut trace = Vec::new();
    let mut rem = p.clone();
    while let Some((m, c)) = rem.leading_term() {
        // the graded-lex leading monomial of a symmetric polynomial is weakly decreasing
        let mu = Partition::new(m.exps().iter().map(|&e| e as usize).collect())
            .map_err(|_| Error::NotSymmetric)?;
        let c = c.clone();
        rem = &rem - &schur_in(&mu, &vars)?.scale(&c);
        trace.push(mu.clone());
        out.add(mu, c);
    }
    Ok((out, trace))
}

/// `det[f_i(t_j)] / ∏_{i<j}(t_i - t_j) = Σ_μ det[a^{(i)}_{μ_j+n-j}] s_μ(t)`,
/// read off from coefficient determinants.
pub fn alternant_ratio(fs: &[UniPoly], n: usize) -> Result<SchurExpansion> {
    if fs.len() != n {
        return Err(Error::SizeMismatch(fs.len(), n));
    }
    let mut out = SchurExpansion::new(n);
    let max_deg = fs.iter().filter_map(UniPoly::degree).max();
    let Some(max_deg) = max_deg else {
        return Ok(out);
    };
    if n == 0 {
        out.add(Partition::empty(), Q::one());
        return Ok(out);
    }
    if max_deg + 1 < n {
        return Ok(out);
    }
    let top = max_deg + 1 - n;
    for mu in partitions_iter(n, top * n) {
        if mu.part(0) > top {
            continue;
        }
        let m: Vec<Vec<Q>> = fs
            .iter()
            .map(|f| (0..n).map(|j| f.coeff(mu.part(j) + n - 1 - j)).collect())
            .collect();
        let d = det(m);
        if !d.is_zero() {
            out.add(mu, d);
        }
    }
    Ok(out)
}

/// Brute-force `det[f_i(t_j)]` over polynomials, used to cross-check
/// [`alternant_ratio`].
#[allow(dead_code)]
pub(crate) fn alternant_poly(fs: &[UniPoly], vars: &Vars) -> Result<LaurentPoly> {
    let m: Vec<Vec<LaurentPoly>> = fs
        .iter()
        .map(|f| (0..vars.len()).map(|j| f.to_laurent(vars, j)).collect())
        .collect();
    poly_det(vars, &m)?.exact_divide(&vandermonde(vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{mn_character, partitions_of, z_rho};
    use crate::exactpoly::Subst;
    use crate::rational::q;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&Partition::empty(), 2).unwrap().to_string(), "1");
        assert_eq!(schur(&p(&[1]), 2).unwrap().to_string(), "x1 + x2");
        assert_eq!(
            schur(&p(&[2, 1]), 2).unwrap().to_string(),
            "x1^2*x2 + x1*x2^2"
        );
        assert!(schur(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 2).to_string(), "x1 + x2");
        assert_eq!(power_sum(2, 1).to_string(), "x^2");
        assert_eq!(power_sum(3, 2).to_string(), "x1^3 + x2^3");
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_schur(&schur(&p(&[2, 1]), 2).unwrap()).unwrap();
        assert_eq!(e.to_string(), "{(2,1): 1}");
        let e = expand_in_schur(&power_sum(2, 2)).unwrap();
        assert_eq!(e.get(&p(&[2])), q(1));
        assert_eq!(e.get(&p(&[1, 1])), q(-1));
        assert_eq!(e.len(), 2);
        let v = Vars::indexed("x", 2);
        let e = expand_in_schur(&LaurentPoly::constant(&v, q(5))).unwrap();
        assert_eq!(e.to_string(), "{(): 5}");
        assert!(matches!(
            expand_in_schur(&LaurentPoly::var(&v, 0)),
            Err(Error::NotSymmetric)
        ));
        let inv = LaurentPoly::var_pow(&v, 0, -1) + LaurentPoly::var_pow(&v, 1, -1);
        assert!(matches!(
            expand_in_schur(&inv),
            Err(Error::NegativeExponent)
        ));
    }

    #[test]
    fn alternant_ratio_examples() {
        let fs: Vec<UniPoly> = (0..3).map(|i| UniPoly::monomial(2 - i)).collect();
        assert_eq!(alternant_ratio(&fs, 3).unwrap().to_string(), "{(): 1}");
        assert_eq!(
            alternant_ratio(&[UniPoly::from_i64(&[1, 1])], 1)
                .unwrap()
                .to_string(),
            "{(): 1, (1): 1}"
        );
        let fs = vec![UniPoly::monomial(2), UniPoly::one()];
        assert_eq!(alternant_ratio(&fs, 2).unwrap().to_string(), "{(1): 1}");
    }

    #[test]
    fn alternant_ratio_matches_polynomial_route() {
        let fs = vec![
            UniPoly::from_i64(&[1, -2, 0, 3, 1]),
            UniPoly::from_i64(&[0, 5, 1]),
            UniPoly::from_i64(&[2, 0, 0, -1]),
        ];
        let v = Vars::indexed("t", 3);
        let direct = alternant_poly(&fs, &v).unwrap();
        let via = alternant_ratio(&fs, 3).unwrap().to_poly(&v).unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn round_trip() {
        for n in 1..=4 {
            for mu in partitions_iter(n, 6) {
                let e = expand_in_schur(&schur(&mu, n).unwrap()).unwrap();
                assert_eq!(e.len(), 1);
                assert_eq!(e.get(&mu), q(1));
            }
        }
    }

    #[test]
    fn elimination_descends_strictly() {
        // a random-ish symmetric polynomial: products of power sums
        for n in 2..=3 {
            let poly = &(&power_sum(3, n) * &power_sum(1, n)) + &power_sum(2, n).pow(2);
            let (_, trace) = expand_in_schur_traced(&poly).unwrap();
            for w in trace.windows(2) {
                // strictly decreasing in graded-lex on exponent vectors
                let a: Vec<i32> = w[0].padded(n).unwrap().iter().map(|&x| x as i32).collect();
                let b: Vec<i32> = w[1].padded(n).unwrap().iter().map(|&x| x as i32).collect();
                assert!(crate::exactpoly::Monomial(a) > crate::exactpoly::Monomial(b));
            }
        }
    }

    #[test]
    fn schur_from_power_sums() {
        for k in 0..=5 {
            for n in 1..=4 {
                for mu in partitions_of(k, n) {
                    let mut acc = LaurentPoly::zero(&Vars::indexed("x", n));
                    for rho in partitions_of(k, k) {
                        let chi = mn_character(&mu, &rho).unwrap();
                        let coeff = Q::new(chi.into(), z_rho(&rho));
                        let prod = rho
                            .parts()
                            .iter()
                            .fold(LaurentPoly::one(&Vars::indexed("x", n)), |a, &r| {
                                &a * &power_sum(r, n)
                            });
                        acc = &acc + &prod.scale(&coeff);
                    }
                    assert_eq!(acc, schur(&mu, n).unwrap(), "mu={mu} n={n}");
                }
            }
        }
    }

    #[test]
    fn stability() {
        for n in 1..=3 {
            for mu in partitions_iter(n + 1, 5) {
                let big = schur(&mu, n + 1).unwrap();
                let name = format!("x{}", n + 1);
                let cut = big
                    .substitute(&[(name.as_str(), Subst::Value(q(0)))])
                    .unwrap();
                let small_vars = Vars::indexed("x", n);
                let keep: Vec<usize> = (0..n).collect();
                let cut = cut.restrict(&small_vars, &keep).unwrap();
                if mu.length() <= n {
                    assert_eq!(cut, schur(&mu, n).unwrap());
                } else {
                    assert!(cut.is_zero());
                }
            }
        }
    }
}
