//! Partitions, signatures, series data, normalization constants and
//! symmetric-group characters.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num::{BigInt, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, q, qr, Q};

/// A partition with trailing zeros removed.
///
/// The ordering is graded first (by `size`), then lexicographically
/// descending, so that `(2)` sorts before `(1,1)`. Collections keyed by
/// partitions therefore iterate in the same order as [`partitions_iter`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition, panicking on input that is not weakly decreasing.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.length() > n {
            return Err(Error::LengthExceedsRank {
                length: self.length(),
                rank: n,
            });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Boxes `(i, j)` of the Young diagram, 1-based row and column.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&r| r >= j).count())
                .collect(),
        )
    }

    /// `μ ⊆ self` as Young diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.length() <= self.length() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// `2μ ∪ 2μ = (2μ_1, 2μ_1, 2μ_2, 2μ_2, ...)`.
    pub fn double_union(&self) -> Partition {
        Partition(self.0.iter().flat_map(|p| [2 * p, 2 * p]).collect())
    }

    pub fn to_signature(&self, n: usize) -> Result<Signature> {
        Ok(Signature(
            self.padded(n)?.into_iter().map(|p| p as i64).collect(),
        ))
    }

    /// Multiplicities `m_k` = number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts; the empty string and `0` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// A weakly decreasing integer tuple of fixed rank (zeros are significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", try_from = "Vec<i64>")]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(format!("{parts:?}")));
        }
        Ok(Signature(parts))
    }

    pub fn from_parts(parts: &[i64]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn zero(n: usize) -> Self {
        Signature(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Whether this is a dominant weight for `series` (partition-valued for C/B,
    /// `λ_{n-1} ≥ |λ_n|` for D).
    pub fn is_dominant(&self, series: Series) -> bool {
        let n = self.rank();
        match series {
            Series::A => true,
            Series::C | Series::B => n == 0 || self.0[n - 1] >= 0,
            Series::D => match n {
                0 => true,
                1 => true,
                _ => self.0[n - 2] >= self.0[n - 1].abs(),
            },
        }
    }

    /// The partition with the same parts, if every part is non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&p| p < 0) {
            return None;
        }
        Partition::new(self.0.iter().map(|&p| p as usize).collect()).ok()
    }

    /// Replaces the last part by its absolute value.
    pub fn abs_last(&self) -> Signature {
        let mut v = self.0.clone();
        if let Some(last) = v.last_mut() {
            *last = last.abs();
        }
        Signature(v)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Signature(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Signature::new(parts)
    }
}

impl From<Signature> for Vec<i64> {
    fn from(s: Signature) -> Self {
        s.0
    }
}

impl TryFrom<Vec<i64>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Signature::new(v)
    }
}

/// The four classical series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    C,
    B,
    D,
}

impl Series {
    pub const ALL: [Series; 4] = [Series::A, Series::C, Series::B, Series::D];
    pub const BCD: [Series; 3] = [Series::C, Series::B, Series::D];

    /// `ε` = 1, 1/2, 0 for C, B, D; zero for A, where it plays no role.
    pub fn epsilon(self) -> Q {
        match self {
            Series::C => q(1),
            Series::B => qr(1, 2),
            Series::D | Series::A => q(0),
        }
    }

    /// `+1` for C and B, `-1` for D. Series A has no sign.
    pub fn sign(self) -> Result<i64> {
        match self {
            Series::C | Series::B => Ok(1),
            Series::D => Ok(-1),
            Series::A => Err(Error::UnsupportedSeries(self)),
        }
    }

    /// Size of the defining matrices at rank `n`.
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            Series::A => n,
            Series::C | Series::D => 2 * n,
            Series::B => 2 * n + 1,
        }
    }

    pub fn is_bcd(self) -> bool {
        self != Series::A
    }

    pub fn require_bcd(self) -> Result<()> {
        if self.is_bcd() {
            Ok(())
        } else {
            Err(Error::UnsupportedSeries(self))
        }
    }

    /// The shift sequence of the shifted Schur family attached to this series.
    pub fn shift_sequence(self) -> ShiftSequence {
        shift_sequence(self)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::C => "C",
            Series::B => "B",
            Series::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "C" => Ok(Series::C),
            "B" => Ok(Series::B),
            "D" => Ok(Series::D),
            _ => Err(Error::Parse(format!("unknown series {s:?}"))),
        }
    }
}

/// The weight `l = λ + ρ`: `l_i = λ_i + n - i` (+ `ε` for C/B/D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedWeight(pub Vec<Q>);

impl ShiftedWeight {
    pub fn new(series: Series, lambda: &Signature) -> Self {
        let n = lambda.rank();
        let eps = series.epsilon();
        ShiftedWeight(
            lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &p)| q(p + (n - 1 - i) as i64) + &eps)
                .collect(),
        )
    }

    pub fn values(&self) -> &[Q] {
        &self.0
    }

    pub fn squares(&self) -> Vec<Q> {
        self.0.iter().map(|l| l * l).collect()
    }
}

/// A sequence `a = (a_1, a_2, ...)` used in factorial powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftSequence {
    /// `a ≡ 0`, giving ordinary powers.
    Zero,
    /// `(0, 1, 2, ...)`, giving falling factorial powers.
    Falling,
    /// `(ε², (ε+1)², (ε+2)², ...)`.
    Squares(Q),
    /// A finite explicit prefix.
    Explicit(Vec<Q>),
}

impl ShiftSequence {
    /// Term `j`, 1-based.
    ///
    /// Panics when an explicit sequence is too short.
    pub fn term(&self, j: usize) -> Q {
        assert!(j >= 1, "shift sequences are 1-based");
        match self {
            ShiftSequence::Zero => q(0),
            ShiftSequence::Falling => q(j as i64 - 1),
            ShiftSequence::Squares(eps) => {
                let t = eps + q(j as i64 - 1);
                &t * &t
            }
            ShiftSequence::Explicit(v) => v
                .get(j - 1)
                .cloned()
                .unwrap_or_else(|| panic!("explicit shift sequence has only {} terms", v.len())),
        }
    }

    pub fn terms(&self, k: usize) -> Vec<Q> {
        (1..=k).map(|j| self.term(j)).collect()
    }
}

/// `(x | a)^k = (x - a_1)⋯(x - a_k)`.
pub fn factorial_power(x: &Q, a: &ShiftSequence, k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, j| acc * (x - a.term(j)))
}

/// `(0,1,2,...)` for A and `(ε², (ε+1)², ...)` for C/B/D.
pub fn shift_sequence(series: Series) -> ShiftSequence {
    match series {
        Series::A => ShiftSequence::Falling,
        s => ShiftSequence::Squares(s.epsilon()),
    }
}

fn check_length(n: usize, mu: &Partition) -> Result<()> {
    if mu.length() > n {
        Err(Error::LengthExceedsRank {
            length: mu.length(),
            rank: n,
        })
    } else {
        Ok(())
    }
}

/// `c(n, μ) = ∏_{(i,j)∈μ} (n + j - i)`.
pub fn c_norm(n: usize, mu: &Partition) -> Result<Q> {
    check_length(n, mu)?;
    Ok(mu.boxes().fold(Q::one(), |acc, (i, j)| {
        acc * q(n as i64 + j as i64 - i as i64)
    }))
}

/// `∏_i (μ_i + n - i)! / (n - i)!`, the second form of `c(n, μ)`.
pub fn c_norm_factorials(n: usize, mu: &Partition) -> Result<Q> {
    let parts = mu.padded(n)?;
    let mut acc = Q::one();
    for (i, &m) in parts.iter().enumerate() {
        let top = factorial((m + n - 1 - i) as u64);
        let bottom = factorial((n - 1 - i) as u64);
        acc *= Q::new(top, bottom);
    }
    Ok(acc)
}

/// `c_±(n, μ) = ∏_{(i,j)∈μ} 4(n + j - i)(n ± 1/2 + j - i)`, `+` for C/B and `-` for D.
pub fn c_pm(series: Series, n: usize, mu: &Partition) -> Result<Q> {
    let sign = series.sign()?;
    check_length(n, mu)?;
    let half = qr(sign, 2);
    Ok(mu.boxes().fold(Q::one(), |acc, (i, j)| {
        let c = q(n as i64 + j as i64 - i as i64);
        acc * q(4) * &c * (&c + &half)
    }))
}

/// Centralizer order `z_ρ = ∏ k^{m_k} m_k!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (k, m)| {
            acc * BigInt::from(k).pow(m as u32) * factorial(m as u64)
        })
}

static MN_CACHE: LazyLock<RwLock<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Irreducible character `χ^μ` of the symmetric group at cycle type `ρ`,
/// by the Murnaghan–Nakayama rule on beta-numbers. Memoized.
pub fn mn_character(mu: &Partition, rho: &Partition) -> Result<i64> {
    if mu.size() != rho.size() {
        return Err(Error::SizeMismatch(mu.size(), rho.size()));
    }
    Ok(mn_memo(mu, rho.parts()))
}

fn mn_memo(mu: &Partition, rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (mu.clone(), Partition(rho.to_vec()));
    if let Some(&v) = MN_CACHE.read().unwrap().get(&key) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let len = mu.length();
    // beta numbers: strictly decreasing, β_i = μ_i + len - 1 - i
    let beta: Vec<usize> = (0..len).map(|i| mu.part(i) + len - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len();
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (m - 1 - i))
            .collect();
        let smaller = Partition::new(parts).expect("beta numbers yield a partition");
        total += sign * mn_memo(&smaller, rest);
    }
    MN_CACHE.write().unwrap().insert(key, total);
    total
}

/// `φ^μ` on `S(2|μ|)`: `χ^μ_ρ` when the cycle type is `2ρ`, zero if some
/// cycle has odd length.
pub fn phi_mu(mu: &Partition, cycle_type: &Partition) -> Result<i64> {
    if cycle_type.size() != 2 * mu.size() {
        return Err(Error::SizeMismatch(2 * mu.size(), cycle_type.size()));
    }
    if cycle_type.parts().iter().any(|p| p % 2 == 1) {
        return Ok(0);
    }
    let rho = Partition(cycle_type.parts().iter().map(|p| p / 2).collect());
    mn_character(mu, &rho)
}

/// Gelfand–Tsetlin interlacing `Λ_1 ≥ λ_1 ≥ Λ_2 ≥ ⋯ ≥ λ_n ≥ Λ_{n+1}`.
pub fn interlaces(big: &Signature, small: &Signature) -> Result<bool> {
    if big.rank() != small.rank() + 1 {
        return Err(Error::RankMismatch {
            expected: small.rank() + 1,
            got: big.rank(),
        });
    }
    let b = big.parts();
    Ok(small
        .parts()
        .iter()
        .enumerate()
        .all(|(i, &l)| b[i] >= l && l >= b[i + 1]))
}

/// All signatures of rank `n` interlacing `big` (rank `n + 1`).
pub fn interlacing_signatures(big: &Signature) -> Vec<Signature> {
    let b = big.parts();
    let n = b.len().saturating_sub(1);
    let mut out = vec![Vec::with_capacity(n)];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (b[i + 1]..=b[i]).rev().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Signature).collect()
}

/// Partitions of exactly `k` with at most `max_length` parts, lexicographically
/// descending.
pub fn partitions_of(k: usize, max_length: usize) -> Vec<Partition> {
    fn rec(
        rem: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, max_length, &mut Vec::new(), &mut out);
    out
}

/// Every partition with `l(μ) ≤ max_length` and `|μ| ≤ max_size`, graded then
/// lexicographically descending.
pub fn partitions_iter(max_length: usize, max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |k| partitions_of(k, max_length))
}

/// Partitions contained in `lambda`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    partitions_iter(lambda.length(), lambda.size())
        .filter(|mu| lambda.contains(mu))
        .collect()
}

/// Signatures of rank `n` with every entry in `[lo, hi]`, in descending
/// lexicographic order.
pub fn signatures_in_box(n: usize, lo: i64, hi: i64) -> Vec<Signature> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                let top = prefix.last().copied().unwrap_or(hi);
                (lo..=top).rev().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Signature).collect()
}

/// Number of permutations in `S(k)` with cycle type `rho`: `k! / z_ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size() as u64) / z_rho(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qbig;
    use itertools::Itertools;
    use num::Zero;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn partition_normalizes_and_rejects() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).double_union(), p(&[4, 4, 2, 2]));
    }

    #[test]
    fn factorial_power_examples() {
        assert_eq!(factorial_power(&q(5), &ShiftSequence::Falling, 3), q(60));
        assert_eq!(
            factorial_power(&qr(3, 7), &ShiftSequence::Squares(q(2)), 0),
            q(1)
        );
        assert_eq!(factorial_power(&q(7), &ShiftSequence::Zero, 2), q(49));
    }

    #[test]
    fn shift_sequences() {
        assert_eq!(shift_sequence(Series::A).terms(3), vec![q(0), q(1), q(2)]);
        assert_eq!(shift_sequence(Series::C).terms(3), vec![q(1), q(4), q(9)]);
        assert_eq!(shift_sequence(Series::B).terms(2), vec![qr(1, 4), qr(9, 4)]);
        assert_eq!(shift_sequence(Series::D).terms(2), vec![q(0), q(1)]);
    }

    #[test]
    fn normalization_constants() {
        assert_eq!(c_norm(2, &p(&[1])).unwrap(), q(2));
        assert_eq!(c_norm(1, &p(&[2])).unwrap(), q(2));
        assert_eq!(c_norm(3, &Partition::empty()).unwrap(), q(1));
        assert!(c_norm(1, &p(&[1, 1])).is_err());
        assert_eq!(c_pm(Series::C, 1, &p(&[1])).unwrap(), q(6));
        assert_eq!(c_pm(Series::D, 1, &p(&[1])).unwrap(), q(2));
        assert_eq!(c_pm(Series::B, 2, &Partition::empty()).unwrap(), q(1));
        assert_eq!(c_pm(Series::C, 2, &p(&[1])).unwrap(), q(20));
        assert!(c_pm(Series::A, 2, &p(&[1])).is_err());
        assert!(c_pm(Series::C, 1, &p(&[1, 1])).is_err());
    }

    #[test]
    fn c_norm_forms_agree() {
        for n in 0..=5 {
            for mu in partitions_iter(n, 6) {
                assert_eq!(
                    c_norm(n, &mu).unwrap(),
                    c_norm_factorials(n, &mu).unwrap(),
                    "n={n} mu={mu}"
                );
            }
        }
    }

    #[test]
    fn z_rho_examples() {
        assert_eq!(z_rho(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(z_rho(&p(&[2])), BigInt::from(2));
        assert_eq!(z_rho(&p(&[2, 2])), BigInt::from(8));
        assert_eq!(z_rho(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn mn_examples() {
        for k in 1..=6 {
            let triv = p(&[k]);
            let sign = Partition::new(vec![1; k]).unwrap();
            for rho in partitions_of(k, k) {
                assert_eq!(mn_character(&triv, &rho).unwrap(), 1);
                let e = (rho.size() - rho.length()) as i64;
                assert_eq!(
                    mn_character(&sign, &rho).unwrap(),
                    if e % 2 == 0 { 1 } else { -1 }
                );
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_mu(&p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(phi_mu(&p(&[1]), &p(&[1, 1])).unwrap(), 0);
        assert_eq!(phi_mu(&p(&[2]), &p(&[2, 2])).unwrap(), 1);
        assert!(phi_mu(&p(&[2]), &p(&[2])).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let s = Signature::from_parts;
        assert!(interlaces(&s(&[2, 1, 0]), &s(&[2, 0])).unwrap());
        assert!(!interlaces(&s(&[2, 1, 0]), &s(&[0, 0])).unwrap());
        assert!(interlaces(&s(&[1, 1]), &s(&[1])).unwrap());
        assert!(interlaces(&s(&[1, 1]), &s(&[1, 0])).is_err());
        let all = interlacing_signatures(&s(&[2, 1, 0]));
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|l| interlaces(&s(&[2, 1, 0]), l).unwrap()));
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = partitions_iter(1, 2).collect();
        assert_eq!(got, vec![Partition::empty(), p(&[1]), p(&[2])]);
        let got: Vec<_> = partitions_iter(2, 2).collect();
        assert_eq!(got, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]);
        let got: Vec<_> = partitions_iter(0, 5).collect();
        assert_eq!(got, vec![Partition::empty()]);
        // enumeration order agrees with the Ord impl
        let all: Vec<_> = partitions_iter(4, 7).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(signatures_in_box(2, -1, 1).len(), 6);
    }

    /// Number of standard Young tableaux, by removing the cell holding the
    /// largest entry (always a corner) in every possible way.
    fn syt_count(shape: &[usize]) -> u64 {
        if shape.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > next {
                let mut s = shape.to_vec();
                s[i] -= 1;
                total += syt_count(&s);
            }
        }
        total
    }

    #[test]
    fn character_orthogonality_and_dimensions() {
        for k in 0..=6 {
            let parts = partitions_of(k, k);
            for mu in &parts {
                for nu in &parts {
                    let s: Q = parts
                        .iter()
                        .map(|rho| {
                            let a = mn_character(mu, rho).unwrap();
                            let b = mn_character(nu, rho).unwrap();
                            Q::new(BigInt::from(a * b), z_rho(rho))
                        })
                        .sum();
                    assert_eq!(s, if mu == nu { q(1) } else { q(0) }, "row {mu} {nu}");
                }
                let ones = Partition::new(vec![1; k]).unwrap();
                assert_eq!(
                    mn_character(mu, &ones).unwrap() as u64,
                    syt_count(mu.parts())
                );
            }
            // column orthogonality
            for rho in &parts {
                for sigma in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|mu| mn_character(mu, rho).unwrap() * mn_character(mu, sigma).unwrap())
                        .sum();
                    let expect = if rho == sigma {
                        z_rho(rho)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(BigInt::from(s), expect);
                }
            }
        }
    }

    fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut lens = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = perm[c];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition(lens)
    }

    #[test]
    fn even_cycle_permutation_count() {
        for k in 0..=4 {
            let predicted: Q = partitions_of(k, k)
                .iter()
                .map(|rho| Q::new(factorial(2 * k as u64), z_rho(&rho.doubled())))
                .sum();
            let brute = (0..2 * k)
                .permutations(2 * k)
                .filter(|perm| cycle_type(perm).parts().iter().all(|c| c % 2 == 0))
                .count();
            assert_eq!(predicted, qbig(BigInt::from(brute)), "k={k}");
        }
    }

    proptest! {
        #[test]
        fn factorial_power_zero_is_power(num in -50i64..50, den in 1i64..9, k in 0usize..=12) {
            let x = qr(num, den);
            let expected = (0..k).fold(q(1), |acc, _| acc * &x);
            prop_assert_eq!(factorial_power(&x, &ShiftSequence::Zero, k), expected);
        }

        #[test]
        fn class_sizes_sum_to_factorial(k in 0usize..8) {
            let total: BigInt = partitions_of(k, k).iter().map(class_size).sum();
            prop_assert_eq!(total, factorial(k as u64));
        }
    }
}
