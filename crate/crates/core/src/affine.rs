//! `Aff(1,p) = {x ↦ μx + t}` acting on `ℤ_p`, its cycle index in exact
//! rationals, and Burnside counts of subset orbits.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{divisors, is_prime, mod_inverse, phi};
use crate::perm::Perm;

pub const MAX_AFFINE_PRIME: usize = 31;
pub const MAX_ORBIT_PRIME: usize = 23;
pub const MAX_NAIVE_ORBIT_PRIME: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffineError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("p = {p} exceeds the limit of {limit}")]
    TooLarge { p: usize, limit: usize },
    #[error("no permutations given")]
    Empty,
    #[error("permutation degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("P(2,…,2) = {0} is not an even integer")]
    NotEven(String),
}

fn check_prime(p: usize, limit: usize) -> Result<(), AffineError> {
    if p == 2 || !is_prime(p) {
        return Err(AffineError::NotOddPrime(p));
    }
    if p > limit {
        return Err(AffineError::TooLarge { p, limit });
    }
    Ok(())
}

/// `f_{μ,t}(x) = μx + t` over `ℤ_p`, `μ ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineMap {
    pub p: usize,
    pub mu: usize,
    pub t: usize,
}

impl AffineMap {
    pub fn apply(&self, x: usize) -> usize {
        (self.mu * x + self.t) % self.p
    }

    /// `self` after `other`: `x ↦ self(other(x))`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap { p: self.p, mu: self.mu * other.mu % self.p, t: (self.mu * other.t + self.t) % self.p }
    }

    pub fn inverse(&self) -> AffineMap {
        let mi = mod_inverse(self.mu, self.p).expect("μ is a unit");
        AffineMap { p: self.p, mu: mi, t: (self.p - mi * self.t % self.p) % self.p }
    }

    pub fn permutation(&self) -> Perm {
        Perm::from_images((0..self.p).map(|x| self.apply(x)).collect()).expect("μ is a unit")
    }

    /// 0 for the identity, 1 for `μ ≠ 1`, 2 for translations `x ↦ x + t`, `t ≠ 0`.
    pub fn class(&self) -> usize {
        match (self.mu, self.t) {
            (1, 0) => 0,
            (1, _) => 2,
            _ => 1,
        }
    }
}

/// All `p(p−1)` maps, ordered by `(μ, t)`.
pub fn affine_maps(p: usize) -> Result<Vec<AffineMap>, AffineError> {
    check_prime(p, MAX_AFFINE_PRIME)?;
    Ok((1..p).flat_map(|mu| (0..p).map(move |t| AffineMap { p, mu, t })).collect())
}

/// Sorted `(cycle length, count)` pairs.
pub type CycleType = Vec<(usize, usize)>;

/// `(1/|G|) Σ_σ x₁^{b₁(σ)} ⋯ x_m^{b_m(σ)}` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndex {
    pub degree: usize,
    pub terms: BTreeMap<CycleType, BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
    pub num: u64,
    pub den: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleIndexJson {
    pub p: usize,
    pub terms: Vec<TermJson>,
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exponent vector `(b₁, …, b_m)`.
fn exponents(t: &CycleType, m: usize) -> Vec<usize> {
    let mut e = vec![0; m];
    for &(len, count) in t {
        e[len - 1] = count;
    }
    e
}

impl CycleIndex {
    fn add(&mut self, t: CycleType, c: BigRational) {
        let entry = self.terms.entry(t).or_insert_with(BigRational::zero);
        *entry += c;
    }

    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Substitutes `v` for every indeterminate.
    pub fn evaluate(&self, v: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (t, c)| {
            let cycles: usize = t.iter().map(|&(_, count)| count).sum();
            acc + c * num_traits::pow(v.clone(), cycles)
        })
    }

    /// Terms by descending exponent vector `(b₁, b₂, …)`.
    fn ordered_terms(&self) -> Vec<(&CycleType, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|t| std::cmp::Reverse(exponents(t.0, self.degree)));
        v
    }

    /// `(1/20)(x1^5 + 5 x1 x2^2 + 10 x1 x4 + 4 x5)`.
    pub fn to_text(&self) -> String {
        let den = self.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut body = String::new();
        for (i, (t, c)) in self.ordered_terms().into_iter().enumerate() {
            if i > 0 {
                body.push_str(" + ");
            }
            let k = (c * BigRational::from_integer(den.clone())).to_integer();
            let mut parts = Vec::new();
            if !k.is_one() {
                parts.push(k.to_string());
            }
            for &(len, count) in t {
                let mut s = format!("x{len}");
                if count > 1 {
                    let _ = write!(s, "^{count}");
                }
                parts.push(s);
            }
            body.push_str(&parts.join(" "));
        }
        format!("(1/{den})({body})")
    }

    pub fn to_json(&self) -> CycleIndexJson {
        CycleIndexJson {
            p: self.degree,
            terms: self
                .ordered_terms()
                .into_iter()
                .map(|(t, c)| TermJson {
                    cycle_type: t.clone(),
                    num: c.numer().to_u64().expect("small coefficient"),
                    den: c.denom().to_u64().expect("small coefficient"),
                })
                .collect(),
        }
    }
}

/// The closed form `(1/(p(p−1)))(x₁^p + p Σ_{d | p−1, d ≠ 1} φ(d) x₁ x_d^{(p−1)/d} + (p−1) x_p)`.
pub fn cycle_index_formula(p: usize) -> Result<CycleIndex, AffineError> {
    check_prime(p, usize::MAX)?;
    let order = p * (p - 1);
    let mut ci = CycleIndex { degree: p, terms: BTreeMap::new() };
    ci.add(vec![(1, p)], ratio(1, order));
    for d in divisors(p - 1).into_iter().filter(|&d| d != 1) {
        ci.add(vec![(1, 1), (d, (p - 1) / d)], ratio(p * phi(d), order));
    }
    ci.add(vec![(p, 1)], ratio(p - 1, order));
    Ok(ci)
}

/// Average cycle-type monomial over `perms`.
pub fn cycle_index_bruteforce(perms: &[Perm]) -> Result<CycleIndex, AffineError> {
    let first = perms.first().ok_or(AffineError::Empty)?;
    let degree = first.degree();
    let mut counts: BTreeMap<CycleType, usize> = BTreeMap::new();
    for s in perms {
        if s.degree() != degree {
            return Err(AffineError::DegreeMismatch(degree, s.degree()));
        }
        *counts.entry(s.cycle_type()).or_default() += 1;
    }
    let terms = counts.into_iter().map(|(t, k)| (t, ratio(k, perms.len()))).collect();
    Ok(CycleIndex { degree, terms })
}

/// `P(2,…,2)/2`.
pub fn itp_count_formula(p: usize) -> Result<u64, AffineError> {
    let v = cycle_index_formula(p)?.evaluate(&BigRational::from_integer(BigInt::from(2)));
    let two = BigInt::from(2);
    if !v.is_integer() || !v.to_integer().is_multiple_of(&two) {
        return Err(AffineError::NotEven(v.to_string()));
    }
    Ok((v.to_integer() / two).to_u64().expect("small count"))
}

/// Orbits of `Aff(1,p)` on subsets of `ℤ_p`: average of `2^{#cycles}`.
pub fn subset_orbit_count(p: usize) -> Result<u64, AffineError> {
    check_prime(p, MAX_ORBIT_PRIME)?;
    let maps = affine_maps(p)?;
    let fixed: u64 = maps.iter().map(|f| 1u64 << f.permutation().cycle_counts().iter().sum::<usize>()).sum();
    debug_assert_eq!(fixed % maps.len() as u64, 0);
    Ok(fixed / maps.len() as u64)
}

/// Burnside by testing each of the `2^p` subsets against each map.
pub fn subset_orbit_count_naive(p: usize) -> Result<u64, AffineError> {
    check_prime(p, MAX_NAIVE_ORBIT_PRIME)?;
    let maps = affine_maps(p)?;
    let mut fixed = 0u64;
    for f in &maps {
        let images: Vec<usize> = (0..p).map(|x| f.apply(x)).collect();
        for s in 0u32..1 << p {
            let image = (0..p).filter(|&x| s >> x & 1 == 1).fold(0u32, |m, x| m | 1 << images[x]);
            if image == s {
                fixed += 1;
            }
        }
    }
    Ok(fixed / maps.len() as u64)
}
