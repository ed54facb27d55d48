//! The right loops `ℤₙᴮ`: `x∘y = x+y` for `y ∉ B` and `y−x` for `y ∈ B`.
//!
//! `ℤₙᴮ` is the loop induced by the transversal `T_B` of `{1,x}` in `D₂ₙ`
//! whose rep for the coset of `yⁱ` is `xyⁱ` when `i ∈ B` and `yⁱ` otherwise;
//! position `i` of `T_B` is residue `i`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, is_prime, mod_inverse};
use crate::group::{build_named_group, right_cosets, GroupDescriptor, Subgroup};
use crate::right_loop::RightLoop;
use crate::transversal::{Transversal, TransversalError};

/// Subsets are bitmasks, so the modulus is bounded by the word size.
pub const MAX_MODULUS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZnBError {
    #[error("0 cannot belong to B")]
    ZeroInB,
    #[error("residue {value} is out of range for modulus {n}")]
    OutOfRange { value: usize, n: usize },
    #[error("modulus {0} must be between 1 and 64")]
    BadModulus(usize),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("scan of {count} subsets exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("cannot parse subset `{0}`")]
    Parse(String),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
}

/// `B ⊆ ℤₙ∖{0}`, bit `i` set iff `i ∈ B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetB {
    n: usize,
    mask: u64,
}

fn check_modulus(n: usize) -> Result<(), ZnBError> {
    if n == 0 || n > MAX_MODULUS {
        return Err(ZnBError::BadModulus(n));
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SubsetB {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, ZnBError> {
        check_modulus(n)?;
        let mut mask = 0u64;
        for m in members {
            if m >= n {
                return Err(ZnBError::OutOfRange { value: m, n });
            }
            if m == 0 {
                return Err(ZnBError::ZeroInB);
            }
            mask |= 1 << m;
        }
        Ok(SubsetB { n, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self, ZnBError> {
        check_modulus(n)?;
        if mask & 1 == 1 {
            return Err(ZnBError::ZeroInB);
        }
        if mask & !full_mask(n) != 0 {
            return Err(ZnBError::OutOfRange { value: 63 - mask.leading_zeros() as usize, n });
        }
        Ok(SubsetB { n, mask })
    }

    pub fn empty(n: usize) -> Result<Self, ZnBError> {
        Self::new(n, [])
    }

    /// `1,3,5`, with `∅` or the empty string for the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self, ZnBError> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if s.is_empty() || s == "∅" {
            return Self::empty(n);
        }
        let members = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| ZnBError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, members)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.mask >> i & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// `B′ = ℤₙ∖B`, which contains 0.
    pub fn complement_members(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.contains(i)).collect()
    }

    /// Whether `B + g = B`.
    fn invariant_under_shift(&self, g: usize) -> bool {
        (1..self.n).all(|i| self.contains(i) == self.contains((i + g) % self.n))
    }
}

impl fmt::Display for SubsetB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.members().iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SubsetB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SubsetB {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

pub fn znb_right_loop(b: &SubsetB) -> RightLoop {
    let n = b.n;
    let table = (0..n)
        .flat_map(|x| (0..n).map(move |y| if b.contains(y) { (y + n - x) % n } else { (x + y) % n }))
        .collect();
    RightLoop::from_flat_unchecked(n, table)
}

/// `T_B` inside `dihedral:n` with `H = {1, x}`.
pub fn transversal_from_subset(b: &SubsetB) -> Result<Transversal, ZnBError> {
    let n = b.n;
    if n < 2 {
        return Err(ZnBError::BadModulus(n));
    }
    let g = Arc::new(build_named_group(&GroupDescriptor::Dihedral(n)).map_err(TransversalError::from)?);
    // index s·n + i is xˢyⁱ
    let h = Subgroup::new(g.clone(), [0, n]).map_err(TransversalError::from)?;
    let cosets = Arc::new(right_cosets(&g, &h).map_err(TransversalError::from)?);
    let elements: Vec<usize> = (0..n).map(|i| if b.contains(i) { n + i } else { i }).collect();
    Ok(Transversal::from_elements(cosets, &elements)?)
}

/// Left non-singular residues from the coset criterion alone: `i ≠ 0`
/// qualifies iff `B` (equivalently `B′`) is a union of cosets of `⟨i⟩` for
/// odd `n` and of `⟨2i⟩` for even `n`.
pub fn criterion_left_nonsingular(b: &SubsetB) -> Vec<usize> {
    let n = b.n;
    let mut out = vec![0];
    for i in 1..n {
        let generator = if n % 2 == 1 { i } else { 2 * i % n };
        // ⟨d⟩ in ℤₙ is ⟨gcd(d, n)⟩; ⟨0⟩ is trivial
        let step = gcd(generator, n) % n;
        if step == 0 || b.invariant_under_shift(step) {
            out.push(i);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub n: usize,
    pub count: usize,
    pub witnesses: Vec<SubsetB>,
}

/// All `B` for which `ℤₙᴮ` is a loop, found by scanning every subset.
pub fn loop_transversal_census(n: usize, cap: u128) -> Result<Census, ZnBError> {
    check_modulus(n)?;
    if n < 2 {
        return Err(ZnBError::BadModulus(n));
    }
    let count = 1u128 << (n - 1);
    if count > cap {
        return Err(ZnBError::CapExceeded { count, cap });
    }
    let witnesses: Vec<SubsetB> = (0..count as u64)
        .into_par_iter()
        .filter_map(|k| {
            let b = SubsetB { n, mask: k << 1 };
            znb_right_loop(&b).structure_flags().is_loop.then_some(b)
        })
        .collect();
    Ok(Census { n, count: witnesses.len(), witnesses })
}

fn check_odd_prime(p: usize) -> Result<(), ZnBError> {
    if p == 2 || !is_prime(p) || p > MAX_MODULUS {
        return Err(ZnBError::NotOddPrime(p));
    }
    Ok(())
}

/// `𝒳_B`: for each `μ ≠ 0` and `u`, with `f⁻¹(B) = {(b−u)μ⁻¹}`, the set
/// `f⁻¹(B)` when `u ∉ B` and its complement in `ℤ_p` when `u ∈ B`.
/// Sorted by bitmask.
pub fn xb_family(p: usize, b: &SubsetB) -> Result<Vec<SubsetB>, ZnBError> {
    check_odd_prime(p)?;
    if b.n != p {
        return Err(ZnBError::BadModulus(b.n));
    }
    if b.is_empty() {
        return Ok(vec![*b]);
    }
    let mut out = BTreeSet::new();
    for mu in 1..p {
        let mu_inv = mod_inverse(mu, p).expect("p prime");
        for u in 0..p {
            let mut pre = 0u64;
            for m in b.members() {
                pre |= 1 << ((m + p - u) * mu_inv % p);
            }
            let c = if b.contains(u) { full_mask(p) & !pre } else { pre };
            out.insert(SubsetB::from_mask(p, c).expect("the rule never produces 0"));
        }
    }
    Ok(out.into_iter().collect())
}

/// The distinct families `𝒳_B` over all `B ⊆ ℤ_p∖{0}`, ordered by least member.
pub fn xb_families(p: usize) -> Result<Vec<Vec<SubsetB>>, ZnBError> {
    check_odd_prime(p)?;
    let total = 1u64 << (p - 1);
    let mut seen = vec![false; total as usize];
    let mut families = Vec::new();
    for k in 0..total {
        if seen[k as usize] {
            continue;
        }
        let family = xb_family(p, &SubsetB { n: p, mask: k << 1 })?;
        for c in &family {
            seen[(c.mask >> 1) as usize] = true;
        }
        families.push(family);
    }
    Ok(families)
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyJson {
    pub size: usize,
    pub members: Vec<SubsetB>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamiliesJson {
    pub n: usize,
    pub families: Vec<FamilyJson>,
}

pub fn families_json(p: usize, families: &[Vec<SubsetB>]) -> FamiliesJson {
    FamiliesJson {
        n: p,
        families: families.iter().map(|f| FamilyJson { size: f.len(), members: f.clone() }).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sb(n: usize, m: &[usize]) -> SubsetB {
        SubsetB::new(n, m.iter().copied()).unwrap()
    }

    fn all_subsets(n: usize) -> impl Iterator<Item = SubsetB> {
        (0..1u64 << (n - 1)).map(move |k| SubsetB::from_mask(n, k << 1).unwrap())
    }

    #[test]
    fn subset_validation_and_parsing() {
        assert_eq!(SubsetB::new(5, [0]), Err(ZnBError::ZeroInB));
        assert_eq!(SubsetB::new(5, [5]), Err(ZnBError::OutOfRange { value: 5, n: 5 }));
        assert_eq!(SubsetB::parse(6, "1,3,5").unwrap(), sb(6, &[1, 3, 5]));
        assert_eq!(SubsetB::parse(6, "{1, 3}").unwrap(), sb(6, &[1, 3]));
        assert_eq!(SubsetB::parse(6, "").unwrap(), sb(6, &[]));
        assert!(SubsetB::parse(6, "1,x").is_err());
        assert_eq!(sb(6, &[1, 3, 5]).to_string(), "{1,3,5}");
        assert_eq!(sb(6, &[]).to_string(), "∅");
        assert_eq!(sb(6, &[1, 3, 5]).complement_members(), vec![0, 2, 4]);
    }

    #[test]
    fn table_entries() {
        let l = znb_right_loop(&sb(5, &[1]));
        assert_eq!(l.op(2, 1), 4);
        assert_eq!(l.op(2, 3), 0);
        RightLoop::from_flat(5, l.flat().to_vec()).unwrap();
        let cyclic = znb_right_loop(&sb(5, &[]));
        assert!(cyclic.structure_flags().is_group);
        assert_eq!(znb_right_loop(&sb(3, &[1, 2])).left_nonsingular_elements(), vec![0]);
        assert_eq!(znb_right_loop(&sb(7, &[1])).left_nonsingular_elements(), vec![0]);
    }

    #[test]
    fn identification_with_dihedral_transversals() {
        for n in 2..=9 {
            for b in all_subsets(n) {
                let t = transversal_from_subset(&b).unwrap();
                assert_eq!(t.induced_right_loop(), znb_right_loop(&b), "n={n} B={b}");
            }
        }
    }

    #[test]
    fn subsets_of_three_give_every_transversal() {
        use crate::transversal::enumerate_transversals;
        let b0 = sb(3, &[]);
        let t0 = transversal_from_subset(&b0).unwrap();
        let all: BTreeSet<Vec<usize>> =
            enumerate_transversals(t0.cosets().clone(), 1 << 20).unwrap().map(|t| t.reps().to_vec()).collect();
        let from_b: BTreeSet<Vec<usize>> =
            all_subsets(3).map(|b| transversal_from_subset(&b).unwrap().reps().to_vec()).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all, from_b);
    }

    #[test]
    fn criterion_examples() {
        assert!(criterion_left_nonsingular(&sb(9, &[1, 4, 7])).contains(&3));
        assert_eq!(criterion_left_nonsingular(&sb(6, &[1, 3, 5])), (0..6).collect::<Vec<_>>());
        assert_eq!(criterion_left_nonsingular(&sb(7, &[2, 5])), vec![0]);
    }

    #[test]
    fn criterion_matches_table_up_to_eight() {
        for n in 1..=8 {
            for b in all_subsets(n) {
                assert_eq!(criterion_left_nonsingular(&b), znb_right_loop(&b).left_nonsingular_elements(), "n={n} B={b}");
            }
        }
    }

    #[test]
    fn census() {
        let c = loop_transversal_census(5, 1 << 20).unwrap();
        assert_eq!((c.count, c.witnesses.clone()), (1, vec![sb(5, &[])]));
        let c = loop_transversal_census(6, 1 << 20).unwrap();
        assert_eq!(c.witnesses, vec![sb(6, &[]), sb(6, &[1, 3, 5])]);
        assert!(matches!(loop_transversal_census(30, 1 << 20), Err(ZnBError::CapExceeded { .. })));
    }

    #[test]
    fn xb_examples() {
        assert_eq!(xb_family(3, &sb(3, &[])).unwrap(), vec![sb(3, &[])]);
        assert_eq!(xb_family(3, &sb(3, &[1])).unwrap(), vec![sb(3, &[1]), sb(3, &[2]), sb(3, &[1, 2])]);
        assert_eq!(xb_families(5).unwrap().len(), 3);
        assert_eq!(xb_families(7).unwrap().len(), 5);
        assert!(matches!(xb_family(4, &sb(4, &[1])), Err(ZnBError::NotOddPrime(4))));
        assert!(matches!(xb_family(2, &sb(2, &[1])), Err(ZnBError::NotOddPrime(2))));
    }

    #[test]
    fn xb_families_partition_and_sizes() {
        for p in [3, 5, 7, 11] {
            for b in all_subsets(p) {
                let fam = xb_family(p, &b).unwrap();
                assert!(fam.contains(&b));
                for c in &fam {
                    assert!(!c.contains(0));
                    assert!(xb_family(p, c).unwrap().contains(&b));
                    if !b.is_empty() {
                        assert!(c.len() == b.len() || c.len() == p - b.len());
                    }
                }
            }
            let total: usize = xb_families(p).unwrap().iter().map(Vec::len).sum();
            assert_eq!(total, 1 << (p - 1));
        }
    }
}
