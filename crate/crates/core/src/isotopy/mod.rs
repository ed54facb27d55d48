//! Isomorphism and isotopy of right loops.
//!
//! An isotopy `(α, β, γ)` from `(S,∘)` to `(S′,∘′)` satisfies
//! `α(x) ∘′ β(y) = γ(x ∘ y)` for all `x, y`. Every isotope of a right loop is
//! isomorphic to a principal isotope `x ∘′ y = R_b⁻¹(x) ∘ L_a⁻¹(y)` with `a`
//! left non-singular, so isotopy reduces to at most `|S|·m` isomorphism
//! searches, `m` being the number of left non-singular elements.

mod autotopy;
mod classify;
mod iso;
mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Perm;
use crate::right_loop::RightLoop;

pub use autotopy::{
    autotopy_group, left_pseudo_autotopy, pseudo_automorphism_check, right_pseudo_autotopy, AutotopyGroup, Side,
    MAX_AUTOTOPY_ORDER,
};
pub use classify::{classify, ClassJson, ClassPartition, ClassSummary, LoopClass, PartitionJson, Relation};
pub use iso::{all_isomorphisms, are_isomorphic, automorphisms, has_transitive_automorphism_group, verify_isomorphism};
pub use oracle::{brute_force_isotopy_oracle, MAX_ORACLE_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsotopyError {
    #[error("element {0} is not left non-singular")]
    ANotLeftNonsingular(usize),
    #[error("companion {0} is not left non-singular")]
    CNotLeftNonsingular(usize),
    #[error("order {order} exceeds the brute-force oracle limit of {limit}")]
    OrderTooLargeForOracle { order: usize, limit: usize },
    #[error("order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("index {0} out of range")]
    OutOfRange(usize),
    #[error("map is not a bijection")]
    NotBijection,
}

/// Three bijections `(α, β, γ)` with `α(x) ∘′ β(y) = γ(x ∘ y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsotopyWitness {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
}

fn invert(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (i, &v) in f.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// `x ↦ g(f(x))`.
fn after(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&v| g[v]).collect()
}

fn is_bijection(f: &[usize], n: usize) -> bool {
    f.len() == n && Perm::from_images(f.to_vec()).is_some()
}

impl IsotopyWitness {
    pub fn identity(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        IsotopyWitness { alpha: id.clone(), beta: id.clone(), gamma: id }
    }

    pub fn isomorphism(f: Vec<usize>) -> Self {
        IsotopyWitness { alpha: f.clone(), beta: f.clone(), gamma: f }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.alpha == self.beta && self.beta == self.gamma
    }

    /// Checks the defining identity over all `n²` pairs.
    pub fn verify(&self, src: &RightLoop, dst: &RightLoop) -> bool {
        let n = src.order();
        if dst.order() != n || ![&self.alpha, &self.beta, &self.gamma].iter().all(|f| is_bijection(f, n)) {
            return false;
        }
        (0..n).all(|x| (0..n).all(|y| dst.op(self.alpha[x], self.beta[y]) == self.gamma[src.op(x, y)]))
    }

    /// Isotopy in the opposite direction.
    pub fn inverse(&self) -> Self {
        IsotopyWitness { alpha: invert(&self.alpha), beta: invert(&self.beta), gamma: invert(&self.gamma) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &IsotopyWitness) -> Self {
        IsotopyWitness {
            alpha: after(&next.alpha, &self.alpha),
            beta: after(&next.beta, &self.beta),
            gamma: after(&next.gamma, &self.gamma),
        }
    }
}

/// A principal isotope relabeled so that its identity `a∘b` sits at index 0.
#[derive(Debug, Clone)]
pub struct PrincipalIsotope {
    pub right_loop: RightLoop,
    /// The transposition `(0, a∘b)` applied to the raw isotope.
    pub relabel: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

impl PrincipalIsotope {
    /// The isotopy `(σR_b, σL_a, σ)` from the original loop to this one.
    pub fn isotopy_from_original(&self, original: &RightLoop) -> IsotopyWitness {
        let sigma = &self.relabel;
        let rb = original.right_translation(self.b);
        let la = original.left_translation(self.a).expect("a is left non-singular");
        IsotopyWitness { alpha: after(sigma, rb.images()), beta: after(sigma, la.images()), gamma: sigma.clone() }
    }
}

/// `x ∘′ y = R_b⁻¹(x) ∘ L_a⁻¹(y)`, whose identity is `a∘b`.
pub fn principal_isotope(l: &RightLoop, a: usize, b: usize) -> Result<PrincipalIsotope, IsotopyError> {
    let n = l.order();
    if a >= n {
        return Err(IsotopyError::OutOfRange(a));
    }
    if b >= n {
        return Err(IsotopyError::OutOfRange(b));
    }
    let la_inv = l.left_translation(a).ok_or(IsotopyError::ANotLeftNonsingular(a))?.inverse();
    let rb_inv = l.right_translation(b).inverse();
    let e = l.op(a, b);
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.swap(0, e);
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let v = l.op(rb_inv.apply(x), la_inv.apply(y));
            table[sigma[x] * n + sigma[y]] = sigma[v];
        }
    }
    Ok(PrincipalIsotope { right_loop: RightLoop::from_flat_unchecked(n, table), relabel: sigma, a, b })
}

/// Quick necessary conditions for isotopy.
fn isotopy_invariants_match(l1: &RightLoop, l2: &RightLoop) -> bool {
    l1.order() == l2.order() && l1.left_nonsingular_elements().len() == l2.left_nonsingular_elements().len()
}

/// A verified isotopy `l1 → l2`, if one exists.
pub fn are_isotopic(l1: &RightLoop, l2: &RightLoop) -> Option<IsotopyWitness> {
    if !isotopy_invariants_match(l1, l2) {
        return None;
    }
    let n = l1.order();
    for a in l1.left_nonsingular_elements() {
        for b in 0..n {
            let p = principal_isotope(l1, a, b).expect("a is left non-singular");
            if let Some(f) = are_isomorphic(l2, &p.right_loop) {
                let to_l2 = IsotopyWitness::isomorphism(invert(&f));
                let w = p.isotopy_from_original(l1).then(&to_l2);
                if w.verify(l1, l2) {
                    return Some(w);
                }
                debug_assert!(false, "composed witness failed verification");
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_named_group, GroupDescriptor};

    fn zn(n: usize) -> RightLoop {
        RightLoop::from_group(&build_named_group(&GroupDescriptor::Cyclic(n)).unwrap())
    }

    /// `x∘y = x+y` if `y ∉ B`, `y−x` otherwise.
    fn znb(n: usize, b: &[usize]) -> RightLoop {
        let rows = (0..n)
            .map(|x| (0..n).map(|y| if b.contains(&y) { (y + n - x) % n } else { (x + y) % n }).collect())
            .collect();
        RightLoop::validate(rows).unwrap()
    }

    #[test]
    fn trivial_principal_isotope_is_the_loop() {
        let l = znb(5, &[1]);
        assert_eq!(principal_isotope(&l, 0, 0).unwrap().right_loop, l);
    }

    #[test]
    fn principal_isotope_requires_left_nonsingular_a() {
        let l = znb(5, &[1]);
        assert_eq!(principal_isotope(&l, 2, 0).unwrap_err(), IsotopyError::ANotLeftNonsingular(2));
    }

    #[test]
    fn principal_isotope_identity_is_a_circ_b() {
        let l = znb(7, &[1, 3]);
        for b in 0..7 {
            let p = principal_isotope(&l, 0, b).unwrap();
            let e = l.op(0, b);
            assert_eq!(p.relabel[e], 0);
            RightLoop::from_flat(7, p.right_loop.flat().to_vec()).unwrap();
            assert!(p.isotopy_from_original(&l).verify(&l, &p.right_loop));
        }
    }

    #[test]
    fn isotope_of_znb_with_u_in_b_follows_the_case_split() {
        // a = 0, b = u ∈ B: x ∘ᵤ y = u−x+y if y ∉ B, x+y−u if y ∈ B
        let (n, bset, u) = (5, [1usize], 1usize);
        let l = znb(n, &bset);
        let p = principal_isotope(&l, 0, u).unwrap();
        let sigma = &p.relabel;
        for x in 0..n {
            for y in 0..n {
                let expected = if bset.contains(&y) { (x + y + n - u) % n } else { (u + n - x + y) % n };
                assert_eq!(p.right_loop.op(sigma[x], sigma[y]), sigma[expected]);
            }
        }
        // u ∉ B: x ∘ᵤ y = x+y−u if y ∉ B, u−x+y if y ∈ B
        let u = 3;
        let p = principal_isotope(&l, 0, u).unwrap();
        let sigma = &p.relabel;
        for x in 0..n {
            for y in 0..n {
                let expected = if bset.contains(&y) { (u + n - x + y) % n } else { (x + y + n - u) % n };
                assert_eq!(p.right_loop.op(sigma[x], sigma[y]), sigma[expected]);
            }
        }
    }

    #[test]
    fn isotopy_to_self() {
        let l = znb(5, &[1, 2]);
        let w = are_isotopic(&l, &l).unwrap();
        assert!(w.verify(&l, &l));
        assert!(IsotopyWitness::identity(5).verify(&l, &l));
    }

    #[test]
    fn loop_is_not_isotopic_to_non_loop() {
        assert!(are_isotopic(&zn(5), &znb(5, &[1])).is_none());
        assert!(are_isotopic(&znb(5, &[1]), &zn(5)).is_none());
    }

    #[test]
    fn witness_algebra() {
        let l1 = znb(5, &[1]);
        let l2 = znb(5, &[1, 2, 3, 4]);
        let w = are_isotopic(&l1, &l2).unwrap();
        assert!(w.inverse().verify(&l2, &l1));
        let l3 = znb(5, &[4]);
        let w2 = are_isotopic(&l2, &l3).unwrap();
        assert!(w.then(&w2).verify(&l1, &l3));
    }
}
