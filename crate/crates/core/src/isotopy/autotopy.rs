//! Autotopy group `U(S)`, its subgroups `A₁` (`α(0)=0`) and `A₂` (`β(0)=0`),
//! and pseudo-automorphisms.
//!
//! Every autotopy factors as a principal isotopy to `S_{a,b}` followed by an
//! isomorphism `S_{a,b} → S`, with `a = α⁻¹(0)` and `b = β⁻¹(0)`, so
//! `(a, b, isomorphism)` enumerates `U(S)` without repetition.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{all_isomorphisms, principal_isotope, IsotopyError, IsotopyWitness};
use crate::right_loop::RightLoop;

pub const MAX_AUTOTOPY_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("unknown side `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutotopyGroup {
    pub u_size: usize,
    pub a1_size: usize,
    pub a2_size: usize,
    pub aut_size: usize,
    /// Sorted.
    pub elements: Vec<IsotopyWitness>,
}

impl AutotopyGroup {
    pub fn a1(&self) -> impl Iterator<Item = &IsotopyWitness> {
        self.elements.iter().filter(|w| w.alpha[0] == 0)
    }

    pub fn a2(&self) -> impl Iterator<Item = &IsotopyWitness> {
        self.elements.iter().filter(|w| w.beta[0] == 0)
    }

    pub fn automorphisms(&self) -> impl Iterator<Item = &IsotopyWitness> {
        self.elements.iter().filter(|w| w.alpha[0] == 0 && w.beta[0] == 0)
    }

    /// Closed under componentwise composition.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&IsotopyWitness> = self.elements.iter().collect();
        self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.then(b))))
    }
}

pub fn autotopy_group(l: &RightLoop) -> Result<AutotopyGroup, IsotopyError> {
    let n = l.order();
    if n > MAX_AUTOTOPY_ORDER {
        return Err(IsotopyError::OrderTooLarge { order: n, limit: MAX_AUTOTOPY_ORDER });
    }
    let mut elements = Vec::new();
    for a in l.left_nonsingular_elements() {
        for b in 0..n {
            let p = principal_isotope(l, a, b)?;
            let to_p = p.isotopy_from_original(l);
            for g in all_isomorphisms(&p.right_loop, l) {
                let w = to_p.then(&IsotopyWitness::isomorphism(g));
                if w.verify(l, l) {
                    elements.push(w);
                }
            }
        }
    }
    elements.sort();
    elements.dedup();
    let count = |f: &dyn Fn(&IsotopyWitness) -> bool| elements.iter().filter(|w| f(w)).count();
    let a1_size = count(&|w| w.alpha[0] == 0);
    let a2_size = count(&|w| w.beta[0] == 0);
    let aut_size = count(&|w| w.alpha[0] == 0 && w.beta[0] == 0);
    Ok(AutotopyGroup { u_size: elements.len(), a1_size, a2_size, aut_size, elements })
}

fn check_map(l: &RightLoop, eta: &[usize], c: usize) -> Result<(), IsotopyError> {
    let n = l.order();
    if c >= n {
        return Err(IsotopyError::OutOfRange(c));
    }
    if eta.len() != n || crate::perm::Perm::from_images(eta.to_vec()).is_none() {
        return Err(IsotopyError::NotBijection);
    }
    Ok(())
}

/// Right: `η(x∘y)∘c = η(x)∘(η(y)∘c)`. Left: `c∘η(x∘y) = (c∘η(x))∘η(y)`,
/// defined only for left non-singular `c`.
pub fn pseudo_automorphism_check(l: &RightLoop, eta: &[usize], c: usize, side: Side) -> Result<bool, IsotopyError> {
    check_map(l, eta, c)?;
    let n = l.order();
    let holds = match side {
        Side::Right => {
            (0..n).all(|x| (0..n).all(|y| l.op(eta[l.op(x, y)], c) == l.op(eta[x], l.op(eta[y], c))))
        }
        Side::Left => {
            if !l.is_left_nonsingular(c) {
                return Err(IsotopyError::CNotLeftNonsingular(c));
            }
            (0..n).all(|x| (0..n).all(|y| l.op(c, eta[l.op(x, y)]) == l.op(l.op(c, eta[x]), eta[y])))
        }
    };
    Ok(holds)
}

/// `(η, R_c η, R_c η)`: an autotopy exactly when `η` is a right
/// pseudo-automorphism with companion `c`.
pub fn right_pseudo_autotopy(l: &RightLoop, eta: &[usize], c: usize) -> Result<IsotopyWitness, IsotopyError> {
    check_map(l, eta, c)?;
    let rc: Vec<usize> = eta.iter().map(|&v| l.op(v, c)).collect();
    Ok(IsotopyWitness { alpha: eta.to_vec(), beta: rc.clone(), gamma: rc })
}

/// `(L_c η, η, L_c η)`: an autotopy exactly when `η` is a left
/// pseudo-automorphism with companion `c`.
pub fn left_pseudo_autotopy(l: &RightLoop, eta: &[usize], c: usize) -> Result<IsotopyWitness, IsotopyError> {
    check_map(l, eta, c)?;
    if !l.is_left_nonsingular(c) {
        return Err(IsotopyError::CNotLeftNonsingular(c));
    }
    let lc: Vec<usize> = eta.iter().map(|&v| l.op(c, v)).collect();
    Ok(IsotopyWitness { alpha: lc.clone(), beta: eta.to_vec(), gamma: lc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isotopy::automorphisms;

    fn znb(n: usize, b: &[usize]) -> RightLoop {
        let rows = (0..n)
            .map(|x| (0..n).map(|y| if b.contains(&y) { (y + n - x) % n } else { (x + y) % n }).collect())
            .collect();
        RightLoop::validate(rows).unwrap()
    }

    /// All triples checked directly, for tiny orders.
    fn brute_autotopies(l: &RightLoop) -> usize {
        let n = l.order();
        let perms = permutations(n);
        let mut count = 0;
        for a in &perms {
            for b in &perms {
                // γ(x∘y) = α(x)∘β(y) forces γ(z) = α(z)∘β(0)
                let g: Vec<usize> = (0..n).map(|z| l.op(a[z], b[0])).collect();
                if (IsotopyWitness { alpha: a.clone(), beta: b.clone(), gamma: g }).verify(l, l) {
                    count += 1;
                }
            }
        }
        count
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cyclic_three() {
        let l = znb(3, &[]);
        let u = autotopy_group(&l).unwrap();
        assert_eq!(u.aut_size, 2);
        assert_eq!(u.u_size, brute_autotopies(&l));
        assert_eq!(u.u_size, u.a1_size * 3);
        assert_eq!(u.u_size, u.a2_size * 3);
        assert!(u.is_closed());
    }

    #[test]
    fn matches_brute_force_on_small_right_loops() {
        for (n, b) in [(3, vec![1]), (4, vec![1]), (4, vec![1, 3]), (5, vec![2]), (5, vec![1, 4])] {
            let l = znb(n, &b);
            let u = autotopy_group(&l).unwrap();
            assert_eq!(u.u_size, brute_autotopies(&l), "n={n} B={b:?}");
            assert!(u.is_closed());
            assert!(u.automorphisms().all(|w| w.is_isomorphism() && w.alpha[0] == 0));
            assert_eq!(u.aut_size, automorphisms(&l).len());
        }
    }

    #[test]
    fn a1_elements_are_right_pseudo_automorphisms() {
        for mask in 0u32..16 {
            let b: Vec<usize> = (1..5).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            let l = znb(5, &b);
            let u = autotopy_group(&l).unwrap();
            for w in u.a1() {
                assert_eq!(w.beta, w.gamma);
                let c = w.beta[0];
                assert!(pseudo_automorphism_check(&l, &w.alpha, c, Side::Right).unwrap());
                assert_eq!(&right_pseudo_autotopy(&l, &w.alpha, c).unwrap(), w);
            }
        }
    }

    #[test]
    fn trivial_pseudo_automorphisms() {
        let l = znb(5, &[1, 3]);
        let id: Vec<usize> = (0..5).collect();
        assert!(pseudo_automorphism_check(&l, &id, 0, Side::Right).unwrap());
        assert!(pseudo_automorphism_check(&l, &id, 0, Side::Left).unwrap());
        for f in automorphisms(&l) {
            assert!(pseudo_automorphism_check(&l, &f, 0, Side::Right).unwrap());
        }
        assert_eq!(pseudo_automorphism_check(&l, &id, 1, Side::Left), Err(IsotopyError::CNotLeftNonsingular(1)));
    }

    #[test]
    fn pseudo_automorphism_iff_autotopy() {
        let l = znb(4, &[1, 3]);
        for eta in permutations(4) {
            for c in 0..4 {
                let right = pseudo_automorphism_check(&l, &eta, c, Side::Right).unwrap();
                assert_eq!(right, right_pseudo_autotopy(&l, &eta, c).unwrap().verify(&l, &l));
                if l.is_left_nonsingular(c) {
                    let left = pseudo_automorphism_check(&l, &eta, c, Side::Left).unwrap();
                    assert_eq!(left, left_pseudo_autotopy(&l, &eta, c).unwrap().verify(&l, &l));
                }
            }
        }
    }
}
