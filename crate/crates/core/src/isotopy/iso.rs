//! Isomorphism search between right loops: backtracking over partial maps,
//! with every new assignment propagated through products and right quotients
//! of already-mapped elements.

use std::ops::ControlFlow;

use crate::right_loop::RightLoop;

const UNSET: usize = usize::MAX;

/// Per-element invariants preserved by any isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct ElementSignature {
    left_nonsingular: bool,
    row_image_size: usize,
    right_cycle_type: Vec<(usize, usize)>,
    square_is_identity: bool,
    idempotent: bool,
}

pub(crate) fn element_signatures(l: &RightLoop) -> Vec<ElementSignature> {
    let n = l.order();
    (0..n)
        .map(|x| {
            let mut seen = vec![false; n];
            for &v in l.row(x) {
                seen[v] = true;
            }
            let row_image_size = seen.iter().filter(|&&s| s).count();
            ElementSignature {
                left_nonsingular: row_image_size == n,
                row_image_size,
                right_cycle_type: l.right_translation(x).cycle_type(),
                square_is_identity: l.op(x, x) == 0,
                idempotent: l.op(x, x) == x,
            }
        })
        .collect()
}

/// Sorted multiset of element signatures; equal for isomorphic loops.
pub(crate) fn signature_profile(l: &RightLoop) -> Vec<ElementSignature> {
    let mut s = element_signatures(l);
    s.sort();
    s
}

/// `x` with `x∘y = z`, as `table[z * n + y]`.
fn right_division(l: &RightLoop) -> Vec<usize> {
    let n = l.order();
    let mut d = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            d[l.op(x, y) * n + y] = x;
        }
    }
    d
}

struct Search<'a> {
    src: &'a RightLoop,
    dst: &'a RightLoop,
    src_div: Vec<usize>,
    dst_div: Vec<usize>,
    src_sig: Vec<usize>,
    dst_sig: Vec<usize>,
    map: Vec<usize>,
    inv: Vec<usize>,
    mapped: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(src: &'a RightLoop, dst: &'a RightLoop) -> Option<Self> {
        let n = src.order();
        if n != dst.order() {
            return None;
        }
        let s1 = element_signatures(src);
        let s2 = element_signatures(dst);
        let mut sorted1 = s1.clone();
        let mut sorted2 = s2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
        sorted1.dedup();
        let class = |s: &ElementSignature| sorted1.binary_search(s).expect("present");
        Some(Search {
            src,
            dst,
            src_div: right_division(src),
            dst_div: right_division(dst),
            src_sig: s1.iter().map(class).collect(),
            dst_sig: s2.iter().map(class).collect(),
            map: vec![UNSET; n],
            inv: vec![UNSET; n],
            mapped: Vec::with_capacity(n),
        })
    }

    /// Assigns `x ↦ y` and everything it forces; on conflict returns false
    /// and leaves the partial assignments for the caller to undo.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let n = self.src.order();
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            if self.map[a] != UNSET {
                if self.map[a] != b {
                    return false;
                }
                continue;
            }
            if self.inv[b] != UNSET || self.src_sig[a] != self.dst_sig[b] {
                return false;
            }
            self.map[a] = b;
            self.inv[b] = a;
            self.mapped.push(a);
            for k in 0..self.mapped.len() {
                let c = self.mapped[k];
                let fc = self.map[c];
                queue.push((self.src.op(a, c), self.dst.op(b, fc)));
                queue.push((self.src.op(c, a), self.dst.op(fc, b)));
                // right quotients: (a / c) and (c / a)
                queue.push((self.src_div[a * n + c], self.dst_div[b * n + fc]));
                queue.push((self.src_div[c * n + a], self.dst_div[fc * n + b]));
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.mapped.len() > len {
            let a = self.mapped.pop().expect("nonempty");
            self.inv[self.map[a]] = UNSET;
            self.map[a] = UNSET;
        }
    }

    fn run<F: FnMut(&[usize]) -> ControlFlow<()>>(&mut self, emit: &mut F) -> ControlFlow<()> {
        let n = self.src.order();
        if self.mapped.len() == n {
            return if verify_isomorphism(self.src, self.dst, &self.map) { emit(&self.map) } else { ControlFlow::Continue(()) };
        }
        // most constrained unmapped element: fewest free targets with its signature
        let x = (0..n)
            .filter(|&x| self.map[x] == UNSET)
            .min_by_key(|&x| (0..n).filter(|&y| self.inv[y] == UNSET && self.dst_sig[y] == self.src_sig[x]).count())
            .expect("some element unmapped");
        let candidates: Vec<usize> = (0..n).filter(|&y| self.inv[y] == UNSET && self.dst_sig[y] == self.src_sig[x]).collect();
        for y in candidates {
            let mark = self.mapped.len();
            if self.assign(x, y) {
                self.run(emit)?;
            }
            self.undo_to(mark);
        }
        ControlFlow::Continue(())
    }
}

/// Checks `f(x∘y) = f(x)∘′f(y)` for all pairs and that `f` is a bijection.
pub fn verify_isomorphism(src: &RightLoop, dst: &RightLoop, f: &[usize]) -> bool {
    let n = src.order();
    if dst.order() != n || f.len() != n || crate::perm::Perm::from_images(f.to_vec()).is_none() {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| f[src.op(x, y)] == dst.op(f[x], f[y])))
}

/// An isomorphism `src → dst`, if one exists.
pub fn are_isomorphic(src: &RightLoop, dst: &RightLoop) -> Option<Vec<usize>> {
    let mut search = Search::new(src, dst)?;
    if !search.assign(0, 0) {
        return None;
    }
    let mut found = None;
    let _ = search.run(&mut |f| {
        found = Some(f.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Every isomorphism `src → dst`.
pub fn all_isomorphisms(src: &RightLoop, dst: &RightLoop) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let Some(mut search) = Search::new(src, dst) else { return out };
    if !search.assign(0, 0) {
        return out;
    }
    let _ = search.run(&mut |f| {
        out.push(f.to_vec());
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

pub fn automorphisms(l: &RightLoop) -> Vec<Vec<usize>> {
    all_isomorphisms(l, l)
}

/// Automorphisms act transitively on the non-identity elements.
pub fn has_transitive_automorphism_group(l: &RightLoop) -> bool {
    let n = l.order();
    if n <= 2 {
        return true;
    }
    let auts = automorphisms(l);
    let mut reached = vec![false; n];
    for f in &auts {
        reached[f[1]] = true;
    }
    (1..n).all(|x| reached[x])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_named_group, GroupDescriptor};

    fn group_loop(d: &str) -> RightLoop {
        RightLoop::from_group(&build_named_group(&d.parse::<GroupDescriptor>().unwrap()).unwrap())
    }

    /// Brute force over all bijections fixing 0.
    fn brute_count(a: &RightLoop, b: &RightLoop) -> usize {
        let n = a.order();
        let mut count = 0;
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(k: usize, perm: &mut Vec<usize>, a: &RightLoop, b: &RightLoop, count: &mut usize) {
            if k == perm.len() {
                if verify_isomorphism(a, b, perm) {
                    *count += 1;
                }
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                rec(k + 1, perm, a, b, count);
                perm.swap(k, i);
            }
        }
        rec(1, &mut perm, a, b, &mut count);
        count
    }

    #[test]
    fn identity_is_found_for_equal_loops() {
        let l = group_loop("sym:3");
        let f = are_isomorphic(&l, &l).unwrap();
        assert!(verify_isomorphism(&l, &l, &f));
    }

    #[test]
    fn automorphism_counts_match_brute_force() {
        for d in ["cyclic:5", "cyclic:6", "dihedral:3", "dihedral:4", "cyclic:8", "dihedral:2"] {
            let l = group_loop(d);
            assert_eq!(automorphisms(&l).len(), brute_count(&l, &l), "{d}");
        }
    }

    #[test]
    fn dihedral3_is_sym3_but_not_cyclic6() {
        let d6 = group_loop("dihedral:3");
        assert!(are_isomorphic(&d6, &group_loop("sym:3")).is_some());
        assert!(are_isomorphic(&d6, &group_loop("cyclic:6")).is_none());
        assert!(are_isomorphic(&group_loop("cyclic:4"), &group_loop("dihedral:2")).is_none());
    }

    #[test]
    fn transitive_automorphisms() {
        assert!(has_transitive_automorphism_group(&group_loop("cyclic:5")));
        assert!(!has_transitive_automorphism_group(&group_loop("cyclic:4")));
        assert!(has_transitive_automorphism_group(&group_loop("dihedral:2")));
    }
}
