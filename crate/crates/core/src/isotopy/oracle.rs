//! Exhaustive isotopy test that shares no code with the principal-isotope
//! search: enumerate `α` and `β(0)`, derive `γ`, then solve for `β`.

use super::IsotopyError;
use crate::right_loop::RightLoop;

pub const MAX_ORACLE_ORDER: usize = 7;

struct Oracle<'a> {
    src: &'a RightLoop,
    dst: &'a RightLoop,
    n: usize,
    beta0: usize,
    alpha: Vec<usize>,
    alpha_used: Vec<bool>,
    gamma_used: Vec<bool>,
    gamma: Vec<usize>,
    beta: Vec<usize>,
    beta_used: Vec<bool>,
}

impl Oracle<'_> {
    /// `γ(x) = γ(x∘0) = α(x) ∘′ β(0)` must be injective as `α` grows.
    fn extend_alpha(&mut self, k: usize) -> bool {
        if k == self.n {
            return self.extend_beta(0);
        }
        for v in 0..self.n {
            if self.alpha_used[v] {
                continue;
            }
            let g = self.dst.op(v, self.beta0);
            if self.gamma_used[g] {
                continue;
            }
            self.alpha[k] = v;
            self.gamma[k] = g;
            self.alpha_used[v] = true;
            self.gamma_used[g] = true;
            let found = self.extend_alpha(k + 1);
            self.alpha_used[v] = false;
            self.gamma_used[g] = false;
            if found {
                return true;
            }
        }
        false
    }

    /// `β(y)` ranges over `z` with `α(0) ∘′ z = γ(y)`; every column `y` is
    /// checked against all `x` once chosen.
    fn extend_beta(&mut self, y: usize) -> bool {
        if y == self.n {
            return true;
        }
        for z in 0..self.n {
            if self.beta_used[z] || (y == 0 && z != self.beta0) {
                continue;
            }
            if self.dst.op(self.alpha[0], z) != self.gamma[y] {
                continue;
            }
            let column_ok =
                (0..self.n).all(|x| self.dst.op(self.alpha[x], z) == self.gamma[self.src.op(x, y)]);
            if !column_ok {
                continue;
            }
            self.beta[y] = z;
            self.beta_used[z] = true;
            let found = self.extend_beta(y + 1);
            self.beta_used[z] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// Whether bijections `α, β, γ` with `α(x) ∘′ β(y) = γ(x ∘ y)` exist.
pub fn brute_force_isotopy_oracle(l1: &RightLoop, l2: &RightLoop) -> Result<bool, IsotopyError> {
    let n = l1.order();
    for order in [n, l2.order()] {
        if order > MAX_ORACLE_ORDER {
            return Err(IsotopyError::OrderTooLargeForOracle { order, limit: MAX_ORACLE_ORDER });
        }
    }
    if l2.order() != n {
        return Ok(false);
    }
    let mut o = Oracle {
        src: l1,
        dst: l2,
        n,
        beta0: 0,
        alpha: vec![0; n],
        alpha_used: vec![false; n],
        gamma_used: vec![false; n],
        gamma: vec![0; n],
        beta: vec![0; n],
        beta_used: vec![false; n],
    };
    for beta0 in 0..n {
        o.beta0 = beta0;
        if o.extend_alpha(0) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn znb(n: usize, b: &[usize]) -> RightLoop {
        let rows = (0..n)
            .map(|x| (0..n).map(|y| if b.contains(&y) { (y + n - x) % n } else { (x + y) % n }).collect())
            .collect();
        RightLoop::validate(rows).unwrap()
    }

    #[test]
    fn reflexive_and_separating() {
        let a = znb(5, &[1]);
        assert!(brute_force_isotopy_oracle(&a, &a).unwrap());
        assert!(!brute_force_isotopy_oracle(&a, &znb(5, &[])).unwrap());
        assert!(brute_force_isotopy_oracle(&a, &znb(5, &[1, 2, 3, 4])).unwrap());
        assert!(!brute_force_isotopy_oracle(&a, &znb(5, &[1, 2])).unwrap());
    }

    #[test]
    fn refuses_large_orders() {
        let a = znb(8, &[]);
        assert_eq!(
            brute_force_isotopy_oracle(&a, &a),
            Err(IsotopyError::OrderTooLargeForOracle { order: 8, limit: MAX_ORACLE_ORDER })
        );
    }
}
