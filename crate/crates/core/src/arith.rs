//! Small-integer number theory.

use num_integer::Integer;

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Euler's totient.
pub fn phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

/// Sorted divisors.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `a⁻¹ mod p`, for `a` coprime to `p`.
pub fn mod_inverse(a: usize, p: usize) -> Option<usize> {
    let e = (a as i64).extended_gcd(&(p as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(p as i64) as usize)
}
