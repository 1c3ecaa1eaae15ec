//! Möbius function table, sieved over a full interval.

use crate::sieve::simple_primes;

/// Values `mu(1), ..., mu(x)` as a table indexed by `n` (index 0 is unused
/// and set to 0).
///
/// Sieve: start from all 1, flip the sign once for every prime divisor,
/// zero out multiples of squares. Memory is O(x); callers use this either
/// for small reference computations or for the handful of indices needed by
/// Möbius-accelerated series, so no size guard is imposed here.
pub fn mobius_up_to(x: u64) -> Vec<i8> {
    let n = x as usize;
    let mut mu = vec![1i8; n + 1];
    mu[0] = 0;
    for p in simple_primes(x) {
        let p = p as usize;
        let mut m = p;
        while m <= n {
            mu[m] = -mu[m];
            m += p;
        }
        let p2 = match p.checked_mul(p) {
            Some(v) if v <= n => v,
            _ => continue,
        };
        let mut m = p2;
        while m <= n {
            mu[m] = 0;
            m += p2;
        }
    }
    mu
}
