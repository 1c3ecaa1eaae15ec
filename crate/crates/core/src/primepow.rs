//! Enumeration of prime powers `p^alpha <= x`.

use crate::sieve::simple_primes;
use num_integer::Roots;

/// One prime power `value = p^alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub alpha: u32,
    pub value: u64,
}

/// All prime powers `p^alpha <= x` with `alpha >= min_alpha`, sorted by
/// `value`.
///
/// The intended use is `min_alpha >= 2`: the list then has only
/// O(sqrt(x)) entries because every base satisfies `p <= sqrt(x)`. With
/// `min_alpha = 1` the result contains every prime up to `x` and memory
/// grows accordingly; higher-power callers should split off the `alpha = 1`
/// stratum and stream it from the sieve instead.
pub fn prime_powers_up_to(x: u64, min_alpha: u32) -> Vec<PrimePower> {
    assert!(min_alpha >= 1, "min_alpha must be at least 1");
    let mut out = Vec::new();
    if x < 2 {
        return out;
    }
    let base_limit = if min_alpha == 1 { x } else { x.nth_root(min_alpha) };
    for p in simple_primes(base_limit) {
        // Walk p^alpha upward from alpha = min_alpha, stopping on overflow
        // or when the value exceeds x.
        let mut value: u64 = 1;
        let mut ok = true;
        for _ in 0..min_alpha {
            match value.checked_mul(p) {
                Some(v) if v <= x => value = v,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut alpha = min_alpha;
        loop {
            out.push(PrimePower { p, alpha, value });
            match value.checked_mul(p) {
                Some(v) if v <= x => {
                    value = v;
                    alpha += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_by_key(|pp| pp.value);
    out
}
