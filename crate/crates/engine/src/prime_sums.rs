//! Weighted floor-power sums over primes and prime powers — the two terms
//! of the gcd identity — plus the plain prime-power-weight sum `pi_beta`.

use crate::guards::{check_k, check_x_identity, EngineError};
use addsum_catalog::AdditiveFunctionSpec;
use addsum_core::bigmath::floor_pow;
use addsum_core::parallel::map_reduce_in_order;
use addsum_core::primepow::prime_powers_up_to;
use addsum_core::sieve::Segmenter;
use num_bigint::BigInt;
use num_traits::Zero;

/// `sum over p <= x of p^beta * floor(x/p)^k`, exactly.
///
/// Within a sieve segment, consecutive primes sharing the same quotient
/// `q = floor(x/p)` are grouped: their `p^beta` values are accumulated in
/// `u128` (safe per segment for `beta <= 3`) and multiplied by `q^k` once.
/// For `p > sqrt(x)` runs are long, which turns ~pi(x) big-integer
/// multiplications into ~2 sqrt(x) of them.
pub fn weighted_prime_floor_sum(
    x: u64,
    k: u32,
    beta: u32,
    threads: usize,
) -> Result<BigInt, EngineError> {
    check_x_identity(x)?;
    check_k(k)?;
    let seg = Segmenter::new(x);
    let n_seg = seg.num_segments();
    let value = map_reduce_in_order(
        n_seg,
        threads,
        |i| {
            let mut primes = Vec::new();
            seg.primes_in_segment(i, &mut primes);
            segment_weighted_sum(x, k, beta, &primes)
        },
        BigInt::zero(),
        |acc, part| acc + part,
    );
    Ok(value)
}

fn segment_weighted_sum(x: u64, k: u32, beta: u32, primes: &[u64]) -> BigInt {
    let mut acc = BigInt::zero();
    if beta <= 3 {
        // Fast path: run sums of p^beta fit u128 for a whole segment
        // (<= 2^17 primes, each p^3 < 10^27, sum < 10^33).
        let mut i = 0usize;
        while i < primes.len() {
            let q = x / primes[i];
            let run_hi = x / q; // largest integer with the same quotient
            let mut run_sum: u128 = 0;
            while i < primes.len() && primes[i] <= run_hi {
                run_sum += (primes[i] as u128).pow(beta);
                i += 1;
            }
            acc += BigInt::from(run_sum) * BigInt::from(q).pow(k);
        }
    } else {
        for &p in primes {
            acc += BigInt::from(p).pow(beta) * floor_pow(x, p, k);
        }
    }
    acc
}

/// `sum over prime powers p^alpha <= x, alpha >= 2, of
/// (f(p^alpha) - f(p^(alpha-1))) * floor(x/p^alpha)^k` — the second term
/// of the gcd identity, with the increments taken from the spec's class
/// data (`lambda2 * g(alpha) * p^s`).
///
/// Only O(sqrt(x)) prime powers exist, so this term is computed serially.
pub fn weighted_primepower_floor_sum(
    x: u64,
    k: u32,
    spec: &AdditiveFunctionSpec,
) -> Result<BigInt, EngineError> {
    check_x_identity(x)?;
    check_k(k)?;
    let mut acc = BigInt::zero();
    if spec.params.lambda2 == 0 {
        return Ok(acc);
    }
    for pp in prime_powers_up_to(x, 2) {
        let g = spec.g_value(pp.alpha);
        if g == 0 {
            continue;
        }
        let delta =
            BigInt::from(g) * spec.params.lambda2 * BigInt::from(pp.p).pow(spec.params.s);
        acc += delta * floor_pow(x, pp.value, k);
    }
    Ok(acc)
}

/// `pi_beta(x) = sum over p <= x of p^beta`, exactly.
pub fn pi_beta(x: u64, beta: u32, threads: usize) -> BigInt {
    let seg = Segmenter::new(x);
    map_reduce_in_order(
        seg.num_segments(),
        threads,
        |i| {
            let mut primes = Vec::new();
            seg.primes_in_segment(i, &mut primes);
            if beta <= 3 {
                let s: u128 = primes.iter().map(|&p| (p as u128).pow(beta)).sum();
                BigInt::from(s)
            } else {
                primes.iter().map(|&p| BigInt::from(p).pow(beta)).sum()
            }
        },
        BigInt::zero(),
        |acc, part| acc + part,
    )
}
