//! The two transformation identities that convert weighted floor-power
//! sums over a top range of primes into nested truncated sums, verified
//! here as *exact* integer identities.
//!
//! Case 1 (for `r >= 1`, `k <= r`, `x > e`):
//!
//! ```text
//! sum_{x/log x < p <= x} p^r floor(x/p)^k
//!   = sum_{n_1 < log x} ... sum_{n_k < log x} sum_{x/log x < p <= M x} p^r
//! ```
//!
//! with `M = min(1/n_1, .., 1/n_k)`. Case 2 (for `s >= 1`, `k <= s/2`,
//! `x > e`) does the same for the prime-square range
//! `sqrt(x)/log x < p <= sqrt(x)` with weights `g(alpha)` and floors
//! `floor(x/p^alpha)^k`, truncating `alpha` at
//! `N = floor(log x / log(sqrt(x)/log x))` and each `n_i` at
//! `x^(1 - alpha/2) (log x)^alpha`.
//!
//! Both sides are computed along genuinely different routes — the left by
//! per-prime floors, the right by tuple-max counting against prefix sums —
//! so `lhs == rhs` exercises every boundary reduction (strict vs weak
//! inequalities, real thresholds vs integer cutoffs) rather than an
//! algebraic rearrangement of one loop.

use crate::guards::{check_k, check_x_identity, EngineError};
use addsum_catalog::GForm;
use addsum_core::sieve::Segmenter;
use addsum_core::{Hp, Real};
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;

/// Both sides of a transformation identity. They are equal whenever the
/// hypotheses hold; callers assert `holds()`.
#[derive(Debug, Clone)]
pub struct TransformSides {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl TransformSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Largest integer strictly below `log x`; `log x` is irrational for
/// integer `x >= 2`, so this equals `floor(log x)`.
fn floor_ln(x: u64) -> u64 {
    Hp::from_u64(x).ln().floor().to_f64() as u64
}

fn primes_between(lo_exclusive: u64, hi_inclusive: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if hi_inclusive <= lo_exclusive {
        return out;
    }
    let seg = Segmenter::new(hi_inclusive);
    let mut buf = Vec::new();
    for i in 0..seg.num_segments() {
        let (_, seg_hi) = seg.segment_bounds(i);
        if seg_hi <= lo_exclusive {
            continue;
        }
        buf.clear();
        seg.primes_in_segment(i, &mut buf);
        out.extend(buf.iter().copied().filter(|&p| p > lo_exclusive));
    }
    out
}

/// Case 1 of the transformation, both sides exactly.
pub fn transform_case1(x: u64, k: u32, r: u32) -> Result<TransformSides, EngineError> {
    check_x_identity(x)?;
    check_k(k)?;
    if x < 3 {
        return Err(EngineError::Invalid("case 1 requires x > e".into()));
    }
    if r < 1 || k > r {
        return Err(EngineError::Invalid(format!(
            "case 1 requires 1 <= k <= r, got k={k} r={r}"
        )));
    }
    let ln = Hp::from_u64(x).ln();
    // p > x / log x  <=>  p >= t + 1 with t = floor(x / log x), because
    // x / log x is never an integer.
    let t = (Hp::from_u64(x) / ln).floor().to_f64() as u64;
    let cap = floor_ln(x); // n_i ranges over 1..=cap

    let primes = primes_between(t, x);
    let mut lhs = BigInt::zero();
    for &p in &primes {
        lhs += BigInt::from(p).pow(r) * BigInt::from(x / p).pow(k);
    }

    // Right side: group the k-tuples (n_1..n_k) by v = max n_i; there are
    // v^k - (v-1)^k of them, and each contributes the prefix sum
    // S(v) = sum of p^r over t < p <= floor(x/v). Prefix sums are taken in
    // one ascending pass over the same prime list.
    let mut cutoffs: Vec<u64> = (1..=cap).map(|v| x / v).collect();
    let mut frozen: Vec<Option<BigInt>> = vec![None; cap as usize + 1];
    let mut running = BigInt::zero();
    {
        // Cutoffs are decreasing in v; walk them from the smallest.
        let mut order: Vec<usize> = (1..=cap as usize).collect();
        order.sort_by_key(|&v| cutoffs[v - 1]);
        let mut oi = 0usize;
        for &p in &primes {
            while oi < order.len() && cutoffs[order[oi] - 1] < p {
                frozen[order[oi]] = Some(running.clone());
                oi += 1;
            }
            running += BigInt::from(p).pow(r);
        }
        while oi < order.len() {
            frozen[order[oi]] = Some(running.clone());
            oi += 1;
        }
    }
    cutoffs.clear();
    let mut rhs = BigInt::zero();
    for v in 1..=cap {
        let count = BigInt::from(v).pow(k) - BigInt::from(v - 1).pow(k);
        let s_v = frozen[v as usize].take().expect("every cutoff is frozen");
        rhs += count * s_v;
    }
    Ok(TransformSides { lhs, rhs })
}

/// Case 2 of the transformation, both sides exactly, for an arbitrary
/// weight profile `g`.
pub fn transform_case2(
    x: u64,
    k: u32,
    s: u32,
    g: &GForm,
) -> Result<TransformSides, EngineError> {
    check_x_identity(x)?;
    check_k(k)?;
    if x < 3 {
        return Err(EngineError::Invalid("case 2 requires x > e".into()));
    }
    if s < 1 || 2 * k > s {
        return Err(EngineError::Invalid(format!(
            "case 2 requires 1 <= 2k <= s, got k={k} s={s}"
        )));
    }
    let xr = Hp::from_u64(x);
    let ln = xr.ln();
    let sqrt_x = xr.sqrt();

    // Primes with sqrt(x)/log x < p <= sqrt(x):  the upper bound is the
    // exact integer test p^2 <= x; the lower is p^2 (log x)^2 > x in
    // high precision (the threshold is transcendental, so the comparison
    // has enormous margin).
    let primes: Vec<u64> = primes_between(0, x.sqrt())
        .into_iter()
        .filter(|&p| Hp::from_u64(p * p) * ln * ln > xr)
        .collect();

    // LHS: per prime, alpha runs while p^alpha <= x.
    let mut lhs = BigInt::zero();
    for &p in &primes {
        let mut inner = BigInt::zero();
        let mut pa = p * p;
        let mut alpha = 2u32;
        loop {
            let gv = g.value(alpha);
            if gv != 0 {
                inner += BigInt::from(gv) * BigInt::from(x / pa).pow(k);
            }
            match pa.checked_mul(p) {
                Some(next) if next <= x => {
                    pa = next;
                    alpha += 1;
                }
                _ => break,
            }
        }
        lhs += BigInt::from(p).pow(s) * inner;
    }

    // RHS: alpha runs to N = floor(log x / log(sqrt(x)/log x)); for each
    // alpha the n_i are capped by x^(1-alpha/2) (log x)^alpha, and the
    // p-range cutoff for a tuple with max n_i = v is p^alpha <= floor(x/v).
    let n_trunc = {
        let den = (sqrt_x / ln).ln();
        (ln / den).floor().to_f64() as u32
    };
    // Prefix sums of p^s over the prime list.
    let prefix: Vec<BigInt> = {
        let mut acc = BigInt::zero();
        let mut v = Vec::with_capacity(primes.len() + 1);
        v.push(BigInt::zero());
        for &p in &primes {
            acc += BigInt::from(p).pow(s);
            v.push(acc.clone());
        }
        v
    };
    let mut rhs = BigInt::zero();
    for alpha in 2..=n_trunc {
        let gv = g.value(alpha);
        if gv == 0 {
            continue;
        }
        // x^(1 - alpha/2) (log x)^alpha, never an integer; n_i <= cap.
        let bound = xr / sqrt_x.powi(alpha as i64) * ln.powi(alpha as i64);
        if bound <= Hp::ONE {
            continue;
        }
        let cap = bound.floor().to_f64() as u64;
        let mut alpha_sum = BigInt::zero();
        for v in 1..=cap {
            let limit = x / v;
            // Number of primes in the list with p^alpha <= limit.
            let idx = primes.partition_point(|&p| {
                let mut pa: u64 = 1;
                for _ in 0..alpha {
                    match pa.checked_mul(p) {
                        Some(t) if t <= limit => pa = t,
                        _ => return false,
                    }
                }
                true
            });
            if idx == 0 {
                break; // cutoffs only shrink as v grows
            }
            let count = BigInt::from(v).pow(k) - BigInt::from(v - 1).pow(k);
            alpha_sum += count * &prefix[idx];
        }
        rhs += BigInt::from(gv) * alpha_sum;
    }
    Ok(TransformSides { lhs, rhs })
}
