//! Alternating binomial sums of zeta values and their truncated
//! tuple-sum counterparts.
//!
//! The limit object
//! `Xi(k, m, l) = sum_{n_1..n_k >= 1} min_i(n_i^{-m}) max_i(n_i)^l`
//! collapses, after grouping tuples by their maximum, to
//! `sum_{j=0}^{k-1} (-1)^{k-1-j} C(k,j) zeta(m - l - j)`. The truncated
//! form keeps the elementary shape `sum_{v<=L} v^{l-m} (v^k - (v-1)^k)`,
//! so the two can be compared at finite cutoffs with the expected
//! `L^{k+l-m}` convergence rate.

use addsum_core::bigmath::{big_to_hp, binomial};
use addsum_core::{Hp, Real};

use crate::value::{ConstError, ConstantValue};
use crate::zeta::ZetaEngine;

/// `sum_{j=0}^{k-1} (-1)^{k-1-j} C(k,j) zeta(t - j)`.
///
/// Every argument must stay clear of the pole: the smallest one is
/// `t - (k-1)` and the contract requires it to be `>= 3/2`.
pub fn zeta_alt_sum(ze: &ZetaEngine, k: u32, t: f64) -> Result<ConstantValue, ConstError> {
    if k == 0 {
        return Err(ConstError::Domain("alternating zeta sum needs k >= 1".into()));
    }
    let smallest = t - (k as f64 - 1.0);
    if smallest < 1.5 {
        return Err(ConstError::Domain(format!(
            "alternating zeta sum needs t - (k-1) >= 3/2, got {smallest}"
        )));
    }
    let mut value = Hp::ZERO;
    let mut err = 0f64;
    for j in 0..k {
        let z = ze.zeta(t - j as f64)?;
        let c = big_to_hp(&binomial(k as u64, j as u64));
        let term = c * z.value;
        // sign (-1)^{k-1-j}
        value = if (k - 1 - j) % 2 == 0 { value + term } else { value - term };
        err += c.to_f64() * z.err_bound;
    }
    Ok(ConstantValue {
        value,
        err_bound: err + value.abs().to_f64() * 1e-66,
        method: "alternating-zeta-sum",
    })
}

/// The truncated tuple sum `sum_{v=1}^{L} v^{l-m} (v^k - (v-1)^k)`.
///
/// `v^k - (v-1)^k` counts the k-tuples with maximum exactly `v`, and each
/// such tuple contributes `v^{l-m}`. The powers are integer-valued, and
/// the guard keeps `v^k` below 2^237 so they stay exact in octuple
/// precision; the only rounding is one multiply and one add per term.
///
/// The recorded error bound is the distance to the limit object:
/// `v^k - (v-1)^k <= k v^{k-1}` turns the tail into a power sum dominated
/// by `k/(m-l-k) * L^{k+l-m}`.
pub fn xi_truncated(k: u32, m: i64, ell: i64, limit: u64) -> Result<ConstantValue, ConstError> {
    if k == 0 || limit == 0 {
        return Err(ConstError::Domain("xi needs k >= 1 and a positive cutoff".into()));
    }
    if m - ell - (k as i64) < 1 {
        return Err(ConstError::Domain(format!(
            "xi needs m - l - k >= 1 for convergence, got m = {m}, l = {ell}, k = {k}"
        )));
    }
    if k as f64 * (limit as f64).log2() > 236.0 {
        return Err(ConstError::Domain(format!(
            "v^k exceeds exact octuple range at v = {limit}, k = {k}"
        )));
    }
    let mut acc = Hp::ZERO;
    let mut pow_prev = Hp::ZERO; // (v-1)^k
    for v in 1..=limit {
        let pow_v = Hp::from_u64(v).powi(k as i64);
        let term = (pow_v - pow_prev) * Hp::from_u64(v).powi(ell - m);
        acc = acc + term;
        pow_prev = pow_v;
    }
    let tail = k as f64 / (m - ell - k as i64) as f64
        * (limit as f64).powi((k as i64 + ell - m) as i32);
    Ok(ConstantValue {
        value: acc,
        err_bound: tail + acc.abs().to_f64() * 1e-66,
        method: "tuple-max-truncation",
    })
}
