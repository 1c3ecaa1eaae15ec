//! Exact evaluation of `sum over n_1..n_k <= x of f(lcm(n_1..n_k))` via
//! inclusion–exclusion over gcd sums.
//!
//! For additive f with f supported on prime powers,
//! `f(lcm) = sum over nonempty S of (-1)^(|S|+1) f(gcd of S)` pointwise
//! (max–min inclusion–exclusion on each prime exponent), so
//!
//! ```text
//! sum f(lcm) = sum_{j=1}^{k} (-1)^(j-1) C(k,j) floor(x)^(k-j) * Sgcd(x, j)
//! ```
//!
//! where `Sgcd(x, j)` is the exact gcd sum over j-tuples.

use crate::gcd_sum::gcd_value_identity;
use crate::guards::{check_k, check_x_identity, EngineError};
use crate::result::{ExactSumResult, Method, Quantity};
use addsum_catalog::AdditiveFunctionSpec;
use addsum_core::accum::SumValue;
use addsum_core::bigmath::binomial;
use addsum_core::parallel::num_threads;
use num_bigint::BigInt;
use num_traits::Zero;
use std::time::Instant;

/// Raw inclusion–exclusion value, shared with tests.
pub(crate) fn lcm_value_identity(
    spec: &AdditiveFunctionSpec,
    x: u64,
    k: u32,
    threads: usize,
) -> Result<BigInt, EngineError> {
    check_x_identity(x)?;
    check_k(k)?;
    let mut total = BigInt::zero();
    for j in 1..=k {
        let gcd_j = gcd_value_identity(spec, x, j, threads)?;
        let term = binomial(k as u64, j as u64) * BigInt::from(x).pow(k - j) * gcd_j;
        if j % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Exact lcm sum over k-tuples, via k gcd-identity evaluations.
pub fn sum_lcm_exact(
    spec: &AdditiveFunctionSpec,
    x: u64,
    k: u32,
    threads: Option<usize>,
) -> Result<ExactSumResult, EngineError> {
    let threads = num_threads(threads);
    let start = Instant::now();
    let value = lcm_value_identity(spec, x, k, threads)?;
    Ok(ExactSumResult {
        function: spec.name.clone(),
        quantity: Quantity::Lcm,
        method: Method::Identity,
        x,
        k,
        value: SumValue::Int(value),
        threads,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use addsum_catalog::builtins;

    fn int_value(r: &ExactSumResult) -> BigInt {
        match &r.value {
            SumValue::Int(v) => v.clone(),
            other => panic!("expected an integer value, got {other:?}"),
        }
    }

    #[test]
    fn k1_lcm_equals_k1_gcd() {
        // For k = 1 both quantities are just sum f(n).
        let spec = builtins::a_classic();
        let lcm = sum_lcm_exact(&spec, 400, 1, Some(1)).unwrap();
        let gcd = crate::gcd_sum::sum_gcd_exact(&spec, 400, 1, Some(1)).unwrap();
        assert_eq!(int_value(&lcm), int_value(&gcd));
    }

    #[test]
    fn omega_pairs_hand_value() {
        // sum over pairs (a,b) <= 4 of omega(lcm(a,b)); lcm table:
        // omega(lcm) matrix over {1..4}^2 = rows
        // [0,1,1,1],[1,1,2,1],[1,2,1,2],[1,1,2,1] summing to 19.
        let spec = builtins::omega_m(1);
        let r = sum_lcm_exact(&spec, 4, 2, Some(1)).unwrap();
        assert_eq!(int_value(&r), BigInt::from(19u8));
    }

    #[test]
    fn guards_reject_oversize() {
        let spec = builtins::a_classic();
        assert!(sum_lcm_exact(&spec, 2_000_000_000, 2, None).is_err());
        assert!(sum_lcm_exact(&spec, 100, 0, None).is_err());
    }
}
