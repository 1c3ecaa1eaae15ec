//! Fractional-part power sums `sum over p^alpha <= x of p^ell * {x/p^alpha}^j`.
//!
//! These are the empirical side of the `a(j, h, ell, alpha)` expansion
//! coefficients: dividing by `x^((ell+1)/alpha) / log x` should converge to
//! `a(j, 0, ell, alpha)` as `x` grows.

use crate::guards::{check_x_identity, EngineError};
use addsum_core::accum::{BigAccumulator, SumValue};
use addsum_core::parallel::map_reduce_in_order;
use addsum_core::sieve::Segmenter;
use addsum_core::{Hp, Real};
use num_integer::Roots;

/// `sum over p <= x^(1/alpha) of p^ell * {x/p^alpha}^j`, with each
/// fractional part computed exactly as `(x mod p^alpha) / p^alpha` before
/// the single rounding of the division.
///
/// The empty power convention `{..}^0 = 1` (even when the fractional part
/// is zero) makes `j = 0` reduce to `sum of p^ell` over the same range.
/// Compensated summation, folded in segment order, keeps the result
/// bitwise independent of the thread count.
pub fn frac_power_sum(
    x: u64,
    j: u32,
    ell: u32,
    alpha: u32,
    threads: usize,
) -> Result<Hp, EngineError> {
    check_x_identity(x)?;
    if alpha < 1 {
        return Err(EngineError::Invalid("alpha must be at least 1".into()));
    }
    let root = if alpha == 1 { x } else { x.nth_root(alpha) };
    let seg = Segmenter::new(root);
    let acc = map_reduce_in_order(
        seg.num_segments(),
        threads,
        |i| {
            let mut primes = Vec::new();
            seg.primes_in_segment(i, &mut primes);
            let mut local = BigAccumulator::compensated();
            for &p in &primes {
                let mut pa: u64 = 1;
                let mut ok = true;
                for _ in 0..alpha {
                    match pa.checked_mul(p) {
                        Some(v) if v <= x => pa = v,
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let frac = Hp::from_u64(x % pa) / Hp::from_u64(pa);
                let term = Hp::from_u64(p).powi(ell as i64) * frac.powi(j as i64);
                local.add_real(term);
            }
            local
        },
        BigAccumulator::compensated(),
        |mut acc, part| {
            acc.merge(part);
            acc
        },
    );
    match acc.value() {
        SumValue::Real(v) => Ok(v),
        SumValue::Int(_) => unreachable!("compensated accumulator yields a real"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use addsum_core::sieve::simple_primes;

    fn assert_close(a: Hp, b: Hp, tol: f64) {
        let d = (a - b).abs();
        assert!(d.to_f64() < tol, "difference {} for {a} vs {b}", d.to_f64());
    }

    #[test]
    fn matches_direct_f64_loop() {
        // Independent f64 evaluation; agreement well inside f64 roundoff.
        let x = 10_000u64;
        let direct: f64 = simple_primes(x)
            .iter()
            .map(|&p| ((x % p) as f64) / (p as f64))
            .sum();
        let hp = frac_power_sum(x, 1, 0, 1, 1).unwrap();
        assert!((hp.to_f64() - direct).abs() < 1e-9);
    }

    #[test]
    fn alpha_two_uses_prime_squares() {
        let x = 5_000u64;
        let direct: f64 = simple_primes(x.sqrt())
            .iter()
            .map(|&p| {
                let q = p * p;
                let f = ((x % q) as f64) / (q as f64);
                (p as f64) * f * f
            })
            .sum();
        let hp = frac_power_sum(x, 2, 1, 2, 1).unwrap();
        assert!((hp.to_f64() - direct).abs() < 1e-9);
    }

    #[test]
    fn j_zero_reduces_to_prime_power_weight_sum() {
        // {..}^0 = 1, so j = 0 gives sum of p^ell over p <= x^(1/alpha).
        let expect: u64 = simple_primes(100).iter().map(|&p| p * p).sum();
        let got = frac_power_sum(10_000, 0, 2, 2, 1).unwrap();
        assert_close(got, Hp::from_u64(expect), 1e-30);
    }

    #[test]
    fn thread_count_is_bitwise_invariant() {
        let a = frac_power_sum(9_000_000, 1, 0, 1, 1).unwrap();
        let b = frac_power_sum(9_000_000, 1, 0, 1, 5).unwrap();
        assert!(a == b, "thread-dependent result: {a} vs {b}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(frac_power_sum(100, 1, 0, 0, 1).is_err());
        assert!(frac_power_sum(0, 1, 0, 1, 1).is_err());
    }
}
