//! Numerical re-verification of the defining class identities.

use crate::spec::AdditiveFunctionSpec;
use addsum_core::sieve::simple_primes;
use num_bigint::BigInt;
use num_traits::Zero;

/// Outcome of checking a spec against its own class equations.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub ok: bool,
    /// Human-readable description of every violated identity.
    pub violations: Vec<String>,
    /// Number of `(p, alpha)` pairs checked.
    pub checked: usize,
}

/// Re-checks, over all primes `p <= p_max` and exponents
/// `1 <= alpha <= alpha_max`, that a spec really satisfies its claimed
/// class equations. The *definition route* (`direct_prime_power`, the
/// textbook closed form of the builtin) is the oracle; the class data
/// `(r, s, ell, lambda1, lambda2, g, c0)` is what gets tested:
///
/// 1. `f(1) = 0` (additivity),
/// 2. `f(p) = lambda1 * p^r`,
/// 3. `f(p^alpha) - f(p^(alpha-1)) = lambda2 * p^s * g(alpha)`,
/// 4. `|g(alpha)| <= c0 * alpha^ell` (with `g = 0` required when
///    `ell < 0`),
/// 5. the parametrized evaluator reproduces the definition route.
///
/// A mis-entered parameter row — wrong weight, wrong exponent, too small a
/// growth constant — shows up as a reported violation.
pub fn verify_class_membership(
    spec: &AdditiveFunctionSpec,
    p_max: u64,
    alpha_max: u32,
) -> MembershipReport {
    let mut violations = Vec::new();
    let mut checked = 0usize;

    if spec.eval_additive(1) != BigInt::zero() {
        violations.push("f(1) != 0".to_string());
    }

    let params = &spec.params;
    for p in simple_primes(p_max) {
        // Prime stratum: the definition must match lambda1 * p^r.
        let f_p = spec.direct_prime_power(p, 1);
        let expect = params.lambda1 * BigInt::from(p).pow(params.r);
        checked += 1;
        if f_p != expect {
            violations.push(format!("f({p}) = {f_p}, expected lambda1*p^r = {expect}"));
        }
        for alpha in 2..=alpha_max {
            checked += 1;
            // Increment stratum: definition-route increments against
            // lambda2 * p^s * g(alpha).
            let inc =
                spec.direct_prime_power(p, alpha) - spec.direct_prime_power(p, alpha - 1);
            let g = spec.g_value(alpha);
            let expect = params.lambda2 * BigInt::from(g) * BigInt::from(p).pow(params.s);
            if inc != expect {
                violations.push(format!(
                    "f({p}^{alpha}) - f({p}^{}) = {inc}, expected lambda2*p^s*g = {expect}",
                    alpha - 1
                ));
            }
            // Route consistency: the parametrized evaluator is what the
            // summation engine uses; it must agree with the definition.
            let via_params = spec.eval_prime_power(p, alpha);
            let via_def = spec.direct_prime_power(p, alpha);
            if via_params != via_def {
                violations.push(format!(
                    "parametrized f({p}^{alpha}) = {via_params} differs from definition {via_def}"
                ));
            }
        }
    }

    // Growth bound on g, independent of p.
    for alpha in 2..=alpha_max {
        let g = spec.g_value(alpha) as f64;
        if params.ell < 0 {
            // Convention: negative ell encodes g identically zero.
            if g != 0.0 {
                violations.push(format!("g({alpha}) = {g} but ell < 0 demands g = 0"));
            }
            continue;
        }
        let bound = params.c0 * (alpha as f64).powi(params.ell);
        if g.abs() > bound {
            violations.push(format!(
                "|g({alpha})| = {} exceeds c0*alpha^ell = {bound}",
                g.abs()
            ));
        }
    }

    MembershipReport { ok: violations.is_empty(), violations, checked }
}
