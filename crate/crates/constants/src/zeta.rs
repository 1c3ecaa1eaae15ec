//! Riemann zeta for real argument `t > 1` by Euler–Maclaurin summation in
//! octuple precision.
//!
//! With base point `N` and `J` correction terms,
//!
//! ```text
//! zeta(t) = sum_{n<N} n^-t + N^(1-t)/(t-1) + N^-t/2
//!         + sum_{j=1}^{J} B_2j/(2j)! * t(t+1)..(t+2j-2) * N^(1-t-2j)
//! ```
//!
//! and for real `t > 0` the truncation error is bounded by the magnitude
//! of the first omitted correction term, which the engine reports.

use crate::bernoulli::bernoulli_numbers;
use crate::value::{ConstError, ConstantValue};
use addsum_core::bigmath::big_to_hp;
use addsum_core::{Hp, Real};

const BASE_N: u64 = 256;
const CORRECTIONS: usize = 24;

/// Reusable zeta evaluator: holds `B_2j / (2j)!` in octuple precision and
/// the logs of `1..N` so repeated calls stay cheap.
pub struct ZetaEngine {
    /// `B_2j / (2j)!` for `j = 1..=CORRECTIONS+1` (the extra one feeds
    /// the error bound).
    coefs: Vec<Hp>,
    /// `ln n` for `n = 1..BASE_N`.
    logs: Vec<Hp>,
    log_n: Hp,
}

impl ZetaEngine {
    pub fn new() -> Self {
        let bern = bernoulli_numbers(2 * (CORRECTIONS + 1));
        let mut coefs = Vec::with_capacity(CORRECTIONS + 1);
        let mut factorial = Hp::ONE; // (2j)!
        let mut arg = 0u64;
        for j in 1..=CORRECTIONS + 1 {
            while arg < 2 * j as u64 {
                arg += 1;
                factorial = factorial * Hp::from_u64(arg);
            }
            let b = &bern[2 * j];
            coefs.push(big_to_hp(b.numer()) / big_to_hp(b.denom()) / factorial);
        }
        let logs = (0..BASE_N).map(|n| Hp::from_u64(n.max(1)).ln()).collect();
        ZetaEngine { coefs, logs, log_n: Hp::from_u64(BASE_N).ln() }
    }

    /// `zeta(t)` for real `t > 1`. Full target precision needs `t >= 3/2`;
    /// smaller arguments still return an honest (larger) error bound.
    pub fn zeta(&self, t: f64) -> Result<ConstantValue, ConstError> {
        self.zeta_hp(Hp::from_f64(t))
    }

    pub fn zeta_hp(&self, t: Hp) -> Result<ConstantValue, ConstError> {
        let (zm1, first_omitted) = self.eval_minus_one(t)?;
        let value = zm1 + Hp::ONE;
        Ok(ConstantValue {
            value,
            err_bound: first_omitted * 2.0 + value.to_f64().abs() * 1e-66,
            method: "euler-maclaurin",
        })
    }

    /// `zeta(t) - 1`, kept away from the constant term so the result
    /// carries full *relative* precision even when it is tiny (for
    /// `t = 150`, say, `zeta(t) - 1 ~ 2^-t` would otherwise drown at the
    /// ulp of 1). `log zeta` consumers feed this straight into `ln_1p`.
    pub fn zeta_minus_one_hp(&self, t: Hp) -> Result<ConstantValue, ConstError> {
        let (zm1, first_omitted) = self.eval_minus_one(t)?;
        Ok(ConstantValue {
            value: zm1,
            err_bound: first_omitted * 2.0 + zm1.to_f64().abs() * 1e-66,
            method: "euler-maclaurin",
        })
    }

    /// Shared core: `(zeta(t) - 1, first omitted correction magnitude)`.
    fn eval_minus_one(&self, t: Hp) -> Result<(Hp, f64), ConstError> {
        if !(t > Hp::ONE) {
            return Err(ConstError::Domain(format!(
                "zeta requires t > 1, got {t}"
            )));
        }
        // Direct block without the n = 1 term: sum_{n=2}^{N-1} exp(-t ln n).
        let mut direct = Hp::ZERO;
        for n in (2..BASE_N as usize).rev() {
            direct = direct + (-(t * self.logs[n])).exp();
        }
        let n_minus_t = (-(t * self.log_n)).exp(); // N^-t
        let n_big = Hp::from_u64(BASE_N);
        let tail = n_minus_t * n_big / (t - Hp::ONE) + n_minus_t / Hp::TWO;

        // Euler-Maclaurin corrections with rising factorial t(t+1)..(t+2j-2).
        let n_sq_inv = (n_big * n_big).recip();
        let mut scale = n_minus_t / n_big; // N^(1-t-2j) for j=1
        let mut poch = t;
        let mut corr = Hp::ZERO;
        for j in 1..=CORRECTIONS {
            corr = corr + self.coefs[j - 1] * poch * scale;
            scale = scale * n_sq_inv;
            let c = Hp::from_u64(2 * j as u64);
            poch = poch * (t + c - Hp::ONE) * (t + c);
        }
        let first_omitted = (self.coefs[CORRECTIONS] * poch * scale).abs();
        Ok((direct + tail + corr, first_omitted.to_f64()))
    }
}

impl Default for ZetaEngine {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_LIT: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211707";

    fn assert_within(value: Hp, expect: Hp, tol: f64) {
        let d = (value - expect).abs().to_f64();
        assert!(d < tol, "difference {d:e} exceeds {tol:e}");
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let ze = ZetaEngine::new();
        let pi = Hp::from_lit(PI_LIT);
        let expect = pi * pi / Hp::from_u64(6);
        let got = ze.zeta(2.0).unwrap();
        assert_within(got.value, expect, 1e-60);
        assert!(got.err_bound < 1e-55);
    }

    #[test]
    fn zeta_four_is_pi_fourth_over_ninety() {
        let ze = ZetaEngine::new();
        let pi = Hp::from_lit(PI_LIT);
        let expect = pi.powi(4) / Hp::from_u64(90);
        assert_within(ze.zeta(4.0).unwrap().value, expect, 1e-60);
    }

    #[test]
    fn zeta_six_is_pi_sixth_over_945() {
        let ze = ZetaEngine::new();
        let pi = Hp::from_lit(PI_LIT);
        let expect = pi.powi(6) / Hp::from_u64(945);
        assert_within(ze.zeta(6.0).unwrap().value, expect, 1e-60);
    }

    #[test]
    fn zeta_three_matches_known_digits() {
        let ze = ZetaEngine::new();
        let expect = Hp::from_lit("1.2020569031595942854");
        assert_within(ze.zeta(3.0).unwrap().value, expect, 1e-19);
    }

    #[test]
    fn low_arguments_report_wider_bounds() {
        let ze = ZetaEngine::new();
        let a = ze.zeta(1.5).unwrap();
        // zeta(3/2) = 2.612375348685488343348567567924...
        assert!((a.to_f64() - 2.612375348685488).abs() < 1e-12);
        let b = ze.zeta(1.05).unwrap();
        assert!(b.err_bound > a.err_bound, "nearer the pole must be looser");
        assert!(b.to_f64() > 20.0 && b.to_f64() < 21.0);
    }

    #[test]
    fn domain_errors() {
        let ze = ZetaEngine::new();
        assert!(ze.zeta(1.0).is_err());
        assert!(ze.zeta(0.5).is_err());
        assert!(ze.zeta_minus_one_hp(Hp::ONE).is_err());
    }

    #[test]
    fn zeta_minus_one_keeps_relative_precision_when_tiny() {
        // At t = 100 the value is ~2^-100 ~ 8e-31; the dedicated route
        // must deliver it to full relative precision, not to the ulp of 1.
        let ze = ZetaEngine::new();
        let zm1 = ze.zeta_minus_one_hp(Hp::from_f64(100.0)).unwrap().value;
        let mut expect = Hp::ZERO;
        for n in (2u64..=9).rev() {
            expect = expect + Hp::from_u64(n).powi(-100);
        }
        // The first term missing from `expect` is 10^-100, below 1e-69
        // relative to the total.
        let rel = ((zm1 - expect) / expect).abs().to_f64();
        assert!(rel < 1e-65, "rel = {rel:.3e}");
    }

    #[test]
    fn half_integer_argument_against_direct_series() {
        // Independent check at t = 7/2 with a plain f64 partial sum plus
        // integral tail estimate: sum_{n>M} n^-3.5 ~ M^-2.5/2.5.
        let ze = ZetaEngine::new();
        let mut direct = 0f64;
        let m = 20_000u64;
        for n in (1..=m).rev() {
            direct += (n as f64).powf(-3.5);
        }
        let tail = (m as f64).powf(-2.5) / 2.5;
        let got = ze.zeta(3.5).unwrap().to_f64();
        assert!((got - (direct + tail)).abs() < 1e-11);
    }
}
