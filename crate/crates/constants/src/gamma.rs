//! The Euler–Mascheroni constant and the Mertens constant.

use crate::prime_zeta::PrimeZetaEngine;
use crate::value::ConstantValue;
use addsum_core::{Hp, Real};

/// 50 decimal digits of the Euler–Mascheroni constant, comfortably more
/// than octuple precision consumes from the front.
const GAMMA_LIT: &str = "0.57721566490153286060651209008240243104215933593992";

pub fn euler_gamma() -> Hp {
    Hp::from_lit(GAMMA_LIT)
}

/// The Mertens constant
/// `M = gamma + sum over p of (log(1 - 1/p) + 1/p)`, computed through the
/// absolutely convergent rearrangement
///
/// ```text
/// M = gamma - sum_{j >= 2} P(j) / j
/// ```
///
/// (expand each logarithm and swap the sums), truncated once
/// `P(j)/j < 2^-j` drops below the target precision.
pub fn mertens_const(pz: &PrimeZetaEngine) -> ConstantValue {
    let mut sum = Hp::ZERO;
    let mut errs = 0f64;
    for j in (2..=245u32).rev() {
        let p = pz
            .prime_zeta_int(j)
            .expect("integer arguments >= 2 are in the prime zeta domain");
        sum = sum + p.value / Hp::from_u64(j as u64);
        errs += p.err_bound / j as f64;
    }
    let value = euler_gamma() - sum;
    ConstantValue {
        value,
        // 2^-244 truncation tail plus the per-term zeta bounds.
        err_bound: errs + 1e-70,
        method: "gamma-minus-prime-zeta-series",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_survives_octuple_round_trip() {
        let g = euler_gamma();
        assert!((g.to_f64() - 0.5772156649015329).abs() < 1e-16);
        // The literal has far more digits than f64; check a second
        // derived quantity keeps them: exp(gamma) = 1.7810724179901979852...
        let eg = g.exp();
        let lit = Hp::from_lit("1.78107241799019798523650410310717954916964521430343");
        assert!((eg - lit).abs().to_f64() < 1e-48);
    }

    #[test]
    fn mertens_constant_value() {
        // [PAPER] M = 0.2614972128... to the printed digits; [DERIVED]
        // further digits frozen from an independent decimal run of the
        // same series: 0.26149721284764278375542683860869585905156664826120.
        let pz = PrimeZetaEngine::new();
        let m = mertens_const(&pz);
        assert!((m.to_f64() - 0.2614972128).abs() < 5e-11);
        let lit = Hp::from_lit("0.2614972128476427837554268386086958590516");
        assert!((m.value - lit).abs().to_f64() < 1e-30);
        assert!(m.err_bound < 1e-60);
    }
}
