//! A minimal real-scalar trait implemented for `f64` and the 256-bit [`Hp`]
//! type, so that numeric code can be written once and instantiated at either
//! precision.
//!
//! `num_traits::Float` is deliberately not used as the bound: the octuple
//! float backend does not implement it (and most of `Float` — trig,
//! `to_degrees`, bit-level queries — is irrelevant here). This trait carries
//! exactly the operations the workspace needs: field arithmetic via the
//! standard operator traits, order, a handful of transcendentals, and
//! conversions that are exact in both directions where exactness is possible.
//!
//! [`Hp`]: crate::Hp

use core::fmt::{Debug, Display};
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use f256::f256;

/// Real scalar suitable for compensated summation and series evaluation.
///
/// Implementors must be IEEE-style binary floats: conversions from `u64`,
/// `i64` and `f64` are exact whenever the value fits in the significand, and
/// `eps` is the classic machine epsilon (`2^{1-p}` for precision `p`).
///
/// `zero`/`one` live on the trait itself (rather than coming from
/// `num_traits::Zero`/`One`) because the 256-bit backend does not implement
/// those traits.
pub trait Real:
    Copy
    + PartialOrd
    + Debug
    + Display
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(n: u64) -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_f64(v: f64) -> Self;

    /// Parses a decimal literal. Intended for stored reference constants,
    /// so malformed input is a programming error and panics.
    fn from_lit(s: &str) -> Self;

    /// Rounds to the nearest `f64` (for reporting and tolerance checks).
    fn to_f64(self) -> f64;

    fn abs(self) -> Self;
    fn floor(self) -> Self;
    fn ln(self) -> Self;
    /// `ln(1 + self)`, accurate for small arguments.
    fn ln_1p(self) -> Self;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;
    fn powf(self, e: Self) -> Self;

    /// Machine epsilon of the format, used in accumulated-rounding bounds.
    fn eps() -> Self;

    /// Integer power by binary exponentiation (negative exponents via the
    /// reciprocal), so no `powf`/`ln` round-trip is involved.
    fn powi(self, n: i64) -> Self {
        let (mut base, mut k) = if n < 0 {
            (Self::one() / self, n.unsigned_abs())
        } else {
            (self, n as u64)
        };
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }

    fn recip(self) -> Self {
        Self::one() / self
    }
}

impl Real for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_u64(n: u64) -> Self {
        n as f64
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn from_lit(s: &str) -> Self {
        s.parse().expect("malformed f64 literal")
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn ln_1p(self) -> Self {
        f64::ln_1p(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn powf(self, e: Self) -> Self {
        f64::powf(self, e)
    }
    fn eps() -> Self {
        f64::EPSILON
    }
}

impl Real for f256 {
    fn zero() -> Self {
        f256::ZERO
    }
    fn one() -> Self {
        f256::ONE
    }
    fn from_u64(n: u64) -> Self {
        f256::from(n)
    }
    fn from_i64(n: i64) -> Self {
        f256::from(n)
    }
    fn from_f64(v: f64) -> Self {
        f256::from(v)
    }
    fn from_lit(s: &str) -> Self {
        s.parse().expect("malformed f256 literal")
    }
    fn to_f64(self) -> f64 {
        f256_to_f64(self)
    }
    fn abs(self) -> Self {
        f256::abs(&self)
    }
    fn floor(self) -> Self {
        f256::floor(&self)
    }
    fn ln(self) -> Self {
        f256::ln(&self)
    }
    fn ln_1p(self) -> Self {
        f256::ln_1p(&self)
    }
    fn exp(self) -> Self {
        f256::exp(&self)
    }
    fn sqrt(self) -> Self {
        f256::sqrt(self)
    }
    fn powf(self, e: Self) -> Self {
        f256::powf(&self, &e)
    }
    fn eps() -> Self {
        f256::EPSILON
    }
}

/// Converts an `f256` to the nearest `f64` without going through strings.
///
/// The value is decomposed as `(-1)^s * c * 2^t` with `c` an odd integer of
/// up to 237 bits. `c` rounds into an `f64` (plenty for a 53-bit target) and
/// the power of two is applied with the exponent split in half so that no
/// intermediate product over- or underflows even near the extremes of the
/// `f64` range.
fn f256_to_f64(x: f256) -> f64 {
    if x.eq_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return if x.is_sign_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    let (s, t, (hi, lo)) = x.as_sign_exp_signif();
    let c = (hi as f64) * 2f64.powi(128) + (lo as f64);
    // Normalize c to m * 2^ec with m in [1, 2).
    let ec = ((c.to_bits() >> 52 & 0x7ff) as i32) - 1023;
    let m = c * 2f64.powi(-ec);
    let e = ec + t;
    let v = if e > 1100 {
        f64::INFINITY
    } else if e < -1120 {
        0.0
    } else {
        // Two half-sized factors keep each power of two representable,
        // including results in the subnormal range.
        m * 2f64.powi(e / 2) * 2f64.powi(e - e / 2)
    };
    if s == 1 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Hp;

    #[test]
    fn f64_roundtrip_through_hp_is_exact() {
        let cases = [
            0.0,
            1.0,
            -1.0,
            0.5,
            3.25,
            -2.75e-17,
            7.0,
            1e300,
            -1e300,
            1e-300,
            5e-324,          // smallest positive subnormal
            f64::MAX,
            f64::MIN_POSITIVE,
            core::f64::consts::PI,
        ];
        for &v in &cases {
            let hp = Hp::from_f64(v);
            assert_eq!(hp.to_f64(), v, "round-trip failed for {v:e}");
        }
    }

    #[test]
    fn hp_to_f64_matches_f64_transcendentals() {
        // ln, exp, sqrt computed at 256 bits must round to within 1 ulp of
        // the f64 results (f64's own libm is faithful to ~1 ulp).
        let two = Hp::from_u64(2);
        assert!((two.ln().to_f64() - core::f64::consts::LN_2).abs() < 1e-15);
        assert!((Hp::one().exp().to_f64() - core::f64::consts::E).abs() < 1e-15);
        assert!((two.sqrt().to_f64() - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn from_lit_reads_many_digits() {
        // 40-digit literal: check it differs from the f64 parse in the
        // direction expected (i.e. extra digits actually survive).
        let g = Hp::from_lit("0.5772156649015328606065120900824024310422");
        let lo = Hp::from_lit("0.57721566490153286060");
        let diff = (g - lo).abs().to_f64();
        assert!(diff > 0.0 && diff < 1e-20);
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let x = Hp::from_f64(1.5);
        let mut acc = Hp::one();
        for _ in 0..13 {
            acc *= x;
        }
        assert_eq!(Real::powi(x, 13), acc);
        let inv = Real::powi(x, -3);
        let direct = Hp::one() / (x * x * x);
        assert!((inv - direct).abs() < Hp::from_f64(1e-70));
    }

    #[test]
    fn generic_code_runs_at_both_precisions() {
        fn geometric<R: Real>(q: R, n: u32) -> R {
            let mut s = R::zero();
            let mut term = R::one();
            for _ in 0..n {
                s += term;
                term *= q;
            }
            s
        }
        let f = geometric::<f64>(0.5, 60);
        let h = geometric::<Hp>(Hp::from_f64(0.5), 60);
        assert!((f - 2.0).abs() < 1e-15);
        assert!((h.to_f64() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn eps_is_format_epsilon() {
        assert_eq!(<f64 as Real>::eps(), f64::EPSILON);
        // 237-bit significand => eps = 2^-236.
        let e = <Hp as Real>::eps().to_f64();
        assert!(e < 1e-70 && e > 0.0);
    }
}
