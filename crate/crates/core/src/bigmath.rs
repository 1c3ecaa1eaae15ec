//! Exact big-integer helpers used by the summation identities.

use crate::Hp;
use num_bigint::{BigInt, Sign};
use num_traits::Zero;

/// `floor(x / d)^k` as an exact big integer.
///
/// The floor is computed in machine integers (`d >= 1`), the power in
/// `BigInt`, so the result never overflows or rounds: with `x <= 10^9` and
/// `k <= 16` the value can reach ~478 bits.
pub fn floor_pow(x: u64, d: u64, k: u32) -> BigInt {
    assert!(d >= 1, "floor_pow: zero divisor");
    BigInt::from(x / d).pow(k)
}

/// Binomial coefficient `C(n, j)` as a big integer.
pub fn binomial(n: u64, j: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(j))
}

/// Converts a big integer to the high-precision scalar.
///
/// Exact whenever the value fits in the 237-bit significand; beyond that
/// each limb step rounds once, so the result is still correct to within a
/// few units in the last place.
pub fn big_to_hp(v: &BigInt) -> Hp {
    if v.is_zero() {
        return Hp::ZERO;
    }
    let (sign, digits) = v.to_u64_digits();
    let scale = Hp::from(1u64 << 32) * Hp::from(1u64 << 32); // 2^64, exact
    let mut acc = Hp::ZERO;
    for &d in digits.iter().rev() {
        acc = acc * scale + Hp::from(d);
    }
    if sign == Sign::Minus {
        -acc
    } else {
        acc
    }
}
