//! Exact Bernoulli numbers via the defining recurrence, as big rationals.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Returns `[B_0, B_1, ..., B_n]` exactly (convention `B_1 = -1/2`),
/// from `sum_{i=0}^{m} C(m+1, i) B_i = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for (i, bi) in b.iter().enumerate() {
            if bi.is_zero() {
                continue;
            }
            let c = binomial(BigInt::from(m as u64 + 1), BigInt::from(i as u64));
            acc += BigRational::from_integer(c) * bi;
        }
        let denom = BigRational::from_integer(BigInt::from(m as u64 + 1));
        b.push(-acc / denom);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_values_are_exact() {
        let b = bernoulli_numbers(14);
        assert_eq!(b[0], q(1, 1));
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], q(0, 1));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
        assert_eq!(b[10], q(5, 66));
        assert_eq!(b[12], q(-691, 2730));
        assert_eq!(b[14], q(7, 6));
    }

    #[test]
    fn odd_indices_vanish_beyond_one() {
        let b = bernoulli_numbers(25);
        for m in (3..=25).step_by(2) {
            assert!(b[m].is_zero(), "B_{m} should vanish");
        }
    }
}
