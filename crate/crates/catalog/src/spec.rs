//! A fully specified additive function: parameters plus increment profile,
//! together with the function's direct textbook definition on prime powers.

use crate::gform::{oeis_values, GForm};
use crate::params::ClassParams;
use num_bigint::BigInt;
use num_traits::Zero;

/// The textbook definition of a builtin on prime powers, independent of the
/// class parametrization. Membership verification compares the two routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectForm {
    /// `f(p^alpha) = alpha^ell`.
    ExponentPower { ell: u32 },
    /// `f(p^alpha) = C(alpha + ell - 1, ell)`.
    BinomCount { ell: u32 },
    /// `f(p^alpha) = p * alpha^ell` (`ell = 1` is the multiplicity-weighted
    /// sum of prime factors).
    PrimeTimesExponentPower { ell: u32 },
    /// `f(p^alpha) = p`.
    Prime,
    /// `f(p^alpha) = p * (alpha - 1)`.
    PrimeTimesExponentMinusOne,
    /// `f(p^alpha) = 1` iff `alpha >= m`.
    MthPowerIndicator { m: u32 },
    /// `f(p^alpha) = a(alpha)` for the prime-power-recursive `a`.
    SelfRecursive,
}

impl DirectForm {
    pub fn value(&self, p: u64, alpha: u32) -> BigInt {
        if alpha == 0 {
            return BigInt::zero();
        }
        match *self {
            DirectForm::ExponentPower { ell } => BigInt::from((alpha as u128).pow(ell)),
            DirectForm::BinomCount { ell } => num_integer::binomial(
                BigInt::from(alpha as u64 + ell as u64 - 1),
                BigInt::from(ell),
            ),
            DirectForm::PrimeTimesExponentPower { ell } => {
                BigInt::from(p) * BigInt::from((alpha as u128).pow(ell))
            }
            DirectForm::Prime => BigInt::from(p),
            DirectForm::PrimeTimesExponentMinusOne => {
                BigInt::from(p) * BigInt::from(alpha - 1)
            }
            DirectForm::MthPowerIndicator { m } => BigInt::from(u8::from(alpha >= m)),
            DirectForm::SelfRecursive => BigInt::from(oeis_values(alpha as usize)[alpha as usize]),
        }
    }
}

/// An additive function given by its class parameters and the closed form
/// of its increment function `g`, plus its direct definition.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditiveFunctionSpec {
    /// Canonical display name (also accepted by the CLI parser).
    pub name: String,
    pub params: ClassParams,
    pub g: GForm,
    /// Definition route, used as the oracle in membership verification.
    pub direct: DirectForm,
}

impl AdditiveFunctionSpec {
    /// `g(alpha)` for `alpha >= 2`.
    pub fn g_value(&self, alpha: u32) -> i128 {
        self.g.value(alpha)
    }

    /// Exact value on a prime power:
    /// `f(p^alpha) = lambda1 p^r + lambda2 p^s (g(2) + ... + g(alpha))`.
    ///
    /// `alpha = 0` gives 0 (the empty product contributes nothing to an
    /// additive function).
    pub fn eval_prime_power(&self, p: u64, alpha: u32) -> BigInt {
        if alpha == 0 {
            return BigInt::zero();
        }
        let pr = self.params.lambda1 * BigInt::from(p).pow(self.params.r);
        if alpha == 1 {
            return pr;
        }
        let g_sum: i128 = (2..=alpha).map(|b| self.g_value(b)).sum();
        pr + self.params.lambda2 * BigInt::from(g_sum) * BigInt::from(p).pow(self.params.s)
    }

    /// Exact value at any `n >= 1` by factorization:
    /// the sum of `f(p^alpha)` over the prime powers exactly dividing `n`.
    ///
    /// Trial division, so fine for single values; bulk evaluation over a
    /// whole range should go through a smallest-prime-factor table instead.
    pub fn eval_additive(&self, n: u64) -> BigInt {
        assert!(n >= 1, "additive functions are defined on n >= 1");
        let mut rest = n;
        let mut total = BigInt::zero();
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                let mut alpha = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    alpha += 1;
                }
                total += self.eval_prime_power(p, alpha);
            }
            p += 1;
        }
        if rest > 1 {
            total += self.eval_prime_power(rest, 1);
        }
        total
    }

    /// The definition-route value `f(p^alpha)`, bypassing the class
    /// parametrization entirely.
    pub fn direct_prime_power(&self, p: u64, alpha: u32) -> BigInt {
        self.direct.value(p, alpha)
    }

    /// Whether the function is identically zero on primes
    /// (`lambda1 = 0`), which several formula branches special-case.
    pub fn vanishes_on_primes(&self) -> bool {
        self.params.lambda1 == 0
    }
}
