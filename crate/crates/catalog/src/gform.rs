//! Closed forms for the increment function `g`.

/// The increment profile `g(alpha)` of a catalog member, i.e. the factor in
/// `f(p^alpha) - f(p^(alpha-1)) = lambda2 * p^s * g(alpha)` for
/// `alpha >= 2`.
///
/// Each variant is a closed form, so `g` is total on `alpha >= 2` and can
/// be evaluated exactly in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GForm {
    /// `g = 0`: the function is supported on primes only.
    Zero,
    /// `g = 1` (the `A`/`B` family: one unit of `p^s` per extra exponent).
    One,
    /// `g(alpha) = alpha^ell - (alpha-1)^ell` (exponent-power functions).
    PowerDiff { ell: u32 },
    /// `g(alpha) = C(alpha + ell - 2, ell - 1)`, `ell >= 1`
    /// (iterated-divisor-style growth).
    Binom { ell: u32 },
    /// `g(alpha) = 1` exactly at `alpha = m`, else 0 — the increment of
    /// "count primes whose m-th power divides n", `m >= 2`.
    Indicator { m: u32 },
    /// `g(alpha) = a(alpha) - a(alpha-1)` for the self-referential
    /// prime-power-recursive function `a` (see [`oeis_values`]).
    OeisDiff,
}

impl GForm {
    /// `g(alpha)` as an exact integer. Requires `alpha >= 2`; the
    /// `alpha = 1` stratum is governed by `lambda1 * p^r`, not by `g`.
    pub fn value(&self, alpha: u32) -> i128 {
        assert!(alpha >= 2, "g is only defined for alpha >= 2");
        match *self {
            GForm::Zero => 0,
            GForm::One => 1,
            GForm::PowerDiff { ell } => {
                (alpha as i128).pow(ell) - (alpha as i128 - 1).pow(ell)
            }
            GForm::Binom { ell } => {
                assert!(ell >= 1, "Binom increment needs ell >= 1");
                binom_i128((alpha + ell - 2) as u64, (ell - 1) as u64)
            }
            GForm::Indicator { m } => i128::from(alpha == m),
            GForm::OeisDiff => {
                let a = oeis_values(alpha as usize);
                a[alpha as usize] - a[alpha as usize - 1]
            }
        }
    }
}

fn binom_i128(n: u64, k: u64) -> i128 {
    num_integer::binomial(n as u128, k as u128) as i128
}

/// Values `a(0..=n)` of the prime-power-recursive function defined by
/// `a(1) = 1` and `a(m) = sum of a(alpha) over the prime-power factors
/// p^alpha exactly dividing m`. (`a(0)` is a placeholder 0.)
///
/// `a(p^alpha) = a(alpha)`, so the recursion always descends to smaller
/// arguments; the table is filled iteratively by factorization.
pub fn oeis_values(n: usize) -> Vec<i128> {
    let mut a = vec![0i128; n.max(1) + 1];
    if n >= 1 {
        a[1] = 1;
    }
    for m in 2..=n {
        let mut rest = m;
        let mut total = 0i128;
        let mut p = 2usize;
        while p * p <= rest {
            if rest % p == 0 {
                let mut alpha = 0usize;
                while rest % p == 0 {
                    rest /= p;
                    alpha += 1;
                }
                total += a[alpha];
            }
            p += 1;
        }
        if rest > 1 {
            total += a[1];
        }
        a[m] = total;
    }
    a
}
