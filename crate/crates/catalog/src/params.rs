//! The five-parameter signature shared by every catalog member.

/// Parameters `(r, s, ell; lambda1, lambda2)` of an additive function
/// determined on prime powers, plus the growth constant `C0`.
///
/// The defining equations are
///
/// ```text
/// f(p)        = lambda1 * p^r
/// f(p^alpha)  - f(p^(alpha-1)) = lambda2 * p^s * g(alpha)   (alpha >= 2)
/// |g(alpha)| <= c0 * alpha^ell
/// ```
///
/// `ell < 0` is the convention for `g` vanishing identically (the function
/// is then supported on primes alone). The weights are kept as integers:
/// every built-in uses 0 or 1, and integer weights are what lets the exact
/// summation tier work in `BigInt` with no rounding at all. All asymptotic
/// constants are linear in the weights, so nothing is lost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    pub r: u32,
    pub s: u32,
    pub ell: i32,
    pub lambda1: i64,
    pub lambda2: i64,
    /// Growth constant in `|g(alpha)| <= c0 * alpha^ell`; must be positive.
    pub c0: f64,
}

impl ClassParams {
    /// Basic well-formedness: positive growth constant, and `ell < 0`
    /// only together with a vanishing second weight making sense (callers
    /// pair `ell < 0` with [`GForm::Zero`](crate::GForm::Zero)).
    pub fn is_well_formed(&self) -> bool {
        self.c0 > 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formedness_checks_c0() {
        let mut p = ClassParams { r: 1, s: 1, ell: 0, lambda1: 1, lambda2: 1, c0: 1.0 };
        assert!(p.is_well_formed());
        p.c0 = 0.0;
        assert!(!p.is_well_formed());
    }
}
