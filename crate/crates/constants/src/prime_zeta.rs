//! The prime zeta function `P(t) = sum over primes p of p^-t`, via the
//! Möbius inversion of `log zeta`:
//!
//! ```text
//! P(t) = sum_{n>=1} mu(n)/n * log zeta(n t)
//! ```
//!
//! truncated once `zeta(nt) - 1 < 10^-72` (so `log zeta(nt)` is below the
//! target precision). Integer arguments are memoized because the Mertens
//! constant and the prime double sums query hundreds of them.

use crate::value::{ConstError, ConstantValue};
use crate::zeta::ZetaEngine;
use addsum_core::mobius::mobius_up_to;
use addsum_core::{Hp, Real};
use std::cell::RefCell;
use std::collections::HashMap;

/// Arguments beyond this make every `log zeta(nt)` term negligible after
/// `n = ceil(CUTOFF / t)` (2^-u < 1e-72 once u > 239.2).
const CUTOFF: f64 = 240.0;

pub struct PrimeZetaEngine {
    zeta: ZetaEngine,
    mobius: Vec<i8>,
    int_cache: RefCell<HashMap<u64, Hp>>,
}

impl PrimeZetaEngine {
    pub fn new() -> Self {
        let n_max = (CUTOFF / 2.0).ceil() as u64 + 2;
        PrimeZetaEngine {
            zeta: ZetaEngine::new(),
            mobius: mobius_up_to(n_max),
            int_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn zeta_engine(&self) -> &ZetaEngine {
        &self.zeta
    }

    /// `P(t)` for real `t >= 2`.
    pub fn prime_zeta(&self, t: f64) -> Result<ConstantValue, ConstError> {
        if !(t >= 2.0) {
            return Err(ConstError::Domain(format!(
                "prime zeta requires t >= 2, got {t}"
            )));
        }
        let n_max = ((CUTOFF / t).ceil() as u64).max(1);
        let mut sum = Hp::ZERO;
        for n in (1..=n_max).rev() {
            let mu = self.mobius[n as usize];
            if mu == 0 {
                continue;
            }
            let lz = self.log_zeta(t * n as f64)?;
            let term = lz / Hp::from_u64(n);
            if mu > 0 {
                sum = sum + term;
            } else {
                sum = sum - term;
            }
        }
        Ok(ConstantValue {
            value: sum,
            err_bound: 1e-72 + sum.to_f64().abs() * 1e-66,
            method: "mobius-log-zeta",
        })
    }

    /// Memoizing wrapper used for the integer arguments that dominate
    /// the double-sum workloads.
    pub fn prime_zeta_int(&self, t: u32) -> Result<ConstantValue, ConstError> {
        self.prime_zeta(t as f64)
    }

    fn log_zeta(&self, arg: f64) -> Result<Hp, ConstError> {
        // Integer arguments hit the cache; others are computed directly.
        let is_int = arg.fract() == 0.0 && arg <= u64::MAX as f64;
        if is_int {
            let key = arg as u64;
            if let Some(v) = self.int_cache.borrow().get(&key) {
                return Ok(*v);
            }
            let v = self.compute_log_zeta(arg)?;
            self.int_cache.borrow_mut().insert(key, v);
            return Ok(v);
        }
        self.compute_log_zeta(arg)
    }

    fn compute_log_zeta(&self, arg: f64) -> Result<Hp, ConstError> {
        // zeta - 1 arrives at full relative precision (it is never routed
        // through 1 + delta), so ln_1p keeps log zeta accurate even when
        // the argument is large and zeta - 1 sits near 2^-arg.
        let zm1 = self.zeta.zeta_minus_one_hp(Hp::from_f64(arg))?.value;
        Ok(zm1.ln_1p())
    }
}

impl Default for PrimeZetaEngine {
    fn default() -> Self {
        Self::new()
    }
}
