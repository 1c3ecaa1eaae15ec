//! A computed constant together with an error bound and the name of the
//! method that produced it.

use addsum_core::{Hp, Real};
use thiserror::Error;

/// A numeric constant with provenance: the octuple-precision value, a
/// bound on `|value - true value|` (accounting for series truncation and
/// accumulated rounding), and a short method tag.
#[derive(Debug, Clone)]
pub struct ConstantValue {
    pub value: Hp,
    pub err_bound: f64,
    pub method: &'static str,
}

impl ConstantValue {
    pub fn exact(value: Hp, method: &'static str) -> Self {
        ConstantValue { value, err_bound: 0.0, method }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Whether two computed values agree within their combined error
    /// bounds plus `slack`.
    pub fn agrees_with(&self, other: &ConstantValue, slack: f64) -> bool {
        let d = (self.value - other.value).abs().to_f64();
        d <= self.err_bound + other.err_bound + slack
    }
}

#[derive(Debug, Error)]
pub enum ConstError {
    #[error("domain error: {0}")]
    Domain(String),
}
