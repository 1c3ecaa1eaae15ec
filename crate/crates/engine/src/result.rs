//! Result record for the exact summation operations.

use addsum_core::accum::SumValue;

/// Which tuple statistic was summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Gcd,
    Lcm,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::Gcd => "gcd",
            Quantity::Lcm => "lcm",
        }
    }
}

/// Which evaluation route produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Prime-power identity (the production route).
    Identity,
    /// Brute-force loop over all tuples.
    Naive,
    /// Möbius inversion over the gcd stratification.
    Mobius,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Identity => "identity",
            Method::Naive => "naive",
            Method::Mobius => "mobius",
        }
    }
}

/// An exact sum together with the inputs that produced it.
///
/// `elapsed_ms` is wall-clock bookkeeping only; every numeric field is a
/// pure function of `(function, quantity, x, k)`, independent of `threads`
/// and of timing.
#[derive(Debug, Clone)]
pub struct ExactSumResult {
    pub function: String,
    pub quantity: Quantity,
    pub method: Method,
    pub x: u64,
    pub k: u32,
    pub value: SumValue,
    pub threads: usize,
    pub elapsed_ms: f64,
}

impl ExactSumResult {
    /// The value as a decimal string (exact for integer sums).
    pub fn value_string(&self) -> String {
        match &self.value {
            SumValue::Int(v) => v.to_string(),
            SumValue::Real(v) => format!("{v:e}"),
        }
    }
}
