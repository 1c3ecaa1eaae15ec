//! Accumulators for the two value domains the engine works in: exact big
//! integers and high-precision reals with compensated summation.

use crate::bigmath::big_to_hp;
use crate::real::Real;
use crate::Hp;
use num_bigint::BigInt;
use num_traits::Zero;

/// Final value of a summation: exact integer or high-precision real.
#[derive(Debug, Clone, PartialEq)]
pub enum SumValue {
    Int(BigInt),
    Real(Hp),
}

impl SumValue {
    /// The value as an `f64`, for reporting.
    pub fn to_f64(&self) -> f64 {
        match self {
            SumValue::Int(v) => big_to_hp(v).to_f64(),
            SumValue::Real(v) => v.to_f64(),
        }
    }
}

/// Accumulator that is either exact (big integer) or compensated
/// (Neumaier summation over the 256-bit scalar).
///
/// The two modes never mix implicitly: adding a real term to an exact
/// accumulator is a programming error and panics. Adding an integer term
/// to a compensated accumulator is allowed — the term is converted to the
/// real domain first (exact up to 237 bits).
#[derive(Debug, Clone)]
pub enum BigAccumulator {
    Exact(BigInt),
    Compensated {
        sum: Hp,
        comp: Hp,
        /// Running sum of |terms|, for the rounding bound.
        abs: Hp,
        terms: u64,
    },
}

impl BigAccumulator {
    pub fn exact() -> Self {
        BigAccumulator::Exact(BigInt::zero())
    }

    pub fn compensated() -> Self {
        BigAccumulator::Compensated {
            sum: Hp::ZERO,
            comp: Hp::ZERO,
            abs: Hp::ZERO,
            terms: 0,
        }
    }

    /// Adds a big-integer term (exactly in exact mode; converted in
    /// compensated mode).
    pub fn add_big(&mut self, v: &BigInt) {
        match self {
            BigAccumulator::Exact(acc) => *acc += v,
            BigAccumulator::Compensated { .. } => self.add_real(big_to_hp(v)),
        }
    }

    /// Adds a real term. Panics in exact mode: exact sums must stay exact.
    pub fn add_real(&mut self, v: Hp) {
        match self {
            BigAccumulator::Exact(_) => {
                panic!("cannot add a real term to an exact accumulator")
            }
            BigAccumulator::Compensated { sum, comp, abs, terms } => {
                // Neumaier's variant of Kahan summation: the correction
                // works whichever operand is larger in magnitude.
                let t = *sum + v;
                if Real::abs(*sum) >= Real::abs(v) {
                    *comp += (*sum - t) + v;
                } else {
                    *comp += (v - t) + *sum;
                }
                *sum = t;
                *abs += Real::abs(v);
                *terms += 1;
            }
        }
    }

    /// Folds another accumulator of the same mode into this one.
    /// Merging is associative up to the compensated-rounding bound, and
    /// exactly associative in exact mode.
    pub fn merge(&mut self, other: BigAccumulator) {
        match (self, other) {
            (BigAccumulator::Exact(a), BigAccumulator::Exact(b)) => *a += b,
            (
                me @ BigAccumulator::Compensated { .. },
                BigAccumulator::Compensated { sum, comp, abs: oabs, terms: oterms },
            ) => {
                me.add_real(sum);
                me.add_real(comp);
                if let BigAccumulator::Compensated { abs, terms, .. } = me {
                    // add_real already counted |sum| + |comp|; replace that
                    // with the other side's own accumulated magnitude.
                    *abs += oabs - Real::abs(sum) - Real::abs(comp);
                    *terms += oterms.saturating_sub(2);
                }
            }
            _ => panic!("cannot merge accumulators of different modes"),
        }
    }

    pub fn value(self) -> SumValue {
        match self {
            BigAccumulator::Exact(v) => SumValue::Int(v),
            BigAccumulator::Compensated { sum, comp, .. } => SumValue::Real(sum + comp),
        }
    }

    /// Bound on the accumulated rounding error; `None` in exact mode.
    ///
    /// For Neumaier summation the compensated result differs from the true
    /// sum by at most ~2 eps * sum |x_i| plus an O(n eps^2) term; both are
    /// included.
    pub fn rounding_bound(&self) -> Option<Hp> {
        match self {
            BigAccumulator::Exact(_) => None,
            BigAccumulator::Compensated { abs, terms, .. } => {
                let eps = <Hp as Real>::eps();
                Some(*abs * eps * (Hp::TWO + eps * Hp::from(*terms)))
            }
        }
    }
}
