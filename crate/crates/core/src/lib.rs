//! Low-level building blocks shared by the whole workspace: the high-precision
//! scalar abstraction, prime generation, Möbius tables, exact big-integer
//! helpers and deterministic accumulation/reduction primitives.
//!
//! Everything downstream (the exact summation engine, the constant evaluators,
//! the asymptotic formulas) is built on the types exported here, so this crate
//! is deliberately small, dependency-light and heavily tested.

pub mod accum;
pub mod bigmath;
pub mod mobius;
pub mod parallel;
pub mod primepow;
pub mod real;
pub mod sieve;

/// The high-precision scalar used for every real-valued computation in the
/// workspace: an octuple-precision (256-bit) binary float with a 237-bit
/// significand, i.e. roughly 71 decimal digits.
///
/// All constant evaluation targets at least 30 correct digits; carrying ~71
/// digits internally means rounding noise stays far below every reported
/// error bound without any further bookkeeping.
pub type Hp = f256::f256;

pub use accum::{BigAccumulator, SumValue};
pub use real::Real;
pub use sieve::PrimeRange;
