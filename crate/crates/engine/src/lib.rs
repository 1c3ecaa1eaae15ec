//! Exact computation of `sum f(gcd(n_1..n_k))` and `sum f(lcm(n_1..n_k))`
//! over all k-tuples with entries up to `x`, for the additive functions in
//! the catalog.
//!
//! The workhorse is the prime-power identity: for additive `f`,
//!
//! ```text
//! sum_{n_1..n_k <= x} f(gcd) = sum_{p <= x} f(p) floor(x/p)^k
//!                            + sum_{p^a <= x, a >= 2} (f(p^a) - f(p^(a-1))) floor(x/p^a)^k
//! ```
//!
//! and its lcm counterpart via inclusion–exclusion over sub-tuples. All
//! integer work is exact (`BigInt`); the only real-valued quantity here is
//! the fractional-part power sum, carried in the 256-bit scalar with
//! compensated accumulation. Three independent evaluation routes — the
//! identity above, a brute-force tuple loop, and Möbius inversion — allow
//! the engine to cross-check itself at small sizes.

pub mod fracsum;
pub mod gcd_sum;
pub mod guards;
pub mod lcm_sum;
pub mod prime_sums;
pub mod result;
pub mod transform;

pub use fracsum::frac_power_sum;
pub use gcd_sum::{additive_value_table, sum_gcd_exact, sum_gcd_mobius, sum_gcd_naive};
pub use guards::EngineError;
pub use lcm_sum::sum_lcm_exact;
pub use prime_sums::{pi_beta, weighted_prime_floor_sum, weighted_primepower_floor_sum};
pub use result::{ExactSumResult, Method, Quantity};
pub use transform::{transform_case1, transform_case2, TransformSides};
