//! High-precision evaluation of every constant appearing in the
//! asymptotic expansions: zeta and prime-zeta values, the Euler and
//! Mertens constants, the boundary coefficients `a_{j,h,l,alpha}` and
//! `A_{k,h}`, the leading and secondary densities `F`, `G`, `D_k`, `H_k`
//! assembled from prime double sums, the alternating zeta sums and their
//! truncated `xi` counterparts, logarithmic-integral comparators, and the
//! rigorous prime-power tail bound.
//!
//! All arithmetic runs in the 256-bit scalar. Every evaluator returns a
//! [`ConstantValue`] carrying the value, a rigorous (if conservative)
//! error bound, and a tag naming the method, so downstream consumers can
//! decide how many digits to trust. Methods that would silently lose the
//! target precision outside their domain refuse the input instead.

pub mod acoeff;
pub mod bernoulli;
pub mod gamma;
pub mod libeta;
pub mod prime_zeta;
pub mod primesums;
pub mod quadrature;
pub mod tails;
pub mod value;
pub mod zeta;
pub mod zsums;

pub use acoeff::{a_coeff, a_coeff_with, big_a_coeff};
pub use bernoulli::bernoulli_numbers;
pub use gamma::{euler_gamma, mertens_const};
pub use libeta::li_beta;
pub use prime_zeta::PrimeZetaEngine;
pub use primesums::{d_coeff, f_const, g_const, h_const, prime_double_sum};
pub use quadrature::GaussLegendre;
pub use tails::{toth_tail_bound, toth_tail_partial, TailBound};
pub use value::{ConstError, ConstantValue};
pub use zeta::ZetaEngine;
pub use zsums::{xi_truncated, zeta_alt_sum};
