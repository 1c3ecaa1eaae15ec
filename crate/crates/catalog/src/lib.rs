//! The catalog of additive arithmetic functions the workspace computes with.
//!
//! Every function here is *additive* (`f(mn) = f(m) + f(n)` for coprime
//! `m, n`) and determined by its values on prime powers through a common
//! parametrization: a prime part `f(p) = lambda1 * p^r` and increments
//! `f(p^alpha) - f(p^(alpha-1)) = lambda2 * p^s * g(alpha)` for
//! `alpha >= 2`, where `g` grows at most polynomially,
//! `|g(alpha)| <= C0 * alpha^ell`.
//!
//! The parameters `(r, s, ell, lambda1, lambda2)` are what every
//! downstream sum formula and asymptotic constant is expressed in; the
//! concrete `g` enters through a handful of closed forms listed in
//! [`GForm`]. Built-in members — the classical `Omega`, `omega`, the
//! sum-of-prime-divisors functions and friends — live in [`builtins`],
//! and [`membership`] re-checks the defining identities numerically for
//! any spec.

pub mod builtins;
pub mod gform;
pub mod membership;
pub mod params;
pub mod spec;

pub use builtins::{builtin_names, parse_spec};
pub use gform::GForm;
pub use membership::{verify_class_membership, MembershipReport};
pub use params::ClassParams;
pub use spec::{AdditiveFunctionSpec, DirectForm};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown function name `{0}`")]
    UnknownName(String),
    #[error("bad parameter in `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
}
