//! Size guards: every public engine operation validates its inputs against
//! hard limits before any work starts, so runaway requests fail fast with a
//! structured error instead of thrashing.

use thiserror::Error;

/// Upper limit for `x` in the identity-based (production) routes.
pub const MAX_X_IDENTITY: u64 = 1_000_000_000;
/// Upper limit for `x^k` in the brute-force tuple loop.
pub const MAX_XK_NAIVE: u128 = 10_000_000;
/// Upper limit for `x` in the Möbius-inversion route.
pub const MAX_X_MOBIUS: u64 = 100_000;
/// Largest supported tuple length.
pub const MAX_K: u32 = 16;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("size guard: {what} = {got} exceeds the limit {limit}")]
    Guard { what: &'static str, got: String, limit: String },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub(crate) fn check_k(k: u32) -> Result<(), EngineError> {
    if k < 1 || k > MAX_K {
        return Err(EngineError::Guard {
            what: "k",
            got: k.to_string(),
            limit: format!("1..={MAX_K}"),
        });
    }
    Ok(())
}

pub(crate) fn check_x_identity(x: u64) -> Result<(), EngineError> {
    if x < 1 || x > MAX_X_IDENTITY {
        return Err(EngineError::Guard {
            what: "x",
            got: x.to_string(),
            limit: format!("1..={MAX_X_IDENTITY}"),
        });
    }
    Ok(())
}

pub(crate) fn check_naive(x: u64, k: u32) -> Result<(), EngineError> {
    check_k(k)?;
    if x < 1 {
        return Err(EngineError::Invalid("x must be at least 1".into()));
    }
    let mut size: u128 = 1;
    for _ in 0..k {
        size = size.saturating_mul(x as u128);
    }
    if size > MAX_XK_NAIVE {
        return Err(EngineError::Guard {
            what: "x^k (naive tuple count)",
            got: size.to_string(),
            limit: MAX_XK_NAIVE.to_string(),
        });
    }
    Ok(())
}

pub(crate) fn check_mobius(x: u64, k: u32) -> Result<(), EngineError> {
    check_k(k)?;
    if x < 1 || x > MAX_X_MOBIUS {
        return Err(EngineError::Guard {
            what: "x (Mobius route)",
            got: x.to_string(),
            limit: format!("1..={MAX_X_MOBIUS}"),
        });
    }
    Ok(())
}
