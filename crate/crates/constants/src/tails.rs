//! The prime-power tail bound `sum_{alpha > z} alpha^l / p^{alpha k} <= 3 z^l / p^{kz}`.
//!
//! The hypothesis `k log p > max(l max(1, log z)/z, l/z + 1/2)` makes the
//! summand decay fast enough past `alpha = z` for the geometric comparison
//! to close; callers that fail it must raise `z` or `p`.

use addsum_core::{Hp, Real};

use crate::value::ConstError;

/// A certified tail bound, tagged with the parameters it was issued for.
#[derive(Debug, Clone, Copy)]
pub struct TailBound {
    pub p: u64,
    pub k: u32,
    pub ell: u32,
    pub z: f64,
    pub bound: Hp,
}

/// Checks the hypothesis and returns `3 z^l / p^{kz}`.
pub fn toth_tail_bound(p: u64, k: u32, ell: u32, z: f64) -> Result<TailBound, ConstError> {
    if p < 2 || k == 0 || z < 1.0 {
        return Err(ConstError::Domain(format!(
            "tail bound needs p >= 2, k >= 1, z >= 1; got p = {p}, k = {k}, z = {z}"
        )));
    }
    let log_p = (p as f64).ln();
    let log_z = z.ln();
    let threshold = (ell as f64 * log_z.max(1.0) / z).max(ell as f64 / z + 0.5);
    if k as f64 * log_p <= threshold {
        return Err(ConstError::Domain(format!(
            "hypothesis fails: k log p = {:.4} is not above max(l max(1, log z)/z, l/z + 1/2) = {:.4}",
            k as f64 * log_p,
            threshold
        )));
    }
    let zh = Hp::from_f64(z);
    let bound = Hp::from_u64(3)
        * zh.powi(ell as i64)
        * (-Hp::from_u64(k as u64) * zh * Hp::from_u64(p).ln()).exp();
    Ok(TailBound { p, k, ell, z, bound })
}

/// The first `terms` summands of the actual tail, `sum alpha^l p^{-alpha k}`
/// over `alpha > z`: a lower bound on the quantity the lemma dominates.
pub fn toth_tail_partial(p: u64, k: u32, ell: u32, z: f64, terms: u32) -> Hp {
    let start = z.floor() as u64 + 1;
    let step = Hp::from_u64(p).powi(-(k as i64));
    let mut power = Hp::from_u64(p).powi(-((start * k as u64) as i64));
    let mut acc = Hp::ZERO;
    for alpha in start..start + terms as u64 {
        acc = acc + Hp::from_u64(alpha).powi(ell as i64) * power;
        power = power * step;
    }
    acc
}
