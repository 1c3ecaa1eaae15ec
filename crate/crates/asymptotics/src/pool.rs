//! Shared numeric engines for expansion building.

use addsum_constants::{GaussLegendre, PrimeZetaEngine, ZetaEngine};

/// The engines every coefficient evaluation draws on: a prime-zeta
/// engine (which owns a zeta engine) and a quadrature rule for the
/// fractional-part integrals. Building one is cheap; sharing one across
/// many expansions additionally shares the memoised prime-zeta values.
pub struct ConstantPool {
    pub pz: PrimeZetaEngine,
    pub gl: GaussLegendre,
}

impl ConstantPool {
    pub fn new() -> Self {
        ConstantPool { pz: PrimeZetaEngine::new(), gl: GaussLegendre::new16() }
    }

    pub fn zeta(&self) -> &ZetaEngine {
        self.pz.zeta_engine()
    }
}

impl Default for ConstantPool {
    fn default() -> Self {
        Self::new()
    }
}
