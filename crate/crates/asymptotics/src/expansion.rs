//! Assembled main-term expansions for gcd and lcm sums.
//!
//! An [`AsymptoticExpansion`] is the closed-form side of a sum: a regime
//! tag plus a list of evaluable terms `coef * x^a (log x)^b (loglog x)^c`
//! whose coefficients were computed once, at build time. Building is the
//! expensive step (prime-zeta series, quadrature); evaluation afterwards
//! is a handful of floating-point operations, so one expansion per
//! `(function, k, N)` serves a whole grid of `x` values.

use crate::pool::ConstantPool;
use crate::regime::{classify_regime, Mode, Regime, RegimeTag, Theorem, UncoveredReport};
use addsum_catalog::AdditiveFunctionSpec;
use addsum_constants::{
    big_a_coeff, d_coeff, f_const, g_const, h_const, zeta_alt_sum, ConstError, ConstantValue,
};
use thiserror::Error;

/// Default series depth `N` for expansions carrying an `A`-series.
pub const DEFAULT_N: u32 = 3;
/// Largest accepted depth. The coefficient integrals stay accurate well
/// past this, but the expansion beyond `(log x)^{-8}` is numerically
/// invisible at any feasible `x`.
pub const MAX_N: u32 = 8;

#[derive(Debug, Error)]
pub enum AsymError {
    #[error("no covered regime for {0}")]
    Uncovered(UncoveredReport),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Constant(#[from] ConstError),
}

/// A named constant appearing in a regime's formula, with the error bound
/// its computation reported.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficient {
    pub name: String,
    pub value: f64,
    pub err_bound: f64,
}

impl Coefficient {
    fn exact(name: impl Into<String>, value: f64) -> Self {
        Coefficient { name: name.into(), value, err_bound: 0.0 }
    }

    fn computed(name: impl Into<String>, cv: &ConstantValue) -> Self {
        Coefficient { name: name.into(), value: cv.to_f64(), err_bound: cv.err_bound }
    }
}

/// One evaluable summand `coef * x^x_exp * (log x)^log_exp * (loglog x)^loglog_exp`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: String,
    pub coef: f64,
    pub x_exp: f64,
    pub log_exp: f64,
    pub loglog_exp: u32,
}

impl Term {
    pub fn eval(&self, x: f64) -> f64 {
        let lx = x.ln();
        let mut v = self.coef * x.powf(self.x_exp);
        if self.log_exp != 0.0 {
            v *= lx.powf(self.log_exp);
        }
        if self.loglog_exp > 0 {
            v *= lx.ln().powi(self.loglog_exp as i32);
        }
        v
    }
}

/// A term's value at a specific `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub label: String,
    pub value: f64,
}

/// A fully built expansion: regime, depth, the named coefficients of the
/// regime formula, and the evaluable terms assembled from them.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticExpansion {
    pub regime: RegimeTag,
    pub n: u32,
    pub coefficients: Vec<Coefficient>,
    pub terms: Vec<Term>,
}

/// An expansion evaluated at one point, with the per-term breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub regime: RegimeTag,
    pub n: u32,
    pub x: f64,
    pub value: f64,
    pub coefficients: Vec<Coefficient>,
    pub components: Vec<Component>,
}

impl AsymptoticExpansion {
    /// The predicted main-term value at `x`. Requires `x > e` so that
    /// `log x > 1` and `loglog x > 0`.
    pub fn value_at(&self, x: f64) -> Result<f64, AsymError> {
        check_x(x)?;
        Ok(self.terms.iter().map(|t| t.eval(x)).sum())
    }

    /// The per-term breakdown at `x`, in display order.
    pub fn components_at(&self, x: f64) -> Result<Vec<Component>, AsymError> {
        check_x(x)?;
        Ok(self
            .terms
            .iter()
            .map(|t| Component { label: t.label.clone(), value: t.eval(x) })
            .collect())
    }

    /// Value and breakdown packaged with the regime metadata.
    pub fn evaluate(&self, x: f64) -> Result<Evaluation, AsymError> {
        let components = self.components_at(x)?;
        Ok(Evaluation {
            regime: self.regime.clone(),
            n: self.n,
            x,
            value: components.iter().map(|c| c.value).sum(),
            coefficients: self.coefficients.clone(),
            components,
        })
    }
}

fn check_x(x: f64) -> Result<(), AsymError> {
    if !(x > std::f64::consts::E) {
        return Err(AsymError::Domain(format!(
            "asymptotic evaluation needs x > e, got {x}"
        )));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<(), AsymError> {
    if n < 1 || n > MAX_N {
        return Err(AsymError::Domain(format!(
            "series depth N must satisfy 1 <= N <= {MAX_N}, got {n}"
        )));
    }
    Ok(())
}

/// Builds the gcd-sum expansion for `spec` at tuple length `k`, series
/// depth `n` (used by the two expansion regimes, ignored by the others).
pub fn build_gcd_expansion(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    check_n(n)?;
    let tag = match classify_regime(&spec.params, k, Mode::Gcd) {
        Regime::Covered(t) => t,
        Regime::Uncovered(u) => return Err(AsymError::Uncovered(u)),
    };
    match tag.theorem {
        Theorem::T1Form1 => build_form1(pool, spec, k, tag, n),
        Theorem::T1Form2 => build_form2(pool, spec, k, tag, n),
        Theorem::T2 => build_zeta_regime(pool, spec, k, tag, n),
        _ => unreachable!("gcd classification only yields gcd regimes"),
    }
}

/// Builds the lcm-sum expansion for `spec` at tuple length `k`.
pub fn build_lcm_expansion(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    check_n(n)?;
    let tag = match classify_regime(&spec.params, k, Mode::Lcm) {
        Regime::Covered(t) => t,
        Regime::Uncovered(u) => return Err(AsymError::Uncovered(u)),
    };
    match tag.theorem {
        Theorem::T4 => build_lcm_expansion_family(pool, spec, k, tag, n),
        Theorem::T3Case1 => build_lcm_case1(pool, spec, k, tag, n),
        Theorem::T3Case2 => build_lcm_case2(pool, spec, k, tag, n),
        _ => unreachable!("lcm classification only yields lcm regimes"),
    }
}

/// Builds and evaluates in one call; prefer building once when scanning a
/// grid of `x` values.
pub fn eval_gcd_asymptotic(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    x: f64,
    n: u32,
) -> Result<Evaluation, AsymError> {
    build_gcd_expansion(pool, spec, k, n)?.evaluate(x)
}

/// Lcm counterpart of [`eval_gcd_asymptotic`].
pub fn eval_lcm_asymptotic(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    x: f64,
    n: u32,
) -> Result<Evaluation, AsymError> {
    build_lcm_expansion(pool, spec, k, n)?.evaluate(x)
}

/// The leading weight of a regime row, assembled from the class weights:
/// `lambda1` when the prime layer contributes at top order, plus
/// `lambda2 g(2)` when the squares layer does. Each table row activates
/// its own combination.
fn loglog_weight(spec: &AdditiveFunctionSpec, with_l1: bool, with_l2g2: bool) -> f64 {
    let mut c = 0i128;
    if with_l1 {
        c += spec.params.lambda1 as i128;
    }
    if with_l2g2 {
        c += spec.params.lambda2 as i128 * spec.g_value(2);
    }
    c as f64
}

fn build_form1(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    let f = f_const(&pool.pz, spec, k)?;
    Ok(AsymptoticExpansion {
        regime: tag,
        n,
        coefficients: vec![Coefficient::computed("F", &f)],
        terms: vec![Term {
            label: format!("F*x^{k}"),
            coef: f.to_f64(),
            x_exp: k as f64,
            log_exp: 0.0,
            loglog_exp: 0,
        }],
    })
}

fn build_form2(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    let crit_r = spec.params.r + 1 == k;
    let crit_s = spec.params.s + 1 == 2 * k;
    let c = loglog_weight(spec, crit_r, crit_s);
    let g = g_const(&pool.pz, spec, k)?;

    let mut coefficients =
        vec![Coefficient::exact("C", c), Coefficient::computed("G", &g)];
    if crit_s {
        // The bracket constant D_k enters G on the critical-s rows;
        // expose it so the breakdown is checkable.
        coefficients.push(Coefficient::computed("D", &d_coeff(&pool.pz, spec, k)?));
    }

    let mut terms = vec![
        Term {
            label: format!("C*x^{k}*loglogx"),
            coef: c,
            x_exp: k as f64,
            log_exp: 0.0,
            loglog_exp: 1,
        },
        Term {
            label: format!("G*x^{k}"),
            coef: g.to_f64(),
            x_exp: k as f64,
            log_exp: 0.0,
            loglog_exp: 0,
        },
    ];
    push_a_series(pool, &mut coefficients, &mut terms, k, k, c, n)?;
    Ok(AsymptoticExpansion { regime: tag, n, coefficients, terms })
}

fn build_zeta_regime(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    let mu = tag.mu.expect("zeta regime always carries mu");
    let s = spec.params.s;
    let r = spec.params.r;
    let c = loglog_weight(spec, s <= 2 * r + 1, s >= 2 * r + 1);
    let zs = zeta_alt_sum(pool.zeta(), k, mu + 1.0)?;
    let coefficients =
        vec![Coefficient::exact("C", c), Coefficient::computed("Z", &zs)];
    let terms = vec![Term {
        label: format!("C*Z/(mu+1)*x^{}/logx", mu + 1.0),
        coef: c * zs.to_f64() / (mu + 1.0),
        x_exp: mu + 1.0,
        log_exp: -1.0,
        loglog_exp: 0,
    }];
    Ok(AsymptoticExpansion { regime: tag, n, coefficients, terms })
}

fn build_lcm_expansion_family(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    // r = 0, s <= 1: C is the k = 1 expansion weight, scaled by k.
    let c = loglog_weight(spec, true, spec.params.s == 1);
    let h = h_const(&pool.pz, spec, k)?;
    let mut coefficients =
        vec![Coefficient::exact("C", c), Coefficient::computed("H", &h)];
    let mut terms = vec![
        Term {
            label: format!("k*C*x^{k}*loglogx"),
            coef: k as f64 * c,
            x_exp: k as f64,
            log_exp: 0.0,
            loglog_exp: 1,
        },
        Term {
            label: format!("H*x^{k}"),
            coef: h.to_f64(),
            x_exp: k as f64,
            log_exp: 0.0,
            loglog_exp: 0,
        },
    ];
    // The logarithmic series reuses the k = 1 coefficients A(1,h).
    push_a_series(pool, &mut coefficients, &mut terms, 1, k, k as f64 * c, n)?;
    Ok(AsymptoticExpansion { regime: tag, n, coefficients, terms })
}

fn build_lcm_case1(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    let r = spec.params.r;
    let l1 = spec.params.lambda1 as f64;
    let z = pool.zeta().zeta((r + 1) as f64)?;
    let coefficients = vec![
        Coefficient::exact("C", l1),
        Coefficient::computed(format!("zeta({})", r + 1), &z),
    ];
    let terms = vec![Term {
        label: format!("k*C*zeta({})/{}*x^{}/logx", r + 1, r + 1, k + r),
        coef: k as f64 * l1 * z.to_f64() / (r + 1) as f64,
        x_exp: (k + r) as f64,
        log_exp: -1.0,
        loglog_exp: 0,
    }];
    Ok(AsymptoticExpansion { regime: tag, n, coefficients, terms })
}

fn build_lcm_case2(
    pool: &ConstantPool,
    spec: &AdditiveFunctionSpec,
    k: u32,
    tag: RegimeTag,
    n: u32,
) -> Result<AsymptoticExpansion, AsymError> {
    let s = spec.params.s;
    let c = spec.params.lambda2 as i128 * spec.g_value(2);
    let half = (s as f64 + 1.0) / 2.0;
    let z = pool.zeta().zeta(half)?;
    let coefficients = vec![
        Coefficient::exact("C", c as f64),
        Coefficient::computed(format!("zeta({half})"), &z),
    ];
    let terms = vec![Term {
        label: format!("2k*C*zeta({half})/{}*x^{}/logx", s + 1, k as f64 + half - 1.0),
        coef: 2.0 * k as f64 * c as f64 * z.to_f64() / (s + 1) as f64,
        x_exp: k as f64 + half - 1.0,
        log_exp: -1.0,
        loglog_exp: 0,
    }];
    Ok(AsymptoticExpansion { regime: tag, n, coefficients, terms })
}

/// Appends the logarithmic series `lead * sum_{h<n} A(a_k,h) / (log x)^{h+1}`
/// times `x^{x_pow}` to `terms`, recording each `A(a_k,h)` as a coefficient.
fn push_a_series(
    pool: &ConstantPool,
    coefficients: &mut Vec<Coefficient>,
    terms: &mut Vec<Term>,
    a_k: u32,
    x_pow: u32,
    lead: f64,
    n: u32,
) -> Result<(), AsymError> {
    for h in 0..n {
        let a = big_a_coeff(&pool.gl, a_k, h)?;
        coefficients.push(Coefficient::computed(format!("A({a_k},{h})"), &a));
        terms.push(Term {
            label: format!("lead*A({a_k},{h})*x^{x_pow}/(logx)^{}", h + 1),
            coef: lead * a.to_f64(),
            x_exp: x_pow as f64,
            log_exp: -((h + 1) as f64),
            loglog_exp: 0,
        });
    }
    Ok(())
}
