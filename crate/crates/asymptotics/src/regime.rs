//! Classification of `(parameters, k, mode)` triples into asymptotic
//! regimes.
//!
//! For gcd sums the two main-term theorems tile the whole parameter
//! space: the doubly-logarithmic/Form expansions govern `r <= k - 1`,
//! `s <= 2k - 1`, and the zeta-sum regime is exactly the complement
//! `r >= k` or `s >= 2k`. For lcm sums three patches are covered — the
//! prime-independent family `r = 0`, `s <= 1`, and the two dominated
//! cases with `s` strictly away from `2r + 1` — and everything else,
//! notably the `s = 2r + 1` boundary with `r >= 1`, is reported as an
//! explicit uncovered outcome rather than an error.
//!
//! Classification reads the literal `(r, s)` values only. A vanishing
//! weight can make a condition vacuous for the *constants* (see
//! `addsum_constants::f_const`), but the regime tag always follows the
//! row the literal parameters land in; the table coefficients degrade
//! gracefully (a leading weight of zero simply zeroes that term).

use addsum_catalog::ClassParams;
use std::fmt;

/// Which tuple statistic the expansion describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Gcd,
    Lcm,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Gcd => "gcd",
            Mode::Lcm => "lcm",
        }
    }
}

/// The statement a covered regime draws its main term from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    T1Form1,
    T1Form2,
    T2,
    T3Case1,
    T3Case2,
    T4,
}

impl Theorem {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::T1Form1 => "T1-Form1",
            Theorem::T1Form2 => "T1-Form2",
            Theorem::T2 => "T2",
            Theorem::T3Case1 => "T3-case1",
            Theorem::T3Case2 => "T3-case2",
            Theorem::T4 => "T4",
        }
    }
}

/// Power of `log x` in a claimed error term. Expansions with an `A`-series
/// carry an error of `x^a / (log x)^(N+1)`, which depends on the chosen
/// depth `N` rather than on the parameters alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogPower {
    Fixed(f64),
    MinusNPlusOne,
}

/// A Kronecker flag `kappa_{i,j}` appearing in the sharpened form of an
/// error term, recorded with its truth value for the classified
/// parameters. Reporting only; the error descriptor's `log_power` keeps
/// the tabulated (unsharpened) exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa {
    pub label: &'static str,
    pub active: bool,
}

/// Structured form of a claimed error term
/// `O(x^x_exp * (log x)^log_power)`, with the zeta-regime exponent
/// `nu_k` and any Kronecker refinements carried alongside.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorDescriptor {
    pub x_exp: f64,
    pub log_power: LogPower,
    /// The secondary exponent of the zeta regime; its error is
    /// `x^{mu+1} ((log x)^{nu_k} + (log x)^{-2})` and `log_power` stores
    /// the dominant of the two.
    pub nu_k: Option<f64>,
    pub kappas: Vec<Kappa>,
}

/// A classified regime: the governing statement, the table row inside it,
/// the exponent parameter `mu` where one exists, and the claimed error.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeTag {
    pub theorem: Theorem,
    /// Row identifier, matching the statement's table (e.g. `"s <= 2k-3"`
    /// or `"r = k-1, s = 2k-1"`).
    pub row: &'static str,
    /// `max(r, (s-1)/2)`, set in the zeta regime only.
    pub mu: Option<f64>,
    pub error: ErrorDescriptor,
}

/// Why no statement covers a triple: the mode and parameters, plus one
/// line per covered patch saying which of its hypotheses fails.
#[derive(Debug, Clone, PartialEq)]
pub struct UncoveredReport {
    pub mode: Mode,
    pub k: u32,
    pub r: u32,
    pub s: u32,
    pub violated: Vec<String>,
}

impl fmt::Display for UncoveredReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} sums with r = {}, s = {}, k = {}: {}",
            self.mode.as_str(),
            self.r,
            self.s,
            self.k,
            self.violated.join("; ")
        )
    }
}

/// Outcome of classification. `Uncovered` is a value, not an error: the
/// caller asked a legitimate question whose answer is "no statement
/// applies".
#[derive(Debug, Clone, PartialEq)]
pub enum Regime {
    Covered(RegimeTag),
    Uncovered(UncoveredReport),
}

impl Regime {
    pub fn tag(&self) -> Option<&RegimeTag> {
        match self {
            Regime::Covered(t) => Some(t),
            Regime::Uncovered(_) => None,
        }
    }
}

/// Classifies `(params, k, mode)`. Exactly one tag applies to any
/// admissible triple; for gcd sums every triple is admissible, and for
/// lcm sums the uncovered region is returned explicitly.
pub fn classify_regime(params: &ClassParams, k: u32, mode: Mode) -> Regime {
    assert!(k >= 1, "tuple length k must be >= 1");
    match mode {
        Mode::Gcd => Regime::Covered(classify_gcd(params, k)),
        Mode::Lcm => classify_lcm(params, k),
    }
}

fn classify_gcd(params: &ClassParams, k: u32) -> RegimeTag {
    let (r, s) = (params.r, params.s);
    let ell = params.ell;
    if r + 1 <= k && s + 1 <= 2 * k {
        if r + 2 <= k && s + 2 <= 2 * k {
            // Form 1: a pure density main term F x^k.
            if s + 3 <= 2 * k {
                RegimeTag {
                    theorem: Theorem::T1Form1,
                    row: "s <= 2k-3",
                    mu: None,
                    error: ErrorDescriptor {
                        x_exp: (k - 1) as f64,
                        log_power: LogPower::Fixed((ell + 1) as f64),
                        nu_k: None,
                        kappas: vec![
                            Kappa { label: "kappa(r,k-2)", active: r + 2 == k },
                            Kappa { label: "kappa(s,2k-3)", active: s + 3 == 2 * k },
                            Kappa { label: "kappa(ell,0)", active: ell == 0 },
                        ],
                    },
                }
            } else {
                RegimeTag {
                    theorem: Theorem::T1Form1,
                    row: "s = 2k-2",
                    mu: None,
                    error: ErrorDescriptor {
                        x_exp: k as f64 - 0.5,
                        log_power: LogPower::Fixed(-1.0),
                        nu_k: None,
                        kappas: vec![],
                    },
                }
            }
        } else {
            // Form 2: the doubly-logarithmic expansion.
            let row = if r + 2 <= k {
                "r <= k-2, s = 2k-1"
            } else if s + 2 <= 2 * k {
                "r = k-1, s <= 2k-2"
            } else {
                "r = k-1, s = 2k-1"
            };
            RegimeTag {
                theorem: Theorem::T1Form2,
                row,
                mu: None,
                error: ErrorDescriptor {
                    x_exp: k as f64,
                    log_power: LogPower::MinusNPlusOne,
                    nu_k: None,
                    kappas: vec![],
                },
            }
        }
    } else {
        // Zeta regime: r >= k or s >= 2k.
        let mu = (r as f64).max((s as f64 - 1.0) / 2.0);
        let (row, nu) = if s < 2 * r + 1 {
            ("s < 2r+1", -((r + 1) as f64) / k as f64)
        } else if s > 2 * r + 1 {
            ("s > 2r+1", 1.0 - (s + 1) as f64 / k as f64)
        } else {
            ("s = 2r+1", -((r + 1) as f64) / k as f64)
        };
        RegimeTag {
            theorem: Theorem::T2,
            row,
            mu: Some(mu),
            error: ErrorDescriptor {
                x_exp: mu + 1.0,
                log_power: LogPower::Fixed(nu.max(-2.0)),
                nu_k: Some(nu),
                kappas: vec![],
            },
        }
    }
}

fn classify_lcm(params: &ClassParams, k: u32) -> Regime {
    let (r, s) = (params.r, params.s);
    if r == 0 && s <= 1 {
        // Prime-independent family: full doubly-logarithmic expansion.
        return Regime::Covered(RegimeTag {
            theorem: Theorem::T4,
            row: if s == 0 { "s = 0" } else { "s = 1" },
            mu: None,
            error: ErrorDescriptor {
                x_exp: k as f64,
                log_power: LogPower::MinusNPlusOne,
                nu_k: None,
                kappas: vec![],
            },
        });
    }
    if (1..=k).contains(&r) && s < 2 * r + 1 {
        return Regime::Covered(RegimeTag {
            theorem: Theorem::T3Case1,
            row: "1 <= r <= k, s < 2r+1",
            mu: None,
            error: ErrorDescriptor {
                x_exp: (k + r) as f64,
                log_power: LogPower::Fixed(-2.0),
                nu_k: None,
                kappas: vec![],
            },
        });
    }
    if (2..=2 * k).contains(&s) && s > 2 * r + 1 {
        return Regime::Covered(RegimeTag {
            theorem: Theorem::T3Case2,
            row: "2 <= s <= 2k, s > 2r+1",
            mu: None,
            error: ErrorDescriptor {
                x_exp: k as f64 + (s as f64 - 1.0) / 2.0,
                log_power: LogPower::Fixed(-2.0),
                nu_k: None,
                kappas: vec![],
            },
        });
    }
    let mut violated = Vec::new();
    if r != 0 {
        violated.push(format!("the expansion patch needs r = 0 and s <= 1, but r = {r}"));
    } else {
        violated.push(format!("the expansion patch needs s <= 1, but s = {s}"));
    }
    if r == 0 || r > k {
        violated.push(format!("case 1 needs 1 <= r <= k, but r = {r} with k = {k}"));
    } else {
        violated.push(format!(
            "case 1 needs s < 2r+1, but s = {s} {} 2r+1 = {}",
            if s == 2 * r + 1 { "=" } else { ">" },
            2 * r + 1
        ));
    }
    if s < 2 || s > 2 * k {
        violated.push(format!("case 2 needs 2 <= s <= 2k, but s = {s} with k = {k}"));
    } else {
        violated.push(format!(
            "case 2 needs s > 2r+1, but s = {s} {} 2r+1 = {}",
            if s == 2 * r + 1 { "=" } else { "<" },
            2 * r + 1
        ));
    }
    Regime::Uncovered(UncoveredReport { mode: Mode::Lcm, k, r, s, violated })
}
