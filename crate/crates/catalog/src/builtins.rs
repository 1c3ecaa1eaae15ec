//! Constructors for the built-in catalog members and the name parser the
//! CLI uses.

use crate::gform::GForm;
use crate::params::ClassParams;
use crate::spec::{AdditiveFunctionSpec, DirectForm};
use crate::CatalogError;

/// Largest exponent parameter accepted for `Omega:ell`, `T:ell`, `A_l:ell`.
/// Keeps every `g` evaluation comfortably inside `i128` for all prime
/// powers below 10^9 (`alpha <= 30`).
pub const MAX_ELL: u32 = 16;

/// Largest divisibility order accepted for `omega_m:m`.
pub const MAX_M: u32 = 60;

/// `Omega_ell(n) = sum of alpha^ell over prime powers p^alpha || n`.
///
/// `ell = 1` is the classical "number of prime factors with multiplicity";
/// `ell = 0` degenerates to the distinct-prime count.
pub fn omega_ell(ell: u32) -> AdditiveFunctionSpec {
    let (class_ell, g, c0) = if ell == 0 {
        // alpha^0 - (alpha-1)^0 = 0: supported on primes only.
        (-1, GForm::Zero, 1.0)
    } else {
        // |alpha^ell - (alpha-1)^ell| <= ell * alpha^(ell-1).
        (ell as i32 - 1, GForm::PowerDiff { ell }, ell as f64)
    };
    AdditiveFunctionSpec {
        name: if ell == 1 { "Omega".into() } else { format!("Omega:{ell}") },
        params: ClassParams { r: 0, s: 0, ell: class_ell, lambda1: 1, lambda2: 1, c0 },
        g,
        direct: DirectForm::ExponentPower { ell },
    }
}

/// `T_ell(n) = sum of C(alpha + ell - 1, ell) over p^alpha || n` — the
/// additive function whose increments are the binomial counts
/// `g(alpha) = C(alpha + ell - 2, ell - 1)`. `T_1 = Omega`.
pub fn t_ell(ell: u32) -> AdditiveFunctionSpec {
    assert!(ell >= 1, "T needs ell >= 1");
    // C(alpha+ell-2, ell-1) <= (alpha+ell-2)^(ell-1)/(ell-1)! and
    // alpha + ell - 2 <= alpha (ell+2)/2 for alpha >= 2, which gives the
    // polynomial bound below.
    let mut c0 = 1.0f64;
    for i in 1..ell {
        c0 *= (ell as f64 + 2.0) / 2.0 / i as f64;
    }
    AdditiveFunctionSpec {
        name: format!("T:{ell}"),
        params: ClassParams { r: 0, s: 0, ell: ell as i32 - 1, lambda1: 1, lambda2: 1, c0 },
        g: GForm::Binom { ell },
        direct: DirectForm::BinomCount { ell },
    }
}

/// `A(n) = sum of alpha * p over p^alpha || n` (sum of prime factors with
/// multiplicity).
pub fn a_classic() -> AdditiveFunctionSpec {
    AdditiveFunctionSpec {
        name: "A".into(),
        params: ClassParams { r: 1, s: 1, ell: 0, lambda1: 1, lambda2: 1, c0: 1.0 },
        g: GForm::One,
        direct: DirectForm::PrimeTimesExponentPower { ell: 1 },
    }
}

/// `A*(n) = sum of p over p | n` (distinct prime factors).
pub fn a_star() -> AdditiveFunctionSpec {
    AdditiveFunctionSpec {
        name: "Astar".into(),
        params: ClassParams { r: 1, s: 0, ell: -1, lambda1: 1, lambda2: 0, c0: 1.0 },
        g: GForm::Zero,
        direct: DirectForm::Prime,
    }
}

/// `A_ell(n) = sum of alpha^ell * p over p^alpha || n`; `A_1 = A`.
pub fn a_ell(ell: u32) -> AdditiveFunctionSpec {
    assert!(ell >= 1, "A_l needs ell >= 1");
    AdditiveFunctionSpec {
        name: format!("A_l:{ell}"),
        params: ClassParams {
            r: 1,
            s: 1,
            ell: ell as i32 - 1,
            lambda1: 1,
            lambda2: 1,
            c0: ell as f64,
        },
        g: GForm::PowerDiff { ell },
        direct: DirectForm::PrimeTimesExponentPower { ell },
    }
}

/// `B(n) = A(n) - A*(n) = sum of (alpha - 1) * p over p^alpha || n`:
/// vanishes on squarefree numbers.
pub fn b_func() -> AdditiveFunctionSpec {
    AdditiveFunctionSpec {
        name: "B".into(),
        params: ClassParams { r: 0, s: 1, ell: 0, lambda1: 0, lambda2: 1, c0: 1.0 },
        g: GForm::One,
        direct: DirectForm::PrimeTimesExponentMinusOne,
    }
}

/// `omega_m(n) = number of primes p with p^m | n`. `m = 1` is the classical
/// distinct-prime count `omega`.
pub fn omega_m(m: u32) -> AdditiveFunctionSpec {
    assert!(m >= 1, "omega_m needs m >= 1");
    if m == 1 {
        AdditiveFunctionSpec {
            name: "omega".into(),
            params: ClassParams { r: 0, s: 0, ell: -1, lambda1: 1, lambda2: 0, c0: 1.0 },
            g: GForm::Zero,
            direct: DirectForm::MthPowerIndicator { m: 1 },
        }
    } else {
        AdditiveFunctionSpec {
            name: format!("omega_m:{m}"),
            params: ClassParams { r: 0, s: 0, ell: 0, lambda1: 0, lambda2: 1, c0: 1.0 },
            g: GForm::Indicator { m },
            direct: DirectForm::MthPowerIndicator { m },
        }
    }
}

/// The self-referential prime-power-recursive function: `f(p^alpha)` equals
/// the function's own value at `alpha`. Bounded by `Omega(n) + 1`, hence
/// the class bound `|g(alpha)| <= 2 alpha`.
///
/// Note the additive-part convention `f(1) = 0` (the classical table sets
/// the value 1 at n = 1; that constant offset never affects increments or
/// densities).
pub fn oeis_f() -> AdditiveFunctionSpec {
    AdditiveFunctionSpec {
        name: "oeis_f".into(),
        params: ClassParams { r: 0, s: 0, ell: 1, lambda1: 1, lambda2: 1, c0: 2.0 },
        g: GForm::OeisDiff,
        direct: DirectForm::SelfRecursive,
    }
}

/// A representative list of every builtin shape, for tests and `--list`.
pub fn all_builtins() -> Vec<AdditiveFunctionSpec> {
    vec![
        omega_ell(0),
        omega_ell(1),
        omega_ell(2),
        omega_ell(3),
        t_ell(1),
        t_ell(2),
        t_ell(3),
        a_classic(),
        a_star(),
        a_ell(1),
        a_ell(2),
        a_ell(3),
        b_func(),
        omega_m(1),
        omega_m(2),
        omega_m(3),
        oeis_f(),
    ]
}

/// Accepted name patterns, for help text.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "A", "Astar", "B", "Omega", "Omega:<ell>", "T:<ell>", "A_l:<ell>", "omega",
        "omega_m:<m>", "oeis_f",
    ]
}

/// Parses a function name as accepted on the command line.
///
/// Parametrized members use `name:<integer>`; `omega:<m>` is accepted as a
/// shorthand for `omega_m:<m>`.
pub fn parse_spec(name: &str) -> Result<AdditiveFunctionSpec, CatalogError> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let parse_arg = |what: &str, min: u32, max: u32| -> Result<u32, CatalogError> {
        let raw = arg.ok_or_else(|| CatalogError::BadParameter {
            name: name.into(),
            reason: format!("`{head}` needs a parameter, e.g. `{head}:2`"),
        })?;
        let v: u32 = raw.trim().parse().map_err(|_| CatalogError::BadParameter {
            name: name.into(),
            reason: format!("`{raw}` is not a non-negative integer"),
        })?;
        if v < min || v > max {
            return Err(CatalogError::BadParameter {
                name: name.into(),
                reason: format!("{what} must be in {min}..={max}"),
            });
        }
        Ok(v)
    };
    match head {
        "A" if arg.is_none() => Ok(a_classic()),
        "Astar" if arg.is_none() => Ok(a_star()),
        "B" if arg.is_none() => Ok(b_func()),
        "oeis_f" if arg.is_none() => Ok(oeis_f()),
        "Omega" => {
            if arg.is_none() {
                Ok(omega_ell(1))
            } else {
                Ok(omega_ell(parse_arg("ell", 0, MAX_ELL)?))
            }
        }
        "T" => Ok(t_ell(parse_arg("ell", 1, MAX_ELL)?)),
        "A_l" => Ok(a_ell(parse_arg("ell", 1, MAX_ELL)?)),
        "omega" => {
            if arg.is_none() {
                Ok(omega_m(1))
            } else {
                Ok(omega_m(parse_arg("m", 1, MAX_M)?))
            }
        }
        "omega_m" => Ok(omega_m(parse_arg("m", 1, MAX_M)?)),
        _ => Err(CatalogError::UnknownName(name.into())),
    }
}
