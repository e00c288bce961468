use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Chirality, Solution, SystemKind, SystemSpec};
use crate::error::{Result, TangleError};
use crate::fourplat::FourPlat;
use crate::fraction::{star_vertical, TangleClass, TangleFraction};
use crate::montesinos::Closure;
use crate::oracle;
use crate::tangle::Tangle;

/// Diagram re-check of one closure pair; `None` where the diagram is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub substrate: Option<bool>,
    pub product: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub k: u32,
    pub substrate: String,
    pub product: String,
    pub expected_product: String,
    pub substrate_ok: bool,
    pub product_ok: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub system: SystemKind,
    pub class: u8,
    #[serde(rename = "P")]
    pub p: TangleFraction,
    #[serde(rename = "R")]
    pub r: TangleFraction,
    #[serde(rename = "O_c_options")]
    pub o_c_options: Vec<TangleFraction>,
    #[serde(rename = "O_f")]
    pub o_f: BTreeMap<u32, Tangle>,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    /// Whether every oracle re-check that ran agreed with the algebra.
    pub fn oracle_agrees(&self) -> bool {
        self.checks.iter().all(|c| match c.oracle {
            None => true,
            Some(v) => {
                v.substrate.is_none_or(|s| s == c.substrate_ok)
                    && v.product.is_none_or(|p| p == c.product_ok)
            }
        })
    }
}

fn accepted_targets(n: i64, chirality: Chirality) -> Vec<FourPlat> {
    let mut out = match chirality {
        Chirality::Any => vec![FourPlat::torus(n), FourPlat::torus(-n)],
        Chirality::Positive => vec![FourPlat::torus(n)],
        Chirality::Negative => vec![FourPlat::torus(-n)],
    };
    out.dedup();
    out
}

fn describe(targets: &[FourPlat]) -> String {
    targets.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" or ")
}

fn oracle_matches(o: &Tangle, partner: TangleFraction, targets: &[FourPlat]) -> Result<Option<bool>> {
    let closed = match oracle::closure_diagram(o, partner) {
        Ok(d) => d,
        Err(TangleError::ScaleExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    if closed.crossing_count() > oracle::MAX_CROSSINGS {
        return Ok(None);
    }
    let jones = oracle::jones_set(&closed)?;
    for b in targets {
        if oracle::jones_set(&oracle::reference_diagram(*b)?)? == jones {
            return Ok(Some(true));
        }
    }
    Ok(Some(false))
}

/// Checks `N(O^k + P) = b(1,0)` and `N(O^k + R) =` the `k`-th product for
/// every `k` of the spec. With `with_oracle`, each closure is also rebuilt as
/// a diagram and compared by Jones polynomial.
pub fn verify_solution(sol: &Solution, spec: &SystemSpec, with_oracle: bool) -> Result<VerifyReport> {
    if sol.class == 4 && spec.k_range.iter().any(|&k| k > 3) {
        return Err(TangleError::DomainError(
            "the Montesinos family is only classified for k <= 3".into(),
        ));
    }
    let mut checks = Vec::with_capacity(spec.k_range.len());
    for &k in &spec.k_range {
        let o = sol.o(k)?;
        if let Tangle::Montesinos(m) = &o {
            if m.non_integral_count() >= 3 {
                return Err(TangleError::UnsupportedTangle(format!(
                    "{m} has three or more non-integral summands"
                )));
            }
        }
        let chirality = match spec.chirality {
            Chirality::Any => sol.product_chirality.get(&k).copied().unwrap_or_default(),
            c => c,
        };
        let targets = accepted_targets(spec.kind.product_index(k), chirality);
        let substrate = o.closure_with(sol.p);
        let product = o.closure_with(sol.r);
        let substrate_ok = substrate == Closure::FourPlat(FourPlat::UNKNOT);
        let product_ok = product.four_plat().is_some_and(|b| targets.contains(&b));
        let oracle = if with_oracle {
            Some(OracleVerdict {
                substrate: oracle_matches(&o, sol.p, &[FourPlat::UNKNOT])?,
                product: oracle_matches(&o, sol.r, &targets)?,
            })
        } else {
            None
        };
        checks.push(CheckResult {
            k,
            substrate: substrate.to_string(),
            product: product.to_string(),
            expected_product: describe(&targets),
            substrate_ok,
            product_ok,
            pass: substrate_ok && product_ok,
            oracle,
        });
    }
    Ok(VerifyReport {
        system: spec.kind,
        class: sol.class,
        p: sol.p,
        r: sol.r,
        o_c_options: sol.o_c_options(),
        o_f: sol.o_f.clone(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// Moves `n` vertical twists onto every `O^k` and `-n` onto `P` and `R`.
pub fn compensate(sol: &Solution, n: i64) -> Result<Solution> {
    let mut out = sol.clone();
    out.o_c = TangleFraction::ZERO;
    out.p = star_vertical(sol.p, -n);
    out.r = star_vertical(sol.r, -n);
    for k in sol.o_f.keys() {
        let o = match sol.o(*k)? {
            Tangle::Rational(f) => Tangle::Rational(star_vertical(f, n)),
            Tangle::Montesinos(m) => Tangle::Montesinos(m.star(n)),
        };
        out.o_f.insert(*k, o);
    }
    Ok(out)
}

/// Outcome of the three constraints on solutions with an infinite `O_f`;
/// `None` means the hypothesis does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub r_vertical_or_unit: Option<bool>,
    pub p_in_zero_or_two: Option<bool>,
    pub infinite_index_zero: Option<bool>,
    pub violations: Vec<String>,
}

impl ConstraintReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for a solution with integral `P`:
/// (i) some `O_f^i = ∞` forces `R` vertical or `(±1)`;
/// (ii) `∞` and integral `O_f` together force `P ∈ {0, ±2}`;
/// (iii) `O_f^i = ∞` with `P ≠ 0` forces `i = 0`, and then any integral `O_f^j` has `j = 1`.
pub fn class2_constraints_check(sol: &Solution) -> Result<ConstraintReport> {
    let mut infinite = Vec::new();
    let mut integral = Vec::new();
    for k in sol.o_f.keys() {
        if let Tangle::Rational(f) = sol.o(*k)? {
            match f.classify() {
                TangleClass::Infinity => infinite.push(*k),
                TangleClass::Integral => integral.push(*k),
                _ => {}
            }
        }
    }
    let mut violations = Vec::new();
    let i_check = (!infinite.is_empty()).then(|| {
        let ok = sol.r.classify() == TangleClass::Vertical || matches!(sol.r.as_integer(), Some(1 | -1));
        if !ok {
            violations.push(format!("O_f^{} = (inf) but R = {} is neither vertical nor (+-1)", infinite[0], sol.r));
        }
        ok
    });
    let ii_check = (!infinite.is_empty() && !integral.is_empty()).then(|| {
        let ok = matches!(sol.p.as_integer(), Some(0 | 2 | -2));
        if !ok {
            violations.push(format!("infinite and integral O_f together but P = {}", sol.p));
        }
        ok
    });
    let iii_check = (!infinite.is_empty() && sol.p != TangleFraction::ZERO).then(|| {
        let mut ok = true;
        if infinite.iter().any(|&i| i != 0) {
            violations.push(format!("O_f^{} = (inf) with P = {}", infinite[0], sol.p));
            ok = false;
        }
        if let Some(j) = integral.iter().find(|&&j| j != 1) {
            violations.push(format!("integral O_f^{j} alongside an infinite O_f with P = {}", sol.p));
            ok = false;
        }
        ok
    });
    Ok(ConstraintReport {
        r_vertical_or_unit: i_check,
        p_in_zero_or_two: ii_check,
        infinite_index_zero: iii_check,
        violations,
    })
}
