//! The recombination tangle equations
//!
//! ```text
//! N(O^k + P) = b(1,0)                        substrate, every k
//! N(O^k + R) = b(2k+1,1)  or  b(2k,1)        product: inverted / direct sites
//! ```
//!
//! with `O^k = O_f^k + O_c` and `O_c` integral: parametric solution
//! families, their verification, and brute-force searches.

mod catalogue;
mod family;
mod search;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::fourplat::FourPlat;
use crate::fraction::{add_horizontal, TangleFraction};
use crate::tangle::Tangle;

pub use catalogue::{catalogue, ClassDescriptor};
pub use family::{
    canonical_bezout, chiral_refinement, family_member, fourth_solution, parametric_family,
    r_options_for_integral_p, BezoutPair, FamilyEntry, FamilyOption, Linear, LinearFraction, RShape,
    SolutionFamily,
};
pub use search::{
    brute_force_montesinos, brute_force_montesinos_sequential, brute_force_rational,
    brute_force_rational_sequential, darcy_family, montesinos_classes,
    normalize_montesinos_hit, reduced_fractions, value_cmp, xer_demo, DarcyFamily, MontesinosHit,
};
pub use verify::{
    class2_constraints_check, compensate, verify_solution, CheckResult, ConstraintReport,
    OracleVerdict, VerifyReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Direct,
    Inverted,
}

impl SystemKind {
    /// Crossing number of the `k`-th product torus knot or link.
    pub fn product_index(self, k: u32) -> i64 {
        match self {
            SystemKind::Direct => 2 * k as i64,
            SystemKind::Inverted => 2 * k as i64 + 1,
        }
    }

    /// Offset `c` in `n = 2k + c + t`.
    fn offset(self) -> i64 {
        match self {
            SystemKind::Direct => 0,
            SystemKind::Inverted => 1,
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::Direct => "direct",
            SystemKind::Inverted => "inverted",
        })
    }
}

/// Which of the paired signs `±`/`∓` a family takes: the upper or the lower one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Upper => 1,
            Branch::Lower => -1,
        }
    }

    pub fn both() -> [Branch; 2] {
        [Branch::Upper, Branch::Lower]
    }
}

/// Required handedness of the products. `b(n,1)` is the positive torus link.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    #[default]
    Any,
    Positive,
    Negative,
}

impl Chirality {
    pub fn accepts(self, n: i64, x: FourPlat) -> bool {
        match self {
            Chirality::Any => x == FourPlat::torus(n) || x == FourPlat::torus(-n),
            Chirality::Positive => x == FourPlat::torus(n),
            Chirality::Negative => x == FourPlat::torus(-n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub k_range: Vec<u32>,
    pub branch: Branch,
    pub chirality: Chirality,
}

impl SystemSpec {
    pub fn new(kind: SystemKind) -> Self {
        Self {
            kind,
            k_range: vec![0, 1, 2, 3],
            branch: Branch::Upper,
            chirality: Chirality::Any,
        }
    }

    pub fn inverted() -> Self {
        Self::new(SystemKind::Inverted)
    }

    pub fn direct() -> Self {
        Self::new(SystemKind::Direct)
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    pub fn with_chirality(mut self, chirality: Chirality) -> Self {
        self.chirality = chirality;
        self
    }

    pub fn with_k_range(mut self, ks: impl IntoIterator<Item = u32>) -> Self {
        self.k_range = ks.into_iter().collect();
        self
    }

    pub fn product_target(&self, k: u32) -> i64 {
        self.kind.product_index(k)
    }
}

fn zero() -> TangleFraction {
    TangleFraction::ZERO
}

fn is_zero(f: &TangleFraction) -> bool {
    *f == TangleFraction::ZERO
}

/// One concrete solution `(P, R, O_c, O_f^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub system: SystemKind,
    pub class: u8,
    #[serde(rename = "P")]
    pub p: TangleFraction,
    #[serde(rename = "R")]
    pub r: TangleFraction,
    #[serde(rename = "O_c", default = "zero", skip_serializing_if = "is_zero")]
    pub o_c: TangleFraction,
    #[serde(rename = "O_f")]
    pub o_f: BTreeMap<u32, Tangle>,
    /// Expected product handedness per `k`, where the family fixes it.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub product_chirality: BTreeMap<u32, Chirality>,
}

impl Solution {
    pub fn new(system: SystemKind, class: u8, p: TangleFraction, r: TangleFraction) -> Self {
        Self {
            system,
            class,
            p,
            r,
            o_c: TangleFraction::ZERO,
            o_f: BTreeMap::new(),
            product_chirality: BTreeMap::new(),
        }
    }

    pub fn with_o(mut self, k: u32, o: impl Into<Tangle>) -> Self {
        self.o_f.insert(k, o.into());
        self
    }

    /// `O^k = O_f^k + O_c`.
    pub fn o(&self, k: u32) -> Result<Tangle> {
        let of = self
            .o_f
            .get(&k)
            .ok_or_else(|| TangleError::DomainError(format!("no O_f for k = {k}")))?;
        let n = self
            .o_c
            .as_integer()
            .ok_or_else(|| TangleError::DomainError("O_c must be integral".into()))?;
        Ok(match of {
            Tangle::Rational(f) => Tangle::Rational(add_horizontal(*f, n)),
            Tangle::Montesinos(m) if n == 0 => Tangle::Montesinos(m.clone()),
            Tangle::Montesinos(m) => Tangle::Montesinos(m.clone().add_twists(n)),
        })
    }

    /// Integral splittings `O^k = O_f^k + O_c`: zero or an integral part of some `O^k`.
    pub fn o_c_options(&self) -> Vec<TangleFraction> {
        let mut out = vec![0i64];
        for k in self.o_f.keys() {
            let part = match self.o(*k) {
                Ok(Tangle::Rational(f)) => f.integral_part(),
                Ok(Tangle::Montesinos(m)) if m.trail.is_empty() => Some(m.integral_twists()),
                _ => None,
            };
            out.extend(part);
        }
        out.sort_unstable();
        out.dedup();
        out.into_iter().map(TangleFraction::integer).collect()
    }

    pub fn mirror(&self) -> Self {
        let flip = |c: &Chirality| match c {
            Chirality::Any => Chirality::Any,
            Chirality::Positive => Chirality::Negative,
            Chirality::Negative => Chirality::Positive,
        };
        Self {
            system: self.system,
            class: self.class,
            p: self.p.mirror(),
            r: self.r.mirror(),
            o_c: self.o_c.mirror(),
            o_f: self.o_f.iter().map(|(k, t)| (*k, t.mirror())).collect(),
            product_chirality: self.product_chirality.iter().map(|(k, c)| (*k, flip(c))).collect(),
        }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} class {}: P={} R={}", self.system, self.class, self.p, self.r)?;
        if !is_zero(&self.o_c) {
            write!(f, " O_c={}", self.o_c)?;
        }
        for (k, o) in &self.o_f {
            write!(f, " O_f^{k}={o}")?;
        }
        Ok(())
    }
}
