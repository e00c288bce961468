//! A 4-ended tangle: rational, or a generalized Montesinos expression.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fourplat::{closure_of_sum, FourPlat};
use crate::fraction::{mirror, TangleFraction};
use crate::montesinos::{closure_general, Closure, MontesinosExpr};
use crate::oracle::diagram::{diagram_of_fraction, montesinos_diagram, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tangle {
    Rational(TangleFraction),
    Montesinos(MontesinosExpr),
}

impl Tangle {
    pub fn integer(n: i64) -> Self {
        Tangle::Rational(TangleFraction::integer(n))
    }

    pub fn as_rational(&self) -> Option<TangleFraction> {
        match self {
            Tangle::Rational(f) => Some(*f),
            Tangle::Montesinos(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn mirror(&self) -> Self {
        match self {
            Tangle::Rational(f) => Tangle::Rational(mirror(*f)),
            Tangle::Montesinos(m) => Tangle::Montesinos(m.mirror()),
        }
    }

    /// `N(self + r)`.
    pub fn closure_with(&self, r: TangleFraction) -> Closure {
        match self {
            Tangle::Rational(f) => Closure::FourPlat(closure_of_sum(*f, r)),
            Tangle::Montesinos(m) => closure_general(m, r),
        }
    }

    /// `N(self + r)` when it is a 4-plat.
    pub fn four_plat_with(&self, r: TangleFraction) -> Option<FourPlat> {
        self.closure_with(r).four_plat()
    }

    pub fn crossing_count(&self) -> u64 {
        match self {
            Tangle::Rational(f) => f.crossing_count(),
            Tangle::Montesinos(m) => m.crossing_count(),
        }
    }

    pub fn diagram(&self) -> Result<PlanarDiagram> {
        match self {
            Tangle::Rational(f) => diagram_of_fraction(*f),
            Tangle::Montesinos(m) => montesinos_diagram(m),
        }
    }
}

impl From<TangleFraction> for Tangle {
    fn from(f: TangleFraction) -> Self {
        Tangle::Rational(f)
    }
}

impl From<MontesinosExpr> for Tangle {
    fn from(m: MontesinosExpr) -> Self {
        Tangle::Montesinos(m)
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tangle::Rational(x) => x.fmt(f),
            Tangle::Montesinos(m) => m.fmt(f),
        }
    }
}

impl Serialize for Tangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
