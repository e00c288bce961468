use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

/// Laurent polynomial with exact integer coefficients; zero terms are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.0.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    /// Multiplies every exponent by `k` (e.g. `A ↦ A⁻¹` for `k = -1`).
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self(self.0.iter().map(|(&e, &c)| (e * k, c)).collect())
    }

    pub fn shift(&self, by: i32) -> Self {
        Self(self.0.iter().map(|(&e, &c)| (e + by, c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division of every exponent by `d`; `None` if some exponent is not a multiple.
    pub fn divide_exponents(&self, d: i32) -> Option<Self> {
        self.0
            .iter()
            .map(|(&e, &c)| (e % d == 0).then_some((e / d, c)))
            .collect::<Option<BTreeMap<_, _>>>()
            .map(Self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

/// Renders as a sorted monomial list in the variable `var`; exponents are
/// divided by `denom` (2 for Jones polynomials in `t^(1/2)` steps).
pub struct PolyDisplay<'a> {
    pub poly: &'a LaurentPoly,
    pub var: &'a str,
    pub denom: i32,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            if e == self.denom {
                write!(f, "{}", self.var)?;
            } else if e % self.denom == 0 {
                write!(f, "{}^{}", self.var, e / self.denom)?;
            } else {
                write!(f, "{}^({}/{})", self.var, e, self.denom)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay {
            poly: self,
            var: "A",
            denom: 1,
        }
        .fmt(f)
    }
}
