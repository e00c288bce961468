//! Extended rationals labelling rational tangles, their continued fraction
//! twist vectors, and the horizontal / vertical twisting actions.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};

/// Conway fraction of a rational tangle, an element of ℚ ∪ {∞}.
///
/// Always reduced with a non-negative denominator. The infinity tangle is
/// stored as `1/0` and the zero tangle as `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangleFraction {
    num: i64,
    den: i64,
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("tangle fraction overflow")
}

impl TangleFraction {
    pub const ZERO: TangleFraction = TangleFraction { num: 0, den: 1 };
    pub const INFINITY: TangleFraction = TangleFraction { num: 1, den: 0 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    fn from_wide(num: i128, den: i128) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(TangleError::Indeterminate);
        }
        if den == 0 {
            return Ok(Self::INFINITY);
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(Self {
            num: narrow(n),
            den: narrow(d),
        })
    }

    /// Builds a fraction from a numerator/denominator pair known not to be 0/0.
    pub(crate) fn ratio(num: i128, den: i128) -> Self {
        Self::from_wide(num, den).expect("0/0 in tangle arithmetic")
    }

    pub fn integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    /// The vertical tangle `1/n`; `vertical(0)` is the infinity tangle.
    pub fn vertical(n: i64) -> Self {
        Self::ratio(1, n as i128)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den == 0
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integral().then_some(self.num)
    }

    pub fn classify(&self) -> TangleClass {
        classify(*self)
    }

    /// Integral part in the uniform-sign expansion (truncation toward zero).
    pub fn integral_part(&self) -> Option<i64> {
        (!self.is_infinity()).then(|| self.num / self.den)
    }

    pub fn mirror(&self) -> Self {
        mirror(*self)
    }

    /// Rational value of `self + other` (ordinary addition, ∞ absorbing).
    pub(crate) fn plus(&self, other: TangleFraction) -> Self {
        if self.is_infinity() || other.is_infinity() {
            return Self::INFINITY;
        }
        let n = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        Self::ratio(n, self.den as i128 * other.den as i128)
    }

    pub(crate) fn recip(&self) -> Self {
        Self::ratio(self.den as i128, self.num as i128)
    }

    /// Number of crossings in the standard alternating diagram.
    pub fn crossing_count(&self) -> u64 {
        match cf_expand(*self) {
            Ok(v) => v.crossing_count(),
            Err(_) => 0,
        }
    }
}

impl fmt::Display for TangleFraction {
    /// Renders the fraction in tangle notation: `(p/q)`, `(n)` or `(inf)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "(inf)")
        } else if self.den == 1 {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({}/{})", self.num, self.den)
        }
    }
}

impl FromStr for TangleFraction {
    type Err = TangleError;

    /// Accepts `p/q`, `n`, `inf`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || TangleError::UnsupportedTangle(format!("not a fraction: {s:?}"));
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Self::INFINITY);
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Self::new(n, d)
            }
            None => Ok(Self::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for TangleFraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TangleFraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Continued fraction `[a_1, …, a_n]` with value `a_n + 1/(a_{n-1} + … + 1/a_1)`.
///
/// Entry `a_n` is always a horizontal twist region; regions alternate
/// horizontal/vertical going inward. The empty vector is the infinity tangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistVector(pub Vec<i64>);

impl TwistVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn crossing_count(&self) -> u64 {
        self.0.iter().map(|a| a.unsigned_abs()).sum()
    }

    /// Whether entry `i` (0-based) is a horizontal twist region.
    pub fn is_horizontal(&self, i: usize) -> bool {
        (self.0.len() - 1 - i).is_multiple_of(2)
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangleClass {
    Integral,
    Vertical,
    Infinity,
    StrictlyRational,
}

/// Uniform-sign Euclidean expansion. `0/1` expands to `[0]`.
pub fn cf_expand(f: TangleFraction) -> Result<TwistVector> {
    if f.is_infinity() {
        return Err(TangleError::InfinityInput);
    }
    let sign = f.num.signum();
    let (mut p, mut q) = (f.num.unsigned_abs(), f.den.unsigned_abs());
    // top-down quotients: a_n first
    let mut quotients = Vec::new();
    loop {
        quotients.push((p / q) as i64);
        let r = p % q;
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    quotients.reverse();
    if sign < 0 {
        quotients.iter_mut().for_each(|a| *a = -*a);
    }
    Ok(TwistVector(quotients))
}

/// Evaluates any twist vector with extended-rational rules
/// (`1/0 = ∞`, `x + ∞ = ∞`, `1/∞ = 0`).
pub fn cf_eval(v: &TwistVector) -> TangleFraction {
    let mut acc = TangleFraction::INFINITY;
    for &a in &v.0 {
        // acc <- a + 1/acc
        acc = TangleFraction::integer(a).plus(acc.recip());
    }
    acc
}

/// Tangle sum with the integral tangle `(n)`.
pub fn add_horizontal(f: TangleFraction, n: i64) -> TangleFraction {
    if f.is_infinity() {
        return f;
    }
    TangleFraction::ratio(f.num as i128 + n as i128 * f.den as i128, f.den as i128)
}

/// Vertical sum with `(1/n)`: `p/q ↦ p/(q + n·p)`.
pub fn star_vertical(f: TangleFraction, n: i64) -> TangleFraction {
    TangleFraction::ratio(f.num as i128, f.den as i128 + n as i128 * f.num as i128)
}

pub fn mirror(f: TangleFraction) -> TangleFraction {
    if f.is_infinity() {
        return f;
    }
    TangleFraction {
        num: -f.num,
        den: f.den,
    }
}

pub fn classify(f: TangleFraction) -> TangleClass {
    match (f.num, f.den) {
        (_, 0) => TangleClass::Infinity,
        (_, 1) => TangleClass::Integral,
        (n, _) if n.abs() == 1 => TangleClass::Vertical,
        _ => TangleClass::StrictlyRational,
    }
}
