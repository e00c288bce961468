//! Four-plats (2-bridge knots and links) as numerator closures of rational
//! tangles and of sums of two rational tangles.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::fraction::TangleFraction;

/// Canonical `b(p, q)`. Mirror images are kept distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourPlat {
    p: u64,
    q: u64,
}

impl FourPlat {
    pub const UNKNOT: FourPlat = FourPlat { p: 1, q: 0 };
    pub const UNLINK: FourPlat = FourPlat { p: 0, q: 1 };

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn mirror(&self) -> FourPlat {
        canonicalize(self.p as i64, -(self.q as i64)).expect("canonical 4-plat")
    }

    pub fn is_amphichiral(&self) -> bool {
        self.mirror() == *self
    }

    pub fn components(&self) -> usize {
        if self.p.is_multiple_of(2) {
            2
        } else {
            1
        }
    }

    /// The right-handed torus link `T(2, n)` as `b(|n|, 1)`, or its mirror for `n < 0`.
    pub fn torus(n: i64) -> FourPlat {
        canonicalize(n, 1).expect("b(n,1) is always coprime")
    }

    pub fn as_torus_2strand(&self) -> Option<i64> {
        as_torus_2strand(*self)
    }
}

impl fmt::Display for FourPlat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

#[derive(Serialize, Deserialize)]
struct FourPlatJson {
    p: u64,
    q: u64,
    torus: Option<i64>,
}

impl Serialize for FourPlat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FourPlatJson {
            p: self.p,
            q: self.q,
            torus: self.as_torus_2strand(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FourPlat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FourPlatJson::deserialize(d)?;
        canonicalize(j.p as i64, j.q as i64).map_err(serde::de::Error::custom)
    }
}

fn mod_inverse(q: i64, p: i64) -> i64 {
    let e = q.extended_gcd(&p);
    debug_assert_eq!(e.gcd.abs(), 1);
    (e.x * e.gcd).mod_floor(&p)
}

/// Normalizes `b(p, q)`: negative `p` mirrors, and `q` is replaced by the
/// smaller of `q mod p` and `q⁻¹ mod p`.
pub fn canonicalize(p: i64, q: i64) -> Result<FourPlat> {
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    match p {
        0 => {
            if q.abs() == 1 {
                Ok(FourPlat::UNLINK)
            } else {
                Err(TangleError::NonCoprime { p, q })
            }
        }
        1 => Ok(FourPlat::UNKNOT),
        _ => {
            if p.gcd(&q) != 1 {
                return Err(TangleError::NonCoprime { p, q });
            }
            let q0 = q.mod_floor(&p);
            let q1 = mod_inverse(q0, p);
            Ok(FourPlat {
                p: p as u64,
                q: q0.min(q1) as u64,
            })
        }
    }
}

pub fn numerator_closure(f: TangleFraction) -> FourPlat {
    canonicalize(f.num(), f.den()).expect("reduced fractions close to 4-plats")
}

/// Some `(c', d')` with `c'·d − c·d' = 1`.
pub fn closure_bezout(c: TangleFraction) -> (i64, i64) {
    let (cn, cd) = (c.num(), c.den());
    // d·x + c·y = 1, then c' = x, d' = -y
    let e = cd.extended_gcd(&cn);
    let s = e.gcd.signum();
    (e.x * s, -e.y * s)
}

/// `N(a/b + c/d)` using a supplied Bezout representative `(c', d')`.
pub fn closure_of_sum_with(a: TangleFraction, c: TangleFraction, bezout: (i64, i64)) -> FourPlat {
    let (an, ad) = (a.num() as i128, a.den() as i128);
    let (cn, cd) = (c.num() as i128, c.den() as i128);
    let (c1, d1) = (bezout.0 as i128, bezout.1 as i128);
    debug_assert_eq!(c1 * cd - cn * d1, 1);
    let p = an * cd + ad * cn;
    let q = an * d1 + ad * c1;
    canonicalize(
        i64::try_from(p).expect("closure overflow"),
        i64::try_from(q).expect("closure overflow"),
    )
    .expect("closure of two rational tangles is a 4-plat")
}

/// Numerator closure of the sum of two rational tangles.
pub fn closure_of_sum(a: TangleFraction, c: TangleFraction) -> FourPlat {
    closure_of_sum_with(a, c, closure_bezout(c))
}

pub fn fourplat_eq(x: FourPlat, y: FourPlat) -> bool {
    x == y
}

/// `Some(n)` when `x` is the 2-strand torus link `T(2, n)`; negative `n` is
/// the mirror of `b(|n|, 1)`. The Hopf link and unknot/unlink report `n ≥ 0`.
pub fn as_torus_2strand(x: FourPlat) -> Option<i64> {
    let p = x.p as i64;
    match p {
        0 => Some(0),
        1 => Some(1),
        _ if x.q == 1 => Some(p),
        _ if x.q as i64 == p - 1 => Some(-p),
        _ => None,
    }
}
