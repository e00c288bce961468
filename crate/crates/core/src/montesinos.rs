//! Generalized Montesinos tangles: a horizontal sum of rational leaves
//! wrapped in an alternating trail of vertical stars and integral sums.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::fourplat::{closure_of_sum, FourPlat};
use crate::fraction::{add_horizontal, cf_eval, star_vertical, TangleClass, TangleFraction, TwistVector};

/// One outer operation applied around the summands, innermost first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrailOp {
    /// Vertical sum with `(1/m)`.
    Star(i64),
    /// Tangle sum with the integral tangle `(m)`.
    Add(i64),
}

impl TrailOp {
    fn mirror(self) -> TrailOp {
        match self {
            TrailOp::Star(m) => TrailOp::Star(-m),
            TrailOp::Add(m) => TrailOp::Add(-m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MontesinosExpr {
    pub summands: Vec<TangleFraction>,
    pub trail: Vec<TrailOp>,
}

/// Why a closure is not a 4-plat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotFourPlat {
    /// A connected sum of two nontrivial 2-bridge links.
    Composite,
    /// The double branched cover is Seifert fibered with three or more
    /// exceptional fibers.
    ThreeExceptionalFibers,
}

impl fmt::Display for NotFourPlat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotFourPlat::Composite => write!(f, "not-4plat(composite)"),
            NotFourPlat::ThreeExceptionalFibers => write!(f, "not-4plat(three-exceptional-fibers)"),
        }
    }
}

/// Result of closing a (possibly prime) tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Closure {
    FourPlat(FourPlat),
    NotFourPlat(NotFourPlat),
}

impl Closure {
    pub fn four_plat(&self) -> Option<FourPlat> {
        match self {
            Closure::FourPlat(b) => Some(*b),
            Closure::NotFourPlat(_) => None,
        }
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Closure::FourPlat(b) => b.fmt(f),
            Closure::NotFourPlat(r) => r.fmt(f),
        }
    }
}

/// Outcome of [`reduce_to_normal_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    NormalForm(MontesinosExpr),
    Rational(TangleFraction),
    NotFourPlatClosure(NotFourPlat),
}

impl MontesinosExpr {
    pub fn new(summands: Vec<TangleFraction>) -> Self {
        Self {
            summands,
            trail: Vec::new(),
        }
    }

    /// `(a/b, c/d) ⋆ (1/m)`; `m = 0` leaves the trail empty.
    pub fn pair(a: TangleFraction, c: TangleFraction, m: i64) -> Self {
        let trail = if m == 0 { vec![] } else { vec![TrailOp::Star(m)] };
        Self {
            summands: vec![a, c],
            trail,
        }
    }

    pub fn star(mut self, m: i64) -> Self {
        self.trail.push(TrailOp::Star(m));
        self
    }

    pub fn add_twists(mut self, m: i64) -> Self {
        self.trail.push(TrailOp::Add(m));
        self
    }

    pub fn non_integral_count(&self) -> usize {
        self.summands.iter().filter(|f| !f.is_integral()).count()
    }

    /// Two non-integral summands and at most one vertical star.
    pub fn is_normal_form(&self) -> bool {
        self.summands.len() == 2
            && self.non_integral_count() == 2
            && self.summands.iter().all(|f| !f.is_infinity())
            && matches!(self.trail.as_slice(), [] | [TrailOp::Star(_)])
    }

    /// Vertical twist count of the normal-form star (0 if none).
    pub fn star_count(&self) -> i64 {
        match self.trail.as_slice() {
            [TrailOp::Star(m)] => *m,
            _ => 0,
        }
    }

    pub fn mirror(&self) -> Self {
        Self {
            summands: self.summands.iter().map(|f| f.mirror()).collect(),
            trail: self.trail.iter().map(|op| op.mirror()).collect(),
        }
    }

    pub fn crossing_count(&self) -> u64 {
        let leaves: u64 = self.summands.iter().map(|f| f.crossing_count()).sum();
        let trail: u64 = self
            .trail
            .iter()
            .map(|op| match op {
                TrailOp::Star(m) | TrailOp::Add(m) => m.unsigned_abs(),
            })
            .sum();
        leaves + trail
    }

    /// Sum of the integral summands and leading integral trail entries.
    pub fn integral_twists(&self) -> i64 {
        let leaves: i64 = self.summands.iter().filter_map(|f| f.as_integer()).sum();
        let lead: i64 = self
            .trail
            .iter()
            .map_while(|op| match op {
                TrailOp::Add(m) => Some(*m),
                TrailOp::Star(_) => None,
            })
            .sum();
        leaves + lead
    }
}

impl fmt::Display for MontesinosExpr {
    /// Tuple notation, e.g. `(1/2, 2/3, -1)` or `(1/2, -1/3) *v (1/-2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("(");
        for (i, x) in self.summands.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let t = x.to_string();
            s.push_str(&t[1..t.len() - 1]);
        }
        s.push(')');
        for op in &self.trail {
            s = match op {
                TrailOp::Star(m) => format!("{s} *v (1/{m})"),
                TrailOp::Add(m) => format!("{s} + ({m})"),
            };
            if !std::ptr::eq(op, self.trail.last().unwrap()) {
                s = format!("({s})");
            }
        }
        f.write_str(&s)
    }
}

/// `(a/b, c/d) + (n) = (a/b, (c + d·n)/d)`.
pub fn absorb_integral(m: &MontesinosExpr, n: i64) -> Result<MontesinosExpr> {
    if m.summands.len() != 2 || !m.trail.is_empty() {
        return Err(TangleError::NormalFormRequired);
    }
    let mut out = m.clone();
    out.summands[1] = add_horizontal(out.summands[1], n);
    Ok(out)
}

/// Rewrites a generalized Montesinos expression toward the two-summand
/// normal form `(a/b, c/d) ⋆ (1/m)`.
///
/// Integral summands and leading integral trail entries are absorbed into the
/// last non-integral summand. A trail of length ≥ 2 is only meaningful up to
/// numerator closure: an outermost star is dropped, and an even-length trail
/// `[⋆(1/m_n), +(m_{n-1}), …, +(m_1)]` is folded into the rational tangle
/// `[m_1, …, m_n, 0]` summed beside the leaves.
pub fn reduce_to_normal_form(e: &MontesinosExpr) -> Reduced {
    let mut leaves: Vec<TangleFraction> = Vec::new();
    let mut integral = 0i64;
    let mut infinities = 0usize;
    for f in &e.summands {
        match f.classify() {
            TangleClass::Integral => integral += f.num(),
            TangleClass::Infinity => infinities += 1,
            _ => leaves.push(*f),
        }
    }
    let mut trail: &[TrailOp] = &e.trail;
    while let [TrailOp::Add(m), rest @ ..] = trail {
        integral += m;
        trail = rest;
    }

    if infinities > 0 {
        // an ∞ summand makes the sum split; only the all-rational case stays a tangle
        return match (infinities, leaves.len()) {
            (1, 0) => Reduced::Rational(apply_trail(TangleFraction::INFINITY, trail)),
            _ => Reduced::NotFourPlatClosure(NotFourPlat::Composite),
        };
    }

    match leaves.len() {
        0 | 1 => {
            let base = leaves.first().copied().unwrap_or(TangleFraction::ZERO);
            return Reduced::Rational(apply_trail(add_horizontal(base, integral), trail));
        }
        2 => {}
        _ => return Reduced::NotFourPlatClosure(NotFourPlat::ThreeExceptionalFibers),
    }
    leaves[1] = add_horizontal(leaves[1], integral);

    let mut trail = trail.to_vec();
    if trail.len() >= 2 && trail.len() % 2 == 1 {
        trail.pop();
    }
    if trail.len() >= 2 {
        // m_1 is outermost
        let mut v: Vec<i64> = trail
            .iter()
            .rev()
            .map(|op| match op {
                TrailOp::Star(m) | TrailOp::Add(m) => *m,
            })
            .collect();
        v.push(0);
        let folded = cf_eval(&TwistVector(v));
        return match folded.classify() {
            TangleClass::Integral => {
                leaves[1] = add_horizontal(leaves[1], folded.num());
                Reduced::NormalForm(MontesinosExpr::new(leaves))
            }
            TangleClass::Infinity => Reduced::NotFourPlatClosure(NotFourPlat::Composite),
            _ => Reduced::NotFourPlatClosure(NotFourPlat::ThreeExceptionalFibers),
        };
    }
    Reduced::NormalForm(MontesinosExpr {
        summands: leaves,
        trail,
    })
}

fn apply_trail(mut f: TangleFraction, trail: &[TrailOp]) -> TangleFraction {
    for op in trail {
        f = match *op {
            TrailOp::Star(m) => star_vertical(f, m),
            TrailOp::Add(m) => add_horizontal(f, m),
        };
    }
    f
}

/// `N(e + r)` for any generalized Montesinos expression and rational `r`.
///
/// The trail is moved onto `r` from the outside in, using
/// `N((A ⋆ 1/n) + B) = N(A + (B ⋆ 1/n))` and `N((A + (m)) + B) = N(A + ((m) + B))`.
pub fn closure_general(e: &MontesinosExpr, r: TangleFraction) -> Closure {
    let mut partner = r;
    for op in e.trail.iter().rev() {
        partner = match *op {
            TrailOp::Star(m) => star_vertical(partner, m),
            TrailOp::Add(m) => add_horizontal(partner, m),
        };
    }
    let mut leaves: Vec<TangleFraction> = Vec::new();
    let mut integral = 0i64;
    let mut infinities = 0usize;
    for f in e.summands.iter().chain(std::iter::once(&partner)) {
        match f.classify() {
            TangleClass::Integral => integral += f.num(),
            TangleClass::Infinity => infinities += 1,
            _ => leaves.push(*f),
        }
    }
    match (infinities, leaves.len()) {
        (0, 0) => Closure::FourPlat(crate::fourplat::numerator_closure(TangleFraction::integer(integral))),
        (0, 1) => Closure::FourPlat(crate::fourplat::numerator_closure(add_horizontal(leaves[0], integral))),
        (0, 2) => Closure::FourPlat(closure_of_sum(leaves[0], add_horizontal(leaves[1], integral))),
        (0, _) => Closure::NotFourPlat(NotFourPlat::ThreeExceptionalFibers),
        // N(X + ∞) is the denominator closure of X; rational X gives a 4-plat
        (1, 0) => Closure::FourPlat(FourPlat::UNKNOT),
        (1, 1) => Closure::FourPlat(closure_of_sum(add_horizontal(leaves[0], integral), TangleFraction::INFINITY)),
        (2, 0) => Closure::FourPlat(FourPlat::UNLINK),
        _ => Closure::NotFourPlat(NotFourPlat::Composite),
    }
}

/// `N(m + r)` for a normal-form expression `(a/b, c/d) ⋆ (1/s)`.
pub fn closure_with(m: &MontesinosExpr, r: TangleFraction) -> Result<Closure> {
    if !m.is_normal_form() {
        return Err(TangleError::NormalFormRequired);
    }
    Ok(closure_general(m, r))
}
