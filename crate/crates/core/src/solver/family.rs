use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{Branch, Chirality, Solution, SystemKind, SystemSpec};
use crate::error::{Result, TangleError};
use crate::fraction::TangleFraction;
use crate::montesinos::MontesinosExpr;
use crate::tangle::Tangle;

/// `c + k·K + t·T` with integer coefficients.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Linear {
    pub c: i64,
    pub k: i64,
    pub t: i64,
}

impl Linear {
    pub const fn new(c: i64, k: i64, t: i64) -> Self {
        Self { c, k, t }
    }

    pub const fn constant(c: i64) -> Self {
        Self { c, k: 0, t: 0 }
    }

    pub fn eval(&self, k: i64, t: i64) -> i128 {
        self.c as i128 + self.k as i128 * k as i128 + self.t as i128 * t as i128
    }


    /// Coefficients of `self · other` over `1, k, t, k², kt, t²`.
    fn product(&self, o: &Linear) -> [i128; 6] {
        let (a, b) = (
            [self.c as i128, self.k as i128, self.t as i128],
            [o.c as i128, o.k as i128, o.t as i128],
        );
        [
            a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[2] * b[0],
            a[1] * b[1],
            a[1] * b[2] + a[2] * b[1],
            a[2] * b[2],
        ]
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coeff, var) in [(self.k, "k"), (self.t, "t"), (self.c, "")] {
            if coeff == 0 {
                continue;
            }
            let sign = if coeff < 0 { "-" } else { "+" };
            if first {
                if coeff < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = coeff.unsigned_abs();
            if var.is_empty() || a != 1 {
                write!(f, "{a}")?;
            }
            f.write_str(var)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A fraction whose numerator and denominator are linear in `k` and `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearFraction {
    pub num: Linear,
    pub den: Linear,
}

impl LinearFraction {
    pub const fn new(num: Linear, den: Linear) -> Self {
        Self { num, den }
    }

    pub fn constant(f: TangleFraction) -> Self {
        Self::new(Linear::constant(f.num()), Linear::constant(f.den()))
    }

    pub fn eval(&self, k: i64, t: i64) -> Result<TangleFraction> {
        let (n, d) = (self.num.eval(k, t), self.den.eval(k, t));
        let n = i64::try_from(n).map_err(|_| TangleError::Overflow)?;
        let d = i64::try_from(d).map_err(|_| TangleError::Overflow)?;
        TangleFraction::new(n, d)
    }

    /// Substitutes a fixed `k`.
    pub fn at_k(&self, k: i64) -> Self {
        let fix = |l: Linear| Linear::new(l.c + l.k * k, 0, l.t);
        Self::new(fix(self.num), fix(self.den))
    }

    /// Whether both sides agree as rational functions of `k` and `t`.
    pub fn same_function(&self, other: &LinearFraction) -> bool {
        self.num.product(&other.den) == other.num.product(&self.den)
    }
}

impl fmt::Display for LinearFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let constant = |l: &Linear| l.k == 0 && l.t == 0;
        if constant(&self.num) && constant(&self.den) {
            if let Ok(v) = self.eval(0, 0) {
                return v.fmt(f);
            }
        }
        if self.den == Linear::constant(1) {
            return write!(f, "({})", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// `r·q + p·s = 1` for `P = p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutPair {
    pub r: i64,
    pub s: i64,
}

/// Bezout pair with minimal `|s|`, ties broken by minimal `|r|`.
pub fn canonical_bezout(pf: TangleFraction) -> BezoutPair {
    let (p, q) = (pf.num(), pf.den());
    if q == 0 {
        return BezoutPair { r: 0, s: 1 };
    }
    let e = q.extended_gcd(&p);
    let g = e.gcd.signum();
    let (r0, s0) = (e.x * g, e.y * g);
    // all pairs: r = r0 + p·m, s = s0 - q·m
    let m0 = Integer::div_floor(&s0, &q);
    (m0 - 1..=m0 + 2)
        .map(|m| BezoutPair {
            r: r0 + p * m,
            s: s0 - q * m,
        })
        .min_by_key(|b| (b.s.abs(), b.r.abs(), b.r))
        .expect("non-empty")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyEntry {
    Rational(LinearFraction),
    Montesinos(MontesinosExpr),
}

impl FamilyEntry {
    fn instantiate(&self, k: i64, t: i64) -> Result<Tangle> {
        Ok(match self {
            FamilyEntry::Rational(l) => Tangle::Rational(l.eval(k, t)?),
            FamilyEntry::Montesinos(m) => Tangle::Montesinos(m.clone()),
        })
    }
}

impl fmt::Display for FamilyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyEntry::Rational(l) => l.fmt(f),
            FamilyEntry::Montesinos(m) => m.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOption {
    pub entry: FamilyEntry,
    pub chirality: Chirality,
}

/// A solution class with entries depending on the integer parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFamily {
    pub class: u8,
    pub system: SystemKind,
    pub branch: Branch,
    #[serde(rename = "P")]
    pub p: LinearFraction,
    #[serde(rename = "R")]
    pub r: LinearFraction,
    /// `O^k` as a formula in `k` and `t`, when one exists.
    #[serde(rename = "O_formula", skip_serializing_if = "Option::is_none")]
    pub o_formula: Option<LinearFraction>,
    /// Options for `O^k` (with `O_c = 0`).
    #[serde(rename = "O")]
    pub o: BTreeMap<u32, Vec<FamilyOption>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout: Option<BezoutPair>,
    /// Whether the entries depend on `t`.
    pub parametric: bool,
}

impl SolutionFamily {
    /// All concrete solutions at parameter `t`, one per choice of options.
    pub fn instantiate(&self, t: i64) -> Result<Vec<Solution>> {
        let p = self.p.eval(0, t)?;
        let r = self.r.eval(0, t)?;
        let mut out = vec![Solution::new(self.system, self.class, p, r)];
        for (&k, options) in &self.o {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for sol in &out {
                for opt in options {
                    let mut s = sol.clone().with_o(k, opt.entry.instantiate(k as i64, t)?);
                    if opt.chirality != Chirality::Any {
                        s.product_chirality.insert(k, opt.chirality);
                    }
                    next.push(s);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class {} ({}, {} branch)", self.class, self.system, branch_name(self.branch))?;
        if let Some(b) = self.bezout {
            writeln!(f, "  r = {}, s = {}", b.r, b.s)?;
        }
        writeln!(f, "  P = {}", self.p)?;
        writeln!(f, "  R = {}", self.r)?;
        if let Some(o) = self.o_formula {
            writeln!(f, "  O^k = {o}")?;
        }
        for (k, opts) in &self.o {
            let list: Vec<String> = opts.iter().map(|o| o.entry.to_string()).collect();
            writeln!(f, "  O^{k} = {}", list.join(" or "))?;
        }
        Ok(())
    }
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Upper => "upper",
        Branch::Lower => "lower",
    }
}

fn class_of(p: TangleFraction) -> u8 {
    if p.is_infinity() {
        1
    } else if p.is_integral() {
        2
    } else {
        3
    }
}

/// The rational families: with `n = 2k + c + t` (`c = 1` inverted, `0` direct)
/// and `σ = ±1` by branch,
///
/// ```text
/// O^k = (r + σ·p·n) / (s − σ·q·n)      R = (r + σ·p·t) / (−s + σ·q·t)
/// ```
///
/// The upper branch has positive products.
pub fn parametric_family(spec: &SystemSpec, pf: TangleFraction) -> SolutionFamily {
    let b = canonical_bezout(pf);
    let (p, q) = (pf.num(), pf.den());
    let sigma = spec.branch.sign();
    let c = spec.kind.offset();
    let o_formula = LinearFraction::new(
        Linear::new(b.r + sigma * p * c, 2 * sigma * p, sigma * p),
        Linear::new(b.s - sigma * q * c, -2 * sigma * q, -sigma * q),
    );
    let r = LinearFraction::new(Linear::new(b.r, 0, sigma * p), Linear::new(-b.s, 0, sigma * q));
    let chirality = match spec.branch {
        Branch::Upper => Chirality::Positive,
        Branch::Lower => Chirality::Negative,
    };
    let o = spec
        .k_range
        .iter()
        .map(|&k| {
            (
                k,
                vec![FamilyOption {
                    entry: FamilyEntry::Rational(o_formula.at_k(k as i64)),
                    chirality,
                }],
            )
        })
        .collect();
    SolutionFamily {
        class: class_of(pf),
        system: spec.kind,
        branch: spec.branch,
        p: LinearFraction::constant(pf),
        r,
        o_formula: Some(o_formula),
        o,
        bezout: Some(b),
        parametric: true,
    }
}

/// Shape of `R = (n) + (1/(σt − 1))` for integral `P = (n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RShape {
    Integral(i64),
    Infinity,
    VerticalPlusIntegral { integral: i64, vertical: i64 },
}

/// `R(t)` for `P = (n)`, from the Bezout pair `r = 1 − n, s = 1`.
pub fn r_options_for_integral_p(n: i64, branch: Branch, t: i64) -> (TangleFraction, RShape) {
    let sigma = branch.sign();
    let m = sigma * t - 1;
    let r = TangleFraction::new(1 - n + sigma * n * t, -1 + sigma * t).expect("never 0/0");
    let shape = match m {
        0 => RShape::Infinity,
        1 | -1 => RShape::Integral(n + m),
        _ => RShape::VerticalPlusIntegral {
            integral: n,
            vertical: m,
        },
    };
    (r, shape)
}

fn frac(n: i64, d: i64) -> TangleFraction {
    TangleFraction::new(n, d).expect("valid fraction")
}

/// `σ(−p + 1/(2k))` and `−σ(p + 1/(2k+2))`.
fn class4_options(p: i64, branch: Branch, k: i64) -> [FamilyOption; 2] {
    let sigma = branch.sign();
    let (first, second) = match branch {
        Branch::Lower => (Chirality::Positive, Chirality::Negative),
        Branch::Upper => (Chirality::Negative, Chirality::Positive),
    };
    let a = if k == 0 {
        TangleFraction::INFINITY
    } else {
        frac(sigma * (1 - 2 * k * p), 2 * k)
    };
    let b = frac(-sigma * (p * (2 * k + 2) + 1), 2 * k + 2);
    [
        FamilyOption {
            entry: FamilyEntry::Rational(LinearFraction::constant(a)),
            chirality: first,
        },
        FamilyOption {
            entry: FamilyEntry::Rational(LinearFraction::constant(b)),
            chirality: second,
        },
    ]
}

/// The inverted-only family with a prime Montesinos `O^2`:
/// `P = σp`, `R = σ(1+p)`, `O^2 = −σ(1/2, 2/3, p−1)`, and rational `O^k` otherwise.
pub fn fourth_solution(p: i64, branch: Branch) -> Result<SolutionFamily> {
    if !(0..=1).contains(&p) {
        return Err(TangleError::DomainError(format!("p must be 0 or 1, got {p}")));
    }
    let sigma = branch.sign();
    let base = MontesinosExpr::new(vec![frac(1, 2), frac(2, 3), TangleFraction::integer(p - 1)]);
    let o2 = if sigma > 0 { base.mirror() } else { base };
    let o2_chirality = match branch {
        Branch::Lower => Chirality::Positive,
        Branch::Upper => Chirality::Negative,
    };
    let mut o = BTreeMap::new();
    for k in 0..=3u32 {
        let opts = if k == 2 {
            vec![FamilyOption {
                entry: FamilyEntry::Montesinos(o2.clone()),
                chirality: o2_chirality,
            }]
        } else {
            class4_options(p, branch, k as i64).to_vec()
        };
        o.insert(k, opts);
    }
    Ok(SolutionFamily {
        class: 4,
        system: SystemKind::Inverted,
        branch,
        p: LinearFraction::constant(TangleFraction::integer(sigma * p)),
        r: LinearFraction::constant(TangleFraction::integer(sigma * (1 + p))),
        o_formula: None,
        o,
        bezout: None,
        parametric: false,
    })
}

/// The fourth solution restricted to positive `k = 1, 2` products, written
/// with `P = (p)`, `p ∈ {0, −1}`: `R = (p−1)`, `O^2 = (1/2, 2/3, −p−1)`,
/// `O^1 = (−p − 1/2)`, and `O^k = (−p − 1/(2k))` or `(−p + 1/(2k+2))` for `k = 0, 3`.
pub fn chiral_refinement(p: i64) -> Result<SolutionFamily> {
    if !(-1..=0).contains(&p) {
        return Err(TangleError::DomainError(format!("p must be 0 or -1, got {p}")));
    }
    let mut fam = fourth_solution(-p, Branch::Lower)?;
    if let Some(opts) = fam.o.get_mut(&1) {
        opts.truncate(1);
    }
    Ok(fam)
}

/// Finds the branch and `t` at which the parametric family for `P` produces
/// `(O^k, R)`, if any.
pub fn family_member(
    kind: SystemKind,
    pf: TangleFraction,
    k: u32,
    o: TangleFraction,
    r: TangleFraction,
) -> Option<(Branch, i64)> {
    let b = canonical_bezout(pf);
    let (p, q) = (pf.num() as i128, pf.den() as i128);
    let (c, d) = (r.num() as i128, r.den() as i128);
    for branch in Branch::both() {
        let sigma = branch.sign() as i128;
        // d(r + σpt) = c(−s + σqt)
        let coeff = sigma * (d * p - c * q);
        let rhs = -(c * b.s as i128) - d * b.r as i128;
        if coeff == 0 || rhs % coeff != 0 {
            continue;
        }
        let t = i64::try_from(rhs / coeff).ok()?;
        let spec = SystemSpec::new(kind).with_branch(branch).with_k_range([k]);
        let fam = parametric_family(&spec, pf);
        let hit = fam.r.eval(0, t).ok() == Some(r)
            && fam.o_formula.and_then(|f| f.eval(k as i64, t).ok()) == Some(o);
        if hit {
            return Some((branch, t));
        }
    }
    None
}
