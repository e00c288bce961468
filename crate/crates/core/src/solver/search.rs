use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::SystemSpec;
use crate::fourplat::{closure_of_sum, FourPlat};
use crate::fraction::{star_vertical, TangleFraction};
use crate::montesinos::{closure_general, Closure, MontesinosExpr, TrailOp};
use crate::par;

/// Every reduced `a/b` with `|a|, |b| ≤ bound`, infinity included, sorted.
pub fn reduced_fractions(bound: i64) -> Vec<TangleFraction> {
    let mut out = Vec::new();
    if bound < 1 {
        return out;
    }
    out.push(TangleFraction::INFINITY);
    for b in 1..=bound {
        for a in -bound..=bound {
            if a.gcd(&b) == 1 {
                out.push(TangleFraction::new(a, b).expect("b > 0"));
            }
        }
    }
    out.sort_by(|a, b| value_cmp(*a, *b));
    out
}

/// Orders by value with `∞` last.
pub fn value_cmp(a: TangleFraction, b: TangleFraction) -> Ordering {
    match (a.is_infinity(), b.is_infinity()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => (a.num() as i128 * b.den() as i128).cmp(&(b.num() as i128 * a.den() as i128)),
    }
}

fn pair_cmp(x: &(TangleFraction, TangleFraction), y: &(TangleFraction, TangleFraction)) -> Ordering {
    value_cmp(x.0, y.0).then(value_cmp(x.1, y.1))
}

fn rational_search(spec: &SystemSpec, p: TangleFraction, bound: i64, k: u32, parallel: bool) -> Vec<(TangleFraction, TangleFraction)> {
    let all = reduced_fractions(bound);
    let candidates: Vec<TangleFraction> = all
        .iter()
        .copied()
        .filter(|o| closure_of_sum(*o, p) == FourPlat::UNKNOT)
        .collect();
    let n = spec.kind.product_index(k);
    let chirality = spec.chirality;
    let hits_for = |o: TangleFraction| {
        all.iter()
            .filter(move |r| chirality.accepts(n, closure_of_sum(o, **r)))
            .map(move |r| (o, *r))
            .collect::<Vec<_>>()
    };
    let mut out = if parallel {
        par::flat_map_ordered(candidates, hits_for)
    } else {
        par::flat_map_ordered_sequential(candidates, hits_for)
    };
    out.sort_by(pair_cmp);
    out
}

/// All rational `(O, R)` with entries bounded by `bound` solving the system for a single `k`.
pub fn brute_force_rational(spec: &SystemSpec, p: TangleFraction, bound: i64, k: u32) -> Vec<(TangleFraction, TangleFraction)> {
    rational_search(spec, p, bound, k, true)
}

pub fn brute_force_rational_sequential(
    spec: &SystemSpec,
    p: TangleFraction,
    bound: i64,
    k: u32,
) -> Vec<(TangleFraction, TangleFraction)> {
    rational_search(spec, p, bound, k, false)
}

/// A Montesinos `O^2` with integral `R` solving the `k = 2` inverted equations for `P = (0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MontesinosHit {
    #[serde(rename = "O")]
    pub o: MontesinosExpr,
    #[serde(rename = "R")]
    pub r: TangleFraction,
}

fn proper_fractions(bound: i64) -> Vec<TangleFraction> {
    let mut out = Vec::new();
    for v in 2..=bound {
        for u in 1..v {
            if u.gcd(&v) == 1 {
                out.push(TangleFraction::new(u, v).expect("v > 0"));
            }
        }
    }
    out.sort();
    out
}

fn montesinos_search(bound: i64, parallel: bool) -> Vec<MontesinosHit> {
    let leaves = proper_fractions(bound);
    let mut pairs = Vec::new();
    for (i, a) in leaves.iter().enumerate() {
        for c in &leaves[i..] {
            pairs.push((*a, *c));
        }
    }
    let target = [FourPlat::torus(5), FourPlat::torus(-5)];
    let scan = |(a, c): (TangleFraction, TangleFraction)| {
        let mut hits = Vec::new();
        for m0 in -2 * bound..=2 * bound {
            for s in -bound..=bound {
                let mut o = MontesinosExpr::new(vec![a, c, TangleFraction::integer(m0)]);
                if s != 0 {
                    o = o.star(s);
                }
                if closure_general(&o, TangleFraction::ZERO) != Closure::FourPlat(FourPlat::UNKNOT) {
                    continue;
                }
                for r in [-1, 1] {
                    let r = TangleFraction::integer(r);
                    if closure_general(&o, r).four_plat().is_some_and(|b| target.contains(&b)) {
                        hits.push(MontesinosHit { o: o.clone(), r });
                    }
                }
            }
        }
        hits
    };
    let mut out = if parallel {
        par::flat_map_ordered(pairs, scan)
    } else {
        par::flat_map_ordered_sequential(pairs, scan)
    };
    out.sort();
    out
}

/// Two-leaf expressions `(u/v, x/y, m_0) ⋆ (1/s)` with `0 < u < v ≤ bound`,
/// `0 < x < y ≤ bound`, `|m_0| ≤ 2·bound`, `|s| ≤ bound`, and `R = (±1)`,
/// whose closures are the unknot (with `P = 0`) and the `(2,5)` torus knot
/// of either handedness.
pub fn brute_force_montesinos(bound: i64) -> Vec<MontesinosHit> {
    montesinos_search(bound, true)
}

pub fn brute_force_montesinos_sequential(bound: i64) -> Vec<MontesinosHit> {
    montesinos_search(bound, false)
}

/// Moves a trailing vertical twist onto `R` and writes the leaves as
/// `(f_1, f_2 + m)` with `0 < f_1 ≤ f_2 < 1`. `None` if the twist does not
/// leave `R` integral.
pub fn normalize_montesinos_hit(hit: &MontesinosHit) -> Option<MontesinosHit> {
    let mut r = hit.r;
    for op in hit.o.trail.iter().rev() {
        r = match *op {
            TrailOp::Star(m) => star_vertical(r, m),
            TrailOp::Add(m) => crate::fraction::add_horizontal(r, m),
        };
    }
    if !r.is_integral() {
        return None;
    }
    let mut shift = 0i64;
    let mut parts = Vec::new();
    for f in &hit.o.summands {
        if f.is_infinity() {
            return None;
        }
        let whole = Integer::div_floor(&f.num(), &f.den());
        shift += whole;
        let rest = crate::fraction::add_horizontal(*f, -whole);
        if rest != TangleFraction::ZERO {
            parts.push(rest);
        }
    }
    parts.sort_by(|a, b| value_cmp(*a, *b));
    if let Some(last) = parts.last_mut() {
        *last = crate::fraction::add_horizontal(*last, shift);
    }
    Some(MontesinosHit {
        o: MontesinosExpr::new(parts),
        r,
    })
}

/// Distinct normalized hits.
pub fn montesinos_classes(hits: &[MontesinosHit]) -> BTreeSet<MontesinosHit> {
    hits.iter().filter_map(normalize_montesinos_hit).collect()
}

/// The four shapes of `R` for the Xer system with `P = (0)` and vertical `O`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DarcyFamily {
    /// `1/j`
    Vertical { j: i64 },
    /// `3/(3+j)`
    Three { j: i64 },
    /// `5/(5+j)`
    Five { j: i64 },
    /// `(4k−1)/(4+j(4k−1))`
    FourKMinusOne { k: i64, j: i64 },
}

/// Which family `R` belongs to, if any.
pub fn darcy_family(r: TangleFraction) -> Option<DarcyFamily> {
    let (c, d) = (r.num(), r.den());
    for (n, m) in [(c, d), (-c, -d)] {
        match n {
            1 => return Some(DarcyFamily::Vertical { j: m }),
            3 => return Some(DarcyFamily::Three { j: m - 3 }),
            5 => return Some(DarcyFamily::Five { j: m - 5 }),
            _ => {}
        }
    }
    for (n, m) in [(c, d), (-c, -d)] {
        if n.mod_floor(&4) == 3 && (m - 4) % n == 0 {
            return Some(DarcyFamily::FourKMinusOne {
                k: (n + 1) / 4,
                j: (m - 4) / n,
            });
        }
    }
    None
}

/// Xer on `P = (0)`: `N(O) = b(1,1)` and `N(O + R) = b(4,1)` over bounded fractions.
pub fn xer_demo(bound: i64) -> Vec<(TangleFraction, TangleFraction)> {
    let all = reduced_fractions(bound);
    let target = FourPlat::torus(4);
    let candidates: Vec<TangleFraction> = all
        .iter()
        .copied()
        .filter(|o| closure_of_sum(*o, TangleFraction::ZERO) == FourPlat::UNKNOT)
        .collect();
    let mut out = par::flat_map_ordered(candidates, |o| {
        all.iter()
            .filter(|r| closure_of_sum(o, **r) == target)
            .map(|r| (o, *r))
            .collect::<Vec<_>>()
    });
    out.sort_by(pair_cmp);
    out
}
