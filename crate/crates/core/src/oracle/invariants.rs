//! Kauffman bracket, writhe, Jones polynomial and determinant of closed
//! planar diagrams.

use std::collections::BTreeSet;

use crate::error::{Result, TangleError};
use crate::oracle::diagram::{PlanarDiagram, MAX_CROSSINGS};
use crate::oracle::poly::{LaurentPoly, PolyDisplay};
use crate::par;

fn closed_within_limit(d: &PlanarDiagram) -> Result<()> {
    if !d.is_closed() {
        return Err(TangleError::OpenDiagram);
    }
    if d.crossing_count() > MAX_CROSSINGS {
        return Err(TangleError::ScaleExceeded {
            crossings: d.crossing_count(),
            limit: MAX_CROSSINGS,
        });
    }
    Ok(())
}

/// Loops left after smoothing every crossing according to `state`
/// (bit set = B-smoothing).
fn count_loops(d: &PlanarDiagram, state: u64, parent: &mut Vec<usize>) -> usize {
    parent.clear();
    parent.extend(0..d.edge_count());
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut classes = d.edge_count();
    let mut join = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
            classes -= 1;
        }
    };
    for (i, c) in d.crossings().iter().enumerate() {
        if state >> i & 1 == 0 {
            join(parent, c[0], c[1]);
            join(parent, c[2], c[3]);
        } else {
            join(parent, c[0], c[3]);
            join(parent, c[1], c[2]);
        }
    }
    classes + d.free_loops()
}

/// Histogram indexed by `a * stride + loops`, `a` the number of A-smoothings.
fn state_table(d: &PlanarDiagram, parallel: bool) -> (Vec<u64>, usize) {
    let n = d.crossing_count();
    let stride = d.edge_count() + d.free_loops() + 1;
    let size = (n + 1) * stride;
    let fold = |(mut table, mut scratch): (Vec<u64>, Vec<usize>), state: u64| {
        let loops = count_loops(d, state, &mut scratch);
        let a = n - state.count_ones() as usize;
        table[a * stride + loops] += 1;
        (table, scratch)
    };
    let identity = || (vec![0u64; size], Vec::with_capacity(d.edge_count()));
    let states = 0..1u64 << n;
    let (table, _) = if parallel {
        par::fold_range(states, identity, fold, |(mut x, s), (y, _)| {
            x.iter_mut().zip(&y).for_each(|(a, b)| *a += b);
            (x, s)
        })
    } else {
        par::fold_range_sequential(states, identity, fold)
    };
    (table, stride)
}

fn bracket_from_table(table: &[u64], stride: usize, n: usize) -> LaurentPoly {
    let delta = &LaurentPoly::monomial(2, -1) + &LaurentPoly::monomial(-2, -1);
    let mut powers = vec![LaurentPoly::one()];
    for k in 1..stride {
        powers.push(&powers[k - 1] * &delta);
    }
    let mut out = LaurentPoly::zero();
    for a in 0..=n {
        for loops in 1..stride {
            let count = table[a * stride + loops];
            if count == 0 {
                continue;
            }
            let b = n - a;
            let term = powers[loops - 1].shift(a as i32 - b as i32);
            for (e, c) in term.terms() {
                out.add_term(e, c * count as i64);
            }
        }
    }
    out
}

fn bracket_impl(d: &PlanarDiagram, parallel: bool) -> Result<LaurentPoly> {
    closed_within_limit(d)?;
    if d.crossing_count() == 0 && d.free_loops() == 0 {
        return Err(TangleError::UnsupportedTangle("empty diagram".into()));
    }
    let (table, stride) = state_table(d, parallel);
    Ok(bracket_from_table(&table, stride, d.crossing_count()))
}

/// Kauffman bracket in `A`, normalized so a single circle is 1. Runs the
/// state sum on the rayon pool when the `parallel` feature is enabled.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    bracket_impl(d, cfg!(feature = "parallel"))
}

pub fn kauffman_bracket_sequential(d: &PlanarDiagram) -> Result<LaurentPoly> {
    bracket_impl(d, false)
}

/// Strand traversal of a closed diagram.
struct Components {
    /// Component of each edge.
    of_edge: Vec<usize>,
    /// Slot through which each edge enters its head crossing, as `(crossing, slot)`.
    head: Vec<(usize, usize)>,
    count: usize,
}

fn occurrences(d: &PlanarDiagram) -> Vec<Vec<(usize, usize)>> {
    let mut occ = vec![Vec::with_capacity(2); d.edge_count()];
    for (i, c) in d.crossings().iter().enumerate() {
        for (s, &e) in c.iter().enumerate() {
            occ[e].push((i, s));
        }
    }
    occ
}

fn traverse(d: &PlanarDiagram) -> Components {
    let occ = occurrences(d);
    let mut of_edge = vec![usize::MAX; d.edge_count()];
    let mut head = vec![(usize::MAX, 0); d.edge_count()];
    let mut count = 0;
    for start in 0..d.edge_count() {
        if of_edge[start] != usize::MAX {
            continue;
        }
        let mut e = start;
        let mut enter = occ[start][0];
        loop {
            of_edge[e] = count;
            head[e] = enter;
            let (c, s) = enter;
            let exit = (c, (s + 2) % 4);
            let next = d.crossings()[c][exit.1];
            if of_edge[next] != usize::MAX {
                break;
            }
            enter = *occ[next].iter().find(|&&o| o != exit).expect("edge used twice");
            e = next;
        }
        count += 1;
    }
    Components { of_edge, head, count }
}

/// Number of link components, crossing-free circles included.
pub fn component_count(d: &PlanarDiagram) -> Result<usize> {
    if !d.is_closed() {
        return Err(TangleError::OpenDiagram);
    }
    Ok(traverse(d).count + d.free_loops())
}

/// Writhe when component `j` is reversed for every set bit `j` of `flips`.
fn writhe_with(d: &PlanarDiagram, comps: &Components, flips: u64) -> i64 {
    let entering_slot = |c: usize, pair: [usize; 2]| -> usize {
        let forward_in = pair
            .into_iter()
            .find(|&s| comps.head[d.crossings()[c][s]] == (c, s))
            .expect("one slot of each strand is an entry");
        let e = d.crossings()[c][pair[0]];
        if flips >> comps.of_edge[e] & 1 == 1 {
            (forward_in + 2) % 4
        } else {
            forward_in
        }
    };
    d.crossings()
        .iter()
        .enumerate()
        .map(|(c, _)| {
            let under = entering_slot(c, [0, 2]);
            let over = entering_slot(c, [1, 3]);
            if (under == 0 && over == 3) || (under == 2 && over == 1) {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// Writhe with every component oriented by the default traversal.
pub fn writhe(d: &PlanarDiagram) -> Result<i64> {
    if !d.is_closed() {
        return Err(TangleError::OpenDiagram);
    }
    Ok(writhe_with(d, &traverse(d), 0))
}

/// `(-A^3)^(-w) <D>` rewritten in `t = A^-4`; exponents count half-powers of `t`.
fn jones_from(bracket: &LaurentPoly, w: i64) -> LaurentPoly {
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift((-3 * w) as i32);
    let normalized = if sign < 0 { -&normalized } else { normalized };
    normalized
        .scale_exponents(-1)
        .divide_exponents(2)
        .expect("bracket exponents of a link diagram share parity")
}

/// Jones polynomial for the default orientation, in half-powers of `t`.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d)?;
    Ok(jones_from(&bracket, writhe(d)?))
}

/// Jones polynomials over all relative orientations of the components,
/// the first component held fixed. Independent of how the diagram was drawn.
pub fn jones_set(d: &PlanarDiagram) -> Result<BTreeSet<LaurentPoly>> {
    let bracket = kauffman_bracket(d)?;
    let comps = traverse(d);
    let choices = if comps.count == 0 { 1 } else { 1u64 << (comps.count - 1) };
    Ok((0..choices)
        .map(|flips| jones_from(&bracket, writhe_with(d, &comps, flips << 1)))
        .collect())
}

/// `|V(-1)|`, evaluated with `t^(1/2) = i`.
pub fn determinant(d: &PlanarDiagram) -> Result<u64> {
    determinant_of_jones(&jones(d)?)
}

pub fn determinant_of_jones(v: &LaurentPoly) -> Result<u64> {
    let (mut re, mut im) = (0i128, 0i128);
    for (h, c) in v.terms() {
        let c = c as i128;
        match h.rem_euclid(4) {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    let sq = (re * re + im * im) as u128;
    let root = (sq as f64).sqrt().round() as u128;
    if root * root != sq {
        return Err(TangleError::DomainError("|V(-1)| is not an integer".into()));
    }
    u64::try_from(root).map_err(|_| TangleError::Overflow)
}

/// Renders a Jones polynomial as a polynomial in `t`.
pub fn jones_string(v: &LaurentPoly) -> String {
    PolyDisplay {
        poly: v,
        var: "t",
        denom: 2,
    }
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::{TangleFraction, TwistVector};
    use crate::oracle::diagram::{
        braid_closure, diagram_from_twists, diagram_of_fraction, numerator_close, torus_2braid,
    };

    fn closed(v: &[i64]) -> PlanarDiagram {
        numerator_close(&diagram_from_twists(&TwistVector(v.to_vec())).unwrap()).unwrap()
    }

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn unknot_and_unlink() {
        let unknot = numerator_close(&PlanarDiagram::infinity_tangle()).unwrap();
        assert_eq!(kauffman_bracket(&unknot).unwrap(), LaurentPoly::one());
        let unlink = closed(&[0]);
        assert_eq!(kauffman_bracket(&unlink).unwrap(), poly(&[(2, -1), (-2, -1)]));
        assert_eq!(component_count(&unlink).unwrap(), 2);
        assert_eq!(determinant(&unlink).unwrap(), 0);
    }

    #[test]
    fn trefoil_calibration() {
        let right = closed(&[3]);
        assert_eq!(writhe(&right).unwrap(), 3);
        // V = t + t^3 - t^4
        assert_eq!(jones(&right).unwrap(), poly(&[(2, 1), (6, 1), (8, -1)]));
        assert_eq!(jones_string(&jones(&right).unwrap()), "t + t^3 - t^4");
        let left = closed(&[-3]);
        assert_eq!(
            kauffman_bracket(&left).unwrap(),
            poly(&[(7, 1), (3, -1), (-5, -1)])
        );
        assert_eq!(jones(&torus_2braid(3).unwrap()).unwrap(), jones(&right).unwrap());
        assert_eq!(determinant(&right).unwrap(), 3);
    }

    #[test]
    fn mirror_inverts_t() {
        for v in [vec![3, 2], vec![2, 1, 2], vec![5]] {
            let m: Vec<i64> = v.iter().map(|x| -x).collect();
            let a = jones(&closed(&v)).unwrap();
            let b = jones(&closed(&m)).unwrap();
            assert_eq!(a.scale_exponents(-1), b);
        }
    }

    #[test]
    fn reidemeister_moves() {
        let d = closed(&[2, 3]);
        let base = kauffman_bracket(&d).unwrap();
        let neg = kauffman_bracket(&d.with_kink(0, false)).unwrap();
        let pos = kauffman_bracket(&d.with_kink(0, true)).unwrap();
        assert_eq!(neg, &base * &LaurentPoly::monomial(3, -1));
        assert_eq!(pos, &base * &LaurentPoly::monomial(-3, -1));
        assert_eq!(jones(&d.with_kink(3, true)).unwrap(), jones(&d).unwrap());
        // II: a cancelling pair of twists
        let t = diagram_from_twists(&TwistVector(vec![2, 3])).unwrap();
        let pos = PlanarDiagram::crossing_tangle(true);
        let neg = PlanarDiagram::crossing_tangle(false);
        let ii = PlanarDiagram::tangle_sum(&PlanarDiagram::tangle_sum(&t, &pos).unwrap(), &neg).unwrap();
        let ii = numerator_close(&ii).unwrap();
        assert_eq!(ii.crossing_count(), 7);
        let plain = numerator_close(&t).unwrap();
        assert_eq!(kauffman_bracket(&ii).unwrap(), kauffman_bracket(&plain).unwrap());
        assert_eq!(jones_set(&ii).unwrap(), jones_set(&plain).unwrap());
        // III on closed 3-braids
        let a = braid_closure(3, &[1, 2, 1, -2, 1]).unwrap();
        let b = braid_closure(3, &[2, 1, 2, -2, 1]).unwrap();
        assert_eq!(kauffman_bracket(&a).unwrap(), kauffman_bracket(&b).unwrap());
    }

    #[test]
    fn determinants_match_numerators() {
        for (n, d) in [(5, 2), (7, 3), (11, 7), (13, 5), (8, 3), (-9, 4)] {
            let f = TangleFraction::new(n, d).unwrap();
            let closed = numerator_close(&diagram_of_fraction(f).unwrap()).unwrap();
            assert_eq!(determinant(&closed).unwrap(), n.unsigned_abs());
            let comps = if n % 2 == 0 { 2 } else { 1 };
            assert_eq!(component_count(&closed).unwrap(), comps);
        }
    }

    #[test]
    fn torus_links_match_integral_closures() {
        for n in -6..=6 {
            let t = torus_2braid(n).unwrap();
            let c = closed(&[n]);
            assert_eq!(jones_set(&t).unwrap(), jones_set(&c).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let d = closed(&[3, 2, 2, 3]);
        assert_eq!(
            kauffman_bracket(&d).unwrap(),
            kauffman_bracket_sequential(&d).unwrap()
        );
    }

    #[test]
    fn rejects_open_diagrams() {
        let t = diagram_from_twists(&TwistVector(vec![2])).unwrap();
        assert_eq!(kauffman_bracket(&t), Err(TangleError::OpenDiagram));
    }
}
