//! Planar diagrams of rational and Montesinos tangles, their closures, and
//! closed 2-braids.
//!
//! A crossing lists its four edges counterclockwise, starting at an end of
//! the under-strand: slots 0 and 2 are the under-strand, 1 and 3 the
//! over-strand. Edges are compact integer labels; each edge of a closed
//! diagram occupies exactly two slots.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TangleError};
use crate::fraction::{cf_expand, TangleFraction, TwistVector};
use crate::montesinos::{MontesinosExpr, TrailOp};

/// Largest diagram the state-sum oracle accepts.
pub const MAX_CROSSINGS: usize = 24;

/// Boundary points of a 4-ended tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    NW = 0,
    NE = 1,
    SW = 2,
    SE = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[usize; 4]>,
    /// Edges at NW, NE, SW, SE; `None` once closed.
    endpoints: Option<[usize; 4]>,
    free_loops: usize,
    edge_count: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn check_scale(crossings: u64) -> Result<()> {
    if crossings as usize > MAX_CROSSINGS {
        Err(TangleError::ScaleExceeded {
            crossings: crossings as usize,
            limit: MAX_CROSSINGS,
        })
    } else {
        Ok(())
    }
}

impl PlanarDiagram {
    /// Identifies edge pairs, counts arcs that closed up without crossings,
    /// and relabels edges in order of first appearance.
    fn assemble(
        crossings: Vec<[usize; 4]>,
        edge_count: usize,
        free_loops: usize,
        pairs: &[(usize, usize)],
        endpoints: Option<[usize; 4]>,
    ) -> Self {
        let mut uf = UnionFind::new(edge_count);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        let mut label = vec![usize::MAX; edge_count];
        let mut next = 0;
        let mut relabel = |e: usize, uf: &mut UnionFind| {
            let r = uf.find(e);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        };
        let crossings: Vec<[usize; 4]> = crossings
            .iter()
            .map(|c| c.map(|e| relabel(e, &mut uf)))
            .collect();
        let endpoints = endpoints.map(|ep| ep.map(|e| relabel(e, &mut uf)));
        let mut loops = free_loops;
        let mut seen = vec![false; edge_count];
        for e in 0..edge_count {
            let r = uf.find(e);
            if !seen[r] {
                seen[r] = true;
                if label[r] == usize::MAX {
                    loops += 1;
                }
            }
        }
        Self {
            crossings,
            endpoints,
            free_loops: loops,
            edge_count: next,
        }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_closed(&self) -> bool {
        self.endpoints.is_none()
    }

    pub fn endpoint(&self, which: Endpoint) -> Option<usize> {
        self.endpoints.map(|ep| ep[which as usize])
    }

    /// Two horizontal arcs, NW–NE and SW–SE.
    pub fn zero_tangle() -> Self {
        Self {
            crossings: vec![],
            endpoints: Some([0, 0, 1, 1]),
            free_loops: 0,
            edge_count: 2,
        }
    }

    /// Two vertical arcs, NW–SW and NE–SE.
    pub fn infinity_tangle() -> Self {
        Self {
            crossings: vec![],
            endpoints: Some([0, 1, 0, 1]),
            free_loops: 0,
            edge_count: 2,
        }
    }

    /// The one-crossing tangle `(1)` for `positive`, `(-1)` otherwise.
    ///
    /// Both strands run diagonally; `(1)` has the NW–SE strand on top.
    pub fn crossing_tangle(positive: bool) -> Self {
        let (nw, ne, sw, se) = (0, 1, 2, 3);
        let c = if positive { [sw, se, ne, nw] } else { [nw, sw, se, ne] };
        Self {
            crossings: vec![c],
            endpoints: Some([nw, ne, sw, se]),
            free_loops: 0,
            edge_count: 4,
        }
    }

    fn offset(&self, by: usize) -> (Vec<[usize; 4]>, [usize; 4]) {
        let cs = self.crossings.iter().map(|c| c.map(|e| e + by)).collect();
        let ep = self.endpoints.expect("tangle").map(|e| e + by);
        (cs, ep)
    }

    fn tangle_endpoints(&self) -> Result<[usize; 4]> {
        self.endpoints.ok_or(TangleError::NotATangle)
    }

    /// `a + b`: east side of `a` glued to the west side of `b`.
    pub fn tangle_sum(a: &Self, b: &Self) -> Result<Self> {
        let ea = a.tangle_endpoints()?;
        b.tangle_endpoints()?;
        let (cb, eb) = b.offset(a.edge_count);
        let mut crossings = a.crossings.clone();
        crossings.extend(cb);
        let pairs = [(ea[1], eb[0]), (ea[3], eb[2])];
        Ok(Self::assemble(
            crossings,
            a.edge_count + b.edge_count,
            a.free_loops + b.free_loops,
            &pairs,
            Some([ea[0], eb[1], ea[2], eb[3]]),
        ))
    }

    /// `a ⋆ b`: south side of `a` glued to the north side of `b`.
    pub fn vertical_sum(a: &Self, b: &Self) -> Result<Self> {
        let ea = a.tangle_endpoints()?;
        b.tangle_endpoints()?;
        let (cb, eb) = b.offset(a.edge_count);
        let mut crossings = a.crossings.clone();
        crossings.extend(cb);
        let pairs = [(ea[2], eb[0]), (ea[3], eb[1])];
        Ok(Self::assemble(
            crossings,
            a.edge_count + b.edge_count,
            a.free_loops + b.free_loops,
            &pairs,
            Some([ea[0], ea[1], eb[2], eb[3]]),
        ))
    }

    /// The integral tangle `(n)` drawn as `|n|` horizontal half-twists.
    pub fn horizontal_twists(n: i64) -> Self {
        let unit = Self::crossing_tangle(n > 0);
        (0..n.unsigned_abs()).fold(Self::zero_tangle(), |t, _| {
            Self::tangle_sum(&t, &unit).expect("tangles")
        })
    }

    /// The vertical tangle `(1/n)` drawn as `|n|` vertical half-twists.
    pub fn vertical_twists(n: i64) -> Self {
        let unit = Self::crossing_tangle(n > 0);
        (0..n.unsigned_abs()).fold(Self::infinity_tangle(), |t, _| {
            Self::vertical_sum(&t, &unit).expect("tangles")
        })
    }

    /// Adds a kink on edge `edge` (Reidemeister I); `over_first` picks which
    /// of the two kink types is inserted.
    pub fn with_kink(&self, edge: usize, over_first: bool) -> Self {
        let mut crossings = self.crossings.clone();
        let (tail, lp) = (self.edge_count, self.edge_count + 1);
        // reroute one slot of `edge` to the new tail edge
        let slot = crossings
            .iter()
            .enumerate()
            .flat_map(|(i, c)| (0..4).map(move |s| (i, s, c[s])))
            .find(|&(_, _, e)| e == edge);
        let mut endpoints = self.endpoints;
        match slot {
            Some((i, s, _)) => crossings[i][s] = tail,
            None => {
                let ep = endpoints.as_mut().expect("edge without crossing must reach the boundary");
                let k = ep.iter().position(|&e| e == edge).expect("edge exists");
                ep[k] = tail;
            }
        }
        crossings.push(if over_first {
            [edge, lp, lp, tail]
        } else {
            [edge, tail, lp, lp]
        });
        Self::assemble(crossings, self.edge_count + 2, self.free_loops, &[], endpoints)
    }
}

/// Rational tangle diagram for a twist vector: `a_n` horizontal, alternating inward.
pub fn diagram_from_twists(v: &TwistVector) -> Result<PlanarDiagram> {
    check_scale(v.crossing_count())?;
    let n = v.entries().len();
    let mut t = if n % 2 == 1 {
        PlanarDiagram::zero_tangle()
    } else {
        PlanarDiagram::infinity_tangle()
    };
    for (i, &a) in v.entries().iter().enumerate() {
        t = if v.is_horizontal(i) {
            PlanarDiagram::tangle_sum(&t, &PlanarDiagram::horizontal_twists(a))?
        } else {
            PlanarDiagram::vertical_sum(&t, &PlanarDiagram::vertical_twists(a))?
        };
    }
    Ok(t)
}

/// Standard diagram of a rational tangle (the canonical twist expansion).
pub fn diagram_of_fraction(f: TangleFraction) -> Result<PlanarDiagram> {
    if f.is_infinity() {
        return Ok(PlanarDiagram::infinity_tangle());
    }
    diagram_from_twists(&cf_expand(f).expect("finite"))
}

/// Summands side by side, then the trail as twist regions.
pub fn montesinos_diagram(m: &MontesinosExpr) -> Result<PlanarDiagram> {
    check_scale(m.crossing_count())?;
    let mut t = PlanarDiagram::zero_tangle();
    for f in &m.summands {
        t = PlanarDiagram::tangle_sum(&t, &diagram_of_fraction(*f)?)?;
    }
    for op in &m.trail {
        t = match *op {
            TrailOp::Star(k) => PlanarDiagram::vertical_sum(&t, &PlanarDiagram::vertical_twists(k))?,
            TrailOp::Add(k) => PlanarDiagram::tangle_sum(&t, &PlanarDiagram::horizontal_twists(k))?,
        };
    }
    Ok(t)
}

/// Joins NW to NE and SW to SE.
pub fn numerator_close(d: &PlanarDiagram) -> Result<PlanarDiagram> {
    let ep = d.tangle_endpoints()?;
    Ok(PlanarDiagram::assemble(
        d.crossings.clone(),
        d.edge_count,
        d.free_loops,
        &[(ep[0], ep[1]), (ep[2], ep[3])],
        None,
    ))
}

/// Closure of a braid on `strands` strands; generator `i` (1-based) is a
/// positive crossing between positions `i` and `i+1`, `-i` its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram> {
    check_scale(word.len() as u64)?;
    let mut next = strands;
    let mut current: Vec<usize> = (0..strands).collect();
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        assert!(i + 1 < strands, "generator {g} out of range");
        let (sw, se) = (current[i], current[i + 1]);
        let (nw, ne) = (next, next + 1);
        next += 2;
        // strands run upward; a positive generator has the SW–NE strand on top
        crossings.push(if g > 0 { [se, ne, nw, sw] } else { [sw, se, ne, nw] });
        current[i] = nw;
        current[i + 1] = ne;
    }
    let pairs: Vec<(usize, usize)> = (0..strands).map(|j| (current[j], j)).collect();
    Ok(PlanarDiagram::assemble(crossings, next, 0, &pairs, None))
}

/// Closed 2-braid with `|n|` crossings of sign `sign(n)`: the torus link `T(2, n)`.
pub fn torus_2braid(n: i64) -> Result<PlanarDiagram> {
    check_scale(n.unsigned_abs())?;
    let g = if n >= 0 { 1 } else { -1 };
    braid_closure(2, &vec![g; n.unsigned_abs() as usize])
}

impl fmt::Display for PlanarDiagram {
    /// `PD[X[a,b,c,d], …]` with 1-based edge labels; crossing-free
    /// components are written as `Loop[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[")?;
        let mut first = true;
        for c in &self.crossings {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "X[{},{},{},{}]", c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1)?;
        }
        for _ in 0..self.free_loops {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "Loop[]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for PlanarDiagram {
    type Err = TangleError;

    /// Parses closed PD codes as written by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| TangleError::UnsupportedTangle(format!("bad PD code: {m}"));
        let body = s
            .trim()
            .strip_prefix("PD[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected PD[...]"))?;
        let mut crossings = Vec::new();
        let mut loops = 0;
        let mut rest = body.trim();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix("Loop[]") {
                loops += 1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("X[") {
                let end = r.find(']').ok_or_else(|| bad("unterminated X"))?;
                let labels: Vec<usize> = r[..end]
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| bad(x)))
                    .collect::<Result<_>>()?;
                let arr: [usize; 4] = labels.try_into().map_err(|_| bad("X needs 4 labels"))?;
                if arr.contains(&0) {
                    return Err(bad("labels are 1-based"));
                }
                crossings.push(arr.map(|e| e - 1));
                rest = &r[end + 1..];
            } else {
                return Err(bad(rest));
            }
            rest = rest.trim_start().trim_start_matches(',').trim_start();
        }
        let edge_count = crossings.iter().flatten().map(|&e| e + 1).max().unwrap_or(0);
        let mut uses = vec![0; edge_count];
        for &e in crossings.iter().flatten() {
            uses[e] += 1;
        }
        if uses.iter().any(|&u| u != 2) {
            return Err(bad("every edge must appear exactly twice"));
        }
        Ok(Self::assemble(crossings, edge_count, loops, &[], None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_tangles() {
        let z = diagram_from_twists(&TwistVector(vec![0])).unwrap();
        assert_eq!(z.crossing_count(), 0);
        assert_eq!(numerator_close(&z).unwrap().free_loops(), 2);
        let three = diagram_from_twists(&TwistVector(vec![3])).unwrap();
        assert_eq!(three.crossing_count(), 3);
        let d = diagram_from_twists(&TwistVector(vec![3, 1, 1, 1])).unwrap();
        assert_eq!(d.crossing_count(), 6);
        let closed = numerator_close(&d).unwrap();
        assert!(closed.is_closed());
        assert_eq!(closed.edge_count(), 12);
        assert_eq!(
            numerator_close(&closed),
            Err(TangleError::NotATangle)
        );
    }

    #[test]
    fn closed_diagrams_use_each_edge_twice() {
        for v in [vec![2, 3], vec![1, -2, 0], vec![4, 0, 0, 1]] {
            let d = numerator_close(&diagram_from_twists(&TwistVector(v)).unwrap()).unwrap();
            let mut uses = vec![0; d.edge_count()];
            for &e in d.crossings().iter().flatten() {
                uses[e] += 1;
            }
            assert!(uses.iter().all(|&u| u == 2));
        }
    }

    #[test]
    fn scale_guard() {
        assert!(matches!(
            diagram_from_twists(&TwistVector(vec![20, 5])),
            Err(TangleError::ScaleExceeded { crossings: 25, .. })
        ));
        assert!(torus_2braid(25).is_err());
    }

    #[test]
    fn pd_round_trip() {
        let d = numerator_close(&diagram_from_twists(&TwistVector(vec![2, 2])).unwrap()).unwrap();
        let text = d.to_string();
        let back: PlanarDiagram = text.parse().unwrap();
        assert_eq!(back, d);
        let unlink = torus_2braid(0).unwrap();
        assert_eq!(unlink.to_string(), "PD[Loop[], Loop[]]");
        assert_eq!(unlink.to_string().parse::<PlanarDiagram>().unwrap(), unlink);
        assert!("PD[X[1,2,3,4]]".parse::<PlanarDiagram>().is_err());
    }

    #[test]
    fn montesinos_crossings() {
        let m = MontesinosExpr::new(vec![
            TangleFraction::new(1, 2).unwrap(),
            TangleFraction::new(-1, 3).unwrap(),
        ]);
        assert_eq!(montesinos_diagram(&m).unwrap().crossing_count(), 5);
    }
}
