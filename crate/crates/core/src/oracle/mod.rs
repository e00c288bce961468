//! Independent check of closure computations: build an explicit diagram and
//! compare Jones polynomials with a reference diagram of the expected 4-plat.

pub mod diagram;
pub mod invariants;
pub mod poly;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::fourplat::FourPlat;
use crate::fraction::TangleFraction;
use crate::tangle::Tangle;

pub use diagram::{
    braid_closure, diagram_from_twists, diagram_of_fraction, montesinos_diagram, numerator_close,
    torus_2braid, PlanarDiagram, MAX_CROSSINGS,
};
pub use invariants::{
    component_count, determinant, jones, jones_set, jones_string, kauffman_bracket,
    kauffman_bracket_sequential, writhe,
};
pub use poly::LaurentPoly;

/// Standard diagram of `b(p, q)`: the numerator closure of the tangle `p/q`.
pub fn reference_diagram(b: FourPlat) -> Result<PlanarDiagram> {
    let f = TangleFraction::new(b.p() as i64, b.q() as i64)?;
    numerator_close(&diagram_of_fraction(f)?)
}

/// Diagram of `N(t + r)`.
pub fn closure_diagram(t: &Tangle, r: TangleFraction) -> Result<PlanarDiagram> {
    let sum = PlanarDiagram::tangle_sum(&t.diagram()?, &diagram_of_fraction(r)?)?;
    numerator_close(&sum)
}

/// Whether two closed diagrams have the same Jones polynomials over all orientations.
pub fn jones_equivalent(a: &PlanarDiagram, b: &PlanarDiagram) -> Result<bool> {
    Ok(jones_set(a)? == jones_set(b)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    pub determinant: u64,
    pub jones: Vec<String>,
}

pub fn report(d: &PlanarDiagram) -> Result<OracleReport> {
    let set: BTreeSet<LaurentPoly> = jones_set(d)?;
    Ok(OracleReport {
        crossings: d.crossing_count(),
        components: component_count(d)?,
        writhe: writhe(d)?,
        determinant: determinant(d)?,
        jones: set.iter().map(jones_string).collect(),
    })
}

/// Checks `N(t + r) = expected` on diagrams.
pub fn confirms(t: &Tangle, r: TangleFraction, expected: FourPlat) -> Result<bool> {
    jones_equivalent(&closure_diagram(t, r)?, &reference_diagram(expected)?)
}
