//! Exact tangle calculus for site-specific recombination: rational and
//! Montesinos tangles, 4-plat closures, the recombination tangle equations,
//! and a diagrammatic Jones polynomial oracle.

pub mod error;
pub mod fourplat;
pub mod fraction;
pub mod montesinos;
pub mod notation;
pub mod oracle;
pub mod par;
pub mod solver;
pub mod tangle;

pub use error::{Result, TangleError};
pub use fourplat::{canonicalize, closure_of_sum, numerator_closure, FourPlat};
pub use fraction::{add_horizontal, cf_eval, cf_expand, star_vertical, TangleClass, TangleFraction, TwistVector};
pub use montesinos::{Closure, MontesinosExpr, NotFourPlat, TrailOp};
pub use tangle::Tangle;
