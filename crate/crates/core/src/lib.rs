//! Exact computation of basic (IC) functions on non-degenerate arc spaces:
//! Hilbert-basis decomposition counts for affine normal toric varieties, the
//! global curve-counting cross-checks over `P^1 / F_q`, and the inverse
//! Satake route to the `GL_N` L-monoid basic function.

pub mod error;
pub mod global_curve;
pub mod lattice;
pub mod laurent;
pub mod report;
pub mod satake;
pub mod strata;
pub mod suite;
pub mod toric;

pub use error::{ArcError, Result};
pub use lattice::{cone_from_generators, DualVector, LatticePoint, RationalCone};
pub use laurent::Laurent;
pub use satake::{Convention, HeckeElement};
pub use toric::{GradedSeries, SaturatedMonoid};
