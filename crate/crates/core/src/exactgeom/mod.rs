//! Exact rational polytope kernel.

mod agree;
pub mod linalg;
mod polytope;
pub mod rational;

pub use agree::{agrees_near, facets_agree};
pub use polytope::{Containment, DelzantReport, Face, HPolytope, Halfspace, VertexRecord};
pub use rational::{parse_rational, point, rat, ratio, IntVector, Point, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("no halfspaces given")]
    NoHalfspaces,
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is not full-dimensional")]
    Degenerate,
    #[error("polyhedron is empty")]
    Empty,
    #[error("face is not a facet")]
    NotAFacet,
}
