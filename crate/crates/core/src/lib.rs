//! Combinatorial invariants of toric origami manifolds computed exactly from
//! their templates: collections of Delzant polytopes with fused facets.

pub mod cohomology;
pub mod cones;
pub mod density;
pub mod exactgeom;
pub mod gallery;
pub mod invariants;
pub mod sampling;
pub mod template;
