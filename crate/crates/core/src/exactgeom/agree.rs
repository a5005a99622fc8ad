//! Deciding whether two polytopes coincide on a neighbourhood of a shared
//! facet.

use std::collections::BTreeSet;

use super::polytope::{Face, HPolytope, Halfspace};
use super::GeomError;

fn active_halfspaces(p: &HPolytope, v: usize) -> BTreeSet<&Halfspace> {
    p.active_at(v).iter().map(|&i| &p.halfspaces()[i]).collect()
}

/// True iff the facets `f1` of `p1` and `f2` of `p2` are the same point set
/// and, at every vertex of that facet, both polytopes have the same active
/// halfspaces. Equal local cones along all vertices of the facet force the
/// polytopes to agree on a neighbourhood of it.
pub fn agrees_near(
    p1: &HPolytope,
    f1: &Face,
    p2: &HPolytope,
    f2: &Face,
) -> Result<bool, GeomError> {
    if p1.dim() != p2.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: p1.dim(),
            found: p2.dim(),
        });
    }
    let facet_dim = p1.dim() - 1;
    if f1.dim != facet_dim || f2.dim != facet_dim {
        return Err(GeomError::NotAFacet);
    }
    let pts1: Vec<_> = f1.vertices.iter().map(|&v| &p1.vertices()[v]).collect();
    let pts2: Vec<_> = f2.vertices.iter().map(|&v| &p2.vertices()[v]).collect();
    // vertex lists are lex-sorted, so facet vertex lists are too
    if pts1 != pts2 {
        return Ok(false);
    }
    for (&v1, &v2) in f1.vertices.iter().zip(&f2.vertices) {
        if active_halfspaces(p1, v1) != active_halfspaces(p2, v2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`agrees_near`] with facets addressed by halfspace index.
pub fn facets_agree(
    p1: &HPolytope,
    i1: usize,
    p2: &HPolytope,
    i2: usize,
) -> Result<bool, GeomError> {
    let f1 = p1.facet(i1).ok_or(GeomError::NotAFacet)?;
    let f2 = p2.facet(i2).ok_or(GeomError::NotAFacet)?;
    agrees_near(p1, f1, p2, f2)
}
