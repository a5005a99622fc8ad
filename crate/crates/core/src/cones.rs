//! Weight cones at the torus-fixed points.
//!
//! At a fixed point the isotropy weights are the primitive edge directions
//! of its polytope. After polarization by a generic `v` every weight pairs
//! positively with `v`; the cone spanned by the polarized weights, with sign
//! `sigma_i * (-1)^flips`, is one summand of the cone decomposition of the
//! Duistermaat-Heckman density.

use num_traits::{Signed, Zero};

use crate::exactgeom::linalg::{self, Matrix};
use crate::exactgeom::rational::{dot_ints, rat};
use crate::exactgeom::{IntVector, Point, Rational};
use crate::invariants::{self, DhValue};
use crate::sampling::{sampling_box, Lcg};
use crate::template::{fixed_points, NonorientableError, OrigamiTemplate, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("template is not orientable: {0}")]
    Nonorientable(#[from] NonorientableError),
    #[error("polarizing vector {v:?} is orthogonal to weights {weights:?} at polytope {polytope}")]
    NonGenericPolarization {
        polytope: usize,
        v: IntVector,
        weights: Vec<IntVector>,
    },
    #[error("point lies on the boundary of the cone at polytope {polytope} vertex {vertex}")]
    BoundaryPoint { polytope: usize, vertex: usize },
    #[error("polarizing vector has dimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub polytope: usize,
    pub vertex_index: usize,
    pub vertex: Point,
    /// Edge directions at the vertex, defined up to sign.
    pub weights: Vec<IntVector>,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedCone {
    pub polytope: usize,
    pub vertex_index: usize,
    pub apex: Point,
    pub generators: Vec<IntVector>,
    pub flips: usize,
    pub sign: Sign,
}

/// Where a point lies relative to a closed cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeMembership {
    Inside,
    Boundary,
    Outside,
}

impl PolarizedCone {
    /// Coefficients `t` with `apex + sum t_i g_i = x`.
    pub fn coordinates(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.apex.len();
        // columns are generators
        let a: Matrix = (0..n)
            .map(|row| self.generators.iter().map(|g| rat(g[row])).collect())
            .collect();
        let b: Vec<Rational> = x.iter().zip(&self.apex).map(|(xi, pi)| xi - pi).collect();
        linalg::solve(&a, &b).expect("cone generators form a basis")
    }

    pub fn membership(&self, x: &[Rational]) -> ConeMembership {
        let t = self.coordinates(x);
        if t.iter().any(Signed::is_negative) {
            ConeMembership::Outside
        } else if t.iter().any(Zero::is_zero) {
            ConeMembership::Boundary
        } else {
            ConeMembership::Inside
        }
    }
}

pub fn weight_sets(t: &OrigamiTemplate) -> Result<Vec<WeightSet>, ConeError> {
    let signs = t.orientation()?;
    Ok(fixed_points(t)
        .into_iter()
        .map(|fp| WeightSet {
            weights: t.polytopes()[fp.polytope].edge_directions(fp.vertex_index),
            sign: signs[fp.polytope],
            polytope: fp.polytope,
            vertex_index: fp.vertex_index,
            vertex: fp.vertex,
        })
        .collect())
}

pub fn polarize(w: &WeightSet, v: &[i64]) -> Result<PolarizedCone, ConeError> {
    if v.len() != w.vertex.len() {
        return Err(ConeError::Dimension {
            expected: w.vertex.len(),
            found: v.len(),
        });
    }
    let zero: Vec<IntVector> = w
        .weights
        .iter()
        .filter(|a| dot_ints(a, v) == 0)
        .cloned()
        .collect();
    if !zero.is_empty() {
        return Err(ConeError::NonGenericPolarization {
            polytope: w.polytope,
            v: v.to_vec(),
            weights: zero,
        });
    }
    let mut flips = 0;
    let generators = w
        .weights
        .iter()
        .map(|a| {
            if dot_ints(a, v) < 0 {
                flips += 1;
                a.iter().map(|x| -x).collect()
            } else {
                a.clone()
            }
        })
        .collect();
    let sign = if flips % 2 == 0 { w.sign } else { -w.sign };
    Ok(PolarizedCone {
        polytope: w.polytope,
        vertex_index: w.vertex_index,
        apex: w.vertex.clone(),
        generators,
        flips,
        sign,
    })
}

/// `(1, N, N^2, ...)` with `N` one more than the largest weight entry; no
/// nonzero integer vector with entries below `N` is orthogonal to it.
pub fn default_polarization(dim: usize, sets: &[WeightSet]) -> IntVector {
    let max = sets
        .iter()
        .flat_map(|w| w.weights.iter().flatten())
        .map(|x| x.abs())
        .max()
        .unwrap_or(0);
    powers(dim, max + 1)
}

/// The default vector with its entries in reverse order; equally generic.
pub fn alternate_polarization(dim: usize, sets: &[WeightSet]) -> IntVector {
    let mut v = default_polarization(dim, sets);
    v.reverse();
    v
}

pub(crate) fn powers(dim: usize, base: i64) -> IntVector {
    let mut v = Vec::with_capacity(dim);
    let mut p = 1i64;
    for _ in 0..dim {
        v.push(p);
        p = p.checked_mul(base).expect("polarizing vector fits in i64");
    }
    v
}

pub fn cone_decomposition(t: &OrigamiTemplate, v: &[i64]) -> Result<Vec<PolarizedCone>, ConeError> {
    weight_sets(t)?.iter().map(|w| polarize(w, v)).collect()
}

pub(crate) fn density_of_cones(cones: &[PolarizedCone], x: &[Rational]) -> Result<i64, ConeError> {
    let mut total = 0;
    for c in cones {
        match c.membership(x) {
            ConeMembership::Inside => total += c.sign.value(),
            ConeMembership::Outside => {}
            ConeMembership::Boundary => {
                return Err(ConeError::BoundaryPoint {
                    polytope: c.polytope,
                    vertex: c.vertex_index,
                })
            }
        }
    }
    Ok(total)
}

/// Signed count of polarized weight cones containing `x`.
pub fn cone_density(t: &OrigamiTemplate, v: &[i64], x: &[Rational]) -> Result<i64, ConeError> {
    density_of_cones(&cone_decomposition(t, v)?, x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub point: Point,
    pub cone_density: i64,
    pub polytope_density: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub polarization: IntVector,
    pub samples: usize,
    /// Samples on a polytope or cone boundary, skipped.
    pub discarded: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn success(&self) -> bool {
        self.disagreements == 0
    }
}

/// Compares the cone density with the signed polytope density at
/// `samples` seeded points drawn from a box slightly larger than the
/// template.
pub fn verify_dh_identity(
    t: &OrigamiTemplate,
    v: &[i64],
    samples: usize,
    seed: u64,
) -> Result<IdentityReport, ConeError> {
    let signs = t.orientation()?;
    let cones = cone_decomposition(t, v)?;
    let (lo, hi) = sampling_box(t.polytopes());
    let mut rng = Lcg::new(seed);
    let mut report = IdentityReport {
        polarization: v.to_vec(),
        samples,
        discarded: 0,
        agreements: 0,
        disagreements: 0,
        first_counterexample: None,
    };
    for _ in 0..samples {
        let x = rng.next_point(&lo, &hi);
        let DhValue {
            density, generic, ..
        } = invariants::density_with(t, &signs, &x);
        let cone = match density_of_cones(&cones, &x) {
            Ok(d) => d,
            Err(ConeError::BoundaryPoint { .. }) => {
                report.discarded += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if !generic {
            report.discarded += 1;
            continue;
        }
        if cone == density {
            report.agreements += 1;
        } else {
            report.disagreements += 1;
            report.first_counterexample.get_or_insert(Counterexample {
                point: x,
                cone_density: cone,
                polytope_density: density,
            });
        }
    }
    Ok(report)
}
