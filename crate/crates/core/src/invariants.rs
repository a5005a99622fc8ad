//! Signed lattice-point quantization and Duistermaat-Heckman data of an
//! oriented template: each polytope contributes with the sign of its side.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactgeom::rational::{is_integral, DisplayPoint};
use crate::exactgeom::{Containment, IntVector, Point, Rational};
use crate::template::{NonorientableError, OrigamiTemplate, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("template is not orientable: {0}")]
    Nonorientable(#[from] NonorientableError),
    #[error("non-integral vertices: {}", format_vertices(.0))]
    NonIntegral(Vec<(usize, Point)>),
}

fn format_vertices(v: &[(usize, Point)]) -> String {
    v.iter()
        .map(|(p, x)| format!("polytope {p} {}", DisplayPoint(x)))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantizationResult {
    /// Signed multiplicity at every lattice point of some polytope, zeros
    /// included.
    pub multiplicities: BTreeMap<IntVector, i64>,
    pub virtual_dimension: i64,
}

impl QuantizationResult {
    /// Points with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (&IntVector, i64)> {
        self.multiplicities
            .iter()
            .filter(|(_, &m)| m != 0)
            .map(|(p, &m)| (p, m))
    }
}

pub fn quantize(t: &OrigamiTemplate) -> Result<QuantizationResult, InvariantError> {
    let signs = t.orientation()?;
    let bad: Vec<(usize, Point)> = t
        .polytopes()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            p.vertices()
                .iter()
                .filter(|v| !is_integral(v))
                .map(move |v| (i, v.clone()))
        })
        .collect();
    if !bad.is_empty() {
        return Err(InvariantError::NonIntegral(bad));
    }
    let mut multiplicities = BTreeMap::new();
    for (p, sign) in t.polytopes().iter().zip(&signs) {
        for pt in p.lattice_points() {
            *multiplicities.entry(pt).or_insert(0) += sign.value();
        }
    }
    let virtual_dimension = multiplicities.values().sum();
    Ok(QuantizationResult {
        multiplicities,
        virtual_dimension,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhValue {
    pub point: Point,
    /// Signed count of closed polytopes containing the point.
    pub density: i64,
    /// False when the point lies on the boundary of some polytope.
    pub generic: bool,
}

pub fn dh_density(t: &OrigamiTemplate, x: &[Rational]) -> Result<DhValue, InvariantError> {
    let signs = t.orientation()?;
    Ok(density_with(t, &signs, x))
}

pub(crate) fn density_with(t: &OrigamiTemplate, signs: &[Sign], x: &[Rational]) -> DhValue {
    let mut density = 0;
    let mut generic = true;
    for (p, sign) in t.polytopes().iter().zip(signs) {
        match p.contains(x) {
            Containment::Interior => density += sign.value(),
            Containment::Boundary(_) => {
                density += sign.value();
                generic = false;
            }
            Containment::Outside => {}
        }
    }
    DhValue {
        point: x.to_vec(),
        density,
        generic,
    }
}

/// Total mass of the signed Lebesgue measure.
pub fn signed_volume(t: &OrigamiTemplate) -> Result<Rational, InvariantError> {
    let signs = t.orientation()?;
    Ok(t.polytopes()
        .iter()
        .zip(&signs)
        .fold(Rational::zero(), |acc, (p, s)| match s {
            Sign::Plus => acc + p.volume(),
            Sign::Minus => acc - p.volume(),
        }))
}
