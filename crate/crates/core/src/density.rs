//! Interchangeable ways to evaluate the Duistermaat-Heckman density,
//! registered by name.

use std::collections::BTreeMap;

use crate::cones::{self, ConeError};
use crate::exactgeom::{IntVector, Rational};
use crate::invariants::{self, InvariantError};
use crate::template::OrigamiTemplate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensitySample {
    Generic(i64),
    /// The point sits on a wall of the chosen method.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DensityError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("unknown density method '{0}'")]
    Unknown(String),
    #[error("density method '{0}' is already registered")]
    Duplicate(String),
}

pub trait DensityMethod: Send + Sync {
    fn name(&self) -> &str;
    fn evaluate(&self, t: &OrigamiTemplate, x: &[Rational]) -> Result<DensitySample, DensityError>;
}

/// Signed count of the polytopes containing the point.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolytopeSum;

impl DensityMethod for PolytopeSum {
    fn name(&self) -> &str {
        "polytopes"
    }

    fn evaluate(&self, t: &OrigamiTemplate, x: &[Rational]) -> Result<DensitySample, DensityError> {
        let d = invariants::dh_density(t, x)?;
        Ok(if d.generic {
            DensitySample::Generic(d.density)
        } else {
            DensitySample::Boundary
        })
    }
}

/// Signed count of polarized weight cones; the default polarizing vector is
/// used when none is given.
#[derive(Clone, Debug, Default)]
pub struct WeightConeSum {
    pub polarization: Option<IntVector>,
}

impl DensityMethod for WeightConeSum {
    fn name(&self) -> &str {
        "cones"
    }

    fn evaluate(&self, t: &OrigamiTemplate, x: &[Rational]) -> Result<DensitySample, DensityError> {
        let v = match &self.polarization {
            Some(v) => v.clone(),
            None => cones::default_polarization(t.dim(), &cones::weight_sets(t)?),
        };
        match cones::cone_density(t, &v, x) {
            Ok(d) => Ok(DensitySample::Generic(d)),
            Err(ConeError::BoundaryPoint { .. }) => Ok(DensitySample::Boundary),
            Err(e) => Err(e.into()),
        }
    }
}

pub struct DensityRegistry {
    methods: BTreeMap<String, Box<dyn DensityMethod>>,
}

impl DensityRegistry {
    pub fn empty() -> Self {
        DensityRegistry {
            methods: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, method: Box<dyn DensityMethod>) -> Result<(), DensityError> {
        let name = method.name().to_string();
        if self.methods.contains_key(&name) {
            return Err(DensityError::Duplicate(name));
        }
        self.methods.insert(name, method);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&dyn DensityMethod, DensityError> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| DensityError::Unknown(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.methods.keys().map(String::as_str).collect()
    }
}

impl Default for DensityRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(PolytopeSum)).unwrap();
        r.register(Box::new(WeightConeSum::default())).unwrap();
        r
    }
}
