//! One-dimensional templates and the four families of toric origami
//! surfaces they describe.

use std::collections::BTreeSet;
use std::fmt;

use super::{fixed_points, fold_components, Fusion, OrigamiTemplate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceFamily {
    Sphere,
    ProjectivePlane,
    KleinBottle,
    Torus,
}

impl SurfaceFamily {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceFamily::Sphere => "sphere",
            SurfaceFamily::ProjectivePlane => "projective-plane",
            SurfaceFamily::KleinBottle => "klein-bottle",
            SurfaceFamily::Torus => "torus",
        }
    }
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceClassification {
    pub family: SurfaceFamily,
    pub segments: usize,
    /// Endpoints carrying a single fold.
    pub marked_endpoints: usize,
    pub fixed_points: usize,
    pub fold_components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("surface classification needs a 1-dimensional template, got dimension {0}")]
    Dimension(usize),
    #[error("template is neither a path nor a cycle of segments: {0}")]
    Structure(String),
}

/// Classifies a valid 1-dimensional template as a chain or ring of segments.
pub fn classify_surface(t: &OrigamiTemplate) -> Result<SurfaceClassification, SurfaceError> {
    if t.dim() != 1 {
        return Err(SurfaceError::Dimension(t.dim()));
    }
    let segments = t.polytopes().len();
    let mut used = BTreeSet::new();
    for a in t.fusions().iter().flat_map(Fusion::entries) {
        if !used.insert(a) {
            return Err(SurfaceError::Structure(format!(
                "endpoint {a} is fused twice"
            )));
        }
    }
    let graph = t.fusion_graph();
    if !graph.is_connected() {
        return Err(SurfaceError::Structure("segments are not connected".into()));
    }
    let pairs = graph.edges().len();
    let marked = t.fusions().len() - pairs;
    let family = if pairs == segments {
        if marked != 0 {
            return Err(SurfaceError::Structure(
                "a ring has no free endpoints".into(),
            ));
        }
        SurfaceFamily::Torus
    } else if pairs + 1 == segments {
        match marked {
            0 => SurfaceFamily::Sphere,
            1 => SurfaceFamily::ProjectivePlane,
            2 => SurfaceFamily::KleinBottle,
            m => return Err(SurfaceError::Structure(format!("{m} marked endpoints"))),
        }
    } else {
        return Err(SurfaceError::Structure(format!(
            "{pairs} glued endpoint pairs for {segments} segments"
        )));
    };
    Ok(SurfaceClassification {
        family,
        segments,
        marked_endpoints: marked,
        fixed_points: fixed_points(t).len(),
        fold_components: fold_components(t).len(),
    })
}
