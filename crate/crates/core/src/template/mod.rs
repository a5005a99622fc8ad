//! Origami templates: Delzant polytopes plus a set of fused facets.
//!
//! A template is stored as plain data and may be inconsistent; [`validate`]
//! reports every violated condition rather than stopping at the first one.
//! Facets are addressed by halfspace index within their polytope.

mod graph;
mod surface;

use std::fmt;
use std::ops::Neg;

use crate::exactgeom::{facets_agree, HPolytope, Point, Rational};

pub use graph::FusionGraph;
pub use surface::{classify_surface, SurfaceClassification, SurfaceError, SurfaceFamily};

/// A facet of one polytope of a template.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetAddr {
    pub polytope: usize,
    pub facet: usize,
}

impl FacetAddr {
    pub fn new(polytope: usize, facet: usize) -> Self {
        FacetAddr { polytope, facet }
    }
}

impl fmt::Display for FacetAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polytope {} facet {}", self.polytope, self.facet)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fusion {
    /// Two agreeing facets glued into a coorientable fold.
    Pair(FacetAddr, FacetAddr),
    /// A facet folded onto itself: a noncoorientable fold.
    Single(FacetAddr),
}

impl Fusion {
    pub fn pair(a: (usize, usize), b: (usize, usize)) -> Self {
        Fusion::Pair(FacetAddr::new(a.0, a.1), FacetAddr::new(b.0, b.1))
    }

    pub fn single(a: (usize, usize)) -> Self {
        Fusion::Single(FacetAddr::new(a.0, a.1))
    }

    pub fn entries(&self) -> Vec<FacetAddr> {
        match *self {
            Fusion::Pair(a, b) => vec![a, b],
            Fusion::Single(a) => vec![a],
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Fusion::Pair(..))
    }

    fn shifted(&self, by: usize) -> Fusion {
        let s = |a: FacetAddr| FacetAddr::new(a.polytope + by, a.facet);
        match *self {
            Fusion::Pair(a, b) => Fusion::Pair(s(a), s(b)),
            Fusion::Single(a) => Fusion::Single(s(a)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TemplateError {
    #[error("a template needs at least one polytope")]
    NoPolytopes,
    #[error("polytope {polytope} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        polytope: usize,
        expected: usize,
        found: usize,
    },
    #[error("fusion {fusion} refers to missing polytope {polytope}")]
    PolytopeIndex { fusion: usize, polytope: usize },
    #[error("fusion {fusion} refers to missing facet {facet} of polytope {polytope}")]
    FacetIndex {
        fusion: usize,
        polytope: usize,
        facet: usize,
    },
    #[error("fusion {fusion} pairs a facet with itself")]
    RepeatedEntry { fusion: usize },
    #[error("orientation has {found} signs for {expected} polytopes")]
    OrientationLength { expected: usize, found: usize },
    #[error("template is invalid: {0}")]
    Invalid(Box<ValidationReport>),
}

/// Why a template admits no orientation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NonorientableError {
    #[error("fusion {fusion} is a single folded facet")]
    Single { fusion: usize },
    #[error("fusions form an odd cycle through polytopes {cycle:?}")]
    OddCycle { cycle: Vec<usize> },
    #[error("stored orientation gives equal signs across fusion {fusion}")]
    Inconsistent { fusion: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyKind {
    /// The same facet occurs in two fusion entries.
    Reused,
    /// Two fusion entries use intersecting facets of one polytope.
    Neighbor,
}

/// Two fusion entries breaking condition (b); `(fusion, slot)` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyViolation {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub kind: AdjacencyKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(polytope, reason)` for each polytope failing the Delzant test.
    pub delzant_failures: Vec<(usize, String)>,
    /// Pair fusions whose polytopes do not agree near the facets.
    pub agreement_failures: Vec<usize>,
    pub adjacency_failures: Vec<AdjacencyViolation>,
    /// Connected components of the fusion graph, as sorted polytope lists.
    pub components: Vec<Vec<usize>>,
    /// Problems with a stored orientation.
    pub orientation_failures: Vec<String>,
    /// Pair fusions joining two facets of the same polytope (flagged only).
    pub self_pairs: Vec<usize>,
}

impl ValidationReport {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_valid(&self) -> bool {
        self.delzant_failures.is_empty()
            && self.agreement_failures.is_empty()
            && self.adjacency_failures.is_empty()
            && self.is_connected()
            && self.orientation_failures.is_empty()
    }

    /// One line per failure, in a fixed order.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (p, why) in &self.delzant_failures {
            out.push(format!("polytope {p} is not Delzant: {why}"));
        }
        for f in &self.agreement_failures {
            out.push(format!(
                "(a) fusion {f}: polytopes do not agree near the facets"
            ));
        }
        for v in &self.adjacency_failures {
            let what = match v.kind {
                AdjacencyKind::Reused => "reuses the facet of",
                AdjacencyKind::Neighbor => "uses a neighbour of the facet of",
            };
            out.push(format!(
                "(b) fusion {} entry {} {} fusion {} entry {}",
                v.second.0, v.second.1, what, v.first.0, v.first.1
            ));
        }
        if !self.is_connected() {
            out.push(format!(
                "(c) fusion graph has {} components",
                self.components.len()
            ));
        }
        out.extend(
            self.orientation_failures
                .iter()
                .map(|s| format!("orientation: {s}")),
        );
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures = self.failures();
        if failures.is_empty() {
            write!(f, "valid")
        } else {
            write!(f, "{}", failures.join("; "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldComponent {
    pub fusion: usize,
    pub coorientable: bool,
}

/// A torus-fixed point: a vertex of a polytope lying on no fused facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub polytope: usize,
    pub vertex_index: usize,
    pub vertex: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrigamiTemplate {
    dim: usize,
    polytopes: Vec<HPolytope>,
    fusions: Vec<Fusion>,
    orientation: Option<Vec<Sign>>,
}

impl OrigamiTemplate {
    /// Checks only structural consistency (dimensions and indices); the
    /// template conditions are checked by [`OrigamiTemplate::validate`].
    pub fn new(polytopes: Vec<HPolytope>, fusions: Vec<Fusion>) -> Result<Self, TemplateError> {
        let dim = polytopes.first().ok_or(TemplateError::NoPolytopes)?.dim();
        for (i, p) in polytopes.iter().enumerate() {
            if p.dim() != dim {
                return Err(TemplateError::DimensionMismatch {
                    polytope: i,
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        for (k, fusion) in fusions.iter().enumerate() {
            for a in fusion.entries() {
                let p = polytopes
                    .get(a.polytope)
                    .ok_or(TemplateError::PolytopeIndex {
                        fusion: k,
                        polytope: a.polytope,
                    })?;
                if a.facet >= p.halfspaces().len() {
                    return Err(TemplateError::FacetIndex {
                        fusion: k,
                        polytope: a.polytope,
                        facet: a.facet,
                    });
                }
            }
            if let Fusion::Pair(a, b) = fusion {
                if a == b {
                    return Err(TemplateError::RepeatedEntry { fusion: k });
                }
            }
        }
        Ok(OrigamiTemplate {
            dim,
            polytopes,
            fusions,
            orientation: None,
        })
    }

    /// A fusion-free template.
    pub fn from_polytopes(polytopes: Vec<HPolytope>) -> Result<Self, TemplateError> {
        Self::new(polytopes, Vec::new())
    }

    /// Attaches an orientation; consistency is checked by `validate`.
    pub fn with_orientation(mut self, signs: Vec<Sign>) -> Result<Self, TemplateError> {
        if signs.len() != self.polytopes.len() {
            return Err(TemplateError::OrientationLength {
                expected: self.polytopes.len(),
                found: signs.len(),
            });
        }
        self.orientation = Some(signs);
        Ok(self)
    }

    /// Attaches the canonical orientation computed by [`orient`].
    pub fn oriented(mut self) -> Result<Self, NonorientableError> {
        self.orientation = Some(orient(&self)?);
        Ok(self)
    }

    /// The same template with every sign of the orientation negated. The
    /// canonical orientation is computed first if none is stored.
    pub fn reversed(&self) -> Result<Self, NonorientableError> {
        let signs = self.orientation()?;
        let mut t = self.clone();
        t.orientation = Some(signs.into_iter().map(Neg::neg).collect());
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn polytopes(&self) -> &[HPolytope] {
        &self.polytopes
    }

    pub fn fusions(&self) -> &[Fusion] {
        &self.fusions
    }

    pub fn stored_orientation(&self) -> Option<&[Sign]> {
        self.orientation.as_deref()
    }

    /// The stored orientation if it is consistent, otherwise the canonical
    /// one from [`orient`].
    pub fn orientation(&self) -> Result<Vec<Sign>, NonorientableError> {
        match &self.orientation {
            Some(signs) => {
                check_orientation(self, signs)?;
                Ok(signs.clone())
            }
            None => orient(self),
        }
    }

    pub fn fusion_graph(&self) -> FusionGraph {
        FusionGraph::new(self.polytopes.len(), &self.fusions)
    }

    /// Halfspace indices of the fused facets of polytope `p`.
    pub fn fused_facets(&self, p: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .fusions
            .iter()
            .flat_map(|f| f.entries())
            .filter(|a| a.polytope == p)
            .map(|a| a.facet)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

fn check_orientation(t: &OrigamiTemplate, signs: &[Sign]) -> Result<(), NonorientableError> {
    for (k, fusion) in t.fusions.iter().enumerate() {
        match *fusion {
            Fusion::Single(_) => return Err(NonorientableError::Single { fusion: k }),
            Fusion::Pair(a, b) => {
                if signs[a.polytope] == signs[b.polytope] {
                    return Err(NonorientableError::Inconsistent { fusion: k });
                }
            }
        }
    }
    Ok(())
}

/// Checks the Delzant property and template conditions (a), (b) and (c),
/// plus consistency of a stored orientation.
pub fn validate(t: &OrigamiTemplate) -> ValidationReport {
    let mut report = ValidationReport::default();

    for (i, p) in t.polytopes.iter().enumerate() {
        let d = p.is_delzant();
        if !d.is_delzant {
            report
                .delzant_failures
                .push((i, d.failure.unwrap_or_default()));
        }
    }

    for (k, fusion) in t.fusions.iter().enumerate() {
        if let Fusion::Pair(a, b) = *fusion {
            if a.polytope == b.polytope {
                report.self_pairs.push(k);
            }
            let agree = facets_agree(
                &t.polytopes[a.polytope],
                a.facet,
                &t.polytopes[b.polytope],
                b.facet,
            )
            .unwrap_or(false);
            if !agree {
                report.agreement_failures.push(k);
            }
        }
    }

    let entries: Vec<((usize, usize), FacetAddr)> = t
        .fusions
        .iter()
        .enumerate()
        .flat_map(|(k, f)| {
            f.entries()
                .into_iter()
                .enumerate()
                .map(move |(s, a)| ((k, s), a))
        })
        .collect();
    for (i, (pos1, a1)) in entries.iter().enumerate() {
        for (pos2, a2) in &entries[i + 1..] {
            if a1.polytope != a2.polytope {
                continue;
            }
            let kind = if a1.facet == a2.facet {
                AdjacencyKind::Reused
            } else if t.polytopes[a1.polytope].facets_meet(a1.facet, a2.facet) {
                AdjacencyKind::Neighbor
            } else {
                continue;
            };
            report.adjacency_failures.push(AdjacencyViolation {
                first: *pos1,
                second: *pos2,
                kind,
            });
        }
    }

    report.components = t.fusion_graph().components();

    if let Some(signs) = &t.orientation {
        for (k, fusion) in t.fusions.iter().enumerate() {
            match *fusion {
                Fusion::Single(_) => report
                    .orientation_failures
                    .push(format!("fusion {k} is a single folded facet")),
                Fusion::Pair(a, b) if signs[a.polytope] == signs[b.polytope] => report
                    .orientation_failures
                    .push(format!("fusion {k} joins polytopes of equal sign")),
                _ => {}
            }
        }
    }

    report
}

/// Propagates signs across the fusion graph, flipping across every pair.
/// The lowest-indexed polytope of each component gets `+1`.
pub fn orient(t: &OrigamiTemplate) -> Result<Vec<Sign>, NonorientableError> {
    if let Some(k) = t.fusions.iter().position(|f| !f.is_pair()) {
        return Err(NonorientableError::Single { fusion: k });
    }
    t.fusion_graph().two_color()
}

/// Number of polytopes containing `x` (boundary included).
pub fn multiplicity(t: &OrigamiTemplate, x: &[Rational]) -> usize {
    t.polytopes
        .iter()
        .filter(|p| p.contains(x).is_inside())
        .count()
}

pub fn fold_components(t: &OrigamiTemplate) -> Vec<FoldComponent> {
    t.fusions
        .iter()
        .enumerate()
        .map(|(k, f)| FoldComponent {
            fusion: k,
            coorientable: f.is_pair(),
        })
        .collect()
}

/// Vertices lying on no fused facet of their polytope, ordered by polytope
/// and then lexicographically.
pub fn fixed_points(t: &OrigamiTemplate) -> Vec<FixedPoint> {
    let mut out = Vec::new();
    for (i, p) in t.polytopes.iter().enumerate() {
        let fused = t.fused_facets(i);
        for (v, vertex) in p.vertices().iter().enumerate() {
            if !p.active_at(v).iter().any(|h| fused.contains(h)) {
                out.push(FixedPoint {
                    polytope: i,
                    vertex_index: v,
                    vertex: vertex.clone(),
                });
            }
        }
    }
    out
}

/// The moment polytopes of the symplectic cut pieces.
pub fn cut(t: &OrigamiTemplate) -> Vec<HPolytope> {
    t.polytopes.clone()
}

/// Concatenates the polytopes of `first` and `second` (the latter shifted
/// past the former), keeps all existing fusions, adds `pairings` (addressed
/// in the combined indexing) and validates the result. Any stored
/// orientation is dropped.
pub fn glue(
    first: &OrigamiTemplate,
    second: Option<&OrigamiTemplate>,
    pairings: &[Fusion],
) -> Result<OrigamiTemplate, TemplateError> {
    let mut polytopes = first.polytopes.clone();
    let mut fusions = first.fusions.clone();
    if let Some(s) = second {
        let offset = polytopes.len();
        polytopes.extend(s.polytopes.iter().cloned());
        fusions.extend(s.fusions.iter().map(|f| f.shifted(offset)));
    }
    fusions.extend_from_slice(pairings);
    let t = OrigamiTemplate::new(polytopes, fusions)?;
    let report = t.validate();
    if report.is_valid() {
        Ok(t)
    } else {
        Err(TemplateError::Invalid(Box::new(report)))
    }
}
