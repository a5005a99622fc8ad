//! Equivariant Poincare series of an origami manifold with one connected,
//! coorientable fold.
//!
//! With `xi` the outward normal of the fused facet and `b` its offset,
//! `f = b - <x, xi>` vanishes on the fold and is positive elsewhere. Its
//! critical manifolds are the faces whose active normals span `xi`; each
//! contributes the series of the face, shifted by `r`, where `r` is the index
//! of `f` on the plus side and the coindex (within the normal directions) on
//! the minus side.

use std::fmt;

use crate::cones::powers;
use crate::exactgeom::linalg;
use crate::exactgeom::rational::{dot_ints, rat};
use crate::exactgeom::{Face, HPolytope, IntVector, Point, Rational};
use crate::template::{FacetAddr, Fusion, OrigamiTemplate, Sign};

pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(
        "transverse index differs between vertices of a face of polytope {polytope}: {counts:?}"
    )]
    InconsistentIndex { polytope: usize, counts: Vec<usize> },
    #[error("degree cap must be even, got {0}")]
    OddCap(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldDirection {
    pub xi: IntVector,
    pub offset: Rational,
    pub fusion: (FacetAddr, FacetAddr),
}

pub fn fold_direction(t: &OrigamiTemplate) -> Result<FoldDirection, CohomologyError> {
    let fusion = match t.fusions() {
        [f] => f,
        fs => {
            return Err(CohomologyError::Precondition(format!(
                "exactly one fusion needed, found {}",
                fs.len()
            )))
        }
    };
    let (a, b) = match fusion {
        Fusion::Pair(a, b) => (*a, *b),
        Fusion::Single(_) => {
            return Err(CohomologyError::Precondition(
                "the fold must be coorientable (a pair)".into(),
            ))
        }
    };
    t.orientation()
        .map_err(|e| CohomologyError::Precondition(e.to_string()))?;
    let h = &t.polytopes()[a.polytope].halfspaces()[a.facet];
    Ok(FoldDirection {
        xi: h.normal().to_vec(),
        offset: h.offset().clone(),
        fusion: (a, b),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalFace {
    pub polytope: usize,
    pub face: Face,
    pub sign: Sign,
    /// Dimension of the face; the critical manifold has twice this.
    pub dim: usize,
    pub index: usize,
    pub shift: usize,
}

fn transverse_index(
    p: &HPolytope,
    face: &Face,
    xi: &[i64],
    polytope: usize,
) -> Result<usize, CohomologyError> {
    let counts: Vec<usize> = face
        .vertices
        .iter()
        .map(|&w| {
            p.neighbors(w)
                .iter()
                .zip(p.edge_directions(w))
                .filter(|(u, _)| face.vertices.binary_search(u).is_err())
                .filter(|(_, d)| dot_ints(d, xi) > 0)
                .count()
        })
        .collect();
    if counts.windows(2).any(|w| w[0] != w[1]) {
        return Err(CohomologyError::InconsistentIndex { polytope, counts });
    }
    Ok(2 * counts[0])
}

pub fn critical_faces(
    t: &OrigamiTemplate,
    xi: &[i64],
) -> Result<Vec<CriticalFace>, CohomologyError> {
    let signs = t
        .orientation()
        .map_err(|e| CohomologyError::Precondition(e.to_string()))?;
    let n = t.dim();
    let target: Vec<Rational> = xi.iter().map(|&x| rat(x)).collect();
    let mut out = Vec::new();
    for (i, p) in t.polytopes().iter().enumerate() {
        let fused: Vec<&Face> = t
            .fused_facets(i)
            .into_iter()
            .filter_map(|f| p.facet(f))
            .collect();
        let critical: Vec<&Face> = p
            .faces()
            .iter()
            .filter(|f| !fused.iter().any(|z| z.contains_face(f)))
            .filter(|f| {
                let rows: Vec<Vec<Rational>> = f
                    .active
                    .iter()
                    .map(|&h| p.halfspaces()[h].normal().iter().map(|&x| rat(x)).collect())
                    .collect();
                linalg::in_span(&rows, &target)
            })
            .collect();
        for f in &critical {
            if critical.iter().any(|g| g.dim > f.dim && g.contains_face(f)) {
                continue;
            }
            let index = transverse_index(p, f, xi, i)?;
            let shift = match signs[i] {
                Sign::Plus => index,
                Sign::Minus => 2 * (n - f.dim) - index,
            };
            out.push(CriticalFace {
                polytope: i,
                face: (*f).clone(),
                sign: signs[i],
                dim: f.dim,
                index,
                shift,
            });
        }
    }
    Ok(out)
}

/// Generic linear functional used to order the vertices of a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AuxChoice {
    #[default]
    Ascending,
    Descending,
}

fn aux_vector(p: &HPolytope, face: &Face, aux: AuxChoice) -> IntVector {
    let max = face
        .vertices
        .iter()
        .flat_map(|&w| p.edge_directions(w))
        .flatten()
        .map(i64::abs)
        .max()
        .unwrap_or(0);
    let mut v = powers(p.dim(), max + 1);
    if aux == AuxChoice::Descending {
        v.reverse();
    }
    v
}

/// Coefficients of `1 / (1 - t^2)^n` up to `t^cap`.
fn free_series(n: usize, cap: usize) -> Vec<u64> {
    let mut c = vec![0u64; cap + 1];
    c[0] = 1;
    for _ in 0..n {
        for k in 2..=cap {
            c[k] += c[k - 2];
        }
    }
    c
}

/// Series of one critical face seen as a toric manifold inside an ambient
/// `n`-torus: each vertex `w` contributes `t^(2 ind(w))`, where `ind(w)`
/// counts edges of the face at `w` that go up for the auxiliary functional.
pub fn face_ht_series(
    p: &HPolytope,
    face: &Face,
    n: usize,
    cap: usize,
    aux: AuxChoice,
) -> Result<Vec<u64>, CohomologyError> {
    if !cap.is_multiple_of(2) {
        return Err(CohomologyError::OddCap(cap));
    }
    let v = aux_vector(p, face, aux);
    let mut numerator = vec![0u64; cap + 1];
    for &w in &face.vertices {
        let up = p
            .neighbors(w)
            .iter()
            .zip(p.edge_directions(w))
            .filter(|(u, _)| face.vertices.binary_search(u).is_ok())
            .filter(|(_, d)| dot_ints(d, &v) > 0)
            .count();
        if 2 * up <= cap {
            numerator[2 * up] += 1;
        }
    }
    let free = free_series(n, cap);
    Ok((0..=cap)
        .map(|k| (0..=k).map(|j| numerator[j] * free[k - j]).sum())
        .collect())
}

/// `dim H_T^k` for `k = 0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    pub cap: usize,
    pub coefficients: Vec<u64>,
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| match k {
                0 => c.to_string(),
                _ => format!("{c} t^{k}"),
            })
            .collect();
        write!(f, "{} + O(t^{})", terms.join(" + "), self.cap + 1)
    }
}

pub fn ht_poincare(t: &OrigamiTemplate, cap: usize) -> Result<PoincareSeries, CohomologyError> {
    ht_poincare_with(t, cap, AuxChoice::default())
}

pub fn ht_poincare_with(
    t: &OrigamiTemplate,
    cap: usize,
    aux: AuxChoice,
) -> Result<PoincareSeries, CohomologyError> {
    if !cap.is_multiple_of(2) {
        return Err(CohomologyError::OddCap(cap));
    }
    let fold = fold_direction(t)?;
    let n = t.dim();
    let mut coefficients = vec![0u64; cap + 1];
    for x in critical_faces(t, &fold.xi)? {
        if x.shift > cap {
            continue;
        }
        let series = face_ht_series(&t.polytopes()[x.polytope], &x.face, n, cap, aux)?;
        for k in x.shift..=cap {
            coefficients[k] += series[k - x.shift];
        }
    }
    Ok(PoincareSeries { cap, coefficients })
}

/// Vertices of a critical face, for reporting.
pub fn face_vertices(t: &OrigamiTemplate, x: &CriticalFace) -> Vec<Point> {
    let p = &t.polytopes()[x.polytope];
    x.face
        .vertices
        .iter()
        .map(|&v| p.vertices()[v].clone())
        .collect()
}
