//! Full-dimensional bounded polytopes given by irredundant integer-normal
//! halfspaces, with their vertices and face lattice computed exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{self, Matrix};
use super::rational::{
    ceil_i64, dot_int, floor_i64, gcd_slice, primitive_direction, rat, DisplayPoint, IntVector,
    Point, Rational,
};
use super::GeomError;

/// The closed halfspace `{x : <normal, x> <= offset}` with a primitive
/// integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: IntVector,
    offset: Rational,
}

impl Halfspace {
    /// Builds a halfspace, dividing the normal (and offset) by the gcd of the
    /// normal entries.
    pub fn new(normal: IntVector, offset: Rational) -> Result<Self, GeomError> {
        let g = gcd_slice(&normal);
        if g == 0 {
            return Err(GeomError::ZeroNormal);
        }
        let normal = normal.into_iter().map(|a| a / g).collect();
        let offset = offset / rat(g);
        Ok(Halfspace { normal, offset })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `offset - <normal, x>`; nonnegative exactly on the halfspace.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.offset - dot_int(&self.normal, x)
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }

    pub fn translated(&self, by: &[i64]) -> Halfspace {
        let shift: i64 = self.normal.iter().zip(by).map(|(a, t)| a * t).sum();
        Halfspace {
            normal: self.normal.clone(),
            offset: &self.offset + rat(shift),
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}, x> <= {}", self.normal, self.offset)
    }
}

/// A face of a polytope, identified by the full set of halfspaces tight on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    /// Sorted indices of the halfspaces active on the face.
    pub active: Vec<usize>,
    /// Sorted indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
    pub dim: usize,
}

impl Face {
    pub fn contains_face(&self, other: &Face) -> bool {
        other
            .vertices
            .iter()
            .all(|v| self.vertices.binary_search(v).is_ok())
    }
}

/// Where a point sits relative to a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Interior,
    /// On the boundary; carries the sorted indices of the active halfspaces,
    /// which identify the smallest face containing the point.
    Boundary(Vec<usize>),
    Outside,
}

impl Containment {
    pub fn is_inside(&self) -> bool {
        !matches!(self, Containment::Outside)
    }
}

/// Per-vertex record of a Delzant check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub vertex: Point,
    pub edge_directions: Vec<IntVector>,
    /// Determinant of the edge-direction matrix; `None` when the vertex does
    /// not have exactly `dim` edges.
    pub determinant: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantReport {
    pub is_delzant: bool,
    pub vertices: Vec<VertexRecord>,
    pub failure: Option<String>,
}

#[derive(Clone, Debug)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    /// Input position of each kept halfspace.
    source: Vec<usize>,
    vertices: Vec<Point>,
    /// For each vertex, the sorted halfspace indices tight there.
    incidence: Vec<Vec<usize>>,
    /// For each vertex, the sorted indices of adjacent vertices.
    adjacency: Vec<Vec<usize>>,
    /// All nonempty proper faces, ordered by dimension then vertex set.
    faces: Vec<Face>,
}

impl PartialEq for HPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.halfspaces == other.halfspaces
    }
}

impl Eq for HPolytope {}

fn affine_rank(points: &[&Point]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&diffs)
}

fn normal_rows(hs: &[&Halfspace]) -> Matrix {
    hs.iter()
        .map(|h| h.normal.iter().map(|&a| rat(a)).collect())
        .collect()
}

/// Feasible points determined by `n` linearly independent tight constraints.
fn basic_solutions(hs: &[Halfspace], n: usize) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for subset in (0..hs.len()).combinations(n) {
        let a: Matrix = subset
            .iter()
            .map(|&i| hs[i].normal.iter().map(|&x| rat(x)).collect())
            .collect();
        let b: Vec<Rational> = subset.iter().map(|&i| hs[i].offset.clone()).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            if hs.iter().all(|h| !h.slack(&x).is_negative()) {
                out.insert(x);
            }
        }
    }
    out
}

impl HPolytope {
    /// Builds a polytope from `(normal, offset)` pairs meaning
    /// `<normal, x> <= offset`. Normals are made primitive and redundant
    /// halfspaces dropped; kept halfspaces retain their input order.
    pub fn new(halfspaces: Vec<(IntVector, Rational)>) -> Result<Self, GeomError> {
        let dim = halfspaces.first().ok_or(GeomError::NoHalfspaces)?.0.len();
        if dim == 0 {
            return Err(GeomError::ZeroNormal);
        }
        let mut hs = Vec::with_capacity(halfspaces.len());
        for (normal, offset) in halfspaces {
            if normal.len() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    found: normal.len(),
                });
            }
            hs.push(Halfspace::new(normal, offset)?);
        }

        let all: Vec<&Halfspace> = hs.iter().collect();
        let normal_rank = linalg::rank(&normal_rows(&all));
        if normal_rank < dim {
            // The set is a cylinder; it is nonempty iff it meets a
            // complementary coordinate subspace, where it has a vertex.
            let mut augmented = hs.clone();
            let mut rows = normal_rows(&all);
            for j in 0..dim {
                let mut e = vec![0i64; dim];
                e[j] = 1;
                let row: Vec<Rational> = e.iter().map(|&x| rat(x)).collect();
                if !linalg::in_span(&rows, &row) {
                    rows.push(row);
                    augmented.push(Halfspace::new(e.clone(), rat(0))?);
                    e[j] = -1;
                    augmented.push(Halfspace::new(e, rat(0))?);
                }
            }
            return if basic_solutions(&augmented, dim).is_empty() {
                Err(GeomError::Empty)
            } else {
                Err(GeomError::Unbounded)
            };
        }

        let vertices: Vec<Point> = basic_solutions(&hs, dim).into_iter().collect();
        if vertices.is_empty() {
            return Err(GeomError::Empty);
        }

        // With full-rank normals the recession cone is pointed, so it is
        // trivial iff it has no extreme ray.
        for subset in (0..hs.len()).combinations(dim - 1) {
            let rows: Matrix = subset
                .iter()
                .map(|&i| hs[i].normal.iter().map(|&x| rat(x)).collect())
                .collect();
            let ns = linalg::null_space(&rows, dim);
            if ns.len() != 1 {
                continue;
            }
            let d = &ns[0];
            for sign in [1, -1] {
                let dir: Vec<Rational> = d.iter().map(|x| x * rat(sign)).collect();
                if hs.iter().all(|h| !dot_int(&h.normal, &dir).is_positive()) {
                    return Err(GeomError::Unbounded);
                }
            }
        }

        let vref: Vec<&Point> = vertices.iter().collect();
        if affine_rank(&vref) < dim {
            return Err(GeomError::Degenerate);
        }

        let mut kept = Vec::new();
        let mut source = Vec::new();
        for (i, h) in hs.iter().enumerate() {
            if kept.contains(h) {
                continue;
            }
            let tight: Vec<&Point> = vertices.iter().filter(|v| h.is_tight(v)).collect();
            if !tight.is_empty() && affine_rank(&tight) == dim - 1 {
                kept.push(h.clone());
                source.push(i);
            }
        }

        Ok(Self::assemble(dim, kept, source, vertices))
    }

    fn assemble(
        dim: usize,
        halfspaces: Vec<Halfspace>,
        source: Vec<usize>,
        vertices: Vec<Point>,
    ) -> Self {
        let incidence: Vec<Vec<usize>> = vertices
            .iter()
            .map(|v| {
                (0..halfspaces.len())
                    .filter(|&i| halfspaces[i].is_tight(v))
                    .collect()
            })
            .collect();

        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (a, b) in (0..vertices.len()).tuple_combinations() {
            let common: Vec<&Halfspace> = incidence[a]
                .iter()
                .filter(|i| incidence[b].contains(i))
                .map(|&i| &halfspaces[i])
                .collect();
            let rank = if common.is_empty() {
                0
            } else {
                linalg::rank(&normal_rows(&common))
            };
            if rank == dim - 1 {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for adj in adjacency.iter_mut() {
            adj.sort_unstable();
        }

        let mut vertex_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..halfspaces.len() {
            let s: Vec<usize> = (0..vertices.len())
                .filter(|&v| incidence[v].contains(&i))
                .collect();
            vertex_sets.insert(s);
        }
        for v in 0..vertices.len() {
            vertex_sets.insert(vec![v]);
        }
        let mut frontier: Vec<Vec<usize>> = vertex_sets.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            let current: Vec<Vec<usize>> = vertex_sets.iter().cloned().collect();
            for a in &frontier {
                for b in &current {
                    let meet: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
                    if !meet.is_empty() && vertex_sets.insert(meet.clone()) {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }

        let mut faces: Vec<Face> = vertex_sets
            .into_iter()
            .map(|vs| {
                let active: Vec<usize> = (0..halfspaces.len())
                    .filter(|i| vs.iter().all(|&v| incidence[v].contains(i)))
                    .collect();
                let pts: Vec<&Point> = vs.iter().map(|&v| &vertices[v]).collect();
                Face {
                    active,
                    dim: affine_rank(&pts),
                    vertices: vs,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));

        HPolytope {
            dim,
            halfspaces,
            source,
            vertices,
            incidence,
            adjacency,
            faces,
        }
    }

    /// Convenience constructor from integer offsets.
    pub fn from_ints(halfspaces: &[(&[i64], i64)]) -> Result<Self, GeomError> {
        Self::new(
            halfspaces
                .iter()
                .map(|(n, b)| (n.to_vec(), rat(*b)))
                .collect(),
        )
    }

    /// The polytope `[lo_1, hi_1] x ... x [lo_n, hi_n]`.
    pub fn boxed(lo: &[i64], hi: &[i64]) -> Result<Self, GeomError> {
        let n = lo.len();
        let mut hs = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = -1;
            hs.push((e.clone(), rat(-lo[i])));
            e[i] = 1;
            hs.push((e, rat(hi[i])));
        }
        Self::new(hs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Input position of each kept halfspace, parallel to `halfspaces()`.
    pub fn source_indices(&self) -> &[usize] {
        &self.source
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_index(&self, p: &[Rational]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(p)).ok()
    }

    /// Sorted halfspace indices tight at vertex `v`.
    pub fn active_at(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .flat_map(|a| {
                self.adjacency[a]
                    .iter()
                    .filter(move |&&b| b > a)
                    .map(move |&b| (a, b))
            })
            .collect()
    }

    /// Nonempty proper faces, ordered by dimension.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// The facet supported by halfspace `i`.
    pub fn facet(&self, i: usize) -> Option<&Face> {
        self.faces
            .iter()
            .find(|f| f.dim + 1 == self.dim && f.active == [i])
    }

    /// Whether two facets (by halfspace index) share a point.
    pub fn facets_meet(&self, i: usize, j: usize) -> bool {
        self.incidence
            .iter()
            .any(|a| a.contains(&i) && a.contains(&j))
    }

    /// One primitive integer direction per edge at vertex `v`, pointing into
    /// the polytope, ordered by the neighbouring vertex.
    pub fn edge_directions(&self, v: usize) -> Vec<IntVector> {
        let base = &self.vertices[v];
        self.adjacency[v]
            .iter()
            .map(|&w| {
                let diff: Point = self.vertices[w]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect();
                primitive_direction(&diff).expect("edge direction fits in i64")
            })
            .collect()
    }

    pub fn is_delzant(&self) -> DelzantReport {
        let mut records = Vec::with_capacity(self.vertices.len());
        let mut failure = None;
        for (i, v) in self.vertices.iter().enumerate() {
            let dirs = self.edge_directions(i);
            let determinant = (dirs.len() == self.dim).then(|| linalg::int_determinant(&dirs));
            if failure.is_none() {
                match determinant {
                    None => {
                        failure = Some(format!(
                            "vertex {} has {} edges, expected {}",
                            DisplayPoint(v),
                            dirs.len(),
                            self.dim
                        ))
                    }
                    Some(d) if d.abs() != 1 => {
                        failure = Some(format!(
                            "vertex {} has edge determinant {}",
                            DisplayPoint(v),
                            d
                        ))
                    }
                    _ => {}
                }
            }
            records.push(VertexRecord {
                vertex: v.clone(),
                edge_directions: dirs,
                determinant,
            });
        }
        DelzantReport {
            is_delzant: failure.is_none(),
            vertices: records,
            failure,
        }
    }

    pub fn contains(&self, x: &[Rational]) -> Containment {
        assert_eq!(x.len(), self.dim, "point dimension mismatch");
        let mut active = Vec::new();
        for (i, h) in self.halfspaces.iter().enumerate() {
            let s = h.slack(x);
            if s.is_negative() {
                return Containment::Outside;
            }
            if s.is_zero() {
                active.push(i);
            }
        }
        if active.is_empty() {
            Containment::Interior
        } else {
            Containment::Boundary(active)
        }
    }

    /// Componentwise minimum and maximum over the vertices.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for k in 0..self.dim {
                if v[k] < lo[k] {
                    lo[k] = v[k].clone();
                }
                if v[k] > hi[k] {
                    hi[k] = v[k].clone();
                }
            }
        }
        (lo, hi)
    }

    /// Integer points of the polytope (boundary included), lexicographic.
    pub fn lattice_points(&self) -> Vec<IntVector> {
        let (lo, hi) = self.bounding_box();
        let ranges: Vec<std::ops::RangeInclusive<i64>> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| {
                ceil_i64(l).expect("coordinate fits in i64")
                    ..=floor_i64(h).expect("coordinate fits in i64")
            })
            .collect();
        if ranges.iter().any(|r| r.is_empty()) {
            return Vec::new();
        }
        ranges
            .into_iter()
            .multi_cartesian_product()
            .filter(|p| {
                let x: Point = p.iter().map(|&c| rat(c)).collect();
                self.contains(&x).is_inside()
            })
            .collect()
    }

    /// Simplices (as vertex index lists) of a pulling triangulation of the
    /// face with vertex set `vs` and dimension `d`.
    fn triangulate(&self, vs: &[usize], d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![vs[0]]];
        }
        // vertices are lex-sorted, so vs[0] is the lexicographically first
        let apex = vs[0];
        let mut out = Vec::new();
        for sub in self.faces_of_dim(d - 1) {
            let inside = sub.vertices.iter().all(|v| vs.contains(v));
            if inside && !sub.vertices.contains(&apex) {
                for mut s in self.triangulate(&sub.vertices, d - 1) {
                    s.insert(0, apex);
                    out.push(s);
                }
            }
        }
        out
    }

    /// Exact Euclidean volume via a fan triangulation from the
    /// lexicographically first vertex.
    pub fn volume(&self) -> Rational {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let n = self.dim;
        let factorial: i64 = (1..=n as i64).product();
        let total = self
            .triangulate(&all, n)
            .into_iter()
            .map(|s| {
                let base = &self.vertices[s[0]];
                let m: Matrix = s[1..]
                    .iter()
                    .map(|&v| {
                        self.vertices[v]
                            .iter()
                            .zip(base)
                            .map(|(a, b)| a - b)
                            .collect()
                    })
                    .collect();
                linalg::determinant(&m).abs()
            })
            .fold(Rational::zero(), |acc, x| acc + x);
        total / Rational::from_integer(BigInt::from(factorial))
    }

    /// The same polytope shifted by an integer vector.
    pub fn translated(&self, by: &[i64]) -> HPolytope {
        let halfspaces = self.halfspaces.iter().map(|h| h.translated(by)).collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(by).map(|(x, &t)| x + rat(t)).collect())
            .collect();
        Self::assemble(self.dim, halfspaces, self.source.clone(), vertices)
    }

    /// Halfspaces as `(normal, offset)` pairs, suitable for `HPolytope::new`.
    pub fn to_pairs(&self) -> Vec<(IntVector, Rational)> {
        self.halfspaces
            .iter()
            .map(|h| (h.normal.clone(), h.offset.clone()))
            .collect()
    }

    /// Map from input index to kept index.
    pub fn source_map(&self) -> BTreeMap<usize, usize> {
        self.source
            .iter()
            .enumerate()
            .map(|(k, &s)| (s, k))
            .collect()
    }
}
