//! Ready-made polytopes and templates: the standard examples of toric
//! origami manifolds, used by the tests and the CLI's `example` command.

use crate::exactgeom::HPolytope;
use crate::template::{Fusion, OrigamiTemplate};

fn poly(hs: &[(&[i64], i64)]) -> HPolytope {
    HPolytope::from_ints(hs).expect("gallery polytope is valid")
}

fn template(polytopes: Vec<HPolytope>, fusions: Vec<Fusion>) -> OrigamiTemplate {
    OrigamiTemplate::new(polytopes, fusions).expect("gallery template is well formed")
}

/// `x1, x2 >= 0, x1 + x2 <= k`; facets: 0 `x1 = 0`, 1 `x2 = 0`, 2 hypotenuse.
pub fn triangle(k: i64) -> HPolytope {
    poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], k)])
}

/// Facets: 0 `x1 = 0`, 1 `x1 = 1`, 2 `x2 = 0`, 3 `x2 = 1`.
pub fn unit_square() -> HPolytope {
    HPolytope::boxed(&[0, 0], &[1, 1]).expect("unit square")
}

/// Hirzebruch trapezoid `x1, x2 >= 0, x2 <= 1, x1 + x2 <= a` (`a >= 2`);
/// facet 0 is the left edge.
pub fn trapezoid(a: i64) -> HPolytope {
    poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[0, 1], 1), (&[1, 1], a)])
}

/// `[0,3] x [0,2]` with the corner `(3,2)` cut off.
pub fn square_cut_once() -> HPolytope {
    poly(&[
        (&[-1, 0], 0),
        (&[1, 0], 3),
        (&[0, -1], 0),
        (&[0, 1], 2),
        (&[1, 1], 4),
    ])
}

/// `[0,3] x [0,2]` with the corners `(3,2)` and `(0,2)` cut off.
pub fn square_cut_twice() -> HPolytope {
    poly(&[
        (&[-1, 0], 0),
        (&[1, 0], 3),
        (&[0, -1], 0),
        (&[0, 1], 2),
        (&[1, 1], 4),
        (&[-1, 1], 1),
    ])
}

/// The two trapezoids and the two cut rectangles.
pub fn hirzebruch_family() -> Vec<HPolytope> {
    vec![
        trapezoid(2),
        trapezoid(3),
        square_cut_once(),
        square_cut_twice(),
    ]
}

/// Two triangles fused along their hypotenuses.
pub fn s4(k: i64) -> OrigamiTemplate {
    template(
        vec![triangle(k), triangle(k)],
        vec![Fusion::pair((0, 2), (1, 2))],
    )
}

/// One triangle with its hypotenuse folded.
pub fn rp4(k: i64) -> OrigamiTemplate {
    template(vec![triangle(k)], vec![Fusion::single((0, 2))])
}

/// Two Hirzebruch trapezoids of different widths fused along their common
/// left edge.
pub fn hirzebruch_pair() -> OrigamiTemplate {
    template(
        vec![trapezoid(2), trapezoid(3)],
        vec![Fusion::pair((0, 0), (1, 0))],
    )
}

/// A fusion-free template with one polytope.
pub fn plain(p: HPolytope) -> OrigamiTemplate {
    template(vec![p], Vec::new())
}

/// Four copies of a `6 x 2` rectangle with two corners cut, arranged around a
/// square and fused in a ring along the cut edges.
pub fn square_of_four() -> OrigamiTemplate {
    // facet 4 and 5 are the cut edges in each piece
    let bottom = poly(&[
        (&[-1, 0], 0),
        (&[1, 0], 6),
        (&[0, -1], 0),
        (&[0, 1], 2),
        (&[-1, -1], -1),
        (&[1, -1], 5),
    ]);
    let left = poly(&[
        (&[-1, 0], 0),
        (&[1, 0], 2),
        (&[0, -1], 0),
        (&[0, 1], 6),
        (&[-1, -1], -1),
        (&[-1, 1], 5),
    ]);
    let top = poly(&[
        (&[-1, 0], 0),
        (&[1, 0], 6),
        (&[0, -1], -4),
        (&[0, 1], 6),
        (&[-1, 1], 5),
        (&[1, 1], 11),
    ]);
    let right = poly(&[
        (&[-1, 0], -4),
        (&[1, 0], 6),
        (&[0, -1], 0),
        (&[0, 1], 6),
        (&[1, 1], 11),
        (&[1, -1], 5),
    ]);
    template(
        vec![bottom, left, top, right],
        vec![
            Fusion::pair((0, 4), (1, 4)),
            Fusion::pair((1, 5), (2, 4)),
            Fusion::pair((2, 5), (3, 4)),
            Fusion::pair((3, 5), (0, 5)),
        ],
    )
}

/// Three hexagons (each a rectangle blown up twice) fused pairwise in an odd
/// ring; valid but nonorientable.
pub fn three_cycle() -> OrigamiTemplate {
    // facets: 0 bottom, 1 left, 2 hypotenuse, 3 right, 4 top, 5 corner cut;
    // each piece moves the one facet it does not fuse
    let base = |bottom: i64, left: i64, hyp: i64| {
        poly(&[
            (&[0, -1], bottom),
            (&[-1, 0], left),
            (&[1, 1], hyp),
            (&[1, 0], 3),
            (&[0, 1], 3),
            (&[-1, -1], -1),
        ])
    };
    template(
        vec![base(0, 1, 4), base(0, 0, 5), base(1, 0, 4)],
        vec![
            Fusion::pair((0, 0), (1, 0)),
            Fusion::pair((1, 1), (2, 1)),
            Fusion::pair((2, 2), (0, 2)),
        ],
    )
}

/// The segment `[lo, hi]`; facet 0 is the left endpoint, facet 1 the right.
pub fn segment(lo: i64, hi: i64) -> HPolytope {
    HPolytope::boxed(&[lo], &[hi]).expect("segment")
}

/// A chain of `s` segments glued alternately at right and left endpoints,
/// with `marked` (0, 1 or 2) of its free endpoints folded.
pub fn segment_path(s: usize, marked: usize) -> OrigamiTemplate {
    assert!((1..=9).contains(&s) && marked <= 2);
    let segs: Vec<HPolytope> = (0..s as i64)
        .map(|i| segment((i + 1) / 2, 10 - i / 2))
        .collect();
    let mut fusions: Vec<Fusion> = (0..s - 1)
        .map(|i| {
            let end = if i % 2 == 0 { 1 } else { 0 };
            Fusion::pair((i, end), (i + 1, end))
        })
        .collect();
    if marked >= 1 {
        fusions.push(Fusion::single((0, 0)));
    }
    if marked == 2 {
        let last = s - 1;
        let free = if last == 0 || (last - 1) % 2 == 1 {
            1
        } else {
            0
        };
        fusions.push(Fusion::single((last, free)));
    }
    template(segs, fusions)
}

/// A ring of `s` segments (`s` even), all with left endpoint 0.
pub fn segment_cycle(s: usize) -> OrigamiTemplate {
    assert!(s >= 2);
    let segs: Vec<HPolytope> = (0..s as i64).map(|i| segment(0, 10 + i / 2)).collect();
    let fusions = (0..s)
        .map(|i| {
            let end = if i % 2 == 0 { 1 } else { 0 };
            Fusion::pair((i, end), ((i + 1) % s, end))
        })
        .collect();
    template(segs, fusions)
}

/// Two copies of `[0, a]` fused at their right endpoints; the 2-sphere with
/// an equatorial fold.
pub fn two_segment_sphere(a: i64) -> OrigamiTemplate {
    template(
        vec![segment(0, a), segment(0, a)],
        vec![Fusion::pair((0, 1), (1, 1))],
    )
}

/// Names accepted by [`named`].
pub const NAMES: &[&str] = &[
    "s4",
    "rp4",
    "hirzebruch-pair",
    "square-of-four",
    "three-cycle",
    "unit-square",
    "triangle",
    "sphere-1d",
];

/// Looks up a gallery template by name.
pub fn named(name: &str) -> Option<OrigamiTemplate> {
    Some(match name {
        "s4" => s4(2),
        "rp4" => rp4(2),
        "hirzebruch-pair" => hirzebruch_pair(),
        "square-of-four" => square_of_four(),
        "three-cycle" => three_cycle(),
        "unit-square" => plain(unit_square()),
        "triangle" => plain(triangle(2)),
        "sphere-1d" => two_segment_sphere(2),
        _ => return None,
    })
}
