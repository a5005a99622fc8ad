//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use origami_core::exactgeom::{HPolytope, IntVector, Point};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn lattice_length(a: &[Q], b: &[Q]) -> i64 {
    let d: Vec<i64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| (y - x).to_integer().try_into().unwrap())
        .collect();
    d[0].gcd(&d[1])
}

/// A random 2-dimensional Delzant polygon: a rectangle, triangle or
/// Hirzebruch trapezoid followed by up to four random corner blow-ups.
pub fn random_delzant(seed: u64) -> HPolytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hs: Vec<(IntVector, i64)> = match rng.gen_range(0..3) {
        0 => {
            let (a, b) = (rng.gen_range(2..7), rng.gen_range(2..7));
            vec![
                (vec![-1, 0], 0),
                (vec![0, -1], 0),
                (vec![1, 0], a),
                (vec![0, 1], b),
            ]
        }
        1 => {
            let k = rng.gen_range(2..8);
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], k)]
        }
        _ => {
            let b = rng.gen_range(1..4);
            let m = rng.gen_range(0..3);
            let a = m * b + rng.gen_range(2..5);
            vec![
                (vec![-1, 0], 0),
                (vec![0, -1], 0),
                (vec![0, 1], b),
                (vec![1, m], a),
            ]
        }
    };
    let shift = [rng.gen_range(-3..4), rng.gen_range(-3..4)];
    for _ in 0..rng.gen_range(0..5) {
        let p = build(&hs);
        let v = rng.gen_range(0..p.vertices().len());
        let nb = p.neighbors(v);
        let len = nb
            .iter()
            .map(|&w| lattice_length(&p.vertices()[v], &p.vertices()[w]))
            .min()
            .unwrap();
        if len < 2 {
            continue;
        }
        let k = rng.gen_range(1..len);
        let act = p.active_at(v);
        let (h1, h2) = (&p.halfspaces()[act[0]], &p.halfspaces()[act[1]]);
        let normal = vec![
            h1.normal()[0] + h2.normal()[0],
            h1.normal()[1] + h2.normal()[1],
        ];
        let offset: i64 = (h1.offset() + h2.offset()).to_integer().try_into().unwrap();
        hs.push((normal, offset - k));
    }
    let shifted: Vec<(IntVector, i64)> = hs
        .into_iter()
        .map(|(n, b)| {
            let d = n[0] * shift[0] + n[1] * shift[1];
            (n, b + d)
        })
        .collect();
    build(&shifted)
}

pub fn build(hs: &[(IntVector, i64)]) -> HPolytope {
    HPolytope::new(hs.iter().map(|(n, b)| (n.clone(), q(*b))).collect()).unwrap()
}

fn cross(o: &[Q], a: &[Q], b: &[Q]) -> Q {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Convex hull of planar points, counter-clockwise (monotone chain).
pub fn hull_ring(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let chain = |it: &mut dyn Iterator<Item = &Point>| {
        let mut half: Vec<Point> = Vec::new();
        for p in it {
            while half.len() >= 2
                && !cross(&half[half.len() - 2], &half[half.len() - 1], p).is_positive()
            {
                half.pop();
            }
            half.push(p.clone());
        }
        half.pop();
        half
    };
    let mut ring = chain(&mut pts.iter());
    ring.extend(chain(&mut pts.iter().rev()));
    ring
}

/// One primitive outward normal and offset per hull edge, sorted.
pub fn hull_halfspaces(points: &[Point]) -> Vec<(IntVector, Q)> {
    let ring = hull_ring(points);
    let mut out = Vec::new();
    for i in 0..ring.len() {
        let a = &ring[i];
        let b = &ring[(i + 1) % ring.len()];
        let n = [&b[1] - &a[1], &a[0] - &b[0]];
        let den = n[0].denom().lcm(n[1].denom());
        let ints: Vec<BigInt> = n
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints[0].gcd(&ints[1]);
        let normal: IntVector = ints.iter().map(|c| (c / &g).try_into().unwrap()).collect();
        let offset = q(normal[0]) * &a[0] + q(normal[1]) * &a[1];
        out.push((normal, offset));
    }
    out.sort();
    out
}

/// Lattice points by scanning the integer box and testing every inequality.
pub fn naive_lattice_points(p: &HPolytope) -> Vec<IntVector> {
    let xs: Vec<&Point> = p.vertices().iter().collect();
    let lo: Vec<i64> = (0..p.dim())
        .map(|k| {
            xs.iter()
                .map(|v| v[k].floor().to_integer())
                .min()
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    let hi: Vec<i64> = (0..p.dim())
        .map(|k| {
            xs.iter()
                .map(|v| v[k].ceil().to_integer())
                .max()
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let inside = p.halfspaces().iter().all(|h| {
            let lhs: i64 = h.normal().iter().zip(&cur).map(|(a, b)| a * b).sum();
            q(lhs) <= *h.offset()
        });
        if inside {
            out.push(cur.clone());
        }
        let mut k = p.dim();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                cur[k + 1..].copy_from_slice(&lo[k + 1..]);
                break;
            }
        }
    }
}

/// Twice the shoelace area of the hull of the vertices.
pub fn twice_area(p: &HPolytope) -> Q {
    let ring = hull_ring(p.vertices());
    let mut s = Q::zero();
    for i in 0..ring.len() {
        let a = &ring[i];
        let b = &ring[(i + 1) % ring.len()];
        s += &a[0] * &b[1] - &a[1] * &b[0];
    }
    s
}

/// Boundary lattice points of a lattice polygon: sum of edge lattice lengths.
pub fn boundary_count(p: &HPolytope) -> i64 {
    p.edges()
        .into_iter()
        .map(|(a, b)| lattice_length(&p.vertices()[a], &p.vertices()[b]))
        .sum()
}
