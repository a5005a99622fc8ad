//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{hull_halfspaces, naive_lattice_points, random_delzant};
use origami_core::cohomology::{self, AuxChoice};
use origami_core::cones::{self, ConeError};
use origami_core::exactgeom::{agrees_near, point, HPolytope, IntVector};
use origami_core::gallery;
use origami_core::invariants;
use origami_core::sampling::{sampling_box, Lcg};
use origami_core::template::{
    classify_surface, cut, glue, orient, Fusion, NonorientableError, OrigamiTemplate, Sign,
    SurfaceFamily,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn delzant_family() -> Check {
    for (i, p) in gallery::hirzebruch_family().iter().enumerate() {
        let r = p.is_delzant();
        ensure!(r.is_delzant, "family member {i}: {:?}", r.failure);
        ensure!(
            p.vertices().iter().flatten().all(|c| c.is_integer()),
            "family member {i} has a non-integral vertex"
        );
    }
    let bad = HPolytope::from_ints(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 2], 2)]).unwrap();
    let r = bad.is_delzant();
    ensure!(!r.is_delzant, "x1 + 2 x2 <= 2 triangle passed");
    let at = r
        .vertices
        .iter()
        .find(|v| v.vertex == point(&[0, 1]))
        .ok_or("no vertex (0,1)")?;
    ensure!(
        at.determinant.map(i64::abs) == Some(2),
        "determinant at (0,1) is {:?}",
        at.determinant
    );
    // the other two corners are smooth
    let others: Vec<_> = r
        .vertices
        .iter()
        .filter(|v| v.vertex != point(&[0, 1]))
        .map(|v| v.determinant.map(i64::abs))
        .collect();
    ensure!(others == vec![Some(1), Some(1)], "other corners {others:?}");
    Ok("4 family polytopes Delzant; triangle fails with |det| = 2 at (0,1)".into())
}

fn template_gallery() -> Check {
    let s4 = gallery::s4(2);
    ensure!(s4.validate().is_valid(), "S4 invalid: {}", s4.validate());
    let signs = orient(&s4).map_err(|e| format!("S4: {e}"))?;
    ensure!(signs == vec![Sign::Plus, Sign::Minus], "S4 signs {signs:?}");
    let rp4 = gallery::rp4(2);
    ensure!(rp4.validate().is_valid(), "RP4 invalid: {}", rp4.validate());
    ensure!(
        matches!(orient(&rp4), Err(NonorientableError::Single { fusion: 0 })),
        "RP4 orientation: {:?}",
        orient(&rp4)
    );
    let tri = gallery::three_cycle();
    ensure!(
        tri.validate().is_valid(),
        "3-cycle invalid: {}",
        tri.validate()
    );
    match orient(&tri) {
        Err(NonorientableError::OddCycle { cycle }) => {
            let set: BTreeSet<usize> = cycle.iter().copied().collect();
            ensure!(
                cycle.len() == 3 && set.len() == 3,
                "cycle witness {cycle:?}"
            );
        }
        other => return Err(format!("3-cycle orientation: {other:?}")),
    }
    Ok("S4 orients {+1,-1}; RP4 blocked by its single; 3-cycle blocked by an odd cycle".into())
}

/// Every way to close `s` segments `[0, 10]` into a ring.
fn rings(s: usize) -> Vec<OrigamiTemplate> {
    (0..1usize << s)
        .map(|mask| {
            let end = |i: usize| (mask >> i) & 1;
            let fusions = (0..s)
                .map(|i| Fusion::pair((i, end(i)), ((i + 1) % s, 1 - end((i + 1) % s))))
                .collect();
            OrigamiTemplate::new(vec![gallery::segment(0, 10); s], fusions).unwrap()
        })
        .collect()
}

fn classification_table() -> Check {
    let mut rows = 0;
    for s in 1..=5usize {
        let expect = [
            (0, SurfaceFamily::Sphere, 2, s - 1),
            (1, SurfaceFamily::ProjectivePlane, 1, s),
            (2, SurfaceFamily::KleinBottle, 0, s + 1),
        ];
        for (marked, family, fixed, folds) in expect {
            let t = gallery::segment_path(s, marked);
            ensure!(t.validate().is_valid(), "path s={s} m={marked} invalid");
            let c = classify_surface(&t).map_err(|e| format!("s={s} m={marked}: {e}"))?;
            ensure!(
                (c.family, c.fixed_points, c.fold_components) == (family, fixed, folds),
                "s={s} marked={marked}: got {:?}",
                c
            );
            rows += 1;
        }
        if s % 2 == 0 {
            let t = gallery::segment_cycle(s);
            ensure!(t.validate().is_valid(), "ring s={s} invalid");
            let c = classify_surface(&t).map_err(|e| format!("ring s={s}: {e}"))?;
            ensure!(
                (c.family, c.fixed_points, c.fold_components) == (SurfaceFamily::Torus, 0, s),
                "ring s={s}: got {c:?}"
            );
            ensure!(
                rings(s).iter().any(|t| t.validate().is_valid()),
                "no valid ring for s={s}"
            );
            rows += 1;
        } else {
            // a ring needs an even number of folds; all odd closings fail
            ensure!(
                rings(s).iter().all(|t| !t.validate().is_valid()),
                "odd ring s={s} validated"
            );
        }
    }
    Ok(format!(
        "{rows} table rows match; torus rows at s = 2, 4 (odd rings rejected by validation)"
    ))
}

fn quantization() -> Check {
    let q = invariants::quantize(&gallery::s4(2)).map_err(|e| e.to_string())?;
    ensure!(
        q.virtual_dimension == 0,
        "S4 virtual dimension {}",
        q.virtual_dimension
    );
    ensure!(
        q.multiplicities.len() == 6,
        "S4 has {} points",
        q.multiplicities.len()
    );
    ensure!(
        q.multiplicities.values().all(|&m| m == 0),
        "S4 nonzero multiplicity"
    );
    let tri = gallery::triangle(2);
    let q = invariants::quantize(&gallery::plain(tri.clone())).map_err(|e| e.to_string())?;
    ensure!(
        q.virtual_dimension == 6 && naive_lattice_points(&tri).len() == 6,
        "triangle count {}",
        q.virtual_dimension
    );
    let pair = gallery::hirzebruch_pair();
    let q = invariants::quantize(&pair).map_err(|e| e.to_string())?;
    let a: BTreeSet<IntVector> = naive_lattice_points(&pair.polytopes()[0])
        .into_iter()
        .collect();
    let b: BTreeSet<IntVector> = naive_lattice_points(&pair.polytopes()[1])
        .into_iter()
        .collect();
    let overlap: Vec<&IntVector> = a.intersection(&b).collect();
    ensure!(!overlap.is_empty(), "empty overlap");
    for p in &overlap {
        ensure!(
            q.multiplicities[*p] == 0,
            "overlap point {p:?} has {}",
            q.multiplicities[*p]
        );
    }
    Ok(format!(
        "S4 VD 0 pointwise; triangle 6; {} overlap points cancel",
        overlap.len()
    ))
}

fn dh_identity() -> Check {
    let templates = [
        ("unit square", gallery::plain(gallery::unit_square())),
        ("triangle k=3", gallery::plain(gallery::triangle(3))),
        ("S4", gallery::s4(2)),
        ("Hirzebruch pair", gallery::hirzebruch_pair()),
    ];
    let mut summary = Vec::new();
    for (name, t) in &templates {
        let sets = cones::weight_sets(t).map_err(|e| e.to_string())?;
        let v1 = cones::default_polarization(2, &sets);
        let v2 = cones::alternate_polarization(2, &sets);
        ensure!(v1 != v2, "{name}: polarizations coincide");
        for v in [&v1, &v2] {
            let r = cones::verify_dh_identity(t, v, 200, 0).map_err(|e| e.to_string())?;
            ensure!(r.success(), "{name} v={v:?}: {:?}", r.first_counterexample);
            ensure!(
                r.agreements + r.discarded == 200,
                "{name}: sample accounting"
            );
            ensure!(
                r.agreements >= 150,
                "{name}: only {} usable samples",
                r.agreements
            );
        }
        // the two cone sums agree with each other on the same points
        let (lo, hi) = sampling_box(t.polytopes());
        let mut rng = Lcg::new(0);
        let mut compared = 0;
        for _ in 0..200 {
            let x = rng.next_point(&lo, &hi);
            match (
                cones::cone_density(t, &v1, &x),
                cones::cone_density(t, &v2, &x),
            ) {
                (Ok(a), Ok(b)) => {
                    ensure!(a == b, "{name}: v1 gives {a}, v2 gives {b} at {x:?}");
                    compared += 1;
                }
                (Err(ConeError::BoundaryPoint { .. }), _)
                | (_, Err(ConeError::BoundaryPoint { .. })) => {}
                (Err(e), _) | (_, Err(e)) => return Err(e.to_string()),
            }
        }
        summary.push(format!("{name} {compared}"));
    }
    Ok(format!(
        "zero disagreements; cross-polarization points: {}",
        summary.join(", ")
    ))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `numerator(t) / (1 - t^2)^n` to degree `cap`, from the
/// closed form of the denominator's expansion.
fn expand(numerator: &[(usize, u64)], n: u64, cap: usize) -> Vec<u64> {
    let mut out = vec![0; cap + 1];
    for &(deg, c) in numerator {
        for k in (deg..=cap).step_by(2) {
            let j = ((k - deg) / 2) as u64;
            out[k] += c * binomial(j + n - 1, n - 1);
        }
    }
    out
}

fn cohomology_series() -> Check {
    let cases = [
        ("S4", gallery::s4(2), expand(&[(0, 1), (4, 1)], 2, 8)),
        (
            "S2",
            gallery::two_segment_sphere(2),
            expand(&[(0, 1), (2, 1)], 1, 8),
        ),
    ];
    ensure!(
        cases[0].2 == vec![1, 0, 2, 0, 4, 0, 6, 0, 8],
        "oracle S4 {:?}",
        cases[0].2
    );
    ensure!(
        cases[1].2 == vec![1, 0, 2, 0, 2, 0, 2, 0, 2],
        "oracle S2 {:?}",
        cases[1].2
    );
    for (name, t, want) in &cases {
        for aux in [AuxChoice::Ascending, AuxChoice::Descending] {
            let s = cohomology::ht_poincare_with(t, 8, aux).map_err(|e| e.to_string())?;
            ensure!(
                &s.coefficients == want,
                "{name} {aux:?}: {:?}",
                s.coefficients
            );
        }
        let fold = cohomology::fold_direction(t).map_err(|e| e.to_string())?;
        let faces = cohomology::critical_faces(t, &fold.xi).map_err(|e| e.to_string())?;
        ensure!(
            faces.iter().filter(|c| c.shift == 0).count() == 1,
            "{name}: minimum not unique"
        );
    }
    Ok("S4 [1,0,2,0,4,0,6,0,8], S2 [1,0,2,0,2,0,2,0,2] under both auxiliary choices".into())
}

fn orientable_templates() -> Vec<(String, OrigamiTemplate)> {
    let mut out: Vec<(String, OrigamiTemplate)> = gallery::NAMES
        .iter()
        .map(|n| (n.to_string(), gallery::named(n).unwrap()))
        .filter(|(_, t)| t.orientation().is_ok())
        .collect();
    for s in 1..=5 {
        out.push((format!("path {s}"), gallery::segment_path(s, 0)));
    }
    for s in [2, 4] {
        out.push((format!("ring {s}"), gallery::segment_cycle(s)));
    }
    for k in 1..=3 {
        out.push((format!("s4 k={k}"), gallery::s4(k)));
    }
    out
}

fn reversal_symmetry() -> Check {
    let templates = orientable_templates();
    for (name, t) in &templates {
        let r = t.reversed().map_err(|e| e.to_string())?;
        let qa = invariants::quantize(t).map_err(|e| format!("{name}: {e}"))?;
        let qb = invariants::quantize(&r).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            qa.virtual_dimension == -qb.virtual_dimension,
            "{name}: virtual dimension"
        );
        for (p, m) in &qa.multiplicities {
            ensure!(*m == -qb.multiplicities[p], "{name}: multiplicity at {p:?}");
        }
        let va = invariants::signed_volume(t).map_err(|e| e.to_string())?;
        let vb = invariants::signed_volume(&r).map_err(|e| e.to_string())?;
        ensure!(va == -vb.clone(), "{name}: volume {va} vs {vb}");
        let (lo, hi) = sampling_box(t.polytopes());
        let mut rng = Lcg::new(11);
        for _ in 0..50 {
            let x = rng.next_point(&lo, &hi);
            let a = invariants::dh_density(t, &x).map_err(|e| e.to_string())?;
            let b = invariants::dh_density(&r, &x).map_err(|e| e.to_string())?;
            ensure!(a.density == -b.density, "{name}: density at {x:?}");
        }
    }
    Ok(format!(
        "{} orientable templates negate quantize, density and volume",
        templates.len()
    ))
}

fn property_suites() -> Check {
    let polys: Vec<HPolytope> = (0..100).map(random_delzant).collect();
    for (seed, p) in polys.iter().enumerate() {
        ensure!(
            p.is_delzant().is_delzant,
            "seed {seed}: generator produced non-Delzant"
        );
        let mut h = p.to_pairs();
        h.sort();
        ensure!(
            hull_halfspaces(p.vertices()) == h,
            "seed {seed}: H->V->H mismatch"
        );
        let back = HPolytope::new(h).map_err(|e| e.to_string())?;
        ensure!(back.vertices() == p.vertices(), "seed {seed}: V mismatch");
        ensure!(
            p.lattice_points() == naive_lattice_points(p),
            "seed {seed}: lattice points differ from naive scan"
        );
    }
    let mut agree_checks = 0;
    for i in 0..20 {
        for j in 0..20 {
            let (p, r) = (&polys[i], if i == j { &polys[i] } else { &polys[j] });
            for fi in 0..p.halfspaces().len() {
                for fj in 0..r.halfspaces().len() {
                    let a = agrees_near(p, p.facet(fi).unwrap(), r, r.facet(fj).unwrap());
                    let b = agrees_near(r, r.facet(fj).unwrap(), p, p.facet(fi).unwrap());
                    ensure!(a == b, "agreement asymmetric: {i}/{fi} vs {j}/{fj}");
                    agree_checks += 1;
                }
            }
        }
        for f in 0..polys[i].halfspaces().len() {
            let p = &polys[i];
            ensure!(
                agrees_near(p, p.facet(f).unwrap(), p, p.facet(f).unwrap()) == Ok(true),
                "facet does not agree with itself"
            );
        }
    }
    let mut glued = 0;
    let mut templates: Vec<OrigamiTemplate> = gallery::NAMES
        .iter()
        .map(|n| gallery::named(n).unwrap())
        .collect();
    for p in polys.iter().take(30) {
        templates.push(
            OrigamiTemplate::new(
                vec![p.clone(), p.clone()],
                vec![Fusion::pair((0, 0), (1, 0))],
            )
            .unwrap(),
        );
    }
    for t in &templates {
        let pieces = OrigamiTemplate::from_polytopes(cut(t)).map_err(|e| e.to_string())?;
        let back = glue(&pieces, None, t.fusions()).map_err(|e| e.to_string())?;
        ensure!(&back == t, "cut then glue changed a template");
        glued += 1;
    }
    Ok(format!(
        "100 polytopes round-trip and match the naive count; {agree_checks} agreement pairs symmetric; {glued} cut/glue identities"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 Delzant validation",
            delzant_family,
            Duration::from_secs(1),
        ),
        (
            "2 template gallery",
            template_gallery,
            Duration::from_secs(1),
        ),
        (
            "3 surface classification",
            classification_table,
            Duration::from_secs(1),
        ),
        ("4 quantization", quantization, Duration::from_secs(1)),
        ("5 DH identity", dh_identity, Duration::from_secs(5)),
        ("6 cohomology", cohomology_series, Duration::from_secs(1)),
        ("7 orientation reversal", reversal_symmetry, Duration::MAX),
        (
            "8 property suites",
            property_suites,
            Duration::from_secs(30),
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let line = match result {
            Ok(detail) if elapsed <= limit => format!("PASS {name} ({elapsed:.2?}): {detail}"),
            Ok(detail) => {
                failed += 1;
                format!("FAIL {name} ({elapsed:.2?} exceeds {limit:?}): {detail}")
            }
            Err(why) => {
                failed += 1;
                format!("FAIL {name} ({elapsed:.2?}): {why}")
            }
        };
        println!("{line}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
