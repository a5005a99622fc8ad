//! SVG picture of a 2-dimensional template: translucent polygons, so
//! overlaps darken, with fused facets drawn bold.

use std::fmt::Write;

use num_traits::ToPrimitive;

use origami_core::exactgeom::{HPolytope, Rational};
use origami_core::invariants::QuantizationResult;
use origami_core::sampling::sampling_box;
use origami_core::template::{fixed_points, Fusion, OrigamiTemplate};

const SIZE: f64 = 600.0;

struct Frame {
    lo: (f64, f64),
    hi: (f64, f64),
    scale: f64,
}

impl Frame {
    fn new(t: &OrigamiTemplate) -> Self {
        let (lo, hi) = sampling_box(t.polytopes());
        let f = |r: &Rational| r.to_f64().expect("finite coordinate");
        let lo = (f(&lo[0]), f(&lo[1]));
        let hi = (f(&hi[0]), f(&hi[1]));
        let extent = (hi.0 - lo.0).max(hi.1 - lo.1);
        Frame {
            lo,
            hi,
            scale: SIZE / extent,
        }
    }

    fn width(&self) -> f64 {
        (self.hi.0 - self.lo.0) * self.scale
    }

    fn height(&self) -> f64 {
        (self.hi.1 - self.lo.1) * self.scale
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.lo.0) * self.scale, (self.hi.1 - y) * self.scale)
    }

    fn map_point(&self, p: &[Rational]) -> (f64, f64) {
        self.map(
            p[0].to_f64().expect("finite coordinate"),
            p[1].to_f64().expect("finite coordinate"),
        )
    }
}

/// Vertex indices in boundary order.
fn boundary_cycle(p: &HPolytope) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = *p
            .neighbors(cur)
            .iter()
            .find(|&&v| v != prev)
            .expect("polygon vertex has two neighbours");
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

pub fn render(t: &OrigamiTemplate, lattice: Option<&QuantizationResult>) -> String {
    let frame = Frame::new(t);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#,
        w = frame.width(),
        h = frame.height()
    )
    .unwrap();
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (i, p) in t.polytopes().iter().enumerate() {
        let pts: Vec<String> = boundary_cycle(p)
            .into_iter()
            .map(|v| {
                let (x, y) = frame.map_point(&p.vertices()[v]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r##"<polygon id="polytope-{i}" points="{}" fill="#555555" fill-opacity="0.35" stroke="#222222" stroke-width="1"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }
    for f in t.fusions() {
        let dashed = matches!(f, Fusion::Single(_));
        for a in f.entries() {
            let p = &t.polytopes()[a.polytope];
            let face = p.facet(a.facet).expect("fused halfspace is a facet");
            let ends: Vec<(f64, f64)> = face
                .vertices
                .iter()
                .map(|&v| frame.map_point(&p.vertices()[v]))
                .collect();
            write!(
                out,
                r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#000000" stroke-width="4""##,
                ends[0].0, ends[0].1, ends[1].0, ends[1].1
            )
            .unwrap();
            if dashed {
                out.push_str(r#" stroke-dasharray="8,6""#);
            }
            out.push_str("/>\n");
        }
    }
    for fp in fixed_points(t) {
        let (x, y) = frame.map_point(&fp.vertex);
        writeln!(
            out,
            r##"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="#000000"/>"##
        )
        .unwrap();
    }
    if let Some(q) = lattice {
        for (pt, m) in q.support() {
            let (x, y) = frame.map(pt[0] as f64, pt[1] as f64);
            let fill = if m > 0 { "#000000" } else { "#ffffff" };
            writeln!(
                out,
                r##"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{fill}" stroke="#000000" stroke-width="1"/>"##
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
