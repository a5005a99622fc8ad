//! JSON report fragments. Keys are emitted in sorted order, so reports are
//! byte-identical across runs.

use serde_json::{json, Value};

use origami_core::exactgeom::{Point, Rational};
use origami_core::template::{Fusion, NonorientableError, OrigamiTemplate, ValidationReport};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn point(p: &Point) -> Value {
    Value::Array(p.iter().map(rational).collect())
}

pub fn fusion(f: &Fusion) -> Value {
    match f {
        Fusion::Pair(a, b) => json!({
            "type": "pair",
            "a": {"polytope": a.polytope, "facet": a.facet},
            "b": {"polytope": b.polytope, "facet": b.facet},
        }),
        Fusion::Single(a) => json!({
            "type": "single",
            "a": {"polytope": a.polytope, "facet": a.facet},
        }),
    }
}

pub fn validation(t: &OrigamiTemplate, r: &ValidationReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "dimension": t.dim(),
        "polytopes": t.polytopes().len(),
        "fusions": t.fusions().iter().map(fusion).collect::<Vec<_>>(),
        "components": r.components,
        "failures": r.failures(),
        "self_pairs": r.self_pairs,
    })
}

pub fn nonorientable(e: &NonorientableError) -> Value {
    match e {
        NonorientableError::Single { fusion } => json!({"kind": "single", "fusion": fusion}),
        NonorientableError::OddCycle { cycle } => json!({"kind": "odd-cycle", "cycle": cycle}),
        NonorientableError::Inconsistent { fusion } => {
            json!({"kind": "inconsistent", "fusion": fusion})
        }
    }
}

pub fn envelope(command: &str, input: &str, verdict: &str, data: Value) -> Value {
    json!({
        "command": command,
        "input": input,
        "verdict": verdict,
        "data": data,
    })
}
