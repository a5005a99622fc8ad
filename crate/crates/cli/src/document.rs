//! JSON serialization of templates.

use serde::{Deserialize, Serialize};

use origami_core::exactgeom::{parse_rational, HPolytope, Rational};
use origami_core::template::{FacetAddr, Fusion, OrigamiTemplate, Sign, TemplateError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateDocument {
    pub dimension: usize,
    pub polytopes: Vec<PolytopeDoc>,
    #[serde(default)]
    pub fusions: Vec<FusionDoc>,
    /// Optional global orientation, one `1` or `-1` per polytope.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    #[serde(default)]
    pub name: String,
    pub halfspaces: Vec<HalfspaceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceDoc {
    pub normal: Vec<i64>,
    pub offset: Offset,
}

/// An offset written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Offset {
    Integer(i64),
    Text(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FusionKind {
    Pair,
    Single,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionDoc {
    #[serde(rename = "type")]
    pub kind: FusionKind,
    pub a: AddrDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<AddrDoc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AddrDoc {
    pub polytope: usize,
    pub facet: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Template(#[from] TemplateError),
}

fn field(field: impl Into<String>, message: impl ToString) -> DocumentError {
    DocumentError::Field {
        field: field.into(),
        message: message.to_string(),
    }
}

impl TemplateDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_template(&self) -> Result<OrigamiTemplate, DocumentError> {
        let n = self.dimension;
        if n == 0 {
            return Err(field("dimension", "must be positive"));
        }
        let mut polytopes = Vec::with_capacity(self.polytopes.len());
        for (i, p) in self.polytopes.iter().enumerate() {
            let mut pairs = Vec::with_capacity(p.halfspaces.len());
            for (j, h) in p.halfspaces.iter().enumerate() {
                let at = format!("polytopes[{i}].halfspaces[{j}]");
                if h.normal.len() != n {
                    return Err(field(
                        format!("{at}.normal"),
                        format!("has {} entries, expected {n}", h.normal.len()),
                    ));
                }
                let offset = match &h.offset {
                    Offset::Integer(v) => Rational::from_integer((*v).into()),
                    Offset::Text(s) => {
                        parse_rational(s).map_err(|e| field(format!("{at}.offset"), e))?
                    }
                };
                pairs.push((h.normal.clone(), offset));
            }
            let poly = HPolytope::new(pairs).map_err(|e| field(format!("polytopes[{i}]"), e))?;
            polytopes.push(poly);
        }
        let mut fusions = Vec::with_capacity(self.fusions.len());
        for (k, f) in self.fusions.iter().enumerate() {
            let addr = |slot: &str, a: &AddrDoc| -> Result<FacetAddr, DocumentError> {
                let at = format!("fusions[{k}].{slot}");
                let p = polytopes.get(a.polytope).ok_or_else(|| {
                    field(
                        format!("{at}.polytope"),
                        format!("no polytope {}", a.polytope),
                    )
                })?;
                let given = self.polytopes[a.polytope].halfspaces.len();
                if a.facet >= given {
                    return Err(field(
                        format!("{at}.facet"),
                        format!("polytope {} has {given} halfspaces", a.polytope),
                    ));
                }
                let kept = p.source_map().get(&a.facet).copied().ok_or_else(|| {
                    field(
                        format!("{at}.facet"),
                        format!("halfspace {} is redundant and supports no facet", a.facet),
                    )
                })?;
                Ok(FacetAddr::new(a.polytope, kept))
            };
            let fusion = match (f.kind, &f.b) {
                (FusionKind::Pair, Some(b)) => Fusion::Pair(addr("a", &f.a)?, addr("b", b)?),
                (FusionKind::Pair, None) => {
                    return Err(field(format!("fusions[{k}].b"), "a pair needs two facets"))
                }
                (FusionKind::Single, None) => Fusion::Single(addr("a", &f.a)?),
                (FusionKind::Single, Some(_)) => {
                    return Err(field(format!("fusions[{k}].b"), "a single has one facet"))
                }
            };
            fusions.push(fusion);
        }
        let mut t = OrigamiTemplate::new(polytopes, fusions)?;
        if let Some(signs) = &self.orientation {
            let signs = signs
                .iter()
                .enumerate()
                .map(|(i, &s)| {
                    Sign::from_value(s)
                        .ok_or_else(|| field(format!("orientation[{i}]"), "must be 1 or -1"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            t = t.with_orientation(signs)?;
        }
        Ok(t)
    }

    /// Document for a template; facets are addressed by kept-halfspace index.
    pub fn from_template(t: &OrigamiTemplate) -> Self {
        let addr = |a: FacetAddr| AddrDoc {
            polytope: a.polytope,
            facet: a.facet,
        };
        TemplateDocument {
            dimension: t.dim(),
            polytopes: t
                .polytopes()
                .iter()
                .enumerate()
                .map(|(i, p)| PolytopeDoc {
                    name: format!("P{i}"),
                    halfspaces: p
                        .to_pairs()
                        .into_iter()
                        .map(|(normal, offset)| HalfspaceDoc {
                            normal,
                            offset: if offset.is_integer() {
                                Offset::Integer(
                                    offset.to_integer().try_into().expect("offset fits in i64"),
                                )
                            } else {
                                Offset::Text(offset.to_string())
                            },
                        })
                        .collect(),
                })
                .collect(),
            fusions: t
                .fusions()
                .iter()
                .map(|f| match *f {
                    Fusion::Pair(a, b) => FusionDoc {
                        kind: FusionKind::Pair,
                        a: addr(a),
                        b: Some(addr(b)),
                    },
                    Fusion::Single(a) => FusionDoc {
                        kind: FusionKind::Single,
                        a: addr(a),
                        b: None,
                    },
                })
                .collect(),
            orientation: t
                .stored_orientation()
                .map(|s| s.iter().map(|x| x.value()).collect()),
        }
    }
}
