//! `origami`: invariants of toric origami templates from the command line.

mod document;
mod render;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use origami_core::cohomology::{self, DEFAULT_CAP};
use origami_core::cones;
use origami_core::density::{DensityRegistry, DensitySample, WeightConeSum};
use origami_core::exactgeom::{parse_rational, IntVector, Point};
use origami_core::gallery;
use origami_core::invariants;
use origami_core::template::{classify_surface, OrigamiTemplate};

use document::TemplateDocument;

#[derive(Parser)]
#[command(
    name = "origami",
    version,
    about = "Exact invariants of toric origami templates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Template document (JSON); omit or pass `-` to read stdin
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Delzant, agreement, adjacency and connectivity conditions
    Validate(Input),
    /// Find a global orientation or a witness that none exists
    Orient(Input),
    /// Classify a 1-dimensional template as one of the four surface families
    Classify(Input),
    /// Signed lattice-point count
    Quantize {
        #[command(flatten)]
        input: Input,
        /// Print the multiplicity at every lattice point
        #[arg(long)]
        points: bool,
    },
    /// Duistermaat-Heckman density at a point
    Dh {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rational coordinates, e.g. 1/3,1/2
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Evaluation method: polytopes or cones
        #[arg(long, default_value = "polytopes")]
        method: String,
        /// Polarizing vector for the cones method
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Signed volume
    Volume(Input),
    /// Compare the weight-cone density with the polytope density on random points
    Cones {
        #[command(flatten)]
        input: Input,
        /// Comma-separated polarizing vector; a generic default is used if omitted
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Equivariant Poincare series for a template with one connected fold
    Cohomology {
        #[command(flatten)]
        input: Input,
        /// Highest degree reported; must be even
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_degree: usize,
    },
    /// Draw a 2-dimensional template as SVG
    Render {
        #[command(flatten)]
        input: Input,
        /// Output file; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Mark lattice points with nonzero multiplicity (filled +, hollow -)
        #[arg(long)]
        lattice: bool,
    },
    /// Print a gallery template as a JSON document
    Example {
        /// One of: s4, rp4, hirzebruch-pair, square-of-four, three-cycle,
        /// unit-square, triangle, sphere-1d
        name: String,
    },
}

enum Failure {
    /// Unreadable input or bad flag values.
    Usage(String),
    /// The input parsed but the requested property fails.
    Semantic {
        message: String,
        report: Option<Value>,
    },
}

fn semantic(message: impl ToString, report: Option<Value>) -> Failure {
    Failure::Semantic {
        message: message.to_string(),
        report,
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn read_input(input: &Input) -> Result<(String, String), Failure> {
    match &input.file {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p)
            .map(|s| (p.display().to_string(), s))
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<(String, String), Failure> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    Ok(("-".to_string(), s))
}

fn load(input: &Input) -> Result<(String, OrigamiTemplate), Failure> {
    let (name, text) = read_input(input)?;
    let t = TemplateDocument::parse(&text)
        .and_then(|d| d.to_template())
        .map_err(|e| Failure::Usage(format!("{name}: {e}")))?;
    Ok((name, t))
}

/// Loads a template and insists that it satisfies the template conditions.
fn load_valid(command: &str, input: &Input) -> Result<(String, OrigamiTemplate), Failure> {
    let (name, t) = load(input)?;
    let r = t.validate();
    if !r.is_valid() {
        return Err(semantic(
            format!("invalid template: {r}"),
            Some(report::envelope(
                command,
                &name,
                "invalid",
                report::validation(&t, &r),
            )),
        ));
    }
    Ok((name, t))
}

fn parse_point(s: &str, n: usize) -> Result<Point, Failure> {
    let p = s
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Point, _>>()
        .map_err(|e| Failure::Usage(format!("--point {s}: {e}")))?;
    if p.len() != n {
        return Err(Failure::Usage(format!(
            "--point has {} coordinates, template dimension is {n}",
            p.len()
        )));
    }
    Ok(p)
}

fn parse_vector(s: &str, n: usize) -> Result<IntVector, Failure> {
    let v = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<IntVector, _>>()
        .map_err(|e| Failure::Usage(format!("--v {s}: {e}")))?;
    if v.len() != n {
        return Err(Failure::Usage(format!(
            "--v has {} entries, template dimension is {n}",
            v.len()
        )));
    }
    Ok(v)
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Validate(input) => {
            let (name, t) = load(&input)?;
            let r = t.validate();
            let data = report::validation(&t, &r);
            if r.is_valid() {
                Ok(Output::Json(report::envelope(
                    "validate", &name, "valid", data,
                )))
            } else {
                Err(semantic(
                    format!("invalid template: {r}"),
                    Some(report::envelope("validate", &name, "invalid", data)),
                ))
            }
        }
        Command::Orient(input) => {
            let (name, t) = load_valid("orient", &input)?;
            match t.orientation() {
                Ok(signs) => {
                    let signs: Vec<i64> = signs.iter().map(|s| s.value()).collect();
                    Ok(Output::Json(report::envelope(
                        "orient",
                        &name,
                        "orientable",
                        json!({ "signs": signs }),
                    )))
                }
                Err(e) => Err(semantic(
                    format!("nonorientable: {e}"),
                    Some(report::envelope(
                        "orient",
                        &name,
                        "nonorientable",
                        json!({ "witness": report::nonorientable(&e) }),
                    )),
                )),
            }
        }
        Command::Classify(input) => {
            let (name, t) = load_valid("classify", &input)?;
            let c = classify_surface(&t).map_err(|e| semantic(e, None))?;
            Ok(Output::Json(report::envelope(
                "classify",
                &name,
                c.family.name(),
                json!({
                    "family": c.family.name(),
                    "segments": c.segments,
                    "marked_endpoints": c.marked_endpoints,
                    "fixed_points": c.fixed_points,
                    "fold_components": c.fold_components,
                }),
            )))
        }
        Command::Quantize { input, points } => {
            let (name, t) = load_valid("quantize", &input)?;
            let q = invariants::quantize(&t).map_err(|e| semantic(e, None))?;
            let mut data = json!({ "virtual_dimension": q.virtual_dimension });
            if points {
                data["points"] = q
                    .multiplicities
                    .iter()
                    .map(|(p, m)| json!({ "point": p, "multiplicity": m }))
                    .collect();
            }
            Ok(Output::Json(report::envelope(
                "quantize", &name, "ok", data,
            )))
        }
        Command::Dh {
            input,
            point,
            method,
            v,
        } => {
            let (name, t) = load_valid("dh", &input)?;
            let x = parse_point(&point, t.dim())?;
            let mut registry = DensityRegistry::default();
            if let Some(v) = v {
                let v = parse_vector(&v, t.dim())?;
                registry = DensityRegistry::empty();
                registry
                    .register(Box::new(origami_core::density::PolytopeSum))
                    .and_then(|_| {
                        registry.register(Box::new(WeightConeSum {
                            polarization: Some(v),
                        }))
                    })
                    .expect("distinct method names");
            }
            let m = registry.get(&method).map_err(|e| {
                Failure::Usage(format!("{e}; available: {}", registry.names().join(", ")))
            })?;
            let sample = m.evaluate(&t, &x).map_err(|e| semantic(e, None))?;
            let (density, generic) = match sample {
                DensitySample::Generic(d) => (json!(d), true),
                DensitySample::Boundary => (Value::Null, false),
            };
            Ok(Output::Json(report::envelope(
                "dh",
                &name,
                "ok",
                json!({
                    "method": m.name(),
                    "point": report::point(&x),
                    "density": density,
                    "generic": generic,
                }),
            )))
        }
        Command::Volume(input) => {
            let (name, t) = load_valid("volume", &input)?;
            let vol = invariants::signed_volume(&t).map_err(|e| semantic(e, None))?;
            let signs = t.orientation().map_err(|e| semantic(e, None))?;
            let parts: Vec<Value> = t
                .polytopes()
                .iter()
                .zip(&signs)
                .map(|(p, s)| json!({ "sign": s.value(), "volume": report::rational(&p.volume()) }))
                .collect();
            Ok(Output::Json(report::envelope(
                "volume",
                &name,
                "ok",
                json!({ "signed_volume": report::rational(&vol), "polytopes": parts }),
            )))
        }
        Command::Cones {
            input,
            v,
            samples,
            seed,
        } => {
            let (name, t) = load_valid("cones", &input)?;
            let sets = cones::weight_sets(&t).map_err(|e| semantic(e, None))?;
            let v = match v {
                Some(v) => parse_vector(&v, t.dim())?,
                None => cones::default_polarization(t.dim(), &sets),
            };
            let decomposition = cones::cone_decomposition(&t, &v).map_err(|e| semantic(e, None))?;
            let r =
                cones::verify_dh_identity(&t, &v, samples, seed).map_err(|e| semantic(e, None))?;
            let data = json!({
                "polarization": r.polarization,
                "seed": seed,
                "samples": r.samples,
                "discarded": r.discarded,
                "agreements": r.agreements,
                "disagreements": r.disagreements,
                "first_counterexample": r.first_counterexample.as_ref().map(|c| json!({
                    "point": report::point(&c.point),
                    "cone_density": c.cone_density,
                    "polytope_density": c.polytope_density,
                })),
                "cones": decomposition.iter().map(|c| json!({
                    "polytope": c.polytope,
                    "apex": report::point(&c.apex),
                    "generators": c.generators,
                    "flips": c.flips,
                    "sign": c.sign.value(),
                })).collect::<Vec<_>>(),
            });
            if r.success() {
                Ok(Output::Json(report::envelope(
                    "cones",
                    &name,
                    "identity holds",
                    data,
                )))
            } else {
                Err(semantic(
                    format!("{} disagreements", r.disagreements),
                    Some(report::envelope("cones", &name, "identity fails", data)),
                ))
            }
        }
        Command::Cohomology { input, max_degree } => {
            if max_degree % 2 != 0 {
                return Err(Failure::Usage(format!(
                    "--max-degree must be even, got {max_degree}"
                )));
            }
            let (name, t) = load_valid("cohomology", &input)?;
            let fold = cohomology::fold_direction(&t).map_err(|e| semantic(e, None))?;
            let critical =
                cohomology::critical_faces(&t, &fold.xi).map_err(|e| semantic(e, None))?;
            let series = cohomology::ht_poincare(&t, max_degree).map_err(|e| semantic(e, None))?;
            let faces: Vec<Value> = critical
                .iter()
                .map(|c| {
                    json!({
                        "polytope": c.polytope,
                        "sign": c.sign.value(),
                        "dim": c.dim,
                        "vertices": cohomology::face_vertices(&t, c).iter().map(report::point).collect::<Vec<_>>(),
                        "index": c.index,
                        "shift": c.shift,
                    })
                })
                .collect();
            Ok(Output::Json(report::envelope(
                "cohomology",
                &name,
                "ok",
                json!({
                    "xi": fold.xi,
                    "offset": report::rational(&fold.offset),
                    "max_degree": series.cap,
                    "coefficients": series.coefficients,
                    "critical_faces": faces,
                }),
            )))
        }
        Command::Render {
            input,
            out,
            lattice,
        } => {
            let (name, t) = load(&input)?;
            if t.dim() != 2 {
                return Err(semantic(
                    format!(
                        "render draws 2-dimensional templates, got dimension {}",
                        t.dim()
                    ),
                    None,
                ));
            }
            let q = if lattice {
                Some(invariants::quantize(&t).map_err(|e| semantic(e, None))?)
            } else {
                None
            };
            let svg = render::render(&t, q.as_ref());
            match out {
                None => Ok(Output::Text(svg)),
                Some(path) => {
                    fs::write(&path, &svg)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Ok(Output::Json(report::envelope(
                        "render",
                        &name,
                        "ok",
                        json!({ "out": path.display().to_string(), "bytes": svg.len() }),
                    )))
                }
            }
        }
        Command::Example { name } => match gallery::named(&name) {
            Some(t) => Ok(Output::Text(
                TemplateDocument::from_template(&t).to_json() + "\n",
            )),
            None => Err(Failure::Usage(format!(
                "unknown example '{name}'; available: {}",
                gallery::NAMES.join(", ")
            ))),
        },
    }
}

// A closed pipe on stdout is not an error worth reporting.
fn emit(s: &str) {
    let _ = io::stdout().lock().write_all(s.as_bytes());
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("report serializes") + "\n"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Semantic { message, report }) => {
            if let Some(r) = report {
                print_json(&r);
            }
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
