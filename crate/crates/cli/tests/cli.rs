use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_origami"))
}

fn template(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("templates")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_on(cmd: &str, name: &str, extra: &[&str]) -> Output {
    let path = template(name);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_s4_succeeds() {
    let out = run_on("validate", "s4", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "valid");
}

#[test]
fn invalid_template_exits_two() {
    let doc = r#"{"dimension": 2, "polytopes": [
        {"halfspaces": [{"normal": [-1, 0], "offset": 0}, {"normal": [0, -1], "offset": 0}, {"normal": [1, 2], "offset": 2}]}]}"#;
    let mut child = bin()
        .arg("validate")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["verdict"], "invalid");
    assert_eq!(v["input"], "-");
    // commands that need a valid template refuse it too
    let mut child = bin()
        .args(["quantize", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc.as_bytes())
        .unwrap();
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(2));
}

#[test]
fn orientation_verdicts() {
    let out = run_on("orient", "s4", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"]["signs"], serde_json::json!([1, -1]));
    let out = run_on("orient", "rp4", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["data"]["witness"]["kind"], "single");
    let out = run_on("orient", "three-cycle", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["data"]["witness"]["kind"], "odd-cycle");
}

#[test]
fn quantize_s4_is_zero() {
    let out = run_on("quantize", "s4", &["--points"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["virtual_dimension"], 0);
    let points = v["data"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 6);
    assert!(points.iter().all(|p| p["multiplicity"] == 0));
}

#[test]
fn dh_methods_agree() {
    for method in ["polytopes", "cones"] {
        let out = run_on(
            "dh",
            "unit-square",
            &["--point", "1/3,2/3", "--method", method],
        );
        assert_eq!(out.status.code(), Some(0), "{method}");
        assert_eq!(json(&out)["data"]["density"], 1);
    }
    let out = run_on("dh", "unit-square", &["--point", "1,1/2"]);
    assert_eq!(json(&out)["data"]["generic"], false);
    let out = run_on(
        "dh",
        "unit-square",
        &["--point", "1/2", "--method", "polytopes"],
    );
    assert_eq!(out.status.code(), Some(1));
    let out = run_on(
        "dh",
        "unit-square",
        &["--point", "1/2,1/2", "--method", "nope"],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn volume_of_hirzebruch_pair() {
    let out = run_on("volume", "hirzebruch-pair", &[]);
    assert_eq!(json(&out)["data"]["signed_volume"], "-1");
}

#[test]
fn cones_report_is_deterministic() {
    let a = run_on(
        "cones",
        "hirzebruch-pair",
        &["--samples", "60", "--seed", "5"],
    );
    let b = run_on(
        "cones",
        "hirzebruch-pair",
        &["--samples", "60", "--seed", "5"],
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["data"]["disagreements"], 0);
    assert_eq!(v["data"]["samples"], 60);
    let out = run_on("cones", "unit-square", &["--v", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cohomology_series() {
    let out = run_on("cohomology", "s4", &["--max-degree", "8"]);
    assert_eq!(
        json(&out)["data"]["coefficients"],
        serde_json::json!([1, 0, 2, 0, 4, 0, 6, 0, 8])
    );
    let out = run_on("cohomology", "sphere-1d", &["--max-degree", "8"]);
    assert_eq!(
        json(&out)["data"]["coefficients"],
        serde_json::json!([1, 0, 2, 0, 2, 0, 2, 0, 2])
    );
    assert_eq!(
        run_on("cohomology", "s4", &["--max-degree", "7"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run_on("cohomology", "rp4", &[]).status.code(), Some(2));
}

#[test]
fn classify_sphere() {
    let out = run_on("classify", "sphere-1d", &[]);
    let v = json(&out);
    assert_eq!(v["data"]["family"], "sphere");
    assert_eq!(v["data"]["fixed_points"], 2);
    assert_eq!(run_on("classify", "s4", &[]).status.code(), Some(2));
}

#[test]
fn render_writes_svg() {
    let dir = std::env::temp_dir().join(format!("origami-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.svg");
    let out = run_on(
        "render",
        "hirzebruch-pair",
        &["--out", path.to_str().unwrap(), "--lattice"],
    );
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polygon").count(), 2);
    let again = run_on("render", "hirzebruch-pair", &["--lattice"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), svg);
    assert_eq!(run_on("render", "sphere-1d", &[]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn examples_match_shipped_templates() {
    for name in [
        "s4",
        "rp4",
        "hirzebruch-pair",
        "square-of-four",
        "three-cycle",
        "sphere-1d",
    ] {
        let out = run(&["example", name]);
        assert_eq!(out.status.code(), Some(0));
        let shipped = std::fs::read(template(name)).unwrap();
        assert_eq!(out.stdout, shipped, "{name}");
    }
    assert_eq!(run(&["example", "nope"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(
        run(&["validate", "/nonexistent/file.json"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let mut child = bin()
        .arg("validate")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"{\"dimension\": 2,\n \"polytopes\": [}")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
