use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arc-ic"))
}

fn write_cone(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hilbert_quadrant() {
    let cone = write_cone(r#"{"rank": 2, "generators": [[1,0],[0,1]]}"#);
    let out = bin().args(["hilbert", "--cone"]).arg(cone.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["hilbert_basis"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(v["status"], "pass");
}

#[test]
fn toric_single_value_and_series() {
    let cone = write_cone(r#"{"rank": 2, "generators": [[1,0],[1,2]]}"#);
    let out = bin()
        .args(["toric", "--cone"])
        .arg(cone.path())
        .args(["--lambda", "2,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["m_lambda"], serde_json::json!({"0": 2}));

    let out = bin()
        .args(["toric", "--cone"])
        .arg(cone.path())
        .args(["--bound", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["terms"].as_array().unwrap().iter().any(|t| {
        t["lambda"] == serde_json::json!([2, 2]) && t["coeff"] == serde_json::json!({"0": 2})
    }));
}

#[test]
fn bad_inputs_exit_2() {
    let cone = write_cone(r#"{"rank": -1, "generators": []}"#);
    let out = bin().args(["toric", "--cone"]).arg(cone.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["path"], "/rank");

    let cone = write_cone("not json");
    let out = bin().args(["toric", "--cone"]).arg(cone.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Rank mismatch inside a generator row.
    let cone = write_cone(r#"{"rank": 2, "generators": [[1,0,0]]}"#);
    let out = bin().args(["toric", "--cone"]).arg(cone.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["error"]["path"], "/generators/0");

    // Unknown subcommand is a usage error.
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output_under_input_permutation() {
    let a = write_cone(r#"{"rank": 2, "generators": [[1,0],[1,2],[1,0]]}"#);
    let b = write_cone(r#"{"generators": [[1,2],[1,0]], "rank": 2}"#);
    let run = |p: &std::path::Path| {
        bin()
            .args(["toric", "--cone"])
            .arg(p)
            .args(["--bound", "6"])
            .output()
            .unwrap()
            .stdout
    };
    let out_a = run(a.path());
    assert_eq!(out_a, run(a.path()));
    assert_eq!(out_a, run(b.path()));
}

#[test]
fn strata_reports_fiber_and_primitives() {
    let cone = write_cone(r#"{"rank": 2, "generators": [[1,0],[1,2]]}"#);
    let out = bin()
        .args(["strata", "--cone"])
        .arg(cone.path())
        .args(["--lambda", "2,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["fiber"].as_array().unwrap().len(), 3);
    let primitive: Vec<bool> = v["primitive"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_bool().unwrap())
        .collect();
    assert_eq!(primitive.iter().filter(|&&b| b).count(), 2);
}

#[test]
fn global_identity_passes() {
    let cone = write_cone(r#"{"rank": 1, "generators": [[1]]}"#);
    let out = bin()
        .args(["global", "--cone"])
        .arg(cone.path())
        .args(["--q", "3", "--bound", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["status"], "pass");
}

#[test]
fn lmonoid_values_and_conventions() {
    let out = bin()
        .args(["lmonoid", "--n-gl", "2", "--mu", "2,1", "--q-numeric", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ic"], serde_json::json!({"0": 1}));
    assert_eq!(v["ic_at_q"], "1");

    let plus = bin()
        .args(["lmonoid", "--n-gl", "2", "--mu", "2,0"])
        .output()
        .unwrap();
    let minus = bin()
        .args(["lmonoid", "--n-gl", "2", "--mu", "2,0", "--convention", "minus"])
        .output()
        .unwrap();
    assert_eq!(stdout_json(&plus)["psi"], serde_json::json!({"-2": 1}));
    assert_eq!(stdout_json(&minus)["psi"], serde_json::json!({"2": 1}));

    // Negative entries are outside the monoid: input error.
    let out = bin()
        .args(["lmonoid", "--n-gl", "2", "--mu", "0,-1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["lmonoid", "--n-gl", "2", "--mu", "1,0", "--rep", "adjoint"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
