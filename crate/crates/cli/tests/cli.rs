use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lw")).args(args).output().expect("run lw")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn geodesic_profile_has_zero_residual() {
    let out = lw(&["elastica", "--family", "geodesic"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["el_residual_max"].as_f64(), Some(0.0));
}

#[test]
fn cn_profile_in_anti_de_sitter() {
    let out = lw(&["elastica", "--family", "cn", "--C", "1", "--eps2", "1", "--model", "ads-a1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["el_residual_max"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["profile"]["eps2"].as_f64(), Some(1.0));
}

#[test]
fn c_near_constant_solution_is_rejected() {
    let out = lw(&["elastica", "--family", "cn", "--C", "1.4142135", "--eps2", "1"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("constant solution"));
}

#[test]
fn poles_in_window_fail_unless_allowed() {
    let out = lw(&["elastica", "--C", "0.5", "--span=-5,5"]);
    assert_eq!(code(&out), 2);
    assert!(!json(&out)["excluded"]["poles"].as_array().unwrap().is_empty());
    let out = lw(&["elastica", "--C", "0.5", "--span=-5,5", "--allow-poles"]);
    let v = json(&out);
    assert_ne!(v["termination"], "Completed");
    assert!(v["samples"].as_u64().unwrap() > 1);
}

#[test]
fn elastica_csv_and_json_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("profile.csv");
    let report = dir.path().join("report.json");
    let out = lw(&["elastica", "--span=-0.5,0.5", "--csv", csv.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let mut rdr = csv::Reader::from_path(&csv).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["s", "x", "y", "tx", "ty", "kappa"]);
    let rows = rdr.records().count();
    let v: Value = serde_json::from_slice(&fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["samples"].as_u64(), Some(rows as u64));
}

#[test]
fn surface_verdicts() {
    let out = lw(&["surface", "--preset", "hyperboloid"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "SOLUTION");
    assert!(v["energies"]["residual_field_max"].as_f64().unwrap() < 1e-4);

    let out = lw(&["surface", "--preset", "cylinder", "--r", "1"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"], "NOT-SOLUTION");

    let out = lw(&["surface", "--preset", "plane"]);
    assert_eq!(code(&out), 0);
    let e = &json(&out)["energies"];
    for key in ["sigma", "willmore_area_term", "willmore_boundary_term", "willmore"] {
        assert!(e[key].as_f64().unwrap().abs() < 1e-12, "{key}");
    }
}

#[test]
fn surface_touching_the_axis_is_degenerate() {
    let out = lw(&["surface", "--preset", "hyperboloid", "--s-range=-0.5,0.5", "--hs", "0.25"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn surface_obj_export() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("s.obj");
    let out = lw(&["surface", "--preset", "plane", "--hs", "0.25", "--ht", "0.25", "--obj", obj.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 25);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 16);
    assert!(text.lines().filter(|l| l.starts_with("f ")).all(|l| l.split_whitespace().count() == 5));
}

#[test]
fn glue_examples() {
    let out = lw(&["glue", "--phi", "sqrt(1+u)", "--delta", "0.9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let hyp = &v["classification"]["class"]["OneSheetHyperboloid"];
    assert!((hyp["radius"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert_eq!(v["pieces"].as_array().unwrap().len(), 4);

    let out = lw(&["glue", "--phi", "-u"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["classification"]["class"], "NotASolution");

    let out = lw(&["glue", "--falpha", "u", "--fbeta", "u^2", "--check-only"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["gluing"]["lg1"], false);
    assert!(v["gluing"]["diagnostics"][0].as_str().unwrap().contains("perpendicular"));
}

#[test]
fn glue_obj_has_region_groups() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("g.obj");
    let out = lw(&["glue", "--phi", "sqrt(1+u)", "--delta", "0.9", "--ns", "6", "--nt", "5", "--obj", obj.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&obj).unwrap();
    for g in ["g R+", "g R-", "g Q+", "g Q-", "g patch"] {
        assert!(text.contains(g), "{g}");
    }
}

#[test]
fn steep_seed_is_degenerate() {
    let out = lw(&["glue", "--phi", "2*u", "--delta", "0.9"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not time-like"));
}

#[test]
fn gauss_bonnet_commands() {
    let out = lw(&["gaussbonnet", "--surface", "hyperboloid", "--polygon", "-0.3,-0.2;0.25,-0.3;0.3,0.3;-0.2,0.25", "--sides", "geodesic", "--energy"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-3);
    assert!(v["intKappa"].as_f64().unwrap().abs() < 1e-9);

    let out = lw(&["gaussbonnet", "--surface", "hyperbolic-plane", "--rect=-0.5,0.5,-0.5,0.5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["lorentzian"], false);

    // clockwise vertex order
    let out = lw(&["gaussbonnet", "--surface", "plane", "--polygon", "0,0;0,1;1,1;1,0"]);
    assert_eq!(code(&out), 1);
    // a light-like side
    let out = lw(&["gaussbonnet", "--surface", "plane", "--polygon", "0,0;1,1;0,1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn catalog_has_seven_rows() {
    let out = lw(&["catalog"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().any(|r| r["axis"] == "A2"
        && r["axis_character"] == "space-like"
        && r["orbits"] == "hyperbolas"
        && r["surface"] == "Lorentzian"
        && r["model"]["kind"] == "HyperbolicQ"));
}

#[test]
fn verify_all_passes() {
    let out = lw(&["verify-all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["surface", "--preset", "hyperboloid"];
    let a = lw(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_lw")).args(args).env("LW_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("\"threshold\": 1.0000000000000000e-4"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# cn profile\nfamily=cn\nC=0.5\nspan=-0.5,0.5\nmodel=ads-a1\n").unwrap();
    let out = lw(&["--config", cfg.to_str().unwrap(), "elastica"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["profile"]["c"].as_f64(), Some(0.5));
    let out = lw(&["elastica", "--config", cfg.to_str().unwrap(), "--C", "0.7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["profile"]["c"].as_f64(), Some(0.7));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&lw(&["surface"])), 1);
    assert_eq!(code(&lw(&["elastica", "--bogus"])), 1);
    assert_eq!(code(&lw(&["glue"])), 1);
    assert_eq!(code(&lw(&["elastica", "--step", "0"])), 1);
    let out = Command::new(env!("CARGO_BIN_EXE_lw")).arg("catalog").env("LW_THREADS", "zero").output().unwrap();
    assert_eq!(code(&out), 1);
    assert_eq!(code(&lw(&["--help"])), 0);
}
