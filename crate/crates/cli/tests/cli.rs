use std::process::{Command, Output};

use serde_json::Value;

fn ckgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ckgeom")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = ckgeom(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_minkowskian() {
    let v = json(&["classify", "--k1", "0", "--k2", "-1"]);
    assert_eq!(v["schema"], 1);
    let row = &v["results"][0];
    assert_eq!(row["name"], "Minkowskian");
    assert_eq!(row["group"], "ISO(1,1)");
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
}

#[test]
fn default_grid_has_nine_pairs() {
    let v = json(&["classify"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 9);
    assert_eq!(v["results"][0]["name"], "Spherical");
}

#[test]
fn sphere_phs_bracket_is_z_tan() {
    let v = json(&["phs", "--k1", "1", "--k2", "1", "--z", "0.1", "--a2", "0.5"]);
    let row = &v["results"][0];
    let expected = 0.1 * 0.5f64.tan();
    assert!((row["a1_a2"].as_f64().unwrap() - expected).abs() < 1e-15);
    assert!((row["a1_a2_numeric"].as_f64().unwrap() - expected).abs() < 1e-6);
}

#[test]
fn phs_pole_is_a_row_error_not_a_failure() {
    // tan has a pole at a2 = π/2 on the sphere
    let v = json(&["phs", "--k1", "1", "--k2", "1", "--a2", "1.5707963267948966"]);
    assert_eq!(v["passed"], true);
    let row = &v["results"][0];
    assert!(row["error"].as_str().unwrap().contains("pole"), "{row}");
    assert!(row.get("a1_a2").is_none());
}

#[test]
fn tightened_tolerance_exits_1() {
    let out = ckgeom(&["--tol-sklyanin-oracle", "1e-30", "sklyanin"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL sklyanin-oracle"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["failures"][0], "sklyanin-oracle");
}

#[test]
fn tolerance_with_equals_sign() {
    let out = ckgeom(&["sklyanin", "--tol-sklyanin-oracle=1e-30"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["--tol-no-such-check", "1e-3", "classify"][..],
        &["--tol-sklyanin-oracle", "-1", "sklyanin"],
        &["--tol-sklyanin-oracle", "abc", "sklyanin"],
        &["--k1", "1", "--k1", "0", "--k2", "1", "classify"],
        &["--k1", "1", "--k2", "1", "--grid", "normalized9", "classify"],
        &["--samples", "0", "sweep-all"],
        &["export-geodesics"],
        &["no-such-command"],
        &["convert", "--from", "parallel-i", "--to", "polar", "--coords", "1,x"],
    ] {
        assert_eq!(ckgeom(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(ckgeom(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_has_sorted_header_and_lf_endings() {
    let out = ckgeom(&["--format", "csv", "classify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mut sorted = header.clone();
    sorted.sort();
    assert_eq!(header, sorted);
    assert!(header.contains(&"name"));
    assert_eq!(lines.count(), 9);
}

#[test]
fn convert_round_trips_through_ambient() {
    let v = json(&["convert", "--k1", "1", "--k2", "1", "--from", "parallel-i", "--to", "polar", "--coords", "0.3,0.4"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "geometry-chart-roundtrip"));
}

#[test]
fn every_command_succeeds_on_the_default_grid() {
    for cmd in [
        &["bracket"][..],
        &["metric", "--coords", "0.2,0.1"],
        &["curvature", "--coords", "0.2,0.1"],
        &["duality"],
        &["duality", "--map", "D2"],
        &["bialgebra"],
        &["bialgebra", "--kind", "second"],
        &["ybe"],
        &["ybe", "--kind", "second"],
        &["sklyanin"],
        &["coproduct", "--generator", "J12"],
    ] {
        let v = json(cmd);
        assert_eq!(v["passed"], true, "{cmd:?}");
    }
}

#[test]
fn export_geodesics_for_a_single_pair() {
    let v = json(&["export-geodesics", "--k1", "0", "--k2", "1", "--lines", "1", "--n", "3"]);
    let rows = v["results"].as_array().unwrap();
    assert!(!rows.is_empty());
    // the Euclidean plane has straight lines in Beltrami coordinates too
    assert!(rows.iter().all(|r| r["status"] == "ok"));
}

#[test]
fn sweep_all_is_reproducible() {
    let a = ckgeom(&["sweep-all", "--samples", "3", "--seed", "7"]);
    let b = ckgeom(&["sweep-all", "--samples", "3", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn out_writes_a_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("classify.json");
    let _ = std::fs::remove_file(&path);
    let out = ckgeom(&["classify", "--k1", "1", "--k2", "-1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"][0]["k2"], -1.0);
}
