//! End-to-end tests of the `rea` binary: command surfaces, exit codes,
//! report determinism and the symmetry file round trip.

use std::process::{Command, Output};

fn rea(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rea"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classical_character_example() {
    let out = rea(&["spectral", "character", "--lambda", "1,0", "--k", "1", "--hat", "--q1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("2\n"), "{}", stdout(&out));
}

#[test]
fn character_exact_value() {
    // chi of sum mu_i at lambda = (0,0): q^-2 + 1
    let out = rea(&["spectral", "character", "--lambda", "0,0", "--k", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(q^2+1)/q^2"), "{}", stdout(&out));
}

#[test]
fn powersum_report_json_is_deterministic() {
    let args = ["--json", "spectral", "powersum", "--k", "3", "--m", "2"];
    let a = rea(&args);
    let b = rea(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical reports");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "rea-report/1");
    assert_eq!(v["outcome"], "pass");
    assert!(v["artifacts"]["polynomial"].is_string());
}

#[test]
fn central_ch_reports_centrality() {
    let out = rea(&[
        "--json", "central", "ch", "--variant", "re", "--element", "t1.t2", "--n", "3",
        "--degree", "4",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["artifacts"]["central"], true);
}

#[test]
fn cayley_hamilton_passes_for_default_symmetry() {
    let out = rea(&["central", "cayley-hamilton", "--variant", "re", "--degree", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn weights_worked_example() {
    let out = rea(&["--json", "weights", "--element", "t1.t2.t1", "--variant", "re", "--degree", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["artifacts"]["central"], true);
    assert_eq!(v["inputs"]["n"], 3);
    assert!(v["artifacts"]["e_basis"].is_string());
    assert!(v["artifacts"]["hc_image"].is_string());
}

#[test]
fn symmetry_build_and_load_round_trip() {
    let dir = std::env::temp_dir().join("rea-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("flip2.json");
    let out = rea(&[
        "symmetry", "build", "--kind", "flip", "--n", "2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    // birank of the loaded symmetry
    let out = rea(&["--load", path.to_str().unwrap(), "symmetry", "birank", "--kmax", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("[2, 1, 0]"), "{}", stdout(&out));
}

#[test]
fn superflip_build_needs_dimensions() {
    let out = rea(&["symmetry", "build", "--kind", "superflip"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rea(&["symmetry", "build", "--kind", "superflip", "--m", "1", "--k", "1"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn bad_input_exits_2() {
    let out = rea(&["spectral", "character", "--lambda", "0,1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2), "increasing partition rejected");
    let out = rea(&["central", "ch", "--variant", "re", "--element", "t9", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2), "generator out of range");
}

#[test]
fn degree_bound_exits_3() {
    let out = rea(&[
        "central", "ch", "--variant", "re", "--element", "t1.t2", "--n", "3", "--degree", "2",
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
}

#[test]
fn verify_subset_runs() {
    // full acceptance through the CLI; small bound keeps it quick
    let out = rea(&["verify", "all", "--n", "2", "--degree", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict: PASS"), "{text}");
    assert!(text.matches("PASS").count() >= 11, "{text}");
}
