//! End-to-end tests of the `rank1` binary: file handling, exit codes,
//! report determinism.

use rank1_core::family::{family_tensor, FamilyParams};
use rank1_core::io::write_tensor;
use rank1_core::tensor::Tensor;
use std::path::Path;
use std::process::{Command, Output};

fn rank1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_cube(path: &Path) {
    let e1 = [1.0, 0.0];
    let t = Tensor::decomposable(&[&e1, &e1, &e1]).unwrap().scaled(2.0);
    write_tensor(path, &t).unwrap();
}

#[test]
fn approx_prints_the_optimal_value() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("cube.txt");
    write_cube(&input);
    let out = rank1(&[
        "approx",
        "--in",
        input.to_str().unwrap(),
        "--restarts",
        "32",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("value      2.000000000000"), "{text}");
}

#[test]
fn census_of_the_family_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("family0.txt");
    write_tensor(
        &input,
        &family_tensor(&FamilyParams {
            theta: 0.0,
            scale: 1.0,
        }),
    )
    .unwrap();
    let json_path = dir.path().join("census.json");
    let out = rank1(&[
        "census",
        "--in",
        input.to_str().unwrap(),
        "--out",
        json_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("complex solutions 3"), "{text}");
    assert!(text.contains("+3 / -3"), "{text}");
    assert!(text.contains("[nongeneric]"), "{text}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["complex_count"], 3);
    assert_eq!(report["real_count_pos"], 3);
    assert_eq!(report["conclusive"], true);
    assert_eq!(report["distinct_critical_values"], false);
}

#[test]
fn symdecomp_of_the_mixed_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mixed.txt");
    let mut t = Tensor::zeros(&[2, 2, 2]);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                t.set(&[i, j, k], (i + j + 2) as f64);
            }
        }
    }
    write_tensor(&input, &t).unwrap();
    let out = rank1(&["symdecomp", "--in", input.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("blocks [[1,2],[3]]"));
}

#[test]
fn malformed_file_reports_line_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    std::fs::write(&input, "3\n2 2 2\n1 2 3 4 5 6 seven 8\n").unwrap();
    let out = rank1(&["approx", "--in", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn zero_tensor_is_numerical_degeneracy() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("zero.txt");
    write_tensor(&input, &Tensor::zeros(&[2, 2])).unwrap();
    let out = rank1(&["approx", "--in", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn census_on_a_matrix_is_unsupported() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("matrix.txt");
    write_tensor(
        &input,
        &Tensor::new(vec![2, 2], vec![1.0, 0.0, 0.0, 1.0]).unwrap(),
    )
    .unwrap();
    let out = rank1(&["census", "--in", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_lists_six_family_points() {
    let out = rank1(&["enum", "--theta", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows = text.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count();
    assert_eq!(rows, 6, "{text}");
}

#[test]
fn detect_family_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("family.txt");
    write_tensor(
        &input,
        &family_tensor(&FamilyParams {
            theta: 1.3,
            scale: 2.5,
        }),
    )
    .unwrap();
    let out = rank1(&["detect-family", "--in", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("theta 1.300000000000"), "{text}");
    assert!(text.contains("scale 2.500000000000"), "{text}");
}

#[test]
fn verify_reports_are_deterministic_up_to_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| -> serde_json::Value {
        let path = dir.path().join(name);
        let out = rank1(&[
            "verify",
            "--kind",
            "symmetric",
            "--n",
            "2",
            "--d",
            "3",
            "--samples",
            "15",
            "--seed",
            "42",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
    };
    let a = run("a.json");
    let b = run("b.json");
    assert_eq!(a["spec"], b["spec"]);
    assert_eq!(a["samples"], b["samples"]);
    assert_eq!(a["aggregate"], b["aggregate"]);
    assert_eq!(a["aggregate"]["pass_rate"], 1.0);
}

#[test]
fn verify_perturbation_on_the_family_converges_to_the_aligned_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pert.json");
    let out = rank1(&[
        "verify",
        "--kind",
        "perturbation",
        "--d",
        "3",
        "--theta",
        "0",
        "--seed",
        "5",
        "--restarts",
        "16",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let sample = &report["samples"][0];
    assert_eq!(sample["pass"], true);
    assert!((sample["value_symmetric"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(sample["limit_point_distance"].as_f64().unwrap() < 1e-2);
    assert_eq!(sample["gaps_monotone"], true);
}

#[test]
fn verify_symmetric_handles_higher_mode_dimension() {
    let out = rank1(&[
        "verify",
        "--kind",
        "symmetric",
        "--n",
        "3",
        "--d",
        "3",
        "--samples",
        "3",
        "--seed",
        "11",
        "--restarts",
        "16",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("3/3"));
}

#[test]
fn verify_symmetric_flags_the_family_as_nongeneric() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.json");
    let out = rank1(&[
        "verify",
        "--kind",
        "symmetric",
        "--n",
        "2",
        "--d",
        "3",
        "--theta",
        "0",
        "--seed",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let sample = &report["samples"][0];
    assert_eq!(sample["pass"], true);
    assert!(sample["gap"].as_f64().unwrap() <= 1e-9);
    assert!(sample["uniqueness_gap"].as_f64().unwrap() <= 1e-12);
    assert_eq!(sample["distinct_critical_values"], false);
}

#[test]
fn verify_partial_symmetry_passes_on_small_battery() {
    let out = rank1(&[
        "verify",
        "--kind",
        "partial-symmetry",
        "--samples",
        "10",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("10/10"));
}
