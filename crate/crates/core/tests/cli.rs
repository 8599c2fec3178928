use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

fn dqho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqho")).args(args).env_remove("DQHO_OUTPUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Data rows of a CSV with a comment line and a header.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines().skip(2).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn verify_reports_misprinted_entries() {
    let o = dqho(&["verify"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = report
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "fail")
        .map(|e| e["identity"].as_str().unwrap())
        .collect();
    assert_eq!(
        failed,
        [
            "interaction algebra: [D, D†] = 8 H_I",
            "interaction algebra: [D†, D] = -8 H_I",
            "equations of motion: [H, A2] = 1/2 A1 + 1/2 A2",
        ]
    );
    assert!(stderr(&o).contains("3 failed"));
}

#[test]
fn verify_printed_convention_flags_doubled_spacing() {
    let o = dqho(&["verify", "--hamiltonian-convention", "printed"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let find = |needle: &str| {
        report.as_array().unwrap().iter().find(|e| e["identity"].as_str().unwrap().contains(needle)).cloned().unwrap()
    };
    assert_eq!(find("printed convention has eigenvalues {2(s-n)}")["status"], "pass");
    assert_eq!(find("eig H = {0..s}, s = 0..200, printed")["status"], "fail");
}

#[test]
fn verify_self_test_names_the_broken_identity() {
    let o = dqho(&["verify", "--self-test-corrupt"]);
    let err = stderr(&o);
    assert!(err.contains("FAIL  self-test: eig H = {0..s} after sign flip and magnitude change"));
    assert!(!err.contains("after one sign flip, s = 8  (residual"));
}

#[test]
fn spectrum_is_integers() {
    let o = dqho(&["spectrum", "--s", "20"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# dqho spectrum s=20 hamiltonian-convention=canonical\nn,eigenvalue\n"));
    let r = rows(&text);
    assert_eq!(r.len(), 21);
    for (k, row) in r.iter().enumerate() {
        assert!((row[1].parse::<f64>().unwrap() - k as f64).abs() < 1e-10);
    }
    let zero = rows(&stdout(&dqho(&["spectrum", "--s", "0"])));
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0][1].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn spectrum_at_s_200_is_fast() {
    let start = Instant::now();
    let o = dqho(&["spectrum", "--s", "200"]);
    assert!(o.status.success());
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn spectrum_of_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let h = dqho::repmat::hamiltonian(6);
    std::fs::write(&path, h.to_json().unwrap()).unwrap();
    let o = dqho(&["spectrum", "--matrix", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(rows(&stdout(&o)).len(), 7);
}

#[test]
fn wavefunction_level_structure() {
    let o = dqho(&["wavefunction", "--s", "20"]);
    assert!(o.status.success());
    let r = rows(&stdout(&o));
    assert_eq!(r.len(), 21 * 21);
    let level = |n: usize| -> Vec<f64> {
        r.iter().filter(|row| row[1] == n.to_string()).map(|row| row[4].parse().unwrap()).collect()
    };
    let ground = level(0);
    assert!(ground.iter().all(|&a| a > 0.0));
    let top = level(20);
    assert!(top.windows(2).all(|w| w[0] * w[1] < 0.0));
    for (a, b) in ground.iter().zip(&top) {
        assert!((a.abs() - b.abs()).abs() < 1e-12);
    }
    for row in &r {
        let n1: i64 = row[2].parse().unwrap();
        assert_eq!(row[3].parse::<i64>().unwrap(), 2 * n1 - 20);
    }
}

#[test]
fn wavefunction_rejects_bad_levels() {
    assert_eq!(dqho(&["wavefunction", "--s", "21", "--n", "1.5"]).status.code(), Some(2));
    assert_eq!(dqho(&["wavefunction", "--s", "3", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn wavefunction_appendix_order_reverses_rows() {
    let fwd = rows(&stdout(&dqho(&["wavefunction", "--s", "5", "--n", "2"])));
    let rev = rows(&stdout(&dqho(&["wavefunction", "--s", "5", "--n", "2", "--index-convention", "appendix-c"])));
    let back: Vec<_> = rev.into_iter().rev().collect();
    assert_eq!(fwd, back);
}

#[test]
fn coherent_output_is_deterministic() {
    let args = ["coherent", "--s", "30", "--beta", "0.2+0.1i", "--t-steps", "5"];
    let a = dqho(&args);
    let b = dqho(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().next().unwrap().contains("evolution=paper-phase"));
    assert_eq!(text.lines().nth(1).unwrap(), "t,beta_abs,beta_arg,s,n1,x,re_amp,im_amp,prob");
}

#[test]
fn coherent_summary_matches_closed_law() {
    let dir = tempfile::tempdir().unwrap();
    let sum = dir.path().join("summary.csv");
    let frames = dir.path().join("frames.csv");
    let o = dqho(&[
        "coherent",
        "--s",
        "100",
        "--beta",
        "i*pi/2",
        "--output",
        frames.to_str().unwrap(),
        "--summary",
        sum.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = rows(&std::fs::read_to_string(&sum).unwrap());
    assert_eq!(r.len(), 33);
    for row in &r {
        let closed: f64 = row[1].parse().unwrap();
        let oracle: f64 = row[2].parse().unwrap();
        assert!((closed - oracle).abs() <= 1e-8 * 100.0);
    }
    assert_eq!(rows(&std::fs::read_to_string(&frames).unwrap()).len(), 33 * 101);
}

#[test]
fn coherent_sweeps_coincide() {
    let t = rows(&stdout(&dqho(&["coherent", "--s", "100", "--beta", "i*pi/8"])));
    let b = rows(&stdout(&dqho(&["coherent", "--s", "100", "--sweep", "beta"])));
    assert_eq!(t.len(), b.len());
    for (x, y) in t.iter().zip(&b) {
        let px: f64 = x[8].parse().unwrap();
        let py: f64 = y[8].parse().unwrap();
        assert!((px.sqrt() - py.sqrt()).abs() < 1e-10);
    }
}

#[test]
fn coherent_zero_beta_is_static_ground_profile() {
    let r = rows(&stdout(&dqho(&["coherent", "--s", "10", "--beta", "0", "--t-steps", "4"])));
    let ground = dqho::states::ground_state(10);
    for row in &r {
        let n1: usize = row[4].parse().unwrap();
        let p: f64 = row[8].parse().unwrap();
        assert!((p - ground.amplitudes[n1].norm_sqr()).abs() < 1e-14);
    }
}

#[test]
fn coherent_requires_beta_for_time_sweep() {
    assert_eq!(dqho(&["coherent", "--s", "4"]).status.code(), Some(2));
    assert_eq!(dqho(&["coherent", "--s", "4", "--beta", "1+"]).status.code(), Some(2));
}

fn write_state(dir: &Path, text: &str) -> String {
    let p = dir.join("state.json");
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn scale_keeps_eigenstates_and_warns_on_loss() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_state(dir.path(), r#"{"s": 3, "basis": "energy", "amplitudes": [[0,0],[1,0],[0,0],[0,0]]}"#);
    let o = dqho(&["scale", "-i", &input, "--target-s", "4"]);
    assert!(o.status.success());
    let out: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["s"], 4);
    assert_eq!(out["amplitudes"][1][0], 1.0);

    let input = write_state(dir.path(), r#"{"s": 2, "basis": "energy", "amplitudes": [[0.6,0],[0,0],[0.8,0]]}"#);
    let o = dqho(&["scale", "-i", &input, "--target-s", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("lost norm = 6.4"));
    assert!(o.stdout.is_empty());
    let o = dqho(&["scale", "-i", &input, "--target-s", "1", "--force"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("lost norm = 6.4"));
}

#[test]
fn scale_modes_differ_on_superpositions() {
    let dir = tempfile::tempdir().unwrap();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let input = write_state(
        dir.path(),
        &format!(r#"{{"s": 3, "basis": "energy", "amplitudes": [[{r},0],[{r},0],[0,0],[0,0]]}}"#),
    );
    let ladder = stdout(&dqho(&["scale", "-i", &input, "--target-s", "4"]));
    let kept = stdout(&dqho(&["scale", "-i", &input, "--target-s", "4", "--mode", "amplitude-preserving"]));
    assert_ne!(ladder, kept);
}

#[test]
fn scale_position_input_round_trips_basis() {
    let dir = tempfile::tempdir().unwrap();
    let g = dqho::states::ground_state(3);
    let amps: Vec<String> = g.amplitudes.iter().map(|a| format!("[{},0]", a.re)).collect();
    let input =
        write_state(dir.path(), &format!(r#"{{"s": 3, "basis": "position", "amplitudes": [{}]}}"#, amps.join(",")));
    let o = dqho(&["scale", "-i", &input, "--target-s", "5"]);
    let out: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["basis"], "position");
    let want = dqho::states::ground_state(5);
    for (k, a) in want.amplitudes.iter().enumerate() {
        assert!((out["amplitudes"][k][0].as_f64().unwrap() - a.re).abs() < 1e-12);
    }
}

#[test]
fn dilate_b1_at_norm_bound_is_unitary() {
    let o = dqho(&["dilate", "--op", "B1", "--s", "16", "--format", "json"]);
    assert!(o.status.success());
    let m = dqho::repmat::RepMatrix::from_json(&stdout(&o)).unwrap();
    let eye = dqho::repmat::RepMatrix::identity(m.rows(), m.tag);
    assert!(m.adjoint().matmul(&m).unwrap().max_abs_diff(&eye) < 1e-12);
    assert!(stderr(&o).contains("unitarity residual"));
}

#[test]
fn dilate_rejects_small_alpha() {
    let o = dqho(&["dilate", "--op", "B1", "--s", "4", "--alpha", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a contraction"));
}

#[test]
fn dilate_zero_is_block_antidiagonal() {
    let o = dqho(&["dilate", "--op", "zero", "--s", "2"]);
    let m = dqho::repmat::RepMatrix::read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(m.rows(), 6);
    for i in 0..6 {
        for j in 0..6 {
            let want = if (i + 3 == j) || (j + 3 == i) { 1.0 } else { 0.0 };
            assert!((m.get(i, j).re - want).abs() < 1e-15);
        }
    }
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dqho"))
        .args(["spectrum", "--s", "4"])
        .env("DQHO_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(dir.path().join("spectrum_s4.csv").exists());
}
