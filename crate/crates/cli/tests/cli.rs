use std::process::{Command, Output};

use std::f64::consts::FRAC_1_SQRT_2;

use mzvis_cli::report::{read_csv, read_json, round_sig, Row};

fn mzvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzvis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn rows(out: &Output) -> Vec<Row> {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    read_csv(out.stdout.as_slice()).unwrap()
}

#[test]
fn t_sweep_is_flat_at_one_over_root_two() {
    let out = mzvis(&[
        "sweep", "--param", "t", "--from", "0.05", "--to", "0.95", "--steps", "19", "--p", "0", "--tr", "0.5",
    ]);
    let rows = rows(&out);
    assert_eq!(rows.len(), 19);
    for r in &rows {
        assert_eq!(r.v_sim, round_sig(FRAC_1_SQRT_2));
        assert_eq!(r.v_formula, round_sig(FRAC_1_SQRT_2));
        assert!(r.abs_err <= 1e-9);
        assert_eq!(r.eta_a, r.t);
    }
}

#[test]
fn nscale_table() {
    let rows = rows(&mzvis(&["nscale", "--max-n", "4", "--schedule", "simultaneous"]));
    let v: Vec<f64> = rows.iter().map(|r| r.v_sim).collect();
    assert_eq!(v.len(), 4);
    for (n, got) in (1..=4).zip(v) {
        let want = 1.0 / f64::from(n + 1).sqrt();
        assert!((got - want).abs() < 1e-6, "{got} vs {want}");
    }
}

#[test]
fn simple_distinguishable_scenario() {
    let rows = rows(&mzvis(&[
        "scenario",
        "--case",
        "simple-distinguishable",
        "--eta-b",
        "1.0",
    ]));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].v_sim, 0.666666667);
    assert_eq!(rows[0].t, None);
}

#[test]
fn optimize_recovers_tap_ratio() {
    for (objective, p, tr) in [("closed-form", "1", 0.75), ("simulator", "0.5", 2.0 / 3.0)] {
        let rows = rows(&mzvis(&["optimize", "--p", p, "--objective", objective]));
        assert!((rows[0].t_r.unwrap() - tr).abs() < 1e-3);
        assert!(rows[0].abs_err <= 1e-6);
    }
}

#[test]
fn hom_dip() {
    let rows = rows(&mzvis(&["hom", "--p", "1", "--t", "0.5"]));
    assert_eq!(rows[0].v_sim, 1.0);
    assert!(rows[0].success_prob.unwrap().abs() <= 1e-12);
}

#[test]
fn json_output_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let out = mzvis(&[
        "sweep",
        "--param",
        "tr",
        "--from",
        "0.1",
        "--to",
        "0.9",
        "--steps",
        "3",
        "--p",
        "0.5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let rows = read_json(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1].t_r, Some(0.5));
    let again: Vec<Row> = rows.iter().map(Row::rounded).collect();
    assert_eq!(rows, again);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    std::fs::write(
        &cfg,
        r#"{
            "param": "t",
            "range": { "start": 0.2, "stop": 0.8, "steps": 4 },
            "params": { "eta_s": 1, "eta_n": 1, "eta_a": 0.5, "eta_b": 0.9, "t": 0.5, "t_r": 0.75, "p": 1 }
        }"#,
    )
    .unwrap();
    let rows = rows(&mzvis(&["sweep", "--config", cfg.to_str().unwrap()]));
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.v_sim == 1.0));

    let rows = self::rows(&mzvis(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--steps",
        "2",
        "--p",
        "0",
    ]));
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.p == Some(0.0) && r.v_sim < 1.0));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["sweep", "--param", "t", "--from", "0", "--to", "0.5", "--steps", "3"][..],
        &["sweep", "--param", "t", "--from", "0.5", "--to", "1", "--steps", "3"],
        &["sweep", "--param", "t", "--from", "0.1", "--to", "0.5", "--steps", "1"],
        &[
            "sweep", "--param", "nope", "--from", "0.1", "--to", "0.5", "--steps", "3",
        ],
        &["hom", "--p", "1.5"],
        &["nscale", "--max-n", "9"],
        &["scenario", "--case", "simple-distinguishable", "--eta-b", "0"],
        &["hom", "--phase-steps", "4"],
        &["frobnicate"],
        &["scenario"],
    ] {
        let out = mzvis(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = mzvis(&["sweep", "--param", "t", "--from", "0", "--to", "0.5", "--steps", "3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("coincidence rate vanishes"));
}

#[test]
fn io_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.csv");
    assert_eq!(
        mzvis(&["hom", "--out", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let absent = dir.path().join("absent.json");
    assert_eq!(
        mzvis(&["sweep", "--config", absent.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn malformed_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"param": "t"}"#).unwrap();
    assert_eq!(
        mzvis(&["sweep", "--config", cfg.to_str().unwrap()]).status.code(),
        Some(2)
    );
}
