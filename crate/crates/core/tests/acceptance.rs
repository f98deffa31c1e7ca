//! Acceptance criteria, one PASS/FAIL line per criterion on stderr.

use std::f64::consts::FRAC_1_SQRT_2;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mzvis_core::detection::{click_probability, DetectorSpec};
use mzvis_core::exec::Exec;
use mzvis_core::fock::{LabeledMode, Path, PureState};
use mzvis_core::optics::{beam_splitter, loss, BeamSplitterSpec};
use mzvis_core::oracle::{optimal_tap_ratio, optimize_numeric, v_closed_form, v_max};
use mzvis_core::scenarios::{
    hom_coincidence, hom_dip_visibility, mz_objective, mz_visibility_with, n_noise_scan, simple_model,
    simple_model_optimal, simple_model_state, MzParams, Schedule, SimpleCase,
};
use mzvis_core::sweep::{evaluate_all, linspace, mz_sweep, SweepOptions, SweepParam};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(name: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    if (got - want).abs() <= tol && got.is_finite() {
        Ok(())
    } else {
        Err(format!("{name}: got {got:.12}, want {want:.12} ± {tol:e}"))
    }
}

fn pairs(seed: u64, n: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| (rng.random_range(0.05..=1.0), rng.random_range(0.02..0.98)))
        .collect()
}

fn ac1() -> Outcome {
    let state = simple_model_state(SimpleCase::Distinguishable, 0.0).map_err(|e| e.to_string())?;
    let mut w: Vec<f64> = state.branches().iter().map(|(w, _)| *w).collect();
    w.sort_by(|a, b| b.total_cmp(a));
    if w.len() != 2 {
        return Err(format!("expected 2 branches, got {}", w.len()));
    }
    within("weight", w[0], 2.0 / 3.0, 1e-12)?;
    within("weight", w[1], 1.0 / 3.0, 1e-12)?;
    let v = simple_model(SimpleCase::Distinguishable, 1.0)
        .map_err(|e| e.to_string())?
        .visibility;
    within("V", v, 2.0 / 3.0, 1e-9)?;
    Ok(format!("weights {:.6}/{:.6}, V = {v:.9}", w[0], w[1]))
}

fn ac2() -> Outcome {
    let opt = simple_model_optimal(SimpleCase::Distinguishable).map_err(|e| e.to_string())?;
    within("eta_b*", opt.eta_b, 0.5, 1e-4)?;
    within("V", opt.result.visibility, FRAC_1_SQRT_2, 1e-9)?;
    Ok(format!("eta_b* = {:.6}, V = {:.9}", opt.eta_b, opt.result.visibility))
}

fn ac3() -> Outcome {
    let v = simple_model(SimpleCase::Indistinguishable, 0.25)
        .map_err(|e| e.to_string())?
        .visibility;
    within("V", v, 1.0, 1e-9)?;
    Ok(format!("V = {v:.9}"))
}

fn random_pairs_at(p: f64, t_r: f64, want: f64, seed: u64) -> Outcome {
    let records: Vec<MzParams> = pairs(seed, 20)
        .into_iter()
        .map(|(eta_b, t)| MzParams::balanced(p, eta_b, t, t_r).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let rows = evaluate_all(&records, 256, Exec::default()).map_err(|e| e.to_string())?;
    let worst = rows.iter().map(|r| (r.v_sim - want).abs()).fold(0.0, f64::max);
    for r in &rows {
        within("V", r.v_sim, want, 1e-9)?;
    }
    Ok(format!("20 pairs, max |V - {want:.6}| = {worst:.2e}"))
}

fn ac4() -> Outcome {
    random_pairs_at(1.0, 0.75, 1.0, 4)
}

fn ac5() -> Outcome {
    random_pairs_at(0.0, 0.5, FRAC_1_SQRT_2, 5)
}

fn ac6() -> Outcome {
    let (eta_b, t) = (0.9, 0.6);
    let mut lines = Vec::new();
    for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let tr_star = optimal_tap_ratio(p).map_err(|e| e.to_string())?;
        let params = MzParams::balanced(p, eta_b, t, tr_star).map_err(|e| e.to_string())?;
        let v_sim = mz_visibility_with(&params, 256).map_err(|e| e.to_string())?.visibility;
        let want = ((1.0 + p) / 2.0).sqrt();
        within("V(opt)", v_sim, want, 1e-9)?;
        within("V_max", v_max(p).map_err(|e| e.to_string())?, want, 1e-12)?;

        let closed = |eta_a: f64, t_r: f64| v_closed_form(p, eta_a, eta_b, t, t_r).unwrap_or(f64::NAN);
        let num = optimize_numeric(p, eta_b, t, closed, Exec::default()).map_err(|e| e.to_string())?;
        within("T_R* (closed form)", num.t_r_star, tr_star, 1e-3)?;
        within("V* (closed form)", num.v_max, want, 1e-6)?;
        lines.push(format!("p={p}: T_R*={:.4}", num.t_r_star));
    }

    let p = 0.5;
    let num =
        optimize_numeric(p, eta_b, t, mz_objective(p, eta_b, t, 16), Exec::default()).map_err(|e| e.to_string())?;
    within("T_R* (simulator)", num.t_r_star, 2.0 / 3.0, 1e-3)?;
    within("V* (simulator)", num.v_max, 0.75f64.sqrt(), 1e-6)?;
    lines.push(format!("simulator p=0.5: T_R*={:.4} V*={:.7}", num.t_r_star, num.v_max));
    Ok(lines.join(", "))
}

fn ac7() -> Outcome {
    let values = linspace(0.05, 0.95, 19).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (p, t_r, want) in [(0.0, 0.5, FRAC_1_SQRT_2), (1.0, 0.75, 1.0)] {
        let base = MzParams::balanced(p, 1.0, 0.5, t_r).map_err(|e| e.to_string())?;
        let rows = mz_sweep(base, SweepParam::T, &values, SweepOptions::default()).map_err(|e| e.to_string())?;
        if rows.len() != 19 {
            return Err(format!("expected 19 rows, got {}", rows.len()));
        }
        let hi = rows.iter().map(|r| r.v_sim).fold(f64::MIN, f64::max);
        let lo = rows.iter().map(|r| r.v_sim).fold(f64::MAX, f64::min);
        within("spread", hi - lo, 0.0, 1e-9)?;
        for r in &rows {
            within("V", r.v_sim, want, 1e-9)?;
        }
        out.push(format!("p={p}: V={lo:.9} spread {:.1e}", hi - lo));
    }
    Ok(out.join(", "))
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for n in 1..=5 {
        let sim = n_noise_scan(n, Schedule::Simultaneous).map_err(|e| e.to_string())?;
        within(
            &format!("simultaneous N={n}"),
            sim.visibility,
            1.0 / ((n + 1) as f64).sqrt(),
            1e-6,
        )?;
        let seq = n_noise_scan(n, Schedule::Sequential).map_err(|e| e.to_string())?;
        within(
            &format!("sequential N={n}"),
            seq.visibility,
            FRAC_1_SQRT_2.powi(n as i32),
            1e-6,
        )?;
        out.push(format!("{:.4}/{:.4}", sim.visibility, seq.visibility));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "N=1..5 simultaneous/sequential {} in {elapsed:.2?}",
        out.join(" ")
    ))
}

fn ac9() -> Outcome {
    let c = hom_coincidence(1.0, 0.5).map_err(|e| e.to_string())?;
    within("coincidence", c, 0.0, 1e-12)?;
    for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let v = hom_dip_visibility(p, 0.5).map_err(|e| e.to_string())?;
        within(&format!("dip p={p}"), v, p, 1e-9)?;
    }
    Ok(format!("P_c(p=1) = {c:.1e}, dip visibility = p"))
}

/// Unitarity, number conservation, detection completeness and oracle
/// equivalence on seeded random inputs.
fn ac10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let modes = [
        LabeledMode::signal(Path::A),
        LabeledMode::signal(Path::B),
        LabeledMode::noise(Path::A, 0),
        LabeledMode::noise(Path::B, 0),
    ];
    let kets: Vec<Vec<u8>> = (0..81u32)
        .map(|k| (0..4).map(|d| ((k / 3u32.pow(d)) % 3) as u8).collect::<Vec<u8>>())
        .filter(|o| o.iter().map(|&x| u32::from(x)).sum::<u32>() <= 2)
        .collect();
    for _ in 0..200 {
        let terms = kets.iter().map(|o| {
            let re: f64 = rng.random_range(-1.0..1.0);
            let im: f64 = rng.random_range(-1.0..1.0);
            (o.clone(), num_complex::Complex64::new(re, im))
        });
        let (s, _) = PureState::from_terms(modes, terms)
            .and_then(|s| s.normalize())
            .map_err(|e| e.to_string())?;
        let t: f64 = rng.random_range(0.0..=1.0);
        let out = beam_splitter(&s, &BeamSplitterSpec::new(Path::A, Path::B, t).unwrap()).map_err(|e| e.to_string())?;
        within("unitarity", out.norm_sq(), 1.0, 1e-12)?;
        if out.photon_numbers() != s.photon_numbers() {
            return Err("photon number changed".into());
        }
        let lossy = loss(&out, Path::B, rng.random_range(0.0..=1.0)).map_err(|e| e.to_string())?;
        within("loss unitarity", lossy.norm_sq(), 1.0, 1e-12)?;
        let (a, b) = (DetectorSpec::on(Path::A), DetectorSpec::on(Path::B));
        let total: f64 = [
            click_probability(&lossy, &[a, b], &[]),
            click_probability(&lossy, &[a], &[b]),
            click_probability(&lossy, &[b], &[a]),
            click_probability(&lossy, &[], &[a, b]),
        ]
        .into_iter()
        .map(|r| r.unwrap())
        .sum();
        within("completeness", total, 1.0, 1e-12)?;
    }

    let records: Vec<MzParams> = (0..200)
        .map(|_| {
            MzParams::new(
                rng.random_range(0.05..=1.0),
                rng.random_range(0.05..=1.0),
                rng.random_range(0.02..=1.0),
                rng.random_range(0.02..=1.0),
                rng.random_range(0.02..0.98),
                rng.random_range(0.0..0.98),
                rng.random_range(0.0..=1.0),
            )
            .unwrap()
        })
        .collect();
    let rows = evaluate_all(&records, 256, Exec::default()).map_err(|e| e.to_string())?;
    let worst = rows.iter().map(|r| r.abs_err()).fold(0.0, f64::max);
    within("oracle equivalence", worst, 0.0, 1e-9)?;

    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "200 random states and 200 random records, max |V_sim - V| = {worst:.1e}, {elapsed:.2?}"
    ))
}

/// Bypasses the test harness capture so the lines show up in every run.
fn report(line: &str) {
    let _ = writeln!(std::io::stderr().lock(), "{line}");
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("AC1 simple model, distinguishable noise", ac1),
        ("AC2 optimal attenuation", ac2),
        ("AC3 simple model, indistinguishable noise", ac3),
        ("AC4 full interferometer, p = 1", ac4),
        ("AC5 full interferometer, p = 0", ac5),
        ("AC6 optimum over p", ac6),
        ("AC7 flat T sweep", ac7),
        ("AC8 N-noise scaling", ac8),
        ("AC9 two-photon interference", ac9),
        ("AC10 invariants", ac10),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(msg) => report(&format!("PASS {name}: {msg}")),
            Err(msg) => {
                report(&format!("FAIL {name}: {msg}"));
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
