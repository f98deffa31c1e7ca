use mzvis_core::oracle::{
    hom_dip_visibility_closed_form, optimize_numeric, v_closed_form, v_dis_sequential, v_dis_simultaneous, v_max,
    v_simple_model,
};
use mzvis_core::scenarios::{
    hom_coincidence, hom_dip_visibility, mz_objective, mz_visibility_with, n_noise_scan, simple_model,
    simple_model_optimal, MzParams, Schedule, SimpleCase, SEARCH_PHASE_POINTS,
};
use mzvis_core::sweep::{linspace, mz_sweep, SweepOptions, SweepPoint};
use mzvis_core::Exec;

use crate::args::{
    Case, Cli, Command, Format, HomArgs, MzArgs, NscaleArgs, Objective, OptimizeArgs, OutputArgs, ScenarioArgs,
    ScheduleArg,
};
use crate::config::SweepConfig;
use crate::report::{emit_report, Row};
use crate::CliError;

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let out = &cli.output;
    if out.phase_steps < 8 {
        return Err(CliError::invalid(format!(
            "--phase-steps must be at least 8, got {}",
            out.phase_steps
        )));
    }
    let (rows, cfg_format, cfg_out) = match &cli.command {
        Command::Scenario(a) => (scenario(a, out)?, None, None),
        Command::Sweep(a) => {
            let cfg = SweepConfig::from_args(a)?;
            (sweep(&cfg, out)?, Some(cfg.format), cfg.out)
        }
        Command::Nscale(a) => (nscale(a)?, None, None),
        Command::Optimize(a) => (optimize(a, out)?, None, None),
        Command::Hom(a) => (hom(a)?, None, None),
    };
    let format = out.format.or(cfg_format).unwrap_or(Format::Csv);
    let path = out.out.clone().or(cfg_out);
    emit_report(&rows, format, path.as_deref())
}

fn exec(out: &OutputArgs) -> Exec {
    if out.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn mz_params(a: &MzArgs) -> Result<MzParams, CliError> {
    let eta_a = a.eta_a.unwrap_or(a.eta_b * a.t);
    let params = MzParams::new(a.eta_s, a.eta_n, eta_a, a.eta_b, a.t, a.t_r, a.p)?;
    params.validate_conditional()?;
    Ok(params)
}

fn mz_row(scenario: &str, pt: &SweepPoint) -> Row {
    Row {
        scenario: scenario.to_string(),
        p: Some(pt.params.p),
        t: Some(pt.params.t),
        t_r: Some(pt.params.t_r),
        eta_a: Some(pt.params.eta_a),
        eta_b: Some(pt.params.eta_b),
        v_sim: pt.v_sim,
        v_formula: pt.v_formula,
        abs_err: pt.abs_err(),
        success_prob: Some(pt.success_probability),
    }
}

fn scenario(a: &ScenarioArgs, out: &OutputArgs) -> Result<Vec<Row>, CliError> {
    let (case, name) = match a.case {
        Case::Mz => {
            let params = mz_params(&a.mz)?;
            let pt = mzvis_core::sweep::evaluate(&params, out.phase_steps)?;
            return Ok(vec![mz_row("mz", &pt)]);
        }
        Case::SimpleIndistinguishable => (SimpleCase::Indistinguishable, "simple-indistinguishable"),
        Case::SimpleDistinguishable => (SimpleCase::Distinguishable, "simple-distinguishable"),
        Case::SimpleMixture => (SimpleCase::Mixture(a.mz.p), "simple-mixture"),
    };
    let (eta_b, result) = if a.optimize_eta_b {
        let opt = simple_model_optimal(case)?;
        (opt.eta_b, opt.result)
    } else {
        (a.mz.eta_b, simple_model(case, a.mz.eta_b)?)
    };
    let p = case.indistinguishable_probability();
    let v_formula = v_simple_model(p, eta_b)?;
    Ok(vec![Row {
        scenario: name.to_string(),
        p: Some(p),
        t: None,
        t_r: None,
        eta_a: None,
        eta_b: Some(eta_b),
        v_sim: result.visibility,
        v_formula,
        abs_err: (result.visibility - v_formula).abs(),
        success_prob: Some(result.success_probability),
    }])
}

fn sweep(cfg: &SweepConfig, out: &OutputArgs) -> Result<Vec<Row>, CliError> {
    let values = linspace(cfg.range.start, cfg.range.stop, cfg.range.steps)?;
    let opts = SweepOptions {
        balance_eta_a: cfg.balance_eta_a,
        phase_points: out.phase_steps,
        exec: exec(out),
    };
    let points = mz_sweep(cfg.params, cfg.param, &values, opts)?;
    Ok(points.iter().map(|pt| mz_row(&cfg.scenario, pt)).collect())
}

fn nscale(a: &NscaleArgs) -> Result<Vec<Row>, CliError> {
    if a.max_n == 0 {
        return Err(CliError::invalid("--max-n must be at least 1"));
    }
    let schedules: &[Schedule] = match a.schedule {
        ScheduleArg::Simultaneous => &[Schedule::Simultaneous],
        ScheduleArg::Sequential => &[Schedule::Sequential],
        ScheduleArg::Both => &[Schedule::Simultaneous, Schedule::Sequential],
    };
    let mut rows = Vec::new();
    for &schedule in schedules {
        for n in 1..=a.max_n {
            let s = n_noise_scan(n, schedule)?;
            let (name, v_formula) = match schedule {
                Schedule::Simultaneous => ("simultaneous", v_dis_simultaneous(n)),
                Schedule::Sequential => ("sequential", v_dis_sequential(n)),
            };
            rows.push(Row {
                scenario: format!("nscale-{name}-n{n}"),
                p: Some(0.0),
                t: None,
                t_r: None,
                eta_a: None,
                eta_b: Some(s.eta_b),
                v_sim: s.visibility,
                v_formula,
                abs_err: (s.visibility - v_formula).abs(),
                success_prob: Some(s.success_probability),
            });
        }
    }
    Ok(rows)
}

fn optimize(a: &OptimizeArgs, out: &OutputArgs) -> Result<Vec<Row>, CliError> {
    let (p, eta_b, t) = (a.p, a.eta_b, a.t);
    let report = match a.objective {
        Objective::ClosedForm => {
            let f = move |eta_a: f64, t_r: f64| v_closed_form(p, eta_a, eta_b, t, t_r).unwrap_or(f64::NAN);
            optimize_numeric(p, eta_b, t, f, exec(out))?
        }
        Objective::Simulator => {
            MzParams::balanced(p, eta_b, t, 0.5)?.validate_conditional()?;
            optimize_numeric(p, eta_b, t, mz_objective(p, eta_b, t, SEARCH_PHASE_POINTS), exec(out))?
        }
    };
    let name = match a.objective {
        Objective::ClosedForm => "optimize-closed-form",
        Objective::Simulator => "optimize-simulator",
    };
    let params = MzParams::balanced(p, eta_b, t, report.t_r_star)?;
    let sim = mz_visibility_with(&params, out.phase_steps)?;
    let v_formula = v_max(p)?;
    Ok(vec![Row {
        scenario: name.to_string(),
        p: Some(p),
        t: Some(t),
        t_r: Some(report.t_r_star),
        eta_a: Some(params.eta_a),
        eta_b: Some(eta_b),
        v_sim: sim.visibility,
        v_formula,
        abs_err: (sim.visibility - v_formula).abs(),
        success_prob: Some(sim.success_probability),
    }])
}

fn hom(a: &HomArgs) -> Result<Vec<Row>, CliError> {
    let v_sim = hom_dip_visibility(a.p, a.t)?;
    let v_formula = hom_dip_visibility_closed_form(a.p, a.t)?;
    Ok(vec![Row {
        scenario: "hom".to_string(),
        p: Some(a.p),
        t: Some(a.t),
        t_r: None,
        eta_a: None,
        eta_b: None,
        v_sim,
        v_formula,
        abs_err: (v_sim - v_formula).abs(),
        success_prob: Some(hom_coincidence(a.p, a.t)?),
    }])
}
