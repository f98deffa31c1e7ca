//! One-parameter sweeps of the full interferometer, comparing the simulated
//! visibility against the closed form at every point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::scenarios::{mz_visibility_with, MzParams};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    P,
    T,
    TR,
    EtaA,
    EtaB,
    EtaS,
    EtaN,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::P => "p",
            SweepParam::T => "t",
            SweepParam::TR => "t_r",
            SweepParam::EtaA => "eta_a",
            SweepParam::EtaB => "eta_b",
            SweepParam::EtaS => "eta_s",
            SweepParam::EtaN => "eta_n",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "p" => SweepParam::P,
            "t" => SweepParam::T,
            "t_r" | "tr" => SweepParam::TR,
            "eta_a" => SweepParam::EtaA,
            "eta_b" => SweepParam::EtaB,
            "eta_s" => SweepParam::EtaS,
            "eta_n" => SweepParam::EtaN,
            _ => return None,
        })
    }

    pub fn set(self, mut params: MzParams, value: f64) -> MzParams {
        match self {
            SweepParam::P => params.p = value,
            SweepParam::T => params.t = value,
            SweepParam::TR => params.t_r = value,
            SweepParam::EtaA => params.eta_a = value,
            SweepParam::EtaB => params.eta_b = value,
            SweepParam::EtaS => params.eta_s = value,
            SweepParam::EtaN => params.eta_n = value,
        }
        params
    }
}

/// `steps` evenly spaced values from `start` to `stop` inclusive.
pub fn linspace(start: f64, stop: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::OutOfRange {
            name: "steps",
            value: steps as f64,
            range: "[2, ∞)",
        });
    }
    let h = (stop - start) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| if k == steps - 1 { stop } else { start + h * k as f64 })
        .collect())
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub params: MzParams,
    pub v_sim: f64,
    pub v_formula: f64,
    pub success_probability: f64,
}

impl SweepPoint {
    pub fn abs_err(&self) -> f64 {
        (self.v_sim - self.v_formula).abs()
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SweepOptions {
    /// Re-impose `η_A = η_B·T` after setting each point.
    pub balance_eta_a: bool,
    pub phase_points: usize,
    pub exec: Exec,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            balance_eta_a: true,
            phase_points: crate::detection::DEFAULT_PHASE_POINTS,
            exec: Exec::default(),
        }
    }
}

/// Parameter records of a sweep, validated before any simulation runs.
pub fn sweep_points(base: MzParams, param: SweepParam, values: &[f64], balance_eta_a: bool) -> Result<Vec<MzParams>> {
    values
        .iter()
        .map(|&v| {
            let mut p = param.set(base, v);
            if balance_eta_a && param != SweepParam::EtaA {
                p.eta_a = p.eta_b * p.t;
            }
            p.validate_conditional()?;
            Ok(p)
        })
        .collect()
}

/// Evaluates one record: simulated and closed-form visibility.
pub fn evaluate(params: &MzParams, phase_points: usize) -> Result<SweepPoint> {
    let sim = mz_visibility_with(params, phase_points)?;
    Ok(SweepPoint {
        params: *params,
        v_sim: sim.visibility,
        v_formula: params.closed_form_visibility()?,
        success_probability: sim.success_probability,
    })
}

/// Sweeps `param` over `values`. Points are evaluated independently and
/// returned in sweep order.
pub fn mz_sweep(base: MzParams, param: SweepParam, values: &[f64], opts: SweepOptions) -> Result<Vec<SweepPoint>> {
    let points = sweep_points(base, param, values, opts.balance_eta_a)?;
    opts.exec.try_map(&points, |p| evaluate(p, opts.phase_points))
}

/// Evaluates arbitrary records, e.g. a random sample of the parameter space.
pub fn evaluate_all(records: &[MzParams], phase_points: usize, exec: Exec) -> Result<Vec<SweepPoint>> {
    exec.try_map(records, |p| evaluate(p, phase_points))
}
