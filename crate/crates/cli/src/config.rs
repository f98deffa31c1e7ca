use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use mzvis_core::scenarios::MzParams;
use mzvis_core::sweep::SweepParam;

use crate::args::{Format, SweepArgs};
use crate::CliError;

#[derive(Debug, Copy, Clone, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

/// A sweep of the full interferometer, as read from `--config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default = "default_scenario")]
    pub scenario: String,
    pub param: SweepParam,
    pub range: Range,
    pub params: MzParams,
    /// Re-impose `eta_a = eta_b * t` at every point.
    #[serde(default = "default_true")]
    pub balance_eta_a: bool,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

fn default_scenario() -> String {
    "mz".into()
}

fn default_true() -> bool {
    true
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
        serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("config {}: {e}", path.display())))
    }

    /// Config file (if any) overlaid with explicit flags.
    pub fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let mut cfg = match &args.config {
            Some(path) => Some(Self::load(path)?),
            None => None,
        };
        let param = match (&args.param, &cfg) {
            (Some(name), _) => {
                SweepParam::parse(name).ok_or_else(|| CliError::invalid(format!("unknown sweep parameter `{name}`")))?
            }
            (None, Some(c)) => c.param,
            (None, None) => return Err(CliError::invalid("--param is required without --config")),
        };
        let range = match cfg.as_ref().map(|c| c.range) {
            Some(r) => Range {
                start: args.from.unwrap_or(r.start),
                stop: args.to.unwrap_or(r.stop),
                steps: args.steps.unwrap_or(r.steps),
            },
            None => Range {
                start: args
                    .from
                    .ok_or_else(|| CliError::invalid("--from is required without --config"))?,
                stop: args
                    .to
                    .ok_or_else(|| CliError::invalid("--to is required without --config"))?,
                steps: args
                    .steps
                    .ok_or_else(|| CliError::invalid("--steps is required without --config"))?,
            },
        };
        let base = cfg.as_ref().map(|c| c.params).unwrap_or(MzParams {
            eta_s: 1.0,
            eta_n: 1.0,
            eta_a: 0.5,
            eta_b: 1.0,
            t: 0.5,
            t_r: 0.5,
            p: 0.0,
        });
        let params = MzParams {
            eta_s: args.eta_s.unwrap_or(base.eta_s),
            eta_n: args.eta_n.unwrap_or(base.eta_n),
            eta_a: args.eta_a.unwrap_or(base.eta_a),
            eta_b: args.eta_b.unwrap_or(base.eta_b),
            t: args.t.unwrap_or(base.t),
            t_r: args.t_r.unwrap_or(base.t_r),
            p: args.p.unwrap_or(base.p),
        };
        let balance_eta_a = args.eta_a.is_none() && cfg.as_ref().is_none_or(|c| c.balance_eta_a);
        let (scenario, format, out) = match cfg.take() {
            Some(c) => (c.scenario, c.format, c.out),
            None => (default_scenario(), Format::Csv, None),
        };
        let out = Self {
            scenario,
            param,
            range,
            params,
            balance_eta_a,
            format,
            out,
        };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.scenario != "mz" {
            return Err(CliError::invalid(format!(
                "unsupported sweep scenario `{}`; only `mz` can be swept",
                self.scenario
            )));
        }
        if self.range.steps < 2 {
            return Err(CliError::invalid(format!(
                "steps must be at least 2, got {}",
                self.range.steps
            )));
        }
        self.params.validate()?;
        Ok(())
    }
}
