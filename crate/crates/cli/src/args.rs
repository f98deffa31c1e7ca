use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "mzvis",
    version,
    about = "Interference visibility with a noise photon and photon subtraction"
)]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Phase points per fringe.
    #[arg(long, global = true, default_value_t = mzvis_core::detection::DEFAULT_PHASE_POINTS)]
    pub phase_steps: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Evaluate points one at a time.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one scenario.
    Scenario(ScenarioArgs),
    /// Sweep one parameter of the full interferometer.
    Sweep(SweepArgs),
    /// Visibility against the number of noise photons.
    Nscale(NscaleArgs),
    /// Optimal tap ratio for a given indistinguishability.
    Optimize(OptimizeArgs),
    /// Two-photon interference at a single splitter.
    Hom(HomArgs),
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Case {
    SimpleIndistinguishable,
    SimpleDistinguishable,
    SimpleMixture,
    Mz,
}

/// Settings of the full interferometer. `eta_a` defaults to `eta_b * t`.
#[derive(Debug, Clone, Args)]
pub struct MzArgs {
    #[arg(long, default_value_t = 0.0)]
    pub p: f64,
    #[arg(long, default_value_t = 0.5)]
    pub t: f64,
    #[arg(long = "tr", alias = "t-r", default_value_t = 0.5)]
    pub t_r: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eta_b: f64,
    #[arg(long)]
    pub eta_a: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub eta_s: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eta_n: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    #[arg(long, value_enum)]
    pub case: Case,
    #[command(flatten)]
    pub mz: MzArgs,
    /// Search for the attenuation that maximizes the visibility (simple cases).
    #[arg(long, conflicts_with = "eta_b")]
    pub optimize_eta_b: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// JSON sweep configuration; flags given alongside override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub param: Option<String>,
    #[arg(long)]
    pub from: Option<f64>,
    #[arg(long)]
    pub to: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub t: Option<f64>,
    #[arg(long = "tr", alias = "t-r")]
    pub t_r: Option<f64>,
    #[arg(long)]
    pub eta_b: Option<f64>,
    /// Fixed upper-arm transmissivity; disables balancing.
    #[arg(long)]
    pub eta_a: Option<f64>,
    #[arg(long)]
    pub eta_s: Option<f64>,
    #[arg(long)]
    pub eta_n: Option<f64>,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ScheduleArg {
    Simultaneous,
    Sequential,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct NscaleArgs {
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = ScheduleArg::Simultaneous)]
    pub schedule: ScheduleArg,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Objective {
    ClosedForm,
    Simulator,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[arg(long, default_value_t = 0.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1.0)]
    pub eta_b: f64,
    #[arg(long, default_value_t = 0.5)]
    pub t: f64,
    #[arg(long, value_enum, default_value_t = Objective::ClosedForm)]
    pub objective: Objective,
}

#[derive(Debug, Clone, Args)]
pub struct HomArgs {
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 0.5)]
    pub t: f64,
}
