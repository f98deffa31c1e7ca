//! Label-blind threshold detectors, fringe sampling and visibility.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{MixedState, Path, PureState};

/// Default number of phase points per fringe.
pub const DEFAULT_PHASE_POINTS: usize = 256;

/// Threshold detector on one path: clicks on ≥1 photon summed over labels.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DetectorSpec {
    pub watched_path: Path,
}

impl DetectorSpec {
    pub const fn on(path: Path) -> Self {
        Self { watched_path: path }
    }
}

/// Anything a detector pattern can be evaluated on.
pub trait Measurable {
    /// Probability that every path in `clicks` holds a photon and every
    /// path in `silences` is empty. Paths are assumed disjoint.
    fn pattern_probability(&self, clicks: &[Path], silences: &[Path]) -> f64;
}

fn pattern_holds(state: &PureState, k: &crate::fock::FockBasisVector, clicks: &[Path], silences: &[Path]) -> bool {
    clicks.iter().all(|&p| state.path_occupation(k, p) > 0)
        && silences.iter().all(|&p| state.path_occupation(k, p) == 0)
}

impl Measurable for PureState {
    fn pattern_probability(&self, clicks: &[Path], silences: &[Path]) -> f64 {
        self.terms()
            .filter(|(k, _)| pattern_holds(self, k, clicks, silences))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }
}

impl Measurable for MixedState {
    /// Weight-averaged over branches.
    fn pattern_probability(&self, clicks: &[Path], silences: &[Path]) -> f64 {
        if self.trace() <= 0.0 {
            return 0.0;
        }
        let total: f64 = self
            .branches()
            .iter()
            .map(|(w, s)| w * s.pattern_probability(clicks, silences))
            .sum();
        total / self.trace()
    }
}

fn check_disjoint(clicks: &[DetectorSpec], silences: &[DetectorSpec]) -> Result<(Vec<Path>, Vec<Path>)> {
    let c: Vec<Path> = clicks.iter().map(|d| d.watched_path).collect();
    let s: Vec<Path> = silences.iter().map(|d| d.watched_path).collect();
    for (i, p) in c.iter().chain(&s).enumerate() {
        if c.iter().chain(&s).take(i).any(|q| q == p) {
            return Err(Error::OverlappingDetectors(*p));
        }
    }
    Ok((c, s))
}

pub fn click_probability<S: Measurable + ?Sized>(
    state: &S,
    clicks: &[DetectorSpec],
    silences: &[DetectorSpec],
) -> Result<f64> {
    let (c, s) = check_disjoint(clicks, silences)?;
    Ok(state.pattern_probability(&c, &s))
}

pub fn coincidence_probability<S: Measurable + ?Sized>(
    state: &S,
    det_a: DetectorSpec,
    det_b: DetectorSpec,
) -> Result<f64> {
    click_probability(state, &[det_a, det_b], &[])
}

/// Conditional state given a detector pattern on the listed paths, plus the
/// probability of that pattern. Paths stay registered; they are simply
/// projected onto the observed outcome.
pub fn postselect(state: &MixedState, clicks: &[Path], silences: &[Path]) -> Result<(MixedState, f64)> {
    let prob = state.pattern_probability(clicks, silences);
    let projected = state.map_branches(|s| Ok(s.project(|k| pattern_holds(s, k, clicks, silences))))?;
    if projected.is_empty() {
        return Ok((projected, 0.0));
    }
    Ok((projected.conditioned()?, prob))
}

/// Every environment path registered anywhere in the mixture.
pub fn env_paths(state: &MixedState) -> Vec<Path> {
    let mut out: Vec<Path> = Vec::new();
    for (_, s) in state.branches() {
        for p in s.paths() {
            if p.is_env() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FringeSample {
    pub phases: Vec<f64>,
    pub probabilities: Vec<f64>,
}

impl FringeSample {
    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.probabilities.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.probabilities.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn mean(&self) -> f64 {
        self.probabilities.iter().sum::<f64>() / self.len() as f64
    }
}

/// Uniform grid `φ_k = 2πk/n` on `[0, 2π)`.
pub fn phase_grid(n_points: usize) -> Result<Vec<f64>> {
    if n_points < 8 {
        return Err(Error::TooFewPhasePoints(n_points));
    }
    Ok((0..n_points).map(|k| TAU * k as f64 / n_points as f64).collect())
}

fn check_probability(p: f64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=1.0 + SLACK).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

pub fn fringe<F: Fn(f64) -> f64>(prob_at: F, n_points: usize) -> Result<FringeSample> {
    try_fringe(|phi| Ok(prob_at(phi)), n_points)
}

pub fn try_fringe<F: Fn(f64) -> Result<f64>>(prob_at: F, n_points: usize) -> Result<FringeSample> {
    let phases = phase_grid(n_points)?;
    let probabilities = phases
        .iter()
        .map(|&phi| check_probability(prob_at(phi)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(FringeSample { phases, probabilities })
}

/// DC term and first-harmonic coefficient of the sampled fringe.
pub fn fourier_terms(sample: &FringeSample) -> (f64, Complex64) {
    let n = sample.len() as f64;
    let c0 = sample.probabilities.iter().sum::<f64>() / n;
    let c1 = sample
        .phases
        .iter()
        .zip(&sample.probabilities)
        .map(|(&phi, &p)| Complex64::from_polar(p, -phi))
        .sum::<Complex64>()
        / n;
    (c0, c1)
}

/// Fringe contrast `2|c₁|/c₀`, which equals `(max−min)/(max+min)` for a
/// fringe of the form `a + b·cos(φ−φ₀)`.
pub fn visibility(sample: &FringeSample) -> Result<f64> {
    if sample.len() < 8 {
        return Err(Error::TooFewPhasePoints(sample.len()));
    }
    let (c0, c1) = fourier_terms(sample);
    if c0 <= 1e-15 {
        return Err(Error::UndefinedVisibility(c0));
    }
    Ok((2.0 * c1.norm() / c0).clamp(0.0, 1.0))
}

/// Largest which-way knowledge `K` allowed by `V² + K² ≤ 1`.
pub fn which_way_bound(v: f64) -> Result<f64> {
    crate::error::check_unit("visibility", v)?;
    Ok((1.0 - v * v).sqrt())
}
