//! Passive linear optics and the label-blind photon subtraction channel.
//!
//! Beam splitters use the real rotation convention
//!
//! ```text
//! a†_x → √T a†_x + √(1−T) a†_y
//! a†_y → −√(1−T) a†_x + √T a†_y
//! ```
//!
//! applied to each label separately, so photons of different labels pass
//! through the same element without ever coupling to each other.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};
use crate::fock::{FockBasisVector, Label, LabeledMode, MixedState, Path, PureState};

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BeamSplitterSpec {
    pub path_x: Path,
    pub path_y: Path,
    /// Intensity transmissivity, `cos²θ`.
    pub t: f64,
}

impl BeamSplitterSpec {
    pub fn new(path_x: Path, path_y: Path, t: f64) -> Result<Self> {
        if path_x == path_y {
            return Err(Error::SamePath(path_x));
        }
        check_unit("transmissivity", t)?;
        Ok(Self { path_x, path_y, t })
    }

    /// Spec for mixing angle `θ ∈ [0, π/2]`, i.e. `T = cos²θ`.
    pub fn from_angle(path_x: Path, path_y: Path, theta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "mixing angle",
                value: theta,
                range: "[0, π/2]",
            });
        }
        Self::new(path_x, path_y, theta.cos().powi(2))
    }

    pub fn angle(&self) -> f64 {
        self.t.sqrt().acos()
    }
}

fn factorials() -> [f64; 32] {
    let mut f = [1.0; 32];
    for i in 1..32 {
        f[i] = f[i - 1] * i as f64;
    }
    f
}

fn binomial(f: &[f64; 32], n: usize, k: usize) -> f64 {
    f[n] / (f[k] * f[n - k])
}

/// Two-mode rotation on modes at indices `ix`, `iy` of the registry.
fn rotate_pair(state: &PureState, ix: usize, iy: usize, c: f64, s: f64) -> PureState {
    let f = factorials();
    let mut out: BTreeMap<FockBasisVector, Complex64> = BTreeMap::new();
    for (k, &amp) in state.terms() {
        let m = usize::from(k.get(ix));
        let n = usize::from(k.get(iy));
        if m == 0 && n == 0 {
            *out.entry(k.clone()).or_default() += amp;
            continue;
        }
        // (c a†x + s a†y)^m (−s a†x + c a†y)^n |0,0⟩ / √(m! n!)
        let pre = (f[m] * f[n]).sqrt().recip();
        let mut coeffs = vec![0.0; m + n + 1];
        for i in 0..=m {
            let wi = binomial(&f, m, i) * c.powi(i as i32) * s.powi((m - i) as i32);
            for j in 0..=n {
                let wj = binomial(&f, n, j) * (-s).powi(j as i32) * c.powi((n - j) as i32);
                coeffs[i + j] += wi * wj;
            }
        }
        for (nx, w) in coeffs.into_iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            let ny = m + n - nx;
            let norm = (f[nx] * f[ny]).sqrt();
            let key = k.with(ix, nx as u8).with(iy, ny as u8);
            *out.entry(key).or_default() += amp * (pre * w * norm);
        }
    }
    state.with_terms(out)
}

/// Labels present on either path, in registry order.
fn labels_on_pair(state: &PureState, x: Path, y: Path) -> Vec<Label> {
    let mut labels: Vec<Label> = Vec::new();
    for m in state.modes() {
        if (m.path == x || m.path == y) && !labels.contains(&m.label) {
            labels.push(m.label);
        }
    }
    labels
}

/// Applies a beam splitter to every label present on either path. Missing
/// partner modes are registered in vacuum.
pub fn beam_splitter(state: &PureState, spec: &BeamSplitterSpec) -> Result<PureState> {
    let spec = BeamSplitterSpec::new(spec.path_x, spec.path_y, spec.t)?;
    for p in [spec.path_x, spec.path_y] {
        if !state.has_path(p) {
            return Err(Error::UnregisteredPath(p));
        }
    }
    let c = spec.t.sqrt();
    let s = (1.0 - spec.t).sqrt();
    let mut out = state.clone();
    for label in labels_on_pair(state, spec.path_x, spec.path_y) {
        let mx = LabeledMode::new(spec.path_x, label);
        let my = LabeledMode::new(spec.path_y, label);
        out = out.with_mode(mx).with_mode(my);
        let ix = out.index_of(mx)?;
        let iy = out.index_of(my)?;
        out = rotate_pair(&out, ix, iy, c, s);
    }
    Ok(out)
}

/// Multiplies each term by `e^{i n φ}`, `n` the photons on `path` over all labels.
pub fn phase_shift(state: &PureState, path: Path, phi: f64) -> Result<PureState> {
    if !state.has_path(path) {
        return Err(Error::UnregisteredPath(path));
    }
    let idx: Vec<usize> = state
        .modes()
        .iter()
        .enumerate()
        .filter(|(_, m)| m.path == path)
        .map(|(i, _)| i)
        .collect();
    Ok(state.map_amplitudes(|k, a| {
        let n: u32 = idx.iter().map(|&i| u32::from(k.get(i))).sum();
        if n == 0 {
            a
        } else {
            a * Complex64::from_polar(1.0, f64::from(n) * phi)
        }
    }))
}

/// First environment index not yet used in the registry.
fn fresh_env(state: &PureState) -> Path {
    let next = state
        .modes()
        .iter()
        .filter_map(|m| match m.path {
            Path::Env(k) => Some(k + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    Path::Env(next)
}

/// Attenuation with transmissivity `eta`: a beam splitter into a freshly
/// registered environment path. The environment stays in the state.
pub fn loss(state: &PureState, path: Path, eta: f64) -> Result<PureState> {
    check_unit("loss transmissivity", eta)?;
    if !state.has_path(path) {
        return Err(Error::UnregisteredPath(path));
    }
    let env = fresh_env(state);
    let labels = state.labels_on(path);
    let with_env = state.with_modes(labels.into_iter().map(|l| LabeledMode::new(env, l)));
    beam_splitter(&with_env, &BeamSplitterSpec::new(path, env, eta)?)
}

/// Modes on the given paths, label-expanded, in registry order.
fn modes_on(state: &PureState, paths: &[Path]) -> Vec<LabeledMode> {
    state
        .modes()
        .iter()
        .copied()
        .filter(|m| paths.contains(&m.path))
        .collect()
}

/// Label-blind removal of one photon from `paths`.
///
/// Each label-expanded mode `m` contributes the operator `a_m` with equal
/// prior probability; the branch for `m` carries weight `‖a_m ψ‖²`. The trace
/// of the result is the unconditioned `Σ_m ⟨a_m† a_m⟩`, which is the mean
/// photon number on `paths` and can exceed one.
pub fn subtract_one_photon(state: &PureState, paths: &[Path]) -> Result<MixedState> {
    subtract_photons(state, paths, 1)
}

/// Removes `count` photons from `paths`, weighting every unordered pattern
/// (multiset of `count` modes) equally.
pub fn subtract_photons(state: &PureState, paths: &[Path], count: usize) -> Result<MixedState> {
    if paths.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    let modes = modes_on(state, paths);
    let mut branches = Vec::new();
    for pattern in multisets(modes.len(), count) {
        let mut s = state.clone();
        for &i in &pattern {
            s = s.apply_annihilation(modes[i])?;
            if s.is_zero() {
                break;
            }
        }
        branches.push((1.0, s));
    }
    MixedState::from_unnormalized(branches)
}

/// Non-decreasing index sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Subtraction applied branch by branch to a mixture.
pub fn subtract_from_mixture(state: &MixedState, paths: &[Path], count: usize) -> Result<MixedState> {
    state.flat_map_branches(|s| subtract_photons(s, paths, count))
}

/// Balanced combiner closing the interferometer: A and B interfere at a
/// 50:50 splitter; the B-side output feeds detector D.
pub fn close_interferometer(state: &PureState) -> Result<PureState> {
    let mixed = beam_splitter(state, &BeamSplitterSpec::new(Path::A, Path::B, 0.5)?)?;
    mixed
        .rename_path(Path::B, Path::OutD)?
        .rename_path(Path::A, Path::OutDbar)
}
