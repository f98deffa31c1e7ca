//! Sparse few-photon bosonic states over labeled modes.
//!
//! A mode is addressed by a spatial [`Path`] together with a [`Label`] that
//! encodes principal distinguishability: photons with different labels never
//! interfere, even when they share a path and land on the same detector.
//!
//! States are immutable values. Every operation returns a new state, so they
//! can be shared freely across threads while sweeping parameters.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Amplitudes below this magnitude are dropped.
pub const PRUNE_EPS: f64 = 1e-15;

/// Spatial path of the interferometer.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Path {
    /// Upper arm.
    A,
    /// Lower arm.
    B,
    /// Noise input port of the first variable coupler.
    NoiseIn,
    /// Conditioning tap feeding the reference detector.
    Tap,
    /// Environment mode created by a loss element.
    Env(u16),
    /// Output port watched by the signal detector.
    OutD,
    /// The other output port.
    OutDbar,
}

impl Path {
    pub fn is_env(self) -> bool {
        matches!(self, Path::Env(_))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::A => write!(f, "A"),
            Path::B => write!(f, "B"),
            Path::NoiseIn => write!(f, "NoiseIn"),
            Path::Tap => write!(f, "Tap"),
            Path::Env(k) => write!(f, "Env{k}"),
            Path::OutD => write!(f, "OutD"),
            Path::OutDbar => write!(f, "OutDbar"),
        }
    }
}

/// Internal degree of freedom that makes photons principally distinguishable.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    /// σ: same internal mode as the signal photon.
    Signal,
    /// ν_k: an internal mode orthogonal to the signal and to every other `Noise(j)`, j ≠ k.
    Noise(u8),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Signal => write!(f, "σ"),
            Label::Noise(k) => write!(f, "ν{k}"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledMode {
    pub path: Path,
    pub label: Label,
}

impl LabeledMode {
    pub const fn new(path: Path, label: Label) -> Self {
        Self { path, label }
    }

    pub const fn signal(path: Path) -> Self {
        Self::new(path, Label::Signal)
    }

    pub const fn noise(path: Path, k: u8) -> Self {
        Self::new(path, Label::Noise(k))
    }
}

impl fmt::Display for LabeledMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.path, self.label)
    }
}

/// Occupation numbers, one per registered mode, in registry order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockBasisVector(Vec<u8>);

impl FockBasisVector {
    pub fn new(occupations: Vec<u8>) -> Self {
        Self(occupations)
    }

    pub fn occupations(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, index: usize) -> u8 {
        self.0[index]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&n| u32::from(n)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn with(&self, index: usize, n: u8) -> Self {
        let mut occ = self.0.clone();
        occ[index] = n;
        Self(occ)
    }
}

impl fmt::Display for FockBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "⟩")
    }
}

/// Sparse superposition of Fock basis vectors over an ordered mode registry.
///
/// The registry grows by appending, so existing mode indices never move. The
/// cached squared norm always matches the stored amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    modes: Vec<LabeledMode>,
    terms: BTreeMap<FockBasisVector, Complex64>,
    norm_sq: f64,
}

impl PureState {
    /// The vacuum over the given registry.
    pub fn vacuum<I: IntoIterator<Item = LabeledMode>>(modes: I) -> Result<Self> {
        let modes = Self::check_registry(modes.into_iter().collect())?;
        let mut terms = BTreeMap::new();
        terms.insert(FockBasisVector(vec![0; modes.len()]), Complex64::new(1.0, 0.0));
        Ok(Self {
            modes,
            terms,
            norm_sq: 1.0,
        })
    }

    /// A state with no amplitude at all.
    pub fn zero<I: IntoIterator<Item = LabeledMode>>(modes: I) -> Result<Self> {
        let modes = Self::check_registry(modes.into_iter().collect())?;
        Ok(Self {
            modes,
            terms: BTreeMap::new(),
            norm_sq: 0.0,
        })
    }

    /// Builds a state from explicit `(occupations, amplitude)` pairs. Repeated
    /// basis vectors are summed.
    pub fn from_terms<I, T>(modes: I, terms: T) -> Result<Self>
    where
        I: IntoIterator<Item = LabeledMode>,
        T: IntoIterator<Item = (Vec<u8>, Complex64)>,
    {
        let modes = Self::check_registry(modes.into_iter().collect())?;
        let mut acc = BTreeMap::new();
        for (occ, amp) in terms {
            if occ.len() != modes.len() {
                return Err(Error::OccupationLength {
                    expected: modes.len(),
                    got: occ.len(),
                });
            }
            *acc.entry(FockBasisVector(occ)).or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        Ok(Self::assemble(modes, acc))
    }

    fn check_registry(modes: Vec<LabeledMode>) -> Result<Vec<LabeledMode>> {
        for (i, m) in modes.iter().enumerate() {
            if modes[..i].contains(m) {
                return Err(Error::DuplicateMode(*m));
            }
        }
        Ok(modes)
    }

    /// Prunes tiny amplitudes and caches the squared norm.
    pub(crate) fn assemble(modes: Vec<LabeledMode>, mut terms: BTreeMap<FockBasisVector, Complex64>) -> Self {
        terms.retain(|_, a| a.norm() >= PRUNE_EPS);
        let norm_sq = terms.values().map(|a| a.norm_sqr()).sum();
        Self { modes, terms, norm_sq }
    }

    pub fn modes(&self) -> &[LabeledMode] {
        &self.modes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockBasisVector, &Complex64)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    pub fn index_of(&self, mode: LabeledMode) -> Result<usize> {
        self.modes
            .iter()
            .position(|&m| m == mode)
            .ok_or(Error::UnregisteredMode(mode))
    }

    pub fn has_mode(&self, mode: LabeledMode) -> bool {
        self.modes.contains(&mode)
    }

    pub fn has_path(&self, path: Path) -> bool {
        self.modes.iter().any(|m| m.path == path)
    }

    /// Distinct paths in registry order.
    pub fn paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = Vec::new();
        for m in &self.modes {
            if !out.contains(&m.path) {
                out.push(m.path);
            }
        }
        out
    }

    /// Labels registered on `path`, in registry order.
    pub fn labels_on(&self, path: Path) -> Vec<Label> {
        self.modes.iter().filter(|m| m.path == path).map(|m| m.label).collect()
    }

    /// Amplitude of a basis vector given as occupations in registry order.
    pub fn amplitude(&self, occupations: &[u8]) -> Complex64 {
        self.terms
            .get(&FockBasisVector(occupations.to_vec()))
            .copied()
            .unwrap_or_default()
    }

    /// Photons on `path` summed over labels for one basis vector.
    pub fn path_occupation(&self, basis: &FockBasisVector, path: Path) -> u32 {
        self.modes
            .iter()
            .zip(basis.occupations())
            .filter(|(m, _)| m.path == path)
            .map(|(_, &n)| u32::from(n))
            .sum()
    }

    /// Returns the state with `mode` appended to the registry (vacuum in the
    /// new mode). A no-op if the mode is already present.
    pub fn with_mode(&self, mode: LabeledMode) -> Self {
        if self.has_mode(mode) {
            return self.clone();
        }
        let mut modes = self.modes.clone();
        modes.push(mode);
        let terms = self
            .terms
            .iter()
            .map(|(k, &a)| {
                let mut occ = k.0.clone();
                occ.push(0);
                (FockBasisVector(occ), a)
            })
            .collect();
        Self {
            modes,
            terms,
            norm_sq: self.norm_sq,
        }
    }

    pub fn with_modes<I: IntoIterator<Item = LabeledMode>>(&self, modes: I) -> Self {
        modes.into_iter().fold(self.clone(), |s, m| s.with_mode(m))
    }

    /// Renames every mode on path `from` to path `to`. Free propagation, no
    /// change to amplitudes.
    pub fn rename_path(&self, from: Path, to: Path) -> Result<Self> {
        if !self.has_path(from) {
            return Err(Error::UnregisteredPath(from));
        }
        if from != to && self.has_path(to) {
            return Err(Error::PathInUse(to));
        }
        let mut out = self.clone();
        for m in &mut out.modes {
            if m.path == from {
                m.path = to;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let terms = self.terms.iter().map(|(k, &a)| (k.clone(), a * factor)).collect();
        Self::assemble(self.modes.clone(), terms)
    }

    /// Maps each term to a new amplitude on the same basis vector.
    pub(crate) fn map_amplitudes<F>(&self, f: F) -> Self
    where
        F: Fn(&FockBasisVector, Complex64) -> Complex64,
    {
        let terms = self.terms.iter().map(|(k, &a)| (k.clone(), f(k, a))).collect();
        Self::assemble(self.modes.clone(), terms)
    }

    /// Replaces the terms, keeping the registry.
    pub(crate) fn with_terms(&self, terms: BTreeMap<FockBasisVector, Complex64>) -> Self {
        Self::assemble(self.modes.clone(), terms)
    }

    /// `a†` on `mode`: |…n…⟩ ↦ √(n+1)|…n+1…⟩.
    pub fn apply_creation(&self, mode: LabeledMode) -> Result<Self> {
        let idx = self.index_of(mode)?;
        let mut terms = BTreeMap::new();
        for (k, &a) in &self.terms {
            let n = k.get(idx);
            let key = k.with(idx, n + 1);
            terms.insert(key, a * (f64::from(n) + 1.0).sqrt());
        }
        Ok(self.with_terms(terms))
    }

    /// `a` on `mode`: |…n…⟩ ↦ √n|…n−1…⟩. Terms with n = 0 vanish.
    pub fn apply_annihilation(&self, mode: LabeledMode) -> Result<Self> {
        let idx = self.index_of(mode)?;
        let mut terms = BTreeMap::new();
        for (k, &a) in &self.terms {
            let n = k.get(idx);
            if n == 0 {
                continue;
            }
            terms.insert(k.with(idx, n - 1), a * f64::from(n).sqrt());
        }
        Ok(self.with_terms(terms))
    }

    /// Returns the unit-norm state and the squared norm it had before. The
    /// squared norm is the success probability of whatever conditioning
    /// produced `self`.
    pub fn normalize(&self) -> Result<(Self, f64)> {
        if self.norm_sq <= 0.0 || self.terms.is_empty() {
            return Err(Error::ZeroNorm);
        }
        let s = self.norm_sq.sqrt().recip();
        let terms = self.terms.iter().map(|(k, &a)| (k.clone(), a * s)).collect();
        Ok((Self::assemble(self.modes.clone(), terms), self.norm_sq))
    }

    /// Keeps only basis vectors for which `keep` holds.
    pub fn project<F: Fn(&FockBasisVector) -> bool>(&self, keep: F) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| keep(k))
            .map(|(k, &a)| (k.clone(), a))
            .collect();
        Self::assemble(self.modes.clone(), terms)
    }

    /// ⟨self|other⟩, matching modes by identity rather than by index. Modes
    /// registered only in `other` are taken as vacuum on the `self` side.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        let map: Vec<usize> = self.modes.iter().map(|&m| other.index_of(m)).collect::<Result<_>>()?;
        let mut acc = Complex64::default();
        for (k, &a) in &self.terms {
            let mut occ = vec![0u8; other.modes.len()];
            for (i, &j) in map.iter().enumerate() {
                occ[j] = k.get(i);
            }
            acc += a.conj() * other.amplitude(&occ);
        }
        Ok(acc)
    }

    /// Σ over terms of |amplitude|² · (total photon number).
    pub fn mean_photon_number(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, a)| a.norm_sqr() * f64::from(k.total()))
            .sum()
    }

    /// Photon numbers present in the state, without duplicates.
    pub fn photon_numbers(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(FockBasisVector::total).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Classical mixture of unit-norm pure states.
///
/// Weights are non-negative. Their sum, the trace, is a relative rate: after
/// a photon subtraction it is the unconditioned expectation of the
/// subtraction operators and may exceed one. [`MixedState::conditioned`]
/// renormalizes to a proper density operator.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedState {
    branches: Vec<(f64, PureState)>,
    trace: f64,
}

impl MixedState {
    pub fn pure(state: PureState) -> Result<Self> {
        let (s, _) = state.normalize()?;
        Ok(Self {
            branches: vec![(1.0, s)],
            trace: 1.0,
        })
    }

    pub fn empty() -> Self {
        Self {
            branches: Vec::new(),
            trace: 0.0,
        }
    }

    /// Mixture of unnormalized branches. Each branch `(w, ψ)` contributes
    /// weight `w·‖ψ‖²` with ψ normalized; zero-weight branches are dropped.
    pub fn from_unnormalized<I: IntoIterator<Item = (f64, PureState)>>(branches: I) -> Result<Self> {
        let mut out = Vec::new();
        for (w, psi) in branches {
            if w < 0.0 || !w.is_finite() {
                return Err(Error::OutOfRange {
                    name: "branch weight",
                    value: w,
                    range: "[0, ∞)",
                });
            }
            if w == 0.0 || psi.is_zero() {
                continue;
            }
            let (s, n) = psi.normalize()?;
            out.push((w * n, s));
        }
        let trace = out.iter().map(|(w, _)| w).sum();
        Ok(Self { branches: out, trace })
    }

    pub fn branches(&self) -> &[(f64, PureState)] {
        &self.branches
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    /// Renormalizes the weights to sum to one.
    pub fn conditioned(&self) -> Result<Self> {
        if self.trace <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        let branches: Vec<_> = self.branches.iter().map(|(w, s)| (w / self.trace, s.clone())).collect();
        let trace = branches.iter().map(|(w, _)| w).sum();
        Ok(Self { branches, trace })
    }

    /// Applies a (possibly non-unitary) map to every branch, reweighting by
    /// the squared norm of the result.
    pub fn map_branches<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&PureState) -> Result<PureState>,
    {
        let mapped = self
            .branches
            .iter()
            .map(|(w, s)| Ok((*w, f(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_unnormalized(mapped)
    }

    /// Replaces each branch by a mixture, multiplying weights through.
    pub fn flat_map_branches<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&PureState) -> Result<MixedState>,
    {
        let mut out = Vec::new();
        for (w, s) in &self.branches {
            let m = f(s)?;
            out.extend(m.branches.into_iter().map(|(v, b)| (w * v, b)));
        }
        let trace = out.iter().map(|(w, _)| w).sum();
        Ok(Self { branches: out, trace })
    }

    /// Weighted mixture of mixtures.
    pub fn combine<I: IntoIterator<Item = (f64, MixedState)>>(parts: I) -> Self {
        let mut branches = Vec::new();
        for (w, m) in parts {
            branches.extend(m.branches.into_iter().map(|(v, s)| (w * v, s)));
        }
        branches.retain(|(w, _)| *w > 0.0);
        let trace = branches.iter().map(|(w, _)| w).sum();
        Self { branches, trace }
    }
}
