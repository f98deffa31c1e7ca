//! End-to-end builders: the single-photon simple model, the full two-photon
//! Mach-Zehnder setup, the N-noise-photon generalizations and the HOM dip.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::detection::{
    coincidence_probability, env_paths, postselect, try_fringe, visibility, DetectorSpec, FringeSample, Measurable,
    DEFAULT_PHASE_POINTS,
};
use crate::error::{check_unit, Error, Result};
use crate::fock::{Label, LabeledMode, MixedState, Path, PureState};
use crate::optics::{
    beam_splitter, close_interferometer, loss, phase_shift, subtract_from_mixture, subtract_photons, BeamSplitterSpec,
};
use crate::search::golden_section_max;

/// Phase points used inside attenuation searches. Fourier extraction is exact
/// for a single-harmonic fringe at any grid of 8 or more points.
pub const SEARCH_PHASE_POINTS: usize = 16;
/// Bracket and tolerance of the optimal-attenuation search.
pub const ATTENUATION_RANGE: (f64, f64) = (1e-4, 1.0);
pub const ATTENUATION_TOL: f64 = 1e-6;
/// Largest supported number of noise photons.
pub const MAX_NOISE_PHOTONS: usize = 6;

const SIGNAL_A: LabeledMode = LabeledMode::signal(Path::A);
const SIGNAL_B: LabeledMode = LabeledMode::signal(Path::B);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioResult {
    pub visibility: f64,
    /// Probability of the post-selected event the fringe is conditioned on.
    pub success_probability: f64,
    pub fringe: FringeSample,
}

/// `(|1,0⟩ + e^{iφ}|0,1⟩)/√2` over `(A,σ)`, `(B,σ)`.
pub fn equatorial_state(phi: f64) -> PureState {
    PureState::from_terms(
        [SIGNAL_A, SIGNAL_B],
        [
            (vec![1, 0], Complex64::new(FRAC_1_SQRT_2, 0.0)),
            (vec![0, 1], Complex64::from_polar(FRAC_1_SQRT_2, phi)),
        ],
    )
    .expect("static registry")
}

// ---------------------------------------------------------------------------
// simple model

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SimpleCase {
    /// Noise photon created in `(B, σ)`.
    Indistinguishable,
    /// Noise photon created in `(B, ν)`.
    Distinguishable,
    /// Indistinguishable with probability `p`, distinguishable otherwise.
    Mixture(f64),
}

impl SimpleCase {
    pub fn indistinguishable_probability(self) -> f64 {
        match self {
            SimpleCase::Indistinguishable => 1.0,
            SimpleCase::Distinguishable => 0.0,
            SimpleCase::Mixture(p) => p,
        }
    }
}

/// Creates a noise photon in `(B, label)` on top of `state` and normalizes.
fn create_noise(state: &PureState, label: Label) -> Result<PureState> {
    let mode = LabeledMode::new(Path::B, label);
    let (s, _) = state.with_mode(mode).apply_creation(mode)?.normalize()?;
    Ok(s)
}

/// Conditional state after the noise photon is created and one photon is
/// removed from the lower arm. Branches are weighted by their subtraction
/// rates before conditioning.
pub fn simple_model_state(case: SimpleCase, phi: f64) -> Result<MixedState> {
    let p = check_unit("p", case.indistinguishable_probability())?;
    let psi = equatorial_state(phi).with_mode(LabeledMode::noise(Path::B, 0));
    let mut parts = Vec::new();
    for (w, label) in [(p, Label::Signal), (1.0 - p, Label::Noise(0))] {
        if w > 0.0 {
            let created = create_noise(&psi, label)?;
            parts.push((w, subtract_photons(&created, &[Path::B], 1)?));
        }
    }
    MixedState::combine(parts).conditioned()
}

/// Probability of a click at D given no photon in any environment, for a
/// one-photon mixture whose interferometric phase is applied at the output.
///
/// The phase is put on arm A with the opposite sign. Each term carries its
/// single photon either in A or in a mode fed from B, so this differs from
/// the input-side phase only globally.
fn output_fringe(kept: &MixedState, n_points: usize) -> Result<FringeSample> {
    let d = DetectorSpec::on(Path::OutD);
    try_fringe(
        |phi| {
            let out = kept.map_branches(|s| close_interferometer(&phase_shift(s, Path::A, -phi)?))?;
            crate::detection::click_probability(&out, &[d], &[])
        },
        n_points,
    )
}

/// Attenuates the lower arm of a one-photon mixture, post-selects on an
/// empty environment and extracts the output fringe.
fn attenuated_result(state: &MixedState, eta_b: f64, n_points: usize) -> Result<(ScenarioResult, MixedState)> {
    let lossy = state.map_branches(|s| loss(s, Path::B, eta_b))?;
    let envs = env_paths(&lossy);
    let (kept, p_keep) = postselect(&lossy, &[], &envs)?;
    if kept.is_empty() {
        return Err(Error::ZeroNorm);
    }
    let fringe = output_fringe(&kept, n_points)?;
    let result = ScenarioResult {
        visibility: visibility(&fringe)?,
        success_probability: p_keep,
        fringe,
    };
    Ok((result, kept))
}

fn check_attenuation(eta_b: f64) -> Result<f64> {
    if eta_b > 0.0 && eta_b <= 1.0 {
        Ok(eta_b)
    } else {
        Err(Error::OutOfRange {
            name: "eta_b",
            value: eta_b,
            range: "(0, 1]",
        })
    }
}

pub fn simple_model(case: SimpleCase, eta_b: f64) -> Result<ScenarioResult> {
    check_attenuation(eta_b)?;
    let state = simple_model_state(case, 0.0)?;
    Ok(attenuated_result(&state, eta_b, DEFAULT_PHASE_POINTS)?.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttenuationOptimum {
    pub eta_b: f64,
    pub result: ScenarioResult,
}

/// Golden-section search for the lower-arm attenuation maximizing the
/// output visibility of a one-photon mixture.
fn optimal_attenuation(state: &MixedState) -> Result<AttenuationOptimum> {
    let (lo, hi) = ATTENUATION_RANGE;
    let best = golden_section_max(
        |eta| Ok(attenuated_result(state, eta, SEARCH_PHASE_POINTS)?.0.visibility),
        lo,
        hi,
        ATTENUATION_TOL,
    )?;
    let (result, _) = attenuated_result(state, best.x, DEFAULT_PHASE_POINTS)?;
    Ok(AttenuationOptimum { eta_b: best.x, result })
}

pub fn simple_model_optimal(case: SimpleCase) -> Result<AttenuationOptimum> {
    optimal_attenuation(&simple_model_state(case, 0.0)?)
}

// ---------------------------------------------------------------------------
// N noise photons

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    /// Create all `N` photons, then remove `N` photons at once.
    Simultaneous,
    /// `N` cycles of create one, remove one.
    Sequential,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoiseScaling {
    pub n: usize,
    pub schedule: Schedule,
    pub visibility: f64,
    /// Final-stage optimal attenuation.
    pub eta_b: f64,
    pub success_probability: f64,
}

fn check_noise_count(n: usize) -> Result<()> {
    if (1..=MAX_NOISE_PHOTONS).contains(&n) {
        Ok(())
    } else {
        Err(Error::NoiseCount(n))
    }
}

/// Each noise photon gets its own label, distinguishable from the signal
/// and from every other noise photon.
fn noise_mode(k: usize) -> LabeledMode {
    LabeledMode::noise(Path::B, k as u8)
}

pub fn n_noise_scan(n: usize, schedule: Schedule) -> Result<NoiseScaling> {
    check_noise_count(n)?;
    let opt = match schedule {
        Schedule::Simultaneous => {
            let mut psi = equatorial_state(0.0);
            for k in 1..=n {
                psi = create_noise(&psi, noise_mode(k).label)?;
            }
            let state = subtract_photons(&psi, &[Path::B], n)?.conditioned()?;
            optimal_attenuation(&state)?
        }
        Schedule::Sequential => {
            let mut state = MixedState::pure(equatorial_state(0.0))?;
            let mut last = None;
            for k in 1..=n {
                let label = noise_mode(k).label;
                state = state.map_branches(|s| create_noise(s, label))?;
                state = subtract_from_mixture(&state, &[Path::B], 1)?.conditioned()?;
                let opt = optimal_attenuation(&state)?;
                if k < n {
                    state = attenuated_result(&state, opt.eta_b, SEARCH_PHASE_POINTS)?.1;
                }
                last = Some(opt);
            }
            last.expect("n >= 1")
        }
    };
    Ok(NoiseScaling {
        n,
        schedule,
        visibility: opt.result.visibility,
        eta_b: opt.eta_b,
        success_probability: opt.result.success_probability,
    })
}

pub fn n_noise_visibility(n: usize, schedule: Schedule) -> Result<f64> {
    Ok(n_noise_scan(n, schedule)?.visibility)
}

// ---------------------------------------------------------------------------
// full two-photon interferometer

/// Efficiencies and coupler settings of the two-photon interferometer.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MzParams {
    /// Signal source coupling.
    pub eta_s: f64,
    /// Noise source coupling.
    pub eta_n: f64,
    /// Upper-arm transmissivity.
    pub eta_a: f64,
    /// Lower-arm internal transmissivity.
    pub eta_b: f64,
    /// First variable coupler (noise injection).
    pub t: f64,
    /// Second variable coupler (tap to the reference detector).
    pub t_r: f64,
    /// Probability that the noise photon is indistinguishable from the signal.
    pub p: f64,
}

impl MzParams {
    pub fn new(eta_s: f64, eta_n: f64, eta_a: f64, eta_b: f64, t: f64, t_r: f64, p: f64) -> Result<Self> {
        let params = Self {
            eta_s,
            eta_n,
            eta_a,
            eta_b,
            t,
            t_r,
            p,
        };
        params.validate()?;
        Ok(params)
    }

    /// Ideal sources and the balanced upper arm `η_A = η_B·T`.
    pub fn balanced(p: f64, eta_b: f64, t: f64, t_r: f64) -> Result<Self> {
        Self::new(1.0, 1.0, eta_b * t, eta_b, t, t_r, p)
    }

    pub fn validate(&self) -> Result<()> {
        check_unit("eta_s", self.eta_s)?;
        check_unit("eta_n", self.eta_n)?;
        check_unit("eta_a", self.eta_a)?;
        check_unit("eta_b", self.eta_b)?;
        check_unit("t", self.t)?;
        check_unit("t_r", self.t_r)?;
        check_unit("p", self.p)?;
        Ok(())
    }

    /// Settings under which a conditional fringe can be recorded: the
    /// coincidence rate vanishes identically at `T ∈ {0, 1}`.
    pub fn validate_conditional(&self) -> Result<()> {
        self.validate()?;
        if self.t <= 0.0 || self.t >= 1.0 {
            return Err(Error::OutOfRange {
                name: "t",
                value: self.t,
                range: "(0, 1): the coincidence rate vanishes at T = 0 and T = 1",
            });
        }
        if self.t_r >= 1.0 {
            return Err(Error::OutOfRange {
                name: "t_r",
                value: self.t_r,
                range: "[0, 1)",
            });
        }
        Ok(())
    }

    /// Visibility predicted by the closed form for these settings.
    pub fn closed_form_visibility(&self) -> Result<f64> {
        crate::oracle::v_closed_form(self.p, self.eta_a, self.eta_b, self.t, self.t_r)
    }
}

/// One distinguishability branch of the interferometer, up to (but not
/// including) the output combiner. With `phi = None` the phase is left for
/// [`mz_close`] to apply.
fn mz_branch(params: &MzParams, noise: Label, phi: Option<f64>) -> Result<PureState> {
    let signal = SIGNAL_A;
    let noise_in = LabeledMode::new(Path::NoiseIn, noise);
    let mut s = PureState::vacuum([signal, SIGNAL_B, noise_in, LabeledMode::signal(Path::Tap)])?
        .apply_creation(signal)?
        .apply_creation(noise_in)?;
    s = loss(&s, Path::A, params.eta_s)?;
    s = loss(&s, Path::NoiseIn, params.eta_n)?;
    s = beam_splitter(&s, &BeamSplitterSpec::new(Path::A, Path::B, 0.5)?)?;
    if let Some(phi) = phi {
        s = phase_shift(&s, Path::A, phi)?;
    }
    s = loss(&s, Path::A, params.eta_a)?;
    // intra-arm light transmits with √T, the noise crosses in with √(1−T)
    s = beam_splitter(&s, &BeamSplitterSpec::new(Path::B, Path::NoiseIn, params.t)?)?;
    s = loss(&s, Path::B, params.eta_b)?;
    beam_splitter(&s, &BeamSplitterSpec::new(Path::B, Path::Tap, 1.0 - params.t_r)?)
}

fn mz_state(params: &MzParams, phi: Option<f64>) -> Result<MixedState> {
    let mut branches = Vec::with_capacity(2);
    for (w, label) in [(params.p, Label::Signal), (1.0 - params.p, Label::Noise(0))] {
        if w > 0.0 {
            branches.push((w, mz_branch(params, label, phi)?));
        }
    }
    MixedState::from_unnormalized(branches)
}

/// Applies the interferometer phase on arm A and closes the interferometer.
///
/// The phase acts after the arm loss here rather than before; the two
/// orders differ only on the traced-out environment.
pub fn mz_close(prepared: &MixedState, phi: f64) -> Result<MixedState> {
    prepared.map_branches(|s| close_interferometer(&phase_shift(s, Path::A, phi)?))
}

fn coincidence_at_output(state: &MixedState) -> Result<f64> {
    coincidence_probability(state, DetectorSpec::on(Path::OutD), DetectorSpec::on(Path::Tap))
}

/// Probability of a coincidence between D and the reference detector at phase `phi`.
pub fn mz_coincidence(params: &MzParams, phi: f64) -> Result<f64> {
    params.validate()?;
    let state = mz_state(params, Some(phi))?;
    let closed = state.map_branches(close_interferometer)?;
    coincidence_at_output(&closed)
}

/// Coincidence fringe, building the phase-independent part once.
pub fn mz_fringe(params: &MzParams, n_points: usize) -> Result<FringeSample> {
    params.validate()?;
    let prepared = mz_state(params, None)?;
    try_fringe(|phi| coincidence_at_output(&mz_close(&prepared, phi)?), n_points)
}

pub fn mz_visibility(params: &MzParams) -> Result<ScenarioResult> {
    mz_visibility_with(params, DEFAULT_PHASE_POINTS)
}

pub fn mz_visibility_with(params: &MzParams, n_points: usize) -> Result<ScenarioResult> {
    params.validate_conditional()?;
    let fringe = mz_fringe(params, n_points)?;
    if fringe.max() <= 1e-15 {
        return Err(Error::ZeroCoincidence);
    }
    Ok(ScenarioResult {
        visibility: visibility(&fringe)?,
        success_probability: fringe.mean(),
        fringe,
    })
}

/// Simulated visibility as a function of `(η_A, T_R)` for the numeric
/// optimizer. Settings where the tap never fires score 0; any other failure
/// is NaN so the optimizer rejects it.
pub fn mz_objective(p: f64, eta_b: f64, t: f64, n_points: usize) -> impl Fn(f64, f64) -> f64 + Sync + Send {
    move |eta_a, t_r| {
        let params = MzParams {
            eta_s: 1.0,
            eta_n: 1.0,
            eta_a,
            eta_b,
            t,
            t_r,
            p,
        };
        match mz_visibility_with(&params, n_points) {
            Ok(r) => r.visibility,
            Err(Error::ZeroCoincidence) => 0.0,
            Err(_) => f64::NAN,
        }
    }
}

// ---------------------------------------------------------------------------
// HOM dip

/// Coincidence probability for a σ photon in A and a noise photon in B (σ
/// with probability `p`, ν otherwise) meeting at a splitter of transmissivity `t`.
pub fn hom_coincidence(p: f64, t: f64) -> Result<f64> {
    check_unit("p", p)?;
    let spec = BeamSplitterSpec::new(Path::A, Path::B, t)?;
    let mut branches = Vec::new();
    for (w, label) in [(p, Label::Signal), (1.0 - p, Label::Noise(0))] {
        if w > 0.0 {
            let noise = LabeledMode::new(Path::B, label);
            let s = PureState::vacuum([SIGNAL_A, noise])?
                .apply_creation(SIGNAL_A)?
                .apply_creation(noise)?;
            branches.push((w, beam_splitter(&s, &spec)?));
        }
    }
    let state = MixedState::from_unnormalized(branches)?;
    Ok(state.pattern_probability(&[Path::A, Path::B], &[]))
}

/// Relative depth of the coincidence dip against fully distinguishable photons.
pub fn hom_dip_visibility(p: f64, t: f64) -> Result<f64> {
    let reference = hom_coincidence(0.0, t)?;
    if reference <= 0.0 {
        return Err(Error::ZeroCoincidence);
    }
    Ok(1.0 - hom_coincidence(p, t)? / reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn simple_model_examples() {
        let r = simple_model(SimpleCase::Indistinguishable, 0.25).unwrap();
        assert_abs_diff_eq!(r.visibility, 1.0, epsilon = 1e-9);
        let r = simple_model(SimpleCase::Distinguishable, 0.5).unwrap();
        assert_abs_diff_eq!(r.visibility, FRAC_1_SQRT_2, epsilon = 1e-9);
        let r = simple_model(SimpleCase::Distinguishable, 1.0).unwrap();
        assert_abs_diff_eq!(r.visibility, 2.0 / 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.success_probability, 1.0, epsilon = 1e-12);
        assert!(simple_model(SimpleCase::Distinguishable, 0.0).is_err());
    }

    #[test]
    fn simple_model_success_probability() {
        // indistinguishable: (|A⟩ + 2|B⟩)/√5, keeps B with η → (1 + 4η)/5
        let r = simple_model(SimpleCase::Indistinguishable, 0.25).unwrap();
        assert_abs_diff_eq!(r.success_probability, 0.4, epsilon = 1e-12);
    }

    #[test]
    fn deferred_phase_matches_input_phase() {
        let d = DetectorSpec::on(Path::OutD);
        for case in [
            SimpleCase::Distinguishable,
            SimpleCase::Indistinguishable,
            SimpleCase::Mixture(0.4),
        ] {
            let base = simple_model_state(case, 0.0).unwrap();
            for phi in [0.0, 0.8, 2.5, 4.4] {
                let direct = simple_model_state(case, phi)
                    .unwrap()
                    .map_branches(close_interferometer)
                    .unwrap();
                let deferred = base
                    .map_branches(|s| close_interferometer(&phase_shift(s, Path::A, -phi)?))
                    .unwrap();
                let a = crate::detection::click_probability(&direct, &[d], &[]).unwrap();
                let b = crate::detection::click_probability(&deferred, &[d], &[]).unwrap();
                assert_abs_diff_eq!(a, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn mz_prepared_fringe_matches_literal_pipeline() {
        let params = MzParams::new(0.9, 0.7, 0.35, 0.8, 0.4, 0.6, 0.3).unwrap();
        let f = mz_fringe(&params, 16).unwrap();
        for (phi, p) in f.phases.iter().zip(&f.probabilities) {
            assert_abs_diff_eq!(mz_coincidence(&params, *phi).unwrap(), *p, epsilon = 1e-14);
        }
    }

    #[test]
    fn mz_coincidence_matches_branch_bookkeeping() {
        // p = 0, η_A = η_B = 1, T = T_R = 1/2, φ = 0
        let params = MzParams::new(1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 0.0).unwrap();
        let (t, tr, ea, eb) = (0.5f64, 0.5f64, 1.0f64, 1.0f64);
        let x = t * eb * (1.0 - tr);
        let want = (1.0 - t) * eb * tr / 4.0 * (ea + 2.0 * x + 2.0 * (ea * x).sqrt());
        assert_abs_diff_eq!(mz_coincidence(&params, 0.0).unwrap(), want, epsilon = 1e-14);
    }

    #[test]
    fn mz_limits_vanish() {
        let at_t1 = MzParams::new(1.0, 1.0, 0.6, 0.9, 1.0, 0.5, 0.4).unwrap();
        let no_tap = MzParams::new(1.0, 1.0, 0.6, 0.9, 0.4, 0.0, 0.4).unwrap();
        for phi in [0.0, 1.0, 3.0] {
            assert!(mz_coincidence(&at_t1, phi).unwrap() < 1e-15);
            assert!(mz_coincidence(&no_tap, phi).unwrap() < 1e-15);
        }
        assert!(matches!(
            mz_visibility(&at_t1),
            Err(Error::OutOfRange { name: "t", .. })
        ));
        assert_eq!(mz_visibility(&no_tap), Err(Error::ZeroCoincidence));
    }

    #[test]
    fn mz_examples() {
        let ind = MzParams::balanced(1.0, 0.8, 0.3, 0.75).unwrap();
        assert_abs_diff_eq!(mz_visibility(&ind).unwrap().visibility, 1.0, epsilon = 1e-9);
        let dis = MzParams::balanced(0.0, 0.8, 0.3, 0.5).unwrap();
        assert_abs_diff_eq!(mz_visibility(&dis).unwrap().visibility, FRAC_1_SQRT_2, epsilon = 1e-9);
        // η_A = η_B = T = 1 sits on the balance line, where V does not depend
        // on T; the simulator cannot run at T = 1 itself, so approach it.
        let want = 4.0 * 0.5f64.sqrt() / 3.0;
        assert_abs_diff_eq!(
            crate::oracle::v_closed_form(1.0, 1.0, 1.0, 1.0, 0.5).unwrap(),
            want,
            epsilon = 1e-12
        );
        for t in [0.5, 0.9, 0.999] {
            let near = MzParams::balanced(1.0, 1.0, t, 0.5).unwrap();
            assert_abs_diff_eq!(mz_visibility(&near).unwrap().visibility, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn mz_params_validation() {
        assert!(MzParams::new(1.0, 1.0, 1.0, 1.2, 0.5, 0.5, 0.0).is_err());
        assert!(MzParams::balanced(-0.1, 1.0, 0.5, 0.5).is_err());
        let p = MzParams::balanced(0.5, 1.0, 0.0, 0.5).unwrap();
        assert!(p.validate_conditional().is_err());
        let p = MzParams::balanced(0.5, 1.0, 0.5, 1.0).unwrap();
        assert!(p.validate_conditional().is_err());
    }

    #[test]
    fn n_noise_guards() {
        assert_eq!(n_noise_visibility(0, Schedule::Simultaneous), Err(Error::NoiseCount(0)));
        assert_eq!(n_noise_visibility(7, Schedule::Sequential), Err(Error::NoiseCount(7)));
    }

    #[test]
    fn n_noise_small_cases() {
        for schedule in [Schedule::Simultaneous, Schedule::Sequential] {
            assert_abs_diff_eq!(n_noise_visibility(1, schedule).unwrap(), FRAC_1_SQRT_2, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(
            n_noise_visibility(3, Schedule::Simultaneous).unwrap(),
            0.5,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            n_noise_visibility(2, Schedule::Sequential).unwrap(),
            0.5,
            epsilon = 1e-9
        );
    }

    #[test]
    fn hom_examples() {
        assert_abs_diff_eq!(hom_coincidence(1.0, 0.5).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(hom_coincidence(0.0, 0.5).unwrap(), 0.5, epsilon = 1e-15);
        for p in [0.0, 0.25, 0.5, 1.0] {
            assert_abs_diff_eq!(hom_coincidence(p, 0.5).unwrap(), (1.0 - p) / 2.0, epsilon = 1e-15);
            assert_abs_diff_eq!(hom_dip_visibility(p, 0.5).unwrap(), p, epsilon = 1e-12);
        }
    }
}
