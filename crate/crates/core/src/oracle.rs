//! Closed-form visibilities and optimal settings, plus a numeric optimizer
//! that checks them without assuming them.
//!
//! Nothing here touches the Fock-space simulator; these formulas are the
//! independent side of every simulator-versus-theory comparison.

use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};
use crate::exec::Exec;
use crate::search::{golden_section_max, grid_then_golden_max, Box2};

/// Grid resolution of the coarse scan in [`optimize_numeric`].
pub const GRID_CELLS: usize = 64;
/// Golden-section tolerance of the refinement stage.
pub const REFINE_TOL: f64 = 1e-6;

/// Conditional fringe visibility of the full interferometer with a noise
/// photon that is indistinguishable with probability `p`:
///
/// `V = 2(1+p)√(η_A η_B T (1−T_R)) / (η_A + 2(1+p) η_B T (1−T_R))`
pub fn v_closed_form(p: f64, eta_a: f64, eta_b: f64, t: f64, t_r: f64) -> Result<f64> {
    check_unit("p", p)?;
    check_unit("eta_a", eta_a)?;
    check_unit("eta_b", eta_b)?;
    check_unit("t", t)?;
    check_unit("t_r", t_r)?;
    let x = eta_b * t * (1.0 - t_r);
    let k = 2.0 * (1.0 + p);
    let den = eta_a + k * x;
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(k * (eta_a * x).sqrt() / den)
}

/// Fully indistinguishable noise photon.
pub fn v_ind(eta_a: f64, eta_b: f64, t: f64, t_r: f64) -> Result<f64> {
    v_closed_form(1.0, eta_a, eta_b, t, t_r)
}

/// Fully distinguishable noise photon.
pub fn v_dis(eta_a: f64, eta_b: f64, t: f64, t_r: f64) -> Result<f64> {
    v_closed_form(0.0, eta_a, eta_b, t, t_r)
}

/// Best reachable visibility, `√((1+p)/2)`.
pub fn v_max(p: f64) -> Result<f64> {
    check_unit("p", p)?;
    Ok(((1.0 + p) / 2.0).sqrt())
}

/// Tap ratio that attains [`v_max`] when `η_A = η_B·T`.
pub fn optimal_tap_ratio(p: f64) -> Result<f64> {
    check_unit("p", p)?;
    Ok((1.0 + 2.0 * p) / (2.0 * (1.0 + p)))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OptimumMethod {
    ClosedForm,
    Numeric,
}

/// Optimal setting under the balancing relation `η_A = η_B·T`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimumReport {
    pub p: f64,
    pub t_r_star: f64,
    /// `η_B·T` when the constraint is evaluated at concrete values, `None`
    /// for the closed form which holds for all of them.
    pub eta_a_star: Option<f64>,
    pub v_max: f64,
    pub method: OptimumMethod,
    /// Unconstrained maximizer `(η_A, T_R)` of the grid-plus-golden search.
    /// The visibility only depends on `η_A / (η_B T (1−T_R))`, so this is one
    /// point on a ridge of equal maxima.
    pub free_argmax: Option<(f64, f64)>,
}

impl OptimumReport {
    pub fn constraint(&self) -> &'static str {
        "eta_a = eta_b * t"
    }
}

pub fn optimal_params(p: f64) -> Result<OptimumReport> {
    Ok(OptimumReport {
        p,
        t_r_star: optimal_tap_ratio(p)?,
        eta_a_star: None,
        v_max: v_max(p)?,
        method: OptimumMethod::ClosedForm,
        free_argmax: None,
    })
}

/// Maximizes `objective(η_A, T_R)` numerically for fixed `η_B`, `T`.
///
/// Two stages share the same machinery: a 64×64 grid over
/// `(η_A, T_R) ∈ (0,1)×[0,1)` refined coordinate-wise by golden section gives
/// the global maximum value; a 64-point scan of `T_R` along `η_A = η_B·T`,
/// refined the same way, gives the balanced optimum `t_r_star`. The reported
/// `v_max` is the larger of the two values.
pub fn optimize_numeric<F>(p: f64, eta_b: f64, t: f64, objective: F, exec: Exec) -> Result<OptimumReport>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    check_unit("p", p)?;
    check_unit("eta_b", eta_b)?;
    check_unit("t", t)?;
    let domain = Box2 {
        x: (0.0, 1.0),
        y: (0.0, 1.0),
    };
    let free = grid_then_golden_max(&objective, domain, GRID_CELLS, REFINE_TOL, exec)?;

    let eta_a = eta_b * t;
    let checked = |t_r: f64| -> Result<f64> {
        let v = objective(eta_a, t_r);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(eta_a, t_r))
        }
    };
    let step = 1.0 / GRID_CELLS as f64;
    let scan: Vec<f64> = (0..GRID_CELLS).map(|j| j as f64 * step).collect();
    let values = exec.try_map(&scan, |&t_r| checked(t_r))?;
    let mut best = 0;
    for (j, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = j;
        }
    }
    let lo = (scan[best] - step).max(0.0);
    let hi = (scan[best] + step).min(1.0 - 1e-12);
    let line = golden_section_max(checked, lo, hi, REFINE_TOL)?;

    Ok(OptimumReport {
        p,
        t_r_star: line.x,
        eta_a_star: Some(eta_a),
        v_max: free.value.max(line.value),
        method: OptimumMethod::Numeric,
        free_argmax: Some((free.x, free.y)),
    })
}

/// Simple model, after subtraction and attenuation `η_B` of the lower arm.
///
/// With the noise photon indistinguishable with probability `p` and the
/// branches weighted by their subtraction rates:
/// `V = 2√η_B (3+p) / (3 − p + η_B (6 + 2p))`.
pub fn v_simple_model(p: f64, eta_b: f64) -> Result<f64> {
    check_unit("p", p)?;
    check_unit("eta_b", eta_b)?;
    let den = 3.0 - p + eta_b * (6.0 + 2.0 * p);
    Ok(2.0 * eta_b.sqrt() * (3.0 + p) / den)
}

/// `N` distinguishable photons created and removed all at once, optimal attenuation.
pub fn v_dis_simultaneous(n: usize) -> f64 {
    1.0 / ((n + 1) as f64).sqrt()
}

/// `N` create-then-remove cycles, optimal attenuation.
pub fn v_dis_sequential(n: usize) -> f64 {
    std::f64::consts::FRAC_1_SQRT_2.powi(n as i32)
}

/// Coincidence probability of a σ photon and a photon that is σ with
/// probability `p` (ν otherwise) meeting at a splitter of transmissivity `t`.
pub fn hom_coincidence_closed_form(p: f64, t: f64) -> Result<f64> {
    check_unit("p", p)?;
    check_unit("t", t)?;
    let ind = (2.0 * t - 1.0).powi(2);
    let dis = t * t + (1.0 - t) * (1.0 - t);
    Ok(p * ind + (1.0 - p) * dis)
}

/// Relative depth of the coincidence dip, `1 − C(p)/C(0)`.
pub fn hom_dip_visibility_closed_form(p: f64, t: f64) -> Result<f64> {
    check_unit("p", p)?;
    check_unit("t", t)?;
    let dis = t * t + (1.0 - t) * (1.0 - t);
    Ok(2.0 * p * t * (1.0 - t) / dis)
}
