//! Derivative-free maximization: golden-section line search and a coarse
//! grid scan refined coordinate-wise.

use crate::error::{Error, Result};
use crate::exec::Exec;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct LineMax {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `tol`. The endpoints are also
/// checked, so a monotone `f` returns the better edge.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<LineMax>
where
    F: Fn(f64) -> Result<f64>,
{
    let eval = |x: f64| -> Result<f64> {
        let v = f(x)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(x, v))
        }
    };
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let mut evaluations = 2;
    while (b - a) > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d)?;
        }
        evaluations += 1;
    }
    let (mut x, mut value) = if fc >= fd { (c, fc) } else { (d, fd) };
    for edge in [lo.min(hi), lo.max(hi)] {
        let v = eval(edge)?;
        evaluations += 1;
        if v > value {
            x = edge;
            value = v;
        }
    }
    Ok(LineMax { x, value, evaluations })
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PlaneMax {
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

/// Axis-aligned search box.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Box2 {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

/// Scans an `n × n` grid of cell centres in `x` and left edges in `y`, then
/// refines by alternating golden-section searches along each coordinate
/// until a sweep moves neither coordinate by more than `tol`.
///
/// Ties on the grid go to the smaller `y`, then the smaller `x`.
pub fn grid_then_golden_max<F>(f: F, domain: Box2, n: usize, tol: f64, exec: Exec) -> Result<PlaneMax>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    let checked = |x: f64, y: f64| -> Result<f64> {
        let v = f(x, y);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(x, y))
        }
    };
    let (x0, x1) = domain.x;
    let (y0, y1) = domain.y;
    let dx = (x1 - x0) / n as f64;
    let dy = (y1 - y0) / n as f64;
    let cells: Vec<(f64, f64)> = (0..n)
        .flat_map(|j| (0..n).map(move |i| (x0 + (i as f64 + 0.5) * dx, y0 + j as f64 * dy)))
        .collect();
    let values = exec.try_map(&cells, |&(x, y)| checked(x, y))?;

    // cells are ordered by y then x, so the first strict maximum wins ties
    let mut best = 0;
    for (k, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = k;
        }
    }
    let (mut x, mut y) = cells[best];
    let mut value = values[best];

    for _ in 0..100 {
        let (px, py) = (x, y);
        let lx = golden_section_max(|t| checked(t, y), (x - dx).max(x0), (x + dx).min(x1), tol)?;
        if lx.value > value {
            x = lx.x;
            value = lx.value;
        }
        let ly = golden_section_max(|t| checked(x, t), (y - dy).max(y0), (y + dy).min(y1), tol)?;
        if ly.value > value {
            y = ly.x;
            value = ly.value;
        }
        if (x - px).abs().max((y - py).abs()) <= tol {
            break;
        }
    }
    Ok(PlaneMax { x, y, value })
}
