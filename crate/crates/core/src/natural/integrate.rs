use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geomcore::{frame_defect, Frame, FrameField, FrenetApparatus, Interval, SampledFrames, ScalarProfile, Vec3, ORTHO_TOL};

/// Fixed-step integration settings for the Frenet equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationConfig {
    step: f64,
    renorm_every: usize,
}

impl IntegrationConfig {
    /// Tag of the one-step method used; there is only one.
    pub const METHOD: &'static str = "rk4-classic";

    pub fn new(step: f64, renorm_every: usize) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidParameter(format!("step must be positive, got {step}")));
        }
        if renorm_every == 0 {
            return Err(Error::InvalidParameter("renorm_every must be at least 1".into()));
        }
        Ok(IntegrationConfig { step, renorm_every })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn renorm_every(&self) -> usize {
        self.renorm_every
    }
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        IntegrationConfig {
            step: 1e-3,
            renorm_every: 1,
        }
    }
}

/// Uniform grid on `[lo, hi]` whose spacing is the largest value not
/// exceeding `step` that divides the range evenly. Both ends are exact.
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::InvalidParameter(format!("invalid range [{lo}, {hi}]")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {step}")));
    }
    let length = hi - lo;
    if step > length {
        return Err(Error::StepTooLarge { step, length });
    }
    let n = ((length / step) - 1e-9).ceil().max(1.0) as usize;
    let h = length / n as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| lo + i as f64 * h).collect();
    grid.push(hi);
    Ok(grid)
}

type State = [Vec3; 3];

fn rhs(kappa: f64, tau: f64, y: &State) -> State {
    let [t, n, b] = *y;
    [n * kappa, b * tau - t * kappa, n * (-tau)]
}

fn axpy(y: &State, k: &State, h: f64) -> State {
    [y[0] + k[0] * h, y[1] + k[1] * h, y[2] + k[2] * h]
}

/// Solves `T' = κN, N' = −κT + τB, B' = −τN` on a closed range with the
/// classical fourth-order Runge–Kutta method.
///
/// Every `renorm_every` steps the frame is re-orthonormalized by Gram–Schmidt
/// anchored at the tangent. The result is an apparatus with sampled frames on
/// the uniform grid of [`uniform_grid`]. Order-four convergence assumes smooth
/// profiles; discontinuous sampled data degrades it.
pub fn integrate_frenet(
    kappa: &ScalarProfile,
    tau: &ScalarProfile,
    initial: &Frame,
    s_range: Interval,
    cfg: &IntegrationConfig,
) -> Result<FrenetApparatus> {
    let defect = frame_defect(initial);
    if defect > ORTHO_TOL || defect.is_nan() {
        return Err(Error::InvalidFrame { defect });
    }
    let (lo, hi) = (s_range.lo, s_range.hi);
    let grid = uniform_grid(lo, hi, cfg.step)?;
    let eval = |s: f64| -> Result<(f64, f64)> { Ok((kappa.eval(s)?, tau.eval(s)?)) };

    let mut frames = Vec::with_capacity(grid.len());
    let mut y: State = initial.axes();
    // Kahan compensation of the accumulated increments
    let mut carry: State = [Vec3::ZERO; 3];
    frames.push(*initial);
    let mut kt_start = eval(grid[0])?;
    for (i, w) in grid.windows(2).enumerate() {
        let (s0, s1) = (w[0], w[1]);
        let h = s1 - s0;
        let kt_mid = eval(s0 + 0.5 * h)?;
        let kt_end = eval(s1)?;
        let k1 = rhs(kt_start.0, kt_start.1, &y);
        let k2 = rhs(kt_mid.0, kt_mid.1, &axpy(&y, &k1, 0.5 * h));
        let k3 = rhs(kt_mid.0, kt_mid.1, &axpy(&y, &k2, 0.5 * h));
        let k4 = rhs(kt_end.0, kt_end.1, &axpy(&y, &k3, h));
        for j in 0..3 {
            let incr = (k1[j] + (k2[j] + k3[j]) * 2.0 + k4[j]) * (h / 6.0) - carry[j];
            let sum = y[j] + incr;
            carry[j] = (sum - y[j]) - incr;
            y[j] = sum;
        }
        let mut frame = Frame::new_unchecked(y[0], y[1], y[2]);
        if (i + 1) % cfg.renorm_every == 0 {
            frame = frame.orthonormalized();
            y = frame.axes();
        }
        let defect = frame_defect(&frame);
        if defect > ORTHO_TOL || defect.is_nan() {
            return Err(Error::InvalidFrame { defect });
        }
        frames.push(frame);
        kt_start = kt_end;
    }

    let generic = sampled_generic(kappa, tau, &grid)?;
    let range = Interval::closed(lo, hi)?;
    FrenetApparatus::new(
        FrameField::Sampled(Arc::new(SampledFrames::new(grid, frames)?)),
        kappa.clone().restricted(range)?,
        tau.clone().restricted(range)?,
        generic,
    )
}

const VANISHING: f64 = 1e-12;

/// Grid approximation of genericity: no run of two or more consecutive nodes
/// with vanishing curvature may carry non-vanishing torsion.
fn sampled_generic(kappa: &ScalarProfile, tau: &ScalarProfile, grid: &[f64]) -> Result<bool> {
    let mut run = 0usize;
    let mut run_has_torsion = false;
    for &s in grid {
        if kappa.eval(s)?.abs() <= VANISHING {
            run += 1;
            run_has_torsion |= tau.eval(s)?.abs() > VANISHING;
            if run >= 2 && run_has_torsion {
                return Ok(false);
            }
        } else {
            run = 0;
            run_has_torsion = false;
        }
    }
    Ok(true)
}
