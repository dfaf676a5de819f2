use super::position::{uniform_spacing, CurveSamples};
use crate::error::{Error, Result};
use crate::geomcore::{ScalarProfile, Vec3};

/// Curvature below which the torsion estimate is reported as zero.
pub const DEGENERATE_CURVATURE: f64 = 1e-8;

// Second-order finite-difference derivative of the given order (1..=3)
// at node `i`; central where the stencil fits, one-sided otherwise.
fn derivative(v: &[Vec3], i: usize, order: u8, h: f64) -> Vec3 {
    let n = v.len();
    match order {
        1 => {
            if i == 0 {
                (v[0] * -3.0 + v[1] * 4.0 - v[2]) * (0.5 / h)
            } else if i == n - 1 {
                (v[n - 1] * 3.0 - v[n - 2] * 4.0 + v[n - 3]) * (0.5 / h)
            } else {
                (v[i + 1] - v[i - 1]) * (0.5 / h)
            }
        }
        2 => {
            if i == 0 {
                (v[0] * 2.0 - v[1] * 5.0 + v[2] * 4.0 - v[3]) * (1.0 / (h * h))
            } else if i == n - 1 {
                (v[n - 1] * 2.0 - v[n - 2] * 5.0 + v[n - 3] * 4.0 - v[n - 4]) * (1.0 / (h * h))
            } else {
                (v[i + 1] - v[i] * 2.0 + v[i - 1]) * (1.0 / (h * h))
            }
        }
        _ => {
            // boundary nodes reuse the nearest central stencil
            let j = i.clamp(2, n - 3);
            (v[j + 2] - v[j + 1] * 2.0 + v[j - 1] * 2.0 - v[j - 2]) * (0.5 / (h * h * h))
        }
    }
}

/// Estimates curvature and torsion from sampled curve data.
///
/// With frames present, `κ = <T', N>` and `τ = <N', B>` from differenced
/// frames (signed curvature). Without frames, the classical formulas on
/// differenced positions are used and `κ ≥ 0`. Central differences are
/// second-order accurate at interior nodes. Where `|κ| < 1e-8` the torsion
/// is reported as `0`.
pub fn estimate_curvature_torsion(samples: &CurveSamples) -> Result<(ScalarProfile, ScalarProfile)> {
    let n = samples.len();
    if n < 5 {
        return Err(Error::TooFewNodes { needed: 5, got: n });
    }
    let h = uniform_spacing(&samples.s_grid)?;
    let (kappa, tau): (Vec<f64>, Vec<f64>) = match &samples.frames {
        Some(frames) => {
            let t: Vec<Vec3> = frames.iter().map(|f| f.t).collect();
            let nn: Vec<Vec3> = frames.iter().map(|f| f.n1).collect();
            (0..n)
                .map(|i| {
                    let k = derivative(&t, i, 1, h).dot(frames[i].n1);
                    let tau = if k.abs() < DEGENERATE_CURVATURE {
                        0.0
                    } else {
                        derivative(&nn, i, 1, h).dot(frames[i].n2)
                    };
                    (k, tau)
                })
                .unzip()
        }
        None => {
            let x = &samples.points;
            (0..n)
                .map(|i| {
                    let d1 = derivative(x, i, 1, h);
                    let d2 = derivative(x, i, 2, h);
                    let c = d1.cross(d2);
                    let speed = d1.norm();
                    let k = c.norm() / (speed * speed * speed);
                    let tau = if k < DEGENERATE_CURVATURE {
                        0.0
                    } else {
                        c.dot(derivative(x, i, 3, h)) / c.dot(c)
                    };
                    (k, tau)
                })
                .unzip()
        }
    };
    Ok((
        ScalarProfile::sampled(samples.s_grid.clone(), kappa)?,
        ScalarProfile::sampled(samples.s_grid.clone(), tau)?,
    ))
}
