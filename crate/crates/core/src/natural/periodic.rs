use std::f64::consts::TAU;

use super::integrate::uniform_grid;
use super::position::integrate_position;
use crate::error::{Error, Result};
use crate::geomcore::{FrenetApparatus, Interval, ScalarProfile, Vec3};

/// Denominator cap for continued-fraction reconstruction.
pub const MAX_DENOMINATOR: i64 = 1000;
/// Tolerance for accepting a reconstructed fraction.
pub const RATIONAL_TOL: f64 = 1e-9;

/// `∫τ ds` over `interval` (radians).
pub fn total_torsion(tau: &ScalarProfile, interval: Interval) -> Result<f64> {
    tau.domain().check(interval.lo)?;
    tau.domain().check(interval.hi)?;
    tau.integral(interval.lo, interval.hi)
}

/// Outcome of [`frame_periodicity_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Periodicity {
    pub periodic: bool,
    /// Largest frame-component difference between `s` and `s + period`.
    pub residual: f64,
}

/// Compares the frame at every grid node `s` with the frame at `s + period`
/// over the overlap of the sampled range with its shift.
pub fn frame_periodicity_check(apparatus: &FrenetApparatus, period: f64, tol: f64) -> Result<Periodicity> {
    let grid = apparatus
        .sample_grid()
        .ok_or_else(|| Error::InvalidParameter("apparatus has no sampled frame field".into()))?;
    let (first, last) = (grid[0], grid[grid.len() - 1]);
    if !(period.is_finite() && period > 0.0) {
        return Err(Error::InvalidParameter(format!("period must be positive, got {period}")));
    }
    if period > last - first {
        return Err(Error::InvalidParameter(format!(
            "period {period} exceeds the sampled range {}",
            last - first
        )));
    }
    let mut residual: f64 = 0.0;
    for &s in grid.iter().take_while(|&&s| s + period <= last) {
        let a = apparatus.frame_at(s)?;
        let b = apparatus.frame_at(s + period)?;
        residual = residual.max(a.max_component_diff(&b));
    }
    Ok(Periodicity {
        periodic: residual <= tol,
        residual,
    })
}

/// Displacement `‖x(s0 + period) − x(s0)‖` of the curve traced by the
/// tangent field, from composite Simpson quadrature on an even number of
/// panels no wider than `step`. Zero for a curve that closes after `period`.
pub fn closure_residual(apparatus: &FrenetApparatus, s0: f64, period: f64, step: f64) -> Result<f64> {
    if !(period.is_finite() && period > 0.0 && step.is_finite() && step > 0.0) {
        return Err(Error::InvalidParameter(format!("invalid period {period} or step {step}")));
    }
    let panels = (2.0 * (0.5 * period / step).ceil()).max(2.0);
    let grid = uniform_grid(s0, s0 + period, period / panels)?;
    let samples = integrate_position(&apparatus.tabulate(&grid)?, Vec3::ZERO)?;
    Ok(samples.points[samples.len() - 1].norm())
}

/// How a ratio was classified as rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rationality {
    /// Given as an exact fraction `p/q` (reduced, `q > 0`).
    Exact { p: i64, q: i64 },
    /// A fraction within [`RATIONAL_TOL`] with `q ≤` [`MAX_DENOMINATOR`]. This
    /// is a numerical observation, not a proof of rationality.
    Approximate { p: i64, q: i64 },
    /// No fraction with an admissible denominator was found.
    NotFound,
}

impl Rationality {
    pub fn fraction(&self) -> Option<(i64, i64)> {
        match *self {
            Rationality::Exact { p, q } | Rationality::Approximate { p, q } => Some((p, q)),
            Rationality::NotFound => None,
        }
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Reduces an exact fraction.
pub fn exact_rational(p: i64, q: i64) -> Result<Rationality> {
    if q == 0 {
        return Err(Error::InvalidParameter("zero denominator".into()));
    }
    let g = gcd(p, q).max(1);
    let sign = if q < 0 { -1 } else { 1 };
    Ok(Rationality::Exact {
        p: sign * p / g,
        q: sign * q / g,
    })
}

/// Continued-fraction reconstruction of a floating value.
pub fn approximate_rational(x: f64) -> Rationality {
    if !x.is_finite() {
        return Rationality::NotFound;
    }
    // convergents h/k
    let (mut h_prev, mut h) = (0i64, 1i64);
    let (mut k_prev, mut k) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        (h_prev, h) = (h, a * h + h_prev);
        (k_prev, k) = (k, a * k + k_prev);
        if k > MAX_DENOMINATOR {
            break;
        }
        if (x - h as f64 / k as f64).abs() <= RATIONAL_TOL {
            return Rationality::Approximate { p: h, q: k };
        }
        let frac = r - a as f64;
        if frac == 0.0 {
            break;
        }
        r = 1.0 / frac;
    }
    Rationality::NotFound
}

/// Period of a successor frame field.
///
/// If the source frame has period `source_period` and accumulates
/// `total_torsion` over it, the successor frame returns to itself after
/// `q` source periods, where `total_torsion / 2π = p/q` in lowest terms.
/// `None` when no admissible fraction is found.
pub fn successor_frame_period(source_period: f64, rationality: Rationality) -> Option<f64> {
    rationality.fraction().map(|(_, q)| q as f64 * source_period)
}

/// Classifies `total_torsion / 2π` by continued fractions.
pub fn torsion_ratio(total_torsion: f64) -> Rationality {
    approximate_rational(total_torsion / TAU)
}
