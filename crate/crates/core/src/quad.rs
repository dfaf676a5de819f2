//! Quadrature helpers shared by profiles and position recovery.

use crate::error::{Error, Result};
use crate::geomcore::Vec3;

const ADAPTIVE_TOL: f64 = 1e-14;
const MAX_DEPTH: u32 = 40;
const INITIAL_PANELS: usize = 16;

/// Adaptive Simpson quadrature of a fallible integrand over `[a, b]`.
///
/// The range is split into a fixed number of panels first so that
/// oscillatory integrands are not accepted on a coincidental early match.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if a == b {
        return Ok(0.0);
    }
    let h = (b - a) / INITIAL_PANELS as f64;
    let mut total = 0.0;
    for i in 0..INITIAL_PANELS {
        let lo = a + i as f64 * h;
        let hi = if i + 1 == INITIAL_PANELS { b } else { a + (i + 1) as f64 * h };
        let (flo, fhi) = (f(lo)?, f(hi)?);
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid)?;
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        let tol = ADAPTIVE_TOL * (1.0 + whole.abs()) / INITIAL_PANELS as f64;
        total += refine(f, lo, hi, flo, fmid, fhi, whole, tol, MAX_DEPTH)?;
    }
    if total.is_finite() {
        Ok(total)
    } else {
        Err(Error::Quadrature { a, b })
    }
}

#[allow(clippy::too_many_arguments)]
fn refine<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        return Err(Error::Quadrature { a, b });
    }
    if delta.abs() <= 15.0 * tol || (b - a).abs() < 1e-15 * (1.0 + a.abs()) {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Quadrature { a, b });
    }
    Ok(refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

/// Cumulative integral of uniformly spaced vector samples.
///
/// Whole Simpson panels give the even nodes; the odd node inside each panel
/// uses the three-point half-panel rule `h/12 (5 f0 + 8 f1 − f2)`. When the
/// node count is even the last interval is closed with a trapezoid step.
pub fn cumulative_simpson(values: &[Vec3], h: f64) -> Result<Vec<Vec3>> {
    let n = values.len();
    if n < 3 {
        return Err(Error::TooFewNodes { needed: 3, got: n });
    }
    let mut out = Vec::with_capacity(n);
    out.push(Vec3::ZERO);
    let mut acc = Vec3::ZERO;
    let mut i = 0;
    while i + 2 < n {
        let (f0, f1, f2) = (values[i], values[i + 1], values[i + 2]);
        out.push(acc + (f0 * 5.0 + f1 * 8.0 - f2) * (h / 12.0));
        acc += (f0 + f1 * 4.0 + f2) * (h / 3.0);
        out.push(acc);
        i += 2;
    }
    if out.len() < n {
        acc += (values[n - 2] + values[n - 1]) * (0.5 * h);
        out.push(acc);
    }
    Ok(out)
}
