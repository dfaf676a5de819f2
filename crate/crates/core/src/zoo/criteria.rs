use crate::error::{Error, Result};
use crate::geomcore::{Interval, PhaseFunction, ScalarProfile};

/// Exclusion band kept between `m²(∫κ)²` and its singular value `1`.
pub const DOMAIN_MARGIN: f64 = 1e-6;

const SCAN_STEP: f64 = 1e-2;
const SCAN_LIMIT: f64 = 1e4;

/// Torsion that turns `kappa` into a slant-helix development:
/// `τ = κ · m I / sqrt(1 − m² I²)` with `I(s) = c + ∫κ`, anchored at the
/// reference point of the curvature domain.
///
/// The returned domain is the connected set around the anchor on which
/// `m² I² < 1 − DOMAIN_MARGIN`. Its ends are located by scanning outward in
/// steps of `1e-2` (at most `1e4` arc-length units on an unbounded side) and
/// bisecting. Interior maxima of `|mI|` inside a scan step are located from
/// the sign of its derivative, so brief excursions above the bound are found.
pub fn torsion_from_curvature(kappa: &ScalarProfile, m: f64, integration_constant: f64) -> Result<ScalarProfile> {
    if !m.is_finite() || m == 0.0 {
        return Err(Error::InvalidParameter("m must be finite and non-zero".into()));
    }
    let bound = (1.0 - DOMAIN_MARGIN).sqrt();
    if (m * integration_constant).abs() >= bound {
        return Err(Error::EmptyDomain);
    }
    if kappa.is_identically_zero() {
        // I is constant, so τ vanishes wherever κ is defined
        return ScalarProfile::constant(0.0).restricted(kappa.domain());
    }
    let domain = kappa.domain();
    let anchor = domain.anchor();
    let hi = restricted_end(kappa, m, integration_constant, anchor, 1.0, bound)?;
    let lo = restricted_end(kappa, m, integration_constant, anchor, -1.0, bound)?;
    let restricted = Interval::with_ends(lo.0, hi.0, lo.1, hi.1)?;
    Ok(ScalarProfile::slant_torsion(
        kappa.clone(),
        m,
        integration_constant,
        anchor,
        restricted,
    ))
}

// Walks from the anchor in direction `dir` and returns the end of the
// admissible region with its closedness.
fn restricted_end(kappa: &ScalarProfile, m: f64, c: f64, anchor: f64, dir: f64, bound: f64) -> Result<(f64, bool)> {
    let domain = kappa.domain();
    let (end, end_closed) = if dir > 0.0 { (domain.hi, domain.hi_closed) } else { (domain.lo, domain.lo_closed) };
    let far = if end.is_finite() { end } else { anchor + dir * SCAN_LIMIT };
    let far_reachable = end_closed || !end.is_finite();
    let mut s = anchor;
    let mut acc = c;
    loop {
        let remaining = (far - s).abs();
        if remaining <= 1e-12 * (1.0 + far.abs()) {
            return Ok((end, end_closed));
        }
        let step = if far_reachable { remaining.min(SCAN_STEP) } else { (0.5 * remaining).min(SCAN_STEP) };
        let next = if far_reachable && step == remaining { far } else { s + dir * step };
        let next_acc = acc + kappa.integral(s, next)?;
        // growth rate of |mI| along the walk; a sign change from + to −
        // marks an interior maximum that the end points alone would miss
        let growth = |x: f64, ix: f64| -> Result<f64> { Ok(dir * m * ix * kappa.eval(x)?) };
        let mut probe = (next, next_acc);
        if (m * next_acc).abs() < bound && growth(s, acc)? > 0.0 && growth(next, next_acc)? < 0.0 {
            let (mut rising, mut falling) = (s, next);
            for _ in 0..200 {
                let mid = 0.5 * (rising + falling);
                if mid == rising || mid == falling {
                    break;
                }
                if growth(mid, acc + kappa.integral(s, mid)?)? > 0.0 {
                    rising = mid;
                } else {
                    falling = mid;
                }
            }
            probe = (rising, acc + kappa.integral(s, rising)?);
        }
        if (m * probe.1).abs() >= bound {
            // bisect on |m I| − bound between s (inside) and the probe (outside)
            let (mut inside, mut outside) = (s, probe.0);
            for _ in 0..200 {
                let mid = 0.5 * (inside + outside);
                if mid == inside || mid == outside {
                    break;
                }
                if (m * (acc + kappa.integral(s, mid)?)).abs() < bound {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            return Ok((outside, false));
        }
        if next == far {
            return Ok((end, end_closed));
        }
        s = next;
        acc = next_acc;
    }
}

/// Threshold below which the curvature counts as vanishing.
pub const VANISHING_CURVATURE: f64 = 1e-12;

/// Evaluates `κ² / (κ² + τ²)^{3/2} · (τ/κ)'` at every grid node.
///
/// The derivative of `τ/κ` is formed by the quotient rule from central
/// differences of `τ` and `κ` with spacing `h`, giving the equivalent form
/// `(τ'κ − τκ') / (κ² + τ²)^{3/2}`, which stays well conditioned where `κ`
/// is small. Where `s ± h` leaves the profile domain a one-sided
/// second-order difference is used. For a slant helix the result is the
/// constant `m = cot θ`.
pub fn slant_slope_estimate(kappa: &ScalarProfile, tau: &ScalarProfile, grid: &[f64], h: f64) -> Result<Vec<f64>> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParameter(format!("difference step must be positive, got {h}")));
    }
    let domain = kappa.domain().intersect(&tau.domain())?;
    grid.iter()
        .map(|&s| {
            let k = kappa.eval(s)?;
            let t = tau.eval(s)?;
            if k.abs() <= VANISHING_CURVATURE {
                return Err(Error::VanishingCurvature { s });
            }
            let dk = difference(kappa, &domain, s, h)?;
            let dt = difference(tau, &domain, s, h)?;
            let w = k * k + t * t;
            Ok((dt * k - t * dk) / (w * w.sqrt()))
        })
        .collect()
}

fn difference(p: &ScalarProfile, domain: &Interval, s: f64, h: f64) -> Result<f64> {
    if domain.contains(s - h) && domain.contains(s + h) {
        Ok((p.eval(s + h)? - p.eval(s - h)?) / (2.0 * h))
    } else if domain.contains(s + 2.0 * h) {
        Ok((-3.0 * p.eval(s)? + 4.0 * p.eval(s + h)? - p.eval(s + 2.0 * h)?) / (2.0 * h))
    } else {
        Ok((3.0 * p.eval(s)? - 4.0 * p.eval(s - h)? + p.eval(s - 2.0 * h)?) / (2.0 * h))
    }
}

/// Residuals of the phase identities of a slant helix on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseIdentityResiduals {
    /// `max |sin φ − m∫κ|`
    pub sine: f64,
    /// `max |cos φ + m∫τ|`
    pub cosine: f64,
    /// `max |(m∫κ)² + (m∫τ)² − 1|`
    pub circle: f64,
}

impl PhaseIdentityResiduals {
    pub fn max(&self) -> f64 {
        self.sine.max(self.cosine).max(self.circle)
    }
}

/// Checks `sin φ = m∫κ`, `cos φ = −m∫τ` and the circle law on `grid`.
///
/// The integration constants are fixed at the first grid node so that both
/// identities hold there exactly. Reports [`Error::NotApplicable`] when `κ`
/// and `τ` vanish on the whole grid, since `φ` is then undetermined.
pub fn phase_curvature_identity_check(
    kappa: &ScalarProfile,
    tau: &ScalarProfile,
    m: f64,
    phase: &PhaseFunction,
    grid: &[f64],
) -> Result<PhaseIdentityResiduals> {
    let reference = *grid
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty grid".into()))?;
    let mut degenerate = true;
    for &s in grid {
        if kappa.eval(s)?.abs() > 1e-14 || tau.eval(s)?.abs() > 1e-14 {
            degenerate = false;
            break;
        }
    }
    if degenerate {
        return Err(Error::NotApplicable("curvature and torsion vanish; the phase is undetermined"));
    }
    let phi_ref = phase.eval(reference)?;
    let mut res = PhaseIdentityResiduals {
        sine: 0.0,
        cosine: 0.0,
        circle: 0.0,
    };
    for &s in grid {
        let phi = phase.eval(s)?;
        let total_k = phi_ref.sin() + m * kappa.integral(reference, s)?;
        let total_t = -phi_ref.cos() + m * tau.integral(reference, s)?;
        res.sine = res.sine.max((phi.sin() - total_k).abs());
        res.cosine = res.cosine.max((phi.cos() + total_t).abs());
        res.circle = res.circle.max((total_k * total_k + total_t * total_t - 1.0).abs());
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::Wave;
    use crate::zoo::{constant_precession_profile, salkowski_profile};

    fn grid(lo: f64, hi: f64, h: f64) -> Vec<f64> {
        crate::natural::uniform_grid(lo, hi, h).unwrap()
    }

    #[test]
    fn unit_curvature_gives_salkowski_torsion() {
        let tau = torsion_from_curvature(&ScalarProfile::constant(1.0), 0.5, 0.0).unwrap();
        let salk = ScalarProfile::salkowski_torsion(0.5).unwrap();
        let d = tau.domain();
        let edge = (1.0 - DOMAIN_MARGIN).sqrt() / 0.5;
        assert!((d.hi - edge).abs() < 1e-12 && (d.lo + edge).abs() < 1e-12);
        assert!(!d.lo_closed && !d.hi_closed);
        for s in grid(-1.99, 1.99, 0.01) {
            assert!((tau.eval(s).unwrap() - salk.eval(s).unwrap()).abs() < 1e-12 * (1.0 + salk.eval(s).unwrap().abs()));
        }
        assert!(tau.eval(1.9999999).is_err());
    }

    #[test]
    fn zero_curvature_gives_zero_torsion_everywhere() {
        let tau = torsion_from_curvature(&ScalarProfile::constant(0.0), 2.0, 0.1).unwrap();
        assert_eq!(tau.domain(), Interval::REAL);
        assert_eq!(tau.eval(1e6).unwrap(), 0.0);
    }

    #[test]
    fn precession_curvature_recovers_precession_torsion() {
        let cp = constant_precession_profile(3.0, 4.0).unwrap();
        let tau = torsion_from_curvature(&cp.kappa, 4.0 / 3.0, 0.0).unwrap();
        let d = tau.domain();
        let edge = (1.0 - DOMAIN_MARGIN).sqrt().asin() / 4.0;
        assert!((d.hi - edge).abs() < 1e-10, "{d}");
        for s in grid(-0.39, 0.39, 0.001) {
            // conditioning of τ in ∫κ grows like 1 + (τ/κ)² near the edge
            let (want, k) = (cp.tau.eval(s).unwrap(), cp.kappa.eval(s).unwrap());
            let tol = 1e-13 * (1.0 + (want / k).powi(2));
            assert!((tau.eval(s).unwrap() - want).abs() < tol, "s={s}");
        }
        // slant-helix test of the constructed pair
        let g = grid(-0.35, 0.35, 1e-4);
        for v in slant_slope_estimate(&cp.kappa, &tau, &g, 1e-4).unwrap() {
            assert!((v - 4.0 / 3.0).abs() < 1e-6);
        }
    }

    #[test]
    fn empty_restricted_domain() {
        assert_eq!(torsion_from_curvature(&ScalarProfile::constant(1.0), 0.5, 2.0), Err(Error::EmptyDomain));
    }

    #[test]
    fn slope_estimate_on_known_families() {
        let cp = constant_precession_profile(3.0, 4.0).unwrap();
        let g = grid(0.0, 10.0, 1e-4);
        let est = slant_slope_estimate(&cp.kappa, &cp.tau, &g, 1e-4).unwrap();
        assert!(est.iter().all(|v| (v - 4.0 / 3.0).abs() < 1e-6));

        let sp = salkowski_profile(0.5).unwrap();
        let g = grid(-1.9, 1.9, 1e-4);
        let est = slant_slope_estimate(&sp.kappa, &sp.tau, &g, 1e-4).unwrap();
        assert!(est.iter().all(|v| (v - 0.5).abs() < 1e-5));

        let k = ScalarProfile::harmonic(1.0, 0.3, 0.1, Wave::Cos).restricted(Interval::closed(-1.0, 1.0).unwrap()).unwrap();
        let t = k.clone().scaled(2.5);
        let est = slant_slope_estimate(&k, &t, &grid(-1.0, 1.0, 1e-3), 1e-4).unwrap();
        assert!(est.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn slope_estimate_rejects_vanishing_curvature() {
        let k = ScalarProfile::harmonic(1.0, 1.0, 0.0, Wave::Sin);
        let r = slant_slope_estimate(&k, &ScalarProfile::constant(1.0), &[0.5, 0.0], 1e-4);
        assert_eq!(r, Err(Error::VanishingCurvature { s: 0.0 }));
    }

    #[test]
    fn phase_identities_for_salkowski_and_precession() {
        let sp = salkowski_profile(0.5).unwrap();
        let r = phase_curvature_identity_check(&sp.kappa, &sp.tau, 0.5, &sp.phase(), &grid(-1.9, 1.9, 1e-3)).unwrap();
        assert!(r.max() < 1e-10, "{r:?}");

        let cp = constant_precession_profile(3.0, 4.0).unwrap();
        let phase = PhaseFunction::new(0.0, ScalarProfile::constant(4.0));
        let r = phase_curvature_identity_check(&cp.kappa, &cp.tau, 4.0 / 3.0, &phase, &grid(0.0, 10.0, 1e-3)).unwrap();
        assert!(r.max() < 1e-10, "{r:?}");
    }

    #[test]
    fn phase_identity_degenerate_input() {
        let z = ScalarProfile::constant(0.0);
        let phase = PhaseFunction::new(0.0, z.clone());
        let r = phase_curvature_identity_check(&z, &z, 1.0, &phase, &[0.0, 1.0]);
        assert!(matches!(r, Err(Error::NotApplicable(_))));
    }
}
