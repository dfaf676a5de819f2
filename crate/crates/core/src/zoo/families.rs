use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geomcore::{FrameField, FrenetApparatus, PhaseFunction, ScalarProfile};

/// Generic Frenet apparatus of the plane curve with curvature `kappa`.
///
/// With turning angle `Ω = ∫κ`: `T = (cos Ω, sin Ω, 0)`,
/// `N = (−sin Ω, cos Ω, 0)`, `B = e3`, `τ ≡ 0`.
pub fn plane_apparatus(kappa: &ScalarProfile) -> Result<FrenetApparatus> {
    let omega = PhaseFunction::new(0.0, kappa.clone());
    FrenetApparatus::new(
        FrameField::Plane { omega },
        kappa.clone(),
        ScalarProfile::constant(0.0),
        true,
    )
}

pub(crate) fn check_slope(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 && theta < FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("slope angle must lie in (0, π/2), got {theta}")))
    }
}

/// Generic Frenet apparatus of the general helix with curvature `kappa_h`
/// and slope `theta` about `e3`; `τ = cot θ · κ`.
pub fn helix_apparatus(kappa_h: &ScalarProfile, theta: f64) -> Result<FrenetApparatus> {
    helix_apparatus_with_offset(kappa_h, theta, 0.0)
}

/// As [`helix_apparatus`], with angle `Ω(s) = Ω0 + (1/sin θ) ∫κ`.
pub fn helix_apparatus_with_offset(kappa_h: &ScalarProfile, theta: f64, omega0: f64) -> Result<FrenetApparatus> {
    check_slope(theta)?;
    let omega = PhaseFunction::new(omega0, kappa_h.clone().scaled(1.0 / theta.sin()));
    FrenetApparatus::new(
        FrameField::Helix { omega, theta },
        kappa_h.clone(),
        kappa_h.clone().scaled(1.0 / theta.tan()),
        true,
    )
}
