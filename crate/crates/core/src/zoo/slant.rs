use super::families::{check_slope, helix_apparatus_with_offset};
use crate::error::{Error, Result};
use crate::geomcore::{successor_transform, FrenetApparatus, PhaseFunction, ScalarProfile, Vec3, Wave};

/// Rotation by π about `e3`, `(x, y, z) → (−x, −y, z)`.
///
/// The closed-form slant-helix tangent is written in coordinates where the
/// first two components of the successor tangent are negated; this map
/// relates the two.
pub const REFLECTION: [[f64; 3]; 3] = [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];

/// Slope angle and phase of a slant helix.
#[derive(Debug, Clone, PartialEq)]
pub struct SlantHelixParams {
    theta: f64,
    phase: PhaseFunction,
}

impl SlantHelixParams {
    /// `phi(s) = phi0 + ∫ phi_rate`, anchored at the rate's reference point.
    pub fn new(theta: f64, phi0: f64, phi_rate: ScalarProfile) -> Result<Self> {
        check_slope(theta)?;
        Ok(SlantHelixParams {
            theta,
            phase: PhaseFunction::new(phi0, phi_rate),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phase(&self) -> &PhaseFunction {
        &self.phase
    }

    /// `m = cot θ`
    pub fn m(&self) -> f64 {
        1.0 / self.theta.tan()
    }

    /// `n = cos θ`
    pub fn n(&self) -> f64 {
        self.theta.cos()
    }

    pub fn lambda1(&self) -> f64 {
        1.0 - self.n()
    }

    pub fn lambda2(&self) -> f64 {
        1.0 + self.n()
    }
}

/// Closed-form data of a slant helix.
#[derive(Debug, Clone, PartialEq)]
pub struct SlantHelix {
    params: SlantHelixParams,
    kappa: ScalarProfile,
    tau: ScalarProfile,
    helix_kappa: ScalarProfile,
    helix_tau: ScalarProfile,
}

/// Builds the slant helix with development `κ = φ' cos φ / m`,
/// `τ = φ' sin φ / m`.
pub fn slant_helix_apparatus(params: &SlantHelixParams) -> Result<SlantHelix> {
    let m = params.m();
    if m == 0.0 || !m.is_finite() {
        return Err(Error::InvalidParameter("cot θ must be finite and non-zero".into()));
    }
    let rate = params.phase.rate.clone();
    let amplitude = rate.clone().scaled(1.0 / m);
    Ok(SlantHelix {
        kappa: ScalarProfile::modulated(amplitude.clone(), params.phase.clone(), Wave::Cos)?,
        tau: ScalarProfile::modulated(amplitude.clone(), params.phase.clone(), Wave::Sin)?,
        helix_kappa: amplitude,
        helix_tau: rate,
        params: params.clone(),
    })
}

impl SlantHelix {
    pub fn params(&self) -> &SlantHelixParams {
        &self.params
    }

    pub fn kappa(&self) -> &ScalarProfile {
        &self.kappa
    }

    pub fn tau(&self) -> &ScalarProfile {
        &self.tau
    }

    /// Curvature `φ'/m` of the general helix this curve succeeds.
    pub fn helix_kappa(&self) -> &ScalarProfile {
        &self.helix_kappa
    }

    /// Torsion `φ'` of the general helix this curve succeeds.
    pub fn helix_tau(&self) -> &ScalarProfile {
        &self.helix_tau
    }

    /// `Ω(s) = φ(s)/n`
    pub fn omega(&self, s: f64) -> Result<f64> {
        Ok(self.params.phase.eval(s)? / self.params.n())
    }

    /// Closed-form unit tangent
    /// `½ (λ1 cos λ2Ω + λ2 cos λ1Ω, λ1 sin λ2Ω + λ2 sin λ1Ω, 2 (n/m) sin nΩ)`.
    pub fn tangent(&self, s: f64) -> Result<Vec3> {
        self.kappa.domain().check(s)?;
        Ok(self.tangent_at_omega(self.omega(s)?))
    }

    pub fn tangent_at_omega(&self, omega: f64) -> Vec3 {
        let (n, m) = (self.params.n(), self.params.m());
        let (l1, l2) = (self.params.lambda1(), self.params.lambda2());
        Vec3::new_unchecked(
            0.5 * (l1 * (l2 * omega).cos() + l2 * (l1 * omega).cos()),
            0.5 * (l1 * (l2 * omega).sin() + l2 * (l1 * omega).sin()),
            n / m * (n * omega).sin(),
        )
    }

    /// Helix apparatus `(κ_H, θ)` with `Ω0 = φ0/n`, the predecessor of this curve.
    pub fn helix(&self) -> Result<FrenetApparatus> {
        helix_apparatus_with_offset(&self.helix_kappa, self.params.theta, self.params.phase.phi0 / self.params.n())
    }

    /// Full Frenet apparatus obtained as the successor of [`Self::helix`],
    /// in the helix coordinates (not reflected).
    pub fn apparatus(&self) -> Result<FrenetApparatus> {
        successor_transform(&self.helix()?, self.params.phase.phi0)
    }

    /// [`Self::apparatus`] mapped by [`REFLECTION`]; its tangent is [`Self::tangent`].
    pub fn reflected_apparatus(&self) -> Result<FrenetApparatus> {
        Ok(self.apparatus()?.mapped(REFLECTION))
    }
}

/// Development of a Salkowski curve and of the helix it succeeds.
#[derive(Debug, Clone, PartialEq)]
pub struct SalkowskiProfiles {
    pub m: f64,
    /// `κ_S ≡ 1`
    pub kappa: ScalarProfile,
    /// `τ_S = m s / sqrt(1 − m² s²)`
    pub tau: ScalarProfile,
    /// `κ_H = 1 / sqrt(1 − m² s²)`
    pub helix_kappa: ScalarProfile,
    /// `τ_H = m κ_H`
    pub helix_tau: ScalarProfile,
}

/// Constant-curvature slant helix on `(−1/|m|, 1/|m|)`.
pub fn salkowski_profile(m: f64) -> Result<SalkowskiProfiles> {
    let tau = ScalarProfile::salkowski_torsion(m)?;
    let helix_kappa = ScalarProfile::salkowski_helix_curvature(m)?;
    Ok(SalkowskiProfiles {
        m,
        kappa: ScalarProfile::constant(1.0).restricted(tau.domain())?,
        tau,
        helix_tau: helix_kappa.clone().scaled(m),
        helix_kappa,
    })
}

impl SalkowskiProfiles {
    /// `φ(s) = arcsin(m s)`
    pub fn phase(&self) -> PhaseFunction {
        PhaseFunction::new(0.0, self.helix_tau.clone())
    }

    /// Slant-helix parameters (`θ = arccot m`); requires `m > 0`.
    pub fn slant_params(&self) -> Result<SlantHelixParams> {
        if self.m <= 0.0 {
            return Err(Error::InvalidParameter("slope parametrization needs m > 0".into()));
        }
        SlantHelixParams::new((1.0 / self.m).atan(), 0.0, self.helix_tau.clone())
    }
}

/// Development of a curve of constant precession.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantPrecession {
    pub omega: f64,
    pub mu: f64,
    /// `ω cos μs`
    pub kappa: ScalarProfile,
    /// `ω sin μs`
    pub tau: ScalarProfile,
    /// `μ / sqrt(ω² + μ²)`
    pub cos_theta: f64,
}

/// `κ = ω cos μs`, `τ = ω sin μs`.
pub fn constant_precession_profile(omega: f64, mu: f64) -> Result<ConstantPrecession> {
    if !(omega.is_finite() && mu.is_finite()) || omega == 0.0 || mu == 0.0 {
        return Err(Error::InvalidParameter("ω and μ must be finite and non-zero".into()));
    }
    Ok(ConstantPrecession {
        omega,
        mu,
        kappa: ScalarProfile::harmonic(omega, mu, 0.0, Wave::Cos),
        tau: ScalarProfile::harmonic(omega, mu, 0.0, Wave::Sin),
        cos_theta: mu / omega.hypot(mu),
    })
}

impl ConstantPrecession {
    /// `m = μ/ω`
    pub fn m(&self) -> f64 {
        self.mu / self.omega
    }

    /// Period `2π/|μ|` of the development.
    pub fn phase_period(&self) -> f64 {
        std::f64::consts::TAU / self.mu.abs()
    }

    /// Frame period `2π cos θ / μ` of the circular helix `(ω, μ)`.
    pub fn helix_frame_period(&self) -> f64 {
        std::f64::consts::TAU * self.cos_theta / self.mu
    }

    /// Slant-helix parameters with `φ = μ s`; requires `μ/ω > 0`.
    pub fn slant_params(&self) -> Result<SlantHelixParams> {
        if self.m() <= 0.0 {
            return Err(Error::InvalidParameter("slope parametrization needs μ/ω > 0".into()));
        }
        SlantHelixParams::new(self.cos_theta.acos(), 0.0, ScalarProfile::constant(self.mu))
    }
}
