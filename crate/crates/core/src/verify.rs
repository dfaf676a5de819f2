//! Named suites of numerical invariant checks.
//!
//! Every check reduces to a single number compared against a bound. A check
//! whose computation fails is reported as failing with a NaN value.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geomcore::{
    bishop_transform, darboux_vector, frame_defect, rotate_frame, successor_transform, transform_coefficients, Frame,
    FrenetApparatus, Interval, ScalarProfile, Vec3, Wave,
};
use crate::natural::{
    estimate_curvature_torsion, frame_periodicity_check, integrate_frenet, integrate_position, successor_frame_period,
    torsion_ratio, total_torsion, uniform_grid, IntegrationConfig,
};
use crate::zoo::{
    constant_precession_profile, helix_apparatus, phase_curvature_identity_check, plane_apparatus, salkowski_profile,
    slant_helix_apparatus, slant_slope_estimate, torsion_from_curvature, SlantHelix, SlantHelixParams,
};

/// Names accepted by [`run_suite`], besides `"all"`.
pub const SUITES: [&str; 4] = ["geomcore", "natural", "zoo", "acceptance"];

/// Seed of the randomized profile families.
pub const SEED: u64 = 0x5eed_c0de;

/// Direction of the comparison a check makes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Passes when `value <= tolerance`.
    AtMost,
    /// Passes when `value >= tolerance`.
    AtLeast,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
    /// Error message when the computation itself failed.
    pub error: Option<String>,
}

impl CheckResult {
    fn new(name: &str, tolerance: f64, bound: Bound, outcome: Result<f64>) -> Self {
        let (value, error) = match outcome {
            Ok(v) => (v, None),
            Err(e) => (f64::NAN, Some(e.to_string())),
        };
        let pass = match bound {
            Bound::AtMost => value <= tolerance,
            Bound::AtLeast => value >= tolerance,
        };
        CheckResult {
            name: name.to_string(),
            value,
            tolerance,
            bound,
            pass,
            error,
        }
    }

    fn at_most(name: &str, tolerance: f64, outcome: Result<f64>) -> Self {
        Self::new(name, tolerance, Bound::AtMost, outcome)
    }

    fn at_least(name: &str, tolerance: f64, outcome: Result<f64>) -> Self {
        Self::new(name, tolerance, Bound::AtLeast, outcome)
    }
}

impl fmt::Display for CheckResult {
    /// `name value tolerance pass|fail`, with `>=` before the tolerance of
    /// lower-bound checks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.bound {
            Bound::AtMost => "",
            Bound::AtLeast => ">=",
        };
        write!(
            f,
            "{} {:.3e} {}{:.1e} {}",
            self.name,
            self.value,
            op,
            self.tolerance,
            if self.pass { "pass" } else { "fail" }
        )?;
        if let Some(e) = &self.error {
            write!(f, " ({e})")?;
        }
        Ok(())
    }
}

/// Runs one suite by name, or every suite for `"all"` (concurrently).
pub fn run_suite(name: &str) -> Result<Vec<CheckResult>> {
    match name {
        "geomcore" => Ok(geomcore_suite()),
        "natural" => Ok(natural_suite()),
        "zoo" => Ok(zoo_suite()),
        "acceptance" => Ok(acceptance_suite()),
        "all" => Ok(std::thread::scope(|scope| {
            let handles: Vec<_> = SUITES
                .iter()
                .map(|&s| scope.spawn(move || run_suite(s).expect("known suite")))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite thread")).collect()
        })),
        other => Err(Error::InvalidParameter(format!(
            "unknown suite '{other}' (expected one of {}, all)",
            SUITES.join(", ")
        ))),
    }
}

fn max_over<I: IntoIterator<Item = Result<f64>>>(values: I) -> Result<f64> {
    values.into_iter().try_fold(0.0f64, |acc, v| {
        let v = v?;
        Ok(if v.is_nan() { f64::NAN } else { acc.max(v) })
    })
}

fn frame_gap(a: &Frame, b: &Frame) -> f64 {
    a.max_component_diff(b)
}

/// Random smooth profile: a constant plus three harmonics.
pub fn random_profile(rng: &mut ChaCha8Rng) -> ScalarProfile {
    let mut terms = vec![ScalarProfile::constant(rng.gen_range(-1.0..1.0))];
    for _ in 0..3 {
        let wave = if rng.gen_bool(0.5) { Wave::Cos } else { Wave::Sin };
        terms.push(ScalarProfile::harmonic(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(0.2..2.0),
            rng.gen_range(0.0..TAU),
            wave,
        ));
    }
    ScalarProfile::sum(terms).expect("non-empty sum")
}

fn random_frame(rng: &mut ChaCha8Rng) -> Frame {
    let mut v = || Vec3::new_unchecked(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let (a, b) = (v(), v());
    Frame::new_unchecked(a, b, a.cross(b)).orthonormalized()
}

/// Integrated apparatus of a random profile pair on `[0, 5]`, with a
/// random successor/Bishop parameter.
struct RandomCase {
    source: FrenetApparatus,
    phi0: f64,
}

const RANDOM_CASES: usize = 100;
const RANDOM_STEP: f64 = 1e-3;

fn random_cases() -> Result<Vec<RandomCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let range = Interval::closed(0.0, 5.0)?;
    let cfg = IntegrationConfig::new(RANDOM_STEP, 1)?;
    (0..RANDOM_CASES)
        .map(|_| {
            let kappa = random_profile(&mut rng);
            let tau = random_profile(&mut rng);
            let start = random_frame(&mut rng);
            let phi0 = rng.gen_range(0.0..TAU);
            Ok(RandomCase {
                source: integrate_frenet(&kappa, &tau, &start, range, &cfg)?,
                phi0,
            })
        })
        .collect()
}

fn nodes(app: &FrenetApparatus) -> &[f64] {
    app.sample_grid().unwrap_or(&[])
}

fn darboux_residual(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().map(|c| {
        let succ = successor_transform(&c.source, c.phi0)?;
        max_over(nodes(&c.source).iter().map(|&s| {
            let want = c.source.frame_at(s)?.n2 * c.source.kappa().eval(s)?;
            Ok((darboux_vector(&succ, s)? - want).max_abs())
        }))
    }))
}

fn bishop_norm_residual(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().map(|c| {
        let b = bishop_transform(&c.source, c.phi0)?;
        max_over(nodes(&c.source).iter().map(|&s| {
            let (k1, k2, k) = (b.k1().eval(s)?, b.k2().eval(s)?, c.source.kappa().eval(s)?);
            Ok((k1 * k1 + k2 * k2 - k * k).abs())
        }))
    }))
}

/// `max |<N1', N2>|` by central differences over interior nodes.
fn bishop_rotation_rate(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().map(|c| {
        let b = bishop_transform(&c.source, c.phi0)?;
        let grid = nodes(&c.source);
        let frames = grid.iter().map(|&s| b.frame_at(s)).collect::<Result<Vec<_>>>()?;
        Ok((1..grid.len() - 1)
            .map(|i| {
                let d = (frames[i + 1].n1 - frames[i - 1].n1) * (1.0 / (grid[i + 1] - grid[i - 1]));
                d.dot(frames[i].n2).abs()
            })
            .fold(0.0, f64::max))
    }))
}

fn successor_normal_residual(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().map(|c| {
        let succ = successor_transform(&c.source, c.phi0)?;
        max_over(nodes(&c.source).iter().map(|&s| Ok((succ.frame_at(s)?.n1 - c.source.frame_at(s)?.t).max_abs())))
    }))
}

fn successor_speed_residual(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().map(|c| {
        let succ = successor_transform(&c.source, c.phi0)?;
        max_over(nodes(&c.source).iter().map(|&s| {
            let (a, b, k) = (succ.kappa().eval(s)?, succ.tau().eval(s)?, c.source.kappa().eval(s)?);
            Ok((a * a + b * b - k * k).abs())
        }))
    }))
}

/// Successor systems with parameters `a` and `b` differ by the rotation of
/// their normal planes through `b − a`.
fn composition_residual(cases: &[RandomCase]) -> Result<f64> {
    max_over(cases.iter().take(20).map(|c| {
        let delta = 0.731;
        let sa = successor_transform(&c.source, c.phi0)?;
        let sb = successor_transform(&c.source, c.phi0 + delta)?;
        max_over(nodes(&c.source).iter().step_by(50).map(|&s| {
            let fa = sa.frame_at(s)?;
            let fb = sb.frame_at(s)?;
            // frame (T*, N*, B*) of `a`, rotated about N* = T by delta
            let (sn, cs) = delta.sin_cos();
            let rotated = Frame::new_unchecked(fa.t * cs + fa.n2 * sn, fa.n1, fa.n2 * cs - fa.t * sn);
            let (ka, ta) = (sa.kappa().eval(s)?, sa.tau().eval(s)?);
            let (kb, tb) = (sb.kappa().eval(s)?, sb.tau().eval(s)?);
            let coeff = (ka * cs - ta * sn - kb).abs().max((ka * sn + ta * cs - tb).abs());
            Ok(frame_gap(&rotated, &fb).max(coeff))
        }))
    }))
}

/// Geometric invariants of frames and transformations.
pub fn geomcore_suite() -> Vec<CheckResult> {
    let cases = random_cases();
    let with = |f: fn(&[RandomCase]) -> Result<f64>| match &cases {
        Ok(c) => f(c),
        Err(e) => Err(e.clone()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let rotation = (0..1000)
        .map(|_| {
            let f = random_frame(&mut rng);
            let phi = rng.gen_range(-10.0..10.0);
            frame_defect(&rotate_frame(&f, phi)) - frame_defect(&f)
        })
        .fold(f64::MIN, f64::max);
    let coeff_norm = (0..1000)
        .map(|_| {
            let (k1, k2, k3) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let (a, b, _) = transform_coefficients(k1, k2, k3, rng.gen_range(-10.0..10.0), rng.gen_range(-5.0..5.0));
            (a * a + b * b - (k1 * k1 + k2 * k2)).abs()
        })
        .fold(0.0, f64::max);
    vec![
        CheckResult::at_most("rotation-defect-growth", 1e-12, Ok(rotation)),
        CheckResult::at_most("coefficient-norm-preservation", 1e-12, Ok(coeff_norm)),
        CheckResult::at_most("bishop-identity", 1e-10, with(bishop_norm_residual)),
        CheckResult::at_most("successor-curvature-identity", 1e-10, with(successor_speed_residual)),
        CheckResult::at_most("successor-normal-identity", 1e-12, with(successor_normal_residual)),
        CheckResult::at_most("successor-darboux-identity", 1e-9, with(darboux_residual)),
        CheckResult::at_most("successor-composition-law", 1e-12, with(composition_residual)),
    ]
}

/// Max tangent error of the integrated apparatus against a closed form.
fn tangent_error(reference: &FrenetApparatus, step: f64, lo: f64, hi: f64) -> Result<f64> {
    let integrated = integrate_frenet(
        reference.kappa(),
        reference.tau(),
        &reference.frame_at(lo)?,
        Interval::closed(lo, hi)?,
        &IntegrationConfig::new(step, 1)?,
    )?;
    max_over(nodes(&integrated).iter().map(|&s| Ok((integrated.frame_at(s)?.t - reference.frame_at(s)?.t).max_abs())))
}

fn convergence_factor(reference: &FrenetApparatus, step: f64, lo: f64, hi: f64) -> Result<f64> {
    Ok(tangent_error(reference, step, lo, hi)? / tangent_error(reference, 0.5 * step, lo, hi)?)
}

fn circular_helix() -> Result<FrenetApparatus> {
    helix_apparatus(&ScalarProfile::constant(3.0), 3f64.atan2(4.0))
}

/// Integrator accuracy and position reconstruction.
pub fn natural_suite() -> Vec<CheckResult> {
    let circle = plane_apparatus(&ScalarProfile::constant(1.0));
    let helix = circular_helix();
    let drift = || -> Result<f64> {
        let h = helix.clone()?;
        let app = integrate_frenet(h.kappa(), h.tau(), &h.frame_at(0.0)?, Interval::closed(0.0, 10.0)?, &IntegrationConfig::default())?;
        max_over(nodes(&app).iter().map(|&s| Ok(frame_defect(&app.frame_at(s)?))))
    };
    let round_trip = || -> Result<f64> {
        let kappa = ScalarProfile::sum(vec![
            ScalarProfile::constant(1.0),
            ScalarProfile::harmonic(0.5, 1.0, 0.0, Wave::Sin),
        ])?;
        let tau = ScalarProfile::harmonic(0.3, 2.0, 0.0, Wave::Cos);
        let app = integrate_frenet(&kappa, &tau, &Frame::canonical(), Interval::closed(0.0, 6.0)?, &IntegrationConfig::new(1e-2, 1)?)?;
        let samples = integrate_position(&app, Vec3::ZERO)?;
        let (k_from_frames, t_from_frames) = estimate_curvature_torsion(&samples)?;
        let bare = crate::natural::CurveSamples::new(samples.s_grid.clone(), samples.points.clone(), None)?;
        let (k_from_points, t_from_points) = estimate_curvature_torsion(&bare)?;
        let n = samples.len();
        max_over(samples.s_grid[2..n - 2].iter().map(|&s| {
            let (k, t) = (kappa.eval(s)?, tau.eval(s)?);
            Ok((k_from_frames.eval(s)? - k)
                .abs()
                .max((t_from_frames.eval(s)? - t).abs())
                .max((k_from_points.eval(s)? - k).abs())
                .max((t_from_points.eval(s)? - t).abs()))
        }))
    };
    let closure = || -> Result<f64> {
        let app = integrate_frenet(
            &ScalarProfile::constant(1.0),
            &ScalarProfile::constant(0.0),
            &Frame::canonical(),
            Interval::closed(0.0, TAU)?,
            &IntegrationConfig::default(),
        )?;
        let samples = integrate_position(&app, Vec3::ZERO)?;
        Ok((samples.points[samples.len() - 1] - samples.points[0]).norm())
    };
    let unit_speed = || -> Result<f64> {
        let cp = constant_precession_profile(3.0, 4.0)?;
        let h = circular_helix()?;
        let start = successor_transform(&h, 0.0)?.frame_at(0.0)?;
        let app = integrate_frenet(&cp.kappa, &cp.tau, &start, Interval::closed(0.0, cp.helix_frame_period())?, &IntegrationConfig::default())?;
        Ok(integrate_position(&app, Vec3::ZERO)?.unit_speed_defect())
    };
    vec![
        CheckResult::at_least(
            "convergence-order-circle",
            12.0,
            circle.and_then(|c| convergence_factor(&c, 0.1, 0.0, 20.0)),
        ),
        CheckResult::at_least(
            "convergence-order-helix",
            12.0,
            helix.clone().and_then(|h| convergence_factor(&h, 0.02, 0.0, 10.0)),
        ),
        CheckResult::at_most("frame-drift", 1e-12, drift()),
        CheckResult::at_most("round-trip-profiles", 1e-3, round_trip()),
        CheckResult::at_most("circle-closure", 1e-7, closure()),
        CheckResult::at_most("unit-speed-defect", 1e-8, unit_speed()),
    ]
}

fn pi3_slant_helix() -> Result<SlantHelix> {
    let m = 1.0 / FRAC_PI_3.tan();
    slant_helix_apparatus(&SlantHelixParams::new(FRAC_PI_3, 0.0, ScalarProfile::constant(m))?)
}

/// Closed-form families and their identities.
pub fn zoo_suite() -> Vec<CheckResult> {
    let grid = |a: f64, b: f64, h: f64| uniform_grid(a, b, h);
    let helix_slope = || -> Result<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
        max_over((0..20).map(|_| {
            let theta = rng.gen_range(0.05..FRAC_PI_2 - 0.05);
            let app = helix_apparatus(&random_profile(&mut rng), theta)?;
            max_over(grid(0.0, 10.0, 1e-2)?.into_iter().map(|s| Ok((app.frame_at(s)?.t.z - theta.cos()).abs())))
        }))
    };
    let normal_slope = || -> Result<f64> {
        let sh = pi3_slant_helix()?;
        let app = sh.reflected_apparatus()?;
        max_over(grid(0.0, 20.0, 1e-2)?.into_iter().map(|s| Ok((app.frame_at(s)?.n1.z - FRAC_PI_3.cos()).abs())))
    };
    let derivative_law = || -> Result<f64> {
        let sh = pi3_slant_helix()?;
        let app = sh.reflected_apparatus()?;
        let h = 1e-4;
        max_over(grid(0.1, 19.9, 1e-2)?.into_iter().map(|s| {
            let d = (sh.tangent(s + h)? - sh.tangent(s - h)?) * (0.5 / h);
            Ok((d - app.frame_at(s)?.n1 * sh.kappa().eval(s)?).max_abs())
        }))
    };
    let angular_speed = || -> Result<f64> {
        let sh = pi3_slant_helix()?;
        max_over(grid(0.0, 20.0, 1e-2)?.into_iter().map(|s| {
            let (k, t, kh) = (sh.kappa().eval(s)?, sh.tau().eval(s)?, sh.helix_kappa().eval(s)?);
            Ok((k * k + t * t - kh * kh).abs())
        }))
    };
    let consistency = || -> Result<f64> {
        let sh = pi3_slant_helix()?;
        let app = sh.reflected_apparatus()?;
        max_over(grid(0.0, 20.0, 1e-2)?.into_iter().map(|s| Ok((app.frame_at(s)?.t - sh.tangent(s)?).max_abs())))
    };
    let slope = || -> Result<f64> {
        let sh = pi3_slant_helix()?;
        let m = sh.params().m();
        let est = slant_slope_estimate(sh.kappa(), sh.tau(), &grid(0.0, 20.0, 1e-2)?, 1e-4)?;
        Ok(est.iter().map(|v| (v - m).abs()).fold(0.0, f64::max))
    };
    let cp_totals = || -> Result<f64> {
        let cp = constant_precession_profile(3.0, 4.0)?;
        let period = Interval::closed(0.3, 0.3 + cp.phase_period())?;
        Ok(total_torsion(&cp.kappa, period)?.abs().max(total_torsion(&cp.tau, period)?.abs()))
    };
    let salkowski_torsion = || -> Result<f64> {
        let sp = salkowski_profile(0.5)?;
        let tau = torsion_from_curvature(&ScalarProfile::constant(1.0), 0.5, 0.0)?;
        max_over(grid(-1.9, 1.9, 1e-2)?.into_iter().map(|s| Ok((tau.eval(s)? - sp.tau.eval(s)?).abs())))
    };
    let phase = || -> Result<f64> {
        let sp = salkowski_profile(0.5)?;
        Ok(phase_curvature_identity_check(&sp.kappa, &sp.tau, 0.5, &sp.phase(), &grid(-1.9, 1.9, 1e-3)?)?.max())
    };
    vec![
        CheckResult::at_most("helix-slope", 1e-12, helix_slope()),
        CheckResult::at_most("slant-normal-slope", 1e-12, normal_slope()),
        CheckResult::at_most("tangent-derivative-law", 1e-6, derivative_law()),
        CheckResult::at_most("angular-speed-law", 1e-10, angular_speed()),
        CheckResult::at_most("successor-consistency", 1e-9, consistency()),
        CheckResult::at_most("slope-estimate-consistency", 1e-5, slope()),
        CheckResult::at_most("precession-period-totals", 1e-10, cp_totals()),
        CheckResult::at_most("salkowski-torsion-from-curvature", 1e-12, salkowski_torsion()),
        CheckResult::at_most("phase-identities", 1e-10, phase()),
    ]
}

/// Max tangent error of the ODE solution of the `θ = π/3` slant helix
/// against its closed form on `[0, 20]`.
pub fn slant_helix_ode_error(step: f64) -> Result<f64> {
    let sh = pi3_slant_helix()?;
    let reference = sh.reflected_apparatus()?;
    let app = integrate_frenet(
        sh.kappa(),
        sh.tau(),
        &reference.frame_at(0.0)?,
        Interval::closed(0.0, 20.0)?,
        &IntegrationConfig::new(step, 1)?,
    )?;
    max_over(nodes(&app).iter().map(|&s| Ok((app.frame_at(s)?.t - sh.tangent(s)?).max_abs())))
}

/// The ten acceptance criteria.
pub fn acceptance_suite() -> Vec<CheckResult> {
    let grid = |a: f64, b: f64, h: f64| uniform_grid(a, b, h);
    let plane_to_helix = || -> Result<f64> {
        let circle = plane_apparatus(&ScalarProfile::constant(1.0))?;
        max_over([FRAC_PI_6, FRAC_PI_4, FRAC_PI_3].into_iter().map(|theta| {
            let succ = successor_transform(&circle, FRAC_PI_2 - theta)?;
            max_over(grid(0.0, 10.0, 1e-2)?.into_iter().map(|s| {
                Ok((succ.kappa().eval(s)? - theta.sin()).abs().max((succ.tau().eval(s)? - theta.cos()).abs()))
            }))
        }))
    };
    let helix_to_precession = || -> Result<f64> {
        let succ = successor_transform(&circular_helix()?, 0.0)?;
        max_over(grid(0.0, 10.0, 1e-3)?.into_iter().map(|s| {
            let (k, t) = (succ.kappa().eval(s)?, succ.tau().eval(s)?);
            Ok((k - 3.0 * (4.0 * s).cos()).abs().max((t - 3.0 * (4.0 * s).sin()).abs()))
        }))
    };
    let ode_error = slant_helix_ode_error(1e-3);
    let factor = match (&ode_error, &slant_helix_ode_error(5e-4)) {
        (Ok(a), Ok(b)) => Ok(a / b),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    let normal_variation = || -> Result<f64> {
        let app = pi3_slant_helix()?.reflected_apparatus()?;
        let z = grid(0.0, 20.0, 1e-3)?
            .into_iter()
            .map(|s| Ok(app.frame_at(s)?.n1.z))
            .collect::<Result<Vec<_>>>()?;
        let (lo, hi) = z.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        Ok((hi - lo).max((hi - FRAC_PI_3.cos()).abs()))
    };
    let slope_precession = || -> Result<f64> {
        let cp = constant_precession_profile(3.0, 4.0)?;
        let est = slant_slope_estimate(&cp.kappa, &cp.tau, &grid(0.0, 10.0, 1e-4)?, 1e-4)?;
        Ok(est.iter().map(|v| (v - 4.0 / 3.0).abs()).fold(0.0, f64::max))
    };
    let slope_salkowski = || -> Result<f64> {
        let sp = salkowski_profile(0.5)?;
        let est = slant_slope_estimate(&sp.kappa, &sp.tau, &grid(-1.9, 1.9, 1e-4)?, 1e-4)?;
        Ok(est.iter().map(|v| (v - 0.5).abs()).fold(0.0, f64::max))
    };
    let circle_law = || -> Result<f64> {
        let sp = salkowski_profile(0.5)?;
        let a = phase_curvature_identity_check(&sp.kappa, &sp.tau, 0.5, &sp.phase(), &grid(-1.9, 1.9, 1e-3)?)?;
        let cp = constant_precession_profile(3.0, 4.0)?;
        let params = cp.slant_params()?;
        let b = phase_curvature_identity_check(&cp.kappa, &cp.tau, cp.m(), params.phase(), &grid(0.0, 10.0, 1e-3)?)?;
        Ok(a.circle.max(b.circle))
    };
    let periodicity = || -> Result<f64> {
        let cp = constant_precession_profile(3.0, 4.0)?;
        let helix = circular_helix()?;
        let l = cp.helix_frame_period();
        let ratio = torsion_ratio(total_torsion(helix.tau(), Interval::closed(0.0, l)?)?);
        let period = successor_frame_period(l, ratio)
            .ok_or(Error::NotApplicable("total torsion over a helix period is not rational"))?;
        let start = successor_transform(&helix, 0.0)?.frame_at(0.0)?;
        let app = integrate_frenet(&cp.kappa, &cp.tau, &start, Interval::closed(0.0, 2.0 * period)?, &IntegrationConfig::default())?;
        Ok(frame_periodicity_check(&app, period, 1e-6)?.residual)
    };
    let totals = || -> Result<f64> {
        let cp = constant_precession_profile(3.0, 4.0)?;
        let period = Interval::closed(0.0, cp.phase_period())?;
        Ok(total_torsion(&cp.kappa, period)?.abs().max(total_torsion(&cp.tau, period)?.abs()))
    };
    let cases = random_cases();
    let with = |f: fn(&[RandomCase]) -> Result<f64>| match &cases {
        Ok(c) => f(c),
        Err(e) => Err(e.clone()),
    };
    vec![
        CheckResult::at_most("plane-to-helix-successor", 1e-14, plane_to_helix()),
        CheckResult::at_most("helix-to-precession-successor", 1e-12, helix_to_precession()),
        CheckResult::at_most("slant-helix-ode-tangent", 1e-7, ode_error),
        CheckResult::at_least("slant-helix-ode-convergence", 12.0, factor),
        CheckResult::at_most("slant-helix-normal-slope", 1e-10, normal_variation()),
        CheckResult::at_most("slope-estimate-precession", 1e-6, slope_precession()),
        CheckResult::at_most("slope-estimate-salkowski", 1e-5, slope_salkowski()),
        CheckResult::at_most("phase-circle-law", 1e-10, circle_law()),
        CheckResult::at_most("successor-frame-periodicity", 1e-6, periodicity()),
        CheckResult::at_most("precession-period-totals", 1e-10, totals()),
        CheckResult::at_most("darboux-identity-random", 1e-9, with(darboux_residual)),
        CheckResult::at_most("bishop-norm-random", 1e-10, with(bishop_norm_residual)),
        CheckResult::at_most("bishop-rotation-rate-random", 1e-5, with(bishop_rotation_rate)),
    ]
}
