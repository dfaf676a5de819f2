//! Job specification and construction of the curve it describes.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::path::PathBuf;

use clap::ValueEnum;
use sc_core::geomcore::{Frame, FrenetApparatus, Interval, ScalarProfile};
use sc_core::natural::{approximate_rational, integrate_frenet, uniform_grid, IntegrationConfig};
use sc_core::zoo::{
    constant_precession_profile, helix_apparatus, plane_apparatus, salkowski_profile, slant_helix_apparatus,
    SlantHelixParams,
};

use crate::args::{Family, JobArgs, OutputKind};
use crate::config::Config;
use crate::table::{read_csv, KAPPA, S, TAU as TAU_COL};
use crate::{usage, CliError};

pub const DEFAULT_STEP: f64 = 1e-3;

/// Parameters whose values are angles or angular rates.
const ANGULAR: [&str; 3] = ["theta", "phi0", "phi-rate"];

const NUMERIC: [&str; 8] = ["omega", "mu", "m", "kappa-const", "tau-const", "theta", "phi-rate", "phi0"];

#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub family: Family,
    /// Family parameters in radians, keyed by flag name.
    pub params: BTreeMap<&'static str, f64>,
    pub profile: Option<PathBuf>,
    pub s_range: (f64, f64),
    pub step: f64,
    pub outputs: Vec<OutputKind>,
    pub output: PathBuf,
}

/// Parses `a:b` with `a < b`.
pub fn parse_range(text: &str) -> Result<(f64, f64), CliError> {
    let bad = || usage(format!("range '{text}' is not of the form a:b with a < b"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if a.is_finite() && b.is_finite() && a < b {
        Ok((a, b))
    } else {
        Err(bad())
    }
}

fn parse_outputs(text: &str) -> Result<Vec<OutputKind>, CliError> {
    text.split(',')
        .map(|s| OutputKind::from_str(s.trim(), true).map_err(|_| usage(format!("unknown output '{s}'"))))
        .collect()
}

/// Required parameters; each inner list is a set of alternatives.
fn schema(family: Family) -> &'static [&'static [&'static str]] {
    match family {
        Family::Plane => &[&["kappa-const"]],
        Family::Helix => &[&["kappa-const"], &["theta", "tau-const"]],
        Family::SlantHelix => &[&["theta"], &["phi-rate"]],
        Family::Salkowski => &[&["m"]],
        Family::ConstantPrecession => &[&["omega"], &["mu"]],
        Family::CustomProfile => &[&["profile", "kappa-const"], &["profile", "tau-const"]],
    }
}

fn optional(family: Family) -> &'static [&'static str] {
    match family {
        Family::SlantHelix => &["phi0"],
        _ => &[],
    }
}

impl JobSpec {
    /// Merges flags over the configuration over defaults and checks the
    /// parameter set against the family's schema. `phi0` is the family
    /// phase offset already merged by the caller, since its flag means
    /// something else for `successor`.
    pub fn resolve(
        args: &JobArgs,
        phi0: Option<f64>,
        config: &Config,
        default_output: &str,
        default_outputs: &[OutputKind],
    ) -> Result<Self, CliError> {
        let family = match args.family {
            Some(f) => f,
            None => {
                let name = config.get("family").ok_or_else(|| usage("no --family given"))?;
                Family::from_str(name, true).map_err(|_| usage(format!("unknown family '{name}'")))?
            }
        };
        let deg = args.deg || config.flag("deg")?;
        let flags = [
            args.omega,
            args.mu,
            args.m,
            args.kappa_const,
            args.tau_const,
            args.theta,
            args.phi_rate,
            phi0,
        ];
        let mut params = BTreeMap::new();
        for (key, flag) in NUMERIC.into_iter().zip(flags) {
            let value = match flag {
                Some(v) => Some(v),
                None if key == "phi0" => None,
                None => config.number(key)?,
            };
            if let Some(v) = value {
                if !v.is_finite() {
                    return Err(usage(format!("--{key} must be finite")));
                }
                let v = if deg && ANGULAR.contains(&key) { v.to_radians() } else { v };
                params.insert(key, v);
            }
        }
        let profile = args.profile.clone().or_else(|| config.get("profile").map(PathBuf::from));

        for alternatives in schema(family) {
            let present = alternatives
                .iter()
                .any(|k| if *k == "profile" { profile.is_some() } else { params.contains_key(k) });
            if !present {
                let names: Vec<String> = alternatives.iter().map(|k| format!("--{k}")).collect();
                return Err(usage(format!(
                    "family {} needs {}",
                    family.to_possible_value().expect("named").get_name(),
                    names.join(" or ")
                )));
            }
        }
        let used: Vec<&str> = schema(family)
            .iter()
            .flat_map(|a| a.iter().copied())
            .chain(optional(family).iter().copied())
            .collect();
        for key in params.keys() {
            if !used.contains(key) {
                eprintln!("warning: --{key} is ignored for this family");
            }
        }
        params.retain(|k, _| used.contains(k));
        let profile = profile.filter(|_| used.contains(&"profile"));

        let s_range = match &args.range {
            Some(r) => parse_range(r)?,
            None => parse_range(config.get("range").ok_or_else(|| usage("no --range given"))?)?,
        };
        let step = match args.step {
            Some(v) => v,
            None => config.number("step")?.unwrap_or(DEFAULT_STEP),
        };
        if !(step.is_finite() && step > 0.0) {
            return Err(usage(format!("step must be positive, got {step}")));
        }
        let outputs = match &args.out {
            Some(o) => o.clone(),
            None => match config.get("out") {
                Some(text) => parse_outputs(text)?,
                None => default_outputs.to_vec(),
            },
        };
        let output = args
            .output
            .clone()
            .or_else(|| config.get("output").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(default_output));
        Ok(JobSpec {
            family,
            params,
            profile,
            s_range,
            step,
            outputs,
            output,
        })
    }

    fn param(&self, key: &str) -> Option<f64> {
        self.params.get(key).copied()
    }

    fn required(&self, key: &str) -> f64 {
        self.param(key).expect("schema-validated parameter")
    }

    pub fn grid(&self) -> Result<Vec<f64>, CliError> {
        Ok(uniform_grid(self.s_range.0, self.s_range.1, self.step)?)
    }

    pub fn family_name(&self) -> String {
        self.family
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

/// The curve of a job: its apparatus (closed form or integrated over the
/// job range) and, when known, a period after which its frame repeats.
#[derive(Debug, Clone)]
pub struct Curve {
    pub apparatus: FrenetApparatus,
    pub closed_form: bool,
    pub period: Option<f64>,
    /// Start of the job range.
    pub start: f64,
    step: f64,
}

impl Curve {
    /// Apparatus valid on `[start, hi]`; integrated curves are re-solved
    /// when `hi` lies beyond the job range.
    pub fn covering(&self, hi: f64) -> Result<FrenetApparatus, CliError> {
        if self.closed_form || self.apparatus.domain().contains(hi) {
            return Ok(self.apparatus.clone());
        }
        let frame = self.apparatus.frame_at(self.start)?;
        Ok(integrate(self.apparatus.kappa(), self.apparatus.tau(), &frame, self.start, hi, self.step)?)
    }
}

fn integrate(
    kappa: &ScalarProfile,
    tau: &ScalarProfile,
    start: &Frame,
    lo: f64,
    hi: f64,
    step: f64,
) -> sc_core::Result<FrenetApparatus> {
    integrate_frenet(kappa, tau, start, Interval::closed(lo, hi)?, &IntegrationConfig::new(step, 1)?)
}

/// Period `2π q n / |rate|` of a slant helix with constant phase rate,
/// where `n = cos θ ≈ p/q`.
fn slant_period(cos_theta: f64, rate: f64) -> Option<f64> {
    approximate_rational(cos_theta)
        .fraction()
        .map(|(_, q)| TAU * q as f64 * cos_theta / rate.abs())
}

fn constant_pair_period(kappa: f64, tau: f64) -> Option<f64> {
    let w = kappa.hypot(tau);
    (w > 0.0).then(|| TAU / w)
}

fn profile_columns(path: &std::path::Path) -> Result<(ScalarProfile, ScalarProfile), CliError> {
    let table = read_csv(path)?;
    let missing = |name: &str| usage(format!("{}: column '{name}' missing or incomplete", path.display()));
    let s = table.column(S).ok_or_else(|| missing("s"))?;
    let kappa = table.column(KAPPA).ok_or_else(|| missing("kappa"))?;
    let tau = table.column(TAU_COL).ok_or_else(|| missing("tau"))?;
    Ok((ScalarProfile::sampled(s.clone(), kappa)?, ScalarProfile::sampled(s, tau)?))
}

/// Builds the curve of `job`, in closed form where one exists.
pub fn build_curve(job: &JobSpec) -> Result<Curve, CliError> {
    let (lo, hi) = job.s_range;
    let ode = |kappa: &ScalarProfile, tau: &ScalarProfile| integrate(kappa, tau, &Frame::canonical(), lo, hi, job.step);
    let (apparatus, closed_form, period) = match job.family {
        Family::Plane => {
            let k = job.required("kappa-const");
            let period = (k != 0.0).then(|| TAU / k.abs());
            (plane_apparatus(&ScalarProfile::constant(k))?, true, period)
        }
        Family::Helix => {
            let k = job.required("kappa-const");
            let theta = match (job.param("theta"), job.param("tau-const")) {
                (Some(theta), _) => Some(theta),
                (None, Some(t)) if k > 0.0 && t > 0.0 => Some(k.atan2(t)),
                _ => None,
            };
            match theta {
                Some(theta) => {
                    let app = helix_apparatus(&ScalarProfile::constant(k), theta)?;
                    let period = constant_pair_period(k, k / theta.tan());
                    (app, true, period)
                }
                None => {
                    let t = job.required("tau-const");
                    let (kp, tp) = (ScalarProfile::constant(k), ScalarProfile::constant(t));
                    (ode(&kp, &tp)?, false, constant_pair_period(k, t))
                }
            }
        }
        Family::SlantHelix => {
            let (theta, rate) = (job.required("theta"), job.required("phi-rate"));
            let phi0 = job.param("phi0").unwrap_or(0.0);
            let sh = slant_helix_apparatus(&SlantHelixParams::new(theta, phi0, ScalarProfile::constant(rate))?)?;
            (sh.reflected_apparatus()?, true, slant_period(theta.cos(), rate))
        }
        Family::Salkowski => {
            let m = job.required("m");
            let sp = salkowski_profile(m)?;
            if m > 0.0 {
                let sh = slant_helix_apparatus(&sp.slant_params()?)?;
                let frames = sh.reflected_apparatus()?.frames().clone();
                (FrenetApparatus::new(frames, sp.kappa, sp.tau, true)?, true, None)
            } else {
                (ode(&sp.kappa, &sp.tau)?, false, None)
            }
        }
        Family::ConstantPrecession => {
            let cp = constant_precession_profile(job.required("omega"), job.required("mu"))?;
            let period = slant_period(cp.cos_theta.abs(), cp.mu);
            if cp.m() > 0.0 {
                let sh = slant_helix_apparatus(&cp.slant_params()?)?;
                let frames = sh.reflected_apparatus()?.frames().clone();
                (FrenetApparatus::new(frames, cp.kappa, cp.tau, true)?, true, period)
            } else {
                (ode(&cp.kappa, &cp.tau)?, false, period)
            }
        }
        Family::CustomProfile => match &job.profile {
            Some(path) => {
                let (kappa, tau) = profile_columns(path)?;
                (ode(&kappa, &tau)?, false, None)
            }
            None => {
                let (k, t) = (job.required("kappa-const"), job.required("tau-const"));
                let (kp, tp) = (ScalarProfile::constant(k), ScalarProfile::constant(t));
                (ode(&kp, &tp)?, false, constant_pair_period(k, t))
            }
        },
    };
    Ok(Curve {
        apparatus,
        closed_form,
        period,
        start: lo,
        step: job.step,
    })
}
