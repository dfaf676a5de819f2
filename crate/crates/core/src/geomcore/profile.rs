//! Scalar functions of arc length: curvature, torsion, Bishop coefficients.
//!
//! Every profile carries its own domain and can be integrated. Closed-form
//! kinds integrate analytically; sampled data is interpolated by local cubics
//! and integrated with Simpson's rule at half the grid spacing, which is exact
//! for the interpolant. Products of the form `a(s)·cos φ(s)` integrate in
//! closed form when `a` is a known multiple of `φ'`, and by adaptive Simpson
//! otherwise.

use std::sync::Arc;

use super::interval::Interval;
use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wave {
    Cos,
    Sin,
}

impl Wave {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Wave::Cos => x.cos(),
            Wave::Sin => x.sin(),
        }
    }

    /// An antiderivative of `apply`.
    fn primitive(self, x: f64) -> f64 {
        match self {
            Wave::Cos => x.sin(),
            Wave::Sin => -x.cos(),
        }
    }
}

/// Nodes and values of a sampled profile.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledData {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProfileKind {
    Constant(f64),
    /// `amp · wave(freq·s + phase)`
    Harmonic {
        amp: f64,
        freq: f64,
        phase: f64,
        wave: Wave,
    },
    /// `m s / sqrt(1 − m² s²)`
    SalkowskiTorsion { m: f64 },
    /// `1 / sqrt(1 − m² s²)`
    SalkowskiHelixCurvature { m: f64 },
    Sampled(Arc<SampledData>),
    /// `amplitude(s) · wave(phase(s))`; `amp_per_rate` is `r` when
    /// `amplitude = r · phase'` is known structurally.
    Modulated {
        amplitude: Arc<ScalarProfile>,
        phase: Arc<PhaseFunction>,
        wave: Wave,
        amp_per_rate: Option<f64>,
    },
    /// `κ(s) · u / sqrt(1 − u²)` with `u = m (offset + ∫_anchor^s κ)`.
    SlantTorsion {
        kappa: Arc<ScalarProfile>,
        m: f64,
        offset: f64,
        anchor: f64,
    },
    Sum(Arc<[ScalarProfile]>),
    Scaled(f64, Arc<ScalarProfile>),
}

/// A scalar function of arc length together with its domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarProfile {
    kind: ProfileKind,
    domain: Interval,
}

impl ScalarProfile {
    pub fn constant(c: f64) -> Self {
        ScalarProfile {
            kind: ProfileKind::Constant(c),
            domain: Interval::REAL,
        }
    }

    pub fn harmonic(amp: f64, freq: f64, phase: f64, wave: Wave) -> Self {
        ScalarProfile {
            kind: ProfileKind::Harmonic { amp, freq, phase, wave },
            domain: Interval::REAL,
        }
    }

    /// Salkowski torsion `m s / sqrt(1 − m² s²)` on `(−1/|m|, 1/|m|)`.
    pub fn salkowski_torsion(m: f64) -> Result<Self> {
        Ok(ScalarProfile {
            kind: ProfileKind::SalkowskiTorsion { m },
            domain: salkowski_domain(m)?,
        })
    }

    /// Curvature `1 / sqrt(1 − m² s²)` of the helix whose successor is the
    /// Salkowski curve, on `(−1/|m|, 1/|m|)`.
    pub fn salkowski_helix_curvature(m: f64) -> Result<Self> {
        Ok(ScalarProfile {
            kind: ProfileKind::SalkowskiHelixCurvature { m },
            domain: salkowski_domain(m)?,
        })
    }

    /// Sampled profile on a strictly increasing grid of at least two nodes.
    pub fn sampled(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "grid has {} nodes but {} values were given",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(Error::TooFewNodes { needed: 2, got: grid.len() });
        }
        if grid.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sampled profile"));
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::NonIncreasingGrid);
        }
        let domain = Interval::closed(grid[0], grid[grid.len() - 1])?;
        Ok(ScalarProfile {
            kind: ProfileKind::Sampled(Arc::new(SampledData { grid, values })),
            domain,
        })
    }

    /// `amplitude(s) · wave(phase(s))` on the common domain.
    pub fn modulated(amplitude: ScalarProfile, phase: PhaseFunction, wave: Wave) -> Result<Self> {
        let domain = amplitude.domain.intersect(&phase.rate.domain)?;
        let amp_per_rate = amplitude.ratio_to(&phase.rate);
        Ok(ScalarProfile {
            kind: ProfileKind::Modulated {
                amplitude: Arc::new(amplitude),
                phase: Arc::new(phase),
                wave,
                amp_per_rate,
            },
            domain,
        })
    }

    pub(crate) fn slant_torsion(
        kappa: ScalarProfile,
        m: f64,
        offset: f64,
        anchor: f64,
        domain: Interval,
    ) -> Self {
        ScalarProfile {
            kind: ProfileKind::SlantTorsion {
                kappa: Arc::new(kappa),
                m,
                offset,
                anchor,
            },
            domain,
        }
    }

    pub fn sum(terms: Vec<ScalarProfile>) -> Result<Self> {
        let mut iter = terms.iter();
        let first = iter.next().ok_or_else(|| Error::InvalidParameter("empty sum".into()))?;
        let mut domain = first.domain;
        for t in iter {
            domain = domain.intersect(&t.domain)?;
        }
        Ok(ScalarProfile {
            kind: ProfileKind::Sum(terms.into()),
            domain,
        })
    }

    pub fn scaled(self, c: f64) -> Self {
        let domain = self.domain;
        ScalarProfile {
            kind: ProfileKind::Scaled(c, Arc::new(self)),
            domain,
        }
    }

    /// Narrows the domain to its intersection with `domain`.
    pub fn restricted(mut self, domain: Interval) -> Result<Self> {
        self.domain = self.domain.intersect(&domain)?;
        Ok(self)
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.kind
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        self.domain.check(s)?;
        let v = self.eval_raw(s)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::OutsideDomain { s, domain: self.domain })
        }
    }

    fn eval_raw(&self, s: f64) -> Result<f64> {
        Ok(match &self.kind {
            ProfileKind::Constant(c) => *c,
            ProfileKind::Harmonic { amp, freq, phase, wave } => amp * wave.apply(freq * s + phase),
            ProfileKind::SalkowskiTorsion { m } => m * s / (1.0 - m * m * s * s).sqrt(),
            ProfileKind::SalkowskiHelixCurvature { m } => 1.0 / (1.0 - m * m * s * s).sqrt(),
            ProfileKind::Sampled(data) => interpolate(data, s),
            ProfileKind::Modulated { amplitude, phase, wave, .. } => {
                amplitude.eval(s)? * wave.apply(phase.eval(s)?)
            }
            ProfileKind::SlantTorsion { kappa, m, offset, anchor } => {
                let u = m * (offset + kappa.integral(*anchor, s)?);
                kappa.eval(s)? * u / (1.0 - u * u).sqrt()
            }
            ProfileKind::Sum(terms) => {
                let mut acc = 0.0;
                for t in terms.iter() {
                    acc += t.eval(s)?;
                }
                acc
            }
            ProfileKind::Scaled(c, inner) => c * inner.eval(s)?,
        })
    }

    /// Evaluates on every node of `grid`.
    pub fn sample(&self, grid: &[f64]) -> Result<Vec<f64>> {
        grid.iter().map(|&s| self.eval(s)).collect()
    }

    /// Definite integral `∫_a^b` (signed; `b < a` allowed).
    pub fn integral(&self, a: f64, b: f64) -> Result<f64> {
        self.domain.check(a)?;
        self.domain.check(b)?;
        if a == b {
            return Ok(0.0);
        }
        let v = self.integral_raw(a, b)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Quadrature { a, b })
        }
    }

    fn integral_raw(&self, a: f64, b: f64) -> Result<f64> {
        Ok(match &self.kind {
            ProfileKind::Constant(c) => c * (b - a),
            ProfileKind::Harmonic { amp, freq, phase, wave } => {
                if *freq == 0.0 {
                    amp * wave.apply(*phase) * (b - a)
                } else {
                    amp / freq * (wave.primitive(freq * b + phase) - wave.primitive(freq * a + phase))
                }
            }
            ProfileKind::SalkowskiTorsion { m } => {
                let g = |s: f64| -(1.0 - m * m * s * s).sqrt() / m;
                g(b) - g(a)
            }
            ProfileKind::SalkowskiHelixCurvature { m } => ((m * b).asin() - (m * a).asin()) / m,
            ProfileKind::Sampled(data) => {
                if a < b {
                    integrate_sampled(data, a, b)
                } else {
                    -integrate_sampled(data, b, a)
                }
            }
            ProfileKind::Modulated { amplitude, phase, wave, amp_per_rate } => {
                if phase.rate.is_identically_zero() {
                    wave.apply(phase.phi0) * amplitude.integral(a, b)?
                } else if let Some(r) = amp_per_rate {
                    r * (wave.primitive(phase.eval(b)?) - wave.primitive(phase.eval(a)?))
                } else {
                    adaptive_simpson(&|s| self.eval(s), a, b)?
                }
            }
            ProfileKind::SlantTorsion { kappa, m, offset, anchor } => {
                let g = |s: f64| -> Result<f64> {
                    let u = m * (offset + kappa.integral(*anchor, s)?);
                    Ok(-(1.0 - u * u).sqrt() / m)
                };
                g(b)? - g(a)?
            }
            ProfileKind::Sum(terms) => {
                let mut acc = 0.0;
                for t in terms.iter() {
                    acc += t.integral(a, b)?;
                }
                acc
            }
            ProfileKind::Scaled(c, inner) => c * inner.integral(a, b)?,
        })
    }

    /// True when the profile is structurally the zero function.
    pub fn is_identically_zero(&self) -> bool {
        match &self.kind {
            ProfileKind::Constant(c) => *c == 0.0,
            ProfileKind::Harmonic { amp, .. } => *amp == 0.0,
            ProfileKind::Scaled(c, inner) => *c == 0.0 || inner.is_identically_zero(),
            ProfileKind::Sum(terms) => terms.iter().all(ScalarProfile::is_identically_zero),
            ProfileKind::Modulated { amplitude, .. } => amplitude.is_identically_zero(),
            ProfileKind::SlantTorsion { kappa, .. } => kappa.is_identically_zero(),
            _ => false,
        }
    }

    /// Returns `r` when `self = r · other` can be read off the structure.
    pub fn ratio_to(&self, other: &ScalarProfile) -> Option<f64> {
        if other.is_identically_zero() {
            return None;
        }
        if self.kind == other.kind {
            return Some(1.0);
        }
        match (&self.kind, &other.kind) {
            (ProfileKind::Constant(a), ProfileKind::Constant(b)) => Some(a / b),
            (ProfileKind::Scaled(c, x), _) => x.ratio_to(other).map(|r| c * r),
            (_, ProfileKind::Scaled(c, y)) if *c != 0.0 => self.ratio_to(y).map(|r| r / c),
            _ => None,
        }
    }
}

fn salkowski_domain(m: f64) -> Result<Interval> {
    if !m.is_finite() || m == 0.0 {
        return Err(Error::InvalidParameter("Salkowski parameter m must be finite and non-zero".into()));
    }
    Interval::open(-1.0 / m.abs(), 1.0 / m.abs())
}

/// Local cubic Lagrange interpolation; exact at the nodes.
fn interpolate(data: &SampledData, s: f64) -> f64 {
    let g = &data.grid;
    let n = g.len();
    let idx = g.partition_point(|&x| x <= s);
    if idx > 0 && g[idx - 1] == s {
        return data.values[idx - 1];
    }
    // interval [g[i], g[i+1]] containing s
    let i = idx.saturating_sub(1).min(n - 2);
    let width = n.min(4);
    let start = (i as isize - 1).clamp(0, (n - width) as isize) as usize;
    lagrange(&g[start..start + width], &data.values[start..start + width], s)
}

fn lagrange(xs: &[f64], ys: &[f64], s: f64) -> f64 {
    let mut acc = 0.0;
    for (j, (&xj, &yj)) in xs.iter().zip(ys).enumerate() {
        let mut basis = 1.0;
        for (k, &xk) in xs.iter().enumerate() {
            if k != j {
                basis *= (s - xk) / (xj - xk);
            }
        }
        acc += yj * basis;
    }
    acc
}

fn integrate_sampled(data: &SampledData, a: f64, b: f64) -> f64 {
    let g = &data.grid;
    let first = g.partition_point(|&x| x <= a);
    let mut cuts = vec![a];
    cuts.extend(g[first..].iter().copied().take_while(|&x| x < b));
    cuts.push(b);
    cuts.windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let mid = 0.5 * (lo + hi);
            (hi - lo) / 6.0 * (interpolate(data, lo) + 4.0 * interpolate(data, mid) + interpolate(data, hi))
        })
        .sum()
}

/// A rotation angle `φ(s) = φ0 + ∫_anchor^s rate`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFunction {
    pub phi0: f64,
    pub rate: ScalarProfile,
    pub anchor: f64,
}

impl PhaseFunction {
    /// Phase anchored at the reference point of the rate's domain.
    pub fn new(phi0: f64, rate: ScalarProfile) -> Self {
        let anchor = rate.domain().anchor();
        PhaseFunction { phi0, rate, anchor }
    }

    pub fn with_anchor(phi0: f64, rate: ScalarProfile, anchor: f64) -> Result<Self> {
        rate.domain().check(anchor)?;
        Ok(PhaseFunction { phi0, rate, anchor })
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        Ok(self.phi0 + self.rate.integral(self.anchor, s)?)
    }

    pub fn derivative(&self, s: f64) -> Result<f64> {
        self.rate.eval(s)
    }

    pub fn domain(&self) -> Interval {
        self.rate.domain()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn salkowski_boundary_is_excluded() {
        let tau = ScalarProfile::salkowski_torsion(0.5).unwrap();
        assert_eq!(tau.eval(0.0).unwrap(), 0.0);
        assert!(matches!(tau.eval(2.0), Err(Error::OutsideDomain { .. })));
        assert!(matches!(tau.eval(-2.0), Err(Error::OutsideDomain { .. })));
        assert!(tau.eval(1.999).unwrap() > 10.0);
        assert!(ScalarProfile::salkowski_torsion(0.0).is_err());
    }

    #[test]
    fn harmonic_integral_over_period_vanishes() {
        let p = ScalarProfile::harmonic(1.0, 1.0, 0.0, Wave::Sin);
        assert!(p.integral(0.0, 2.0 * PI).unwrap().abs() < 1e-12);
        let c = ScalarProfile::harmonic(3.0, 4.0, 0.0, Wave::Cos);
        assert!(c.integral(0.0, PI / 2.0).unwrap().abs() < 1e-14);
    }

    #[test]
    fn analytic_integrals_match_quadrature() {
        let cases = [
            ScalarProfile::salkowski_torsion(0.5).unwrap(),
            ScalarProfile::salkowski_helix_curvature(0.5).unwrap(),
            ScalarProfile::harmonic(1.3, -0.7, 0.2, Wave::Cos),
            ScalarProfile::harmonic(0.4, 2.1, -1.0, Wave::Sin),
            ScalarProfile::sum(vec![
                ScalarProfile::constant(0.5),
                ScalarProfile::harmonic(1.0, 3.0, 0.0, Wave::Sin).scaled(-2.0),
            ])
            .unwrap(),
        ];
        for p in &cases {
            let (a, b) = (-1.7, 1.3);
            let quad = adaptive_simpson(&|s| p.eval(s), a, b).unwrap();
            let exact = p.integral(a, b).unwrap();
            assert!((quad - exact).abs() < 1e-11, "{p:?}: {quad} vs {exact}");
        }
    }

    #[test]
    fn modulated_closed_form_matches_quadrature() {
        // amplitude proportional to the phase rate: closed form applies
        let rate = ScalarProfile::salkowski_helix_curvature(0.5).unwrap().scaled(0.5);
        let phase = PhaseFunction::new(0.3, rate.clone());
        let p = ScalarProfile::modulated(rate.scaled(2.0), phase.clone(), Wave::Cos).unwrap();
        assert!(matches!(p.kind(), ProfileKind::Modulated { amp_per_rate: Some(r), .. } if (*r - 2.0).abs() < 1e-15));
        let quad = adaptive_simpson(&|s| p.eval(s), -1.5, 1.8).unwrap();
        assert!((quad - p.integral(-1.5, 1.8).unwrap()).abs() < 1e-11);

        // unrelated amplitude: quadrature fallback
        let q = ScalarProfile::modulated(ScalarProfile::harmonic(1.0, 1.0, 0.0, Wave::Cos), phase, Wave::Sin).unwrap();
        assert!(matches!(q.kind(), ProfileKind::Modulated { amp_per_rate: None, .. }));
        assert!(q.integral(-1.0, 1.0).is_ok());
    }

    #[test]
    fn sampled_is_exact_at_nodes_and_for_cubics() {
        let grid: Vec<f64> = (0..11).map(|i| i as f64 * 0.3).collect();
        let cubic = |s: f64| 1.0 - 2.0 * s + 0.5 * s * s * s;
        let vals: Vec<f64> = grid.iter().map(|&s| cubic(s)).collect();
        let p = ScalarProfile::sampled(grid.clone(), vals.clone()).unwrap();
        for (s, v) in grid.iter().zip(&vals) {
            assert_eq!(p.eval(*s).unwrap().to_bits(), v.to_bits());
        }
        assert!((p.eval(1.234).unwrap() - cubic(1.234)).abs() < 1e-12);
        let exact = |s: f64| s - s * s + 0.125 * s.powi(4);
        assert!((p.integral(0.1, 2.95).unwrap() - (exact(2.95) - exact(0.1))).abs() < 1e-12);
        assert!(p.eval(3.01).is_err());
    }

    #[test]
    fn sampled_validation() {
        assert_eq!(
            ScalarProfile::sampled(vec![0.0], vec![1.0]),
            Err(Error::TooFewNodes { needed: 2, got: 1 })
        );
        assert_eq!(
            ScalarProfile::sampled(vec![0.0, 0.0], vec![1.0, 2.0]),
            Err(Error::NonIncreasingGrid)
        );
        let two = ScalarProfile::sampled(vec![0.0, 1.0], vec![1.0, 3.0]).unwrap();
        assert!((two.eval(0.25).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn ratio_detection() {
        let k = ScalarProfile::harmonic(1.0, 2.0, 0.0, Wave::Cos);
        assert_eq!(k.clone().scaled(3.0).ratio_to(&k), Some(3.0));
        assert_eq!(k.ratio_to(&k.clone().scaled(4.0)), Some(0.25));
        assert_eq!(ScalarProfile::constant(3.0).ratio_to(&ScalarProfile::constant(4.0)), Some(0.75));
        assert_eq!(k.ratio_to(&ScalarProfile::constant(0.0)), None);
    }

    #[test]
    fn phase_accumulates_from_anchor() {
        let phase = PhaseFunction::new(0.5, ScalarProfile::constant(2.0));
        assert_eq!(phase.anchor, 0.0);
        assert!((phase.eval(1.5).unwrap() - 3.5).abs() < 1e-15);
        let shifted = PhaseFunction::with_anchor(0.5, ScalarProfile::constant(2.0), 1.0).unwrap();
        assert!((shifted.eval(1.5).unwrap() - 1.5).abs() < 1e-15);
    }
}
