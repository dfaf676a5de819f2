use std::sync::Arc;

use super::frame::{frame_defect, rotate_frame, Frame, ORTHO_TOL};
use super::interval::Interval;
use super::profile::{PhaseFunction, ScalarProfile};
use super::vec3::Vec3;
use crate::error::{Error, Result};

/// Frames stored on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFrames {
    grid: Vec<f64>,
    frames: Vec<Frame>,
}

impl SampledFrames {
    pub fn new(grid: Vec<f64>, frames: Vec<Frame>) -> Result<Self> {
        if grid.len() != frames.len() {
            return Err(Error::InvalidParameter("grid and frame counts differ".into()));
        }
        if grid.len() < 2 {
            return Err(Error::TooFewNodes { needed: 2, got: grid.len() });
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::NonIncreasingGrid);
        }
        Ok(SampledFrames { grid, frames })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    fn domain(&self) -> Interval {
        Interval {
            lo: self.grid[0],
            hi: self.grid[self.grid.len() - 1],
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// Exact at nodes; between nodes, componentwise cubic interpolation
    /// followed by re-orthonormalization.
    fn eval(&self, s: f64) -> Frame {
        let g = &self.grid;
        let n = g.len();
        let idx = g.partition_point(|&x| x <= s);
        if idx > 0 && g[idx - 1] == s {
            return self.frames[idx - 1];
        }
        let i = idx.saturating_sub(1).min(n - 2);
        let width = n.min(4);
        let start = (i as isize - 1).clamp(0, (n - width) as isize) as usize;
        let xs = &g[start..start + width];
        let mut axes = [Vec3::ZERO; 3];
        for (j, &xj) in xs.iter().enumerate() {
            let mut basis = 1.0;
            for (k, &xk) in xs.iter().enumerate() {
                if k != j {
                    basis *= (s - xk) / (xj - xk);
                }
            }
            let f = self.frames[start + j];
            axes[0] += f.t * basis;
            axes[1] += f.n1 * basis;
            axes[2] += f.n2 * basis;
        }
        Frame::new_unchecked(axes[0], axes[1], axes[2]).orthonormalized()
    }
}

/// A frame as a function of arc length, either in closed form or sampled.
#[derive(Debug, Clone, PartialEq)]
pub enum FrameField {
    Constant(Frame),
    /// Plane-curve frame with turning angle `Ω(s)`.
    Plane { omega: PhaseFunction },
    /// General-helix frame with angle `Ω(s)` about `e3` and slope `theta`.
    Helix { omega: PhaseFunction, theta: f64 },
    /// Normal-plane rotation of `source` by `phase`.
    Rotated { source: Arc<FrameField>, phase: PhaseFunction },
    /// Successor frame of `source` for the given phase.
    Successor { source: Arc<FrameField>, phase: PhaseFunction },
    /// A fixed linear map (given by rows) applied to every axis.
    Mapped { source: Arc<FrameField>, map: [[f64; 3]; 3] },
    Sampled(Arc<SampledFrames>),
}

impl FrameField {
    pub fn domain(&self) -> Interval {
        match self {
            FrameField::Constant(_) => Interval::REAL,
            FrameField::Plane { omega } | FrameField::Helix { omega, .. } => omega.domain(),
            FrameField::Rotated { source, phase } | FrameField::Successor { source, phase } => source
                .domain()
                .intersect(&phase.domain())
                .unwrap_or(Interval { lo: 0.0, hi: 0.0, lo_closed: false, hi_closed: false }),
            FrameField::Mapped { source, .. } => source.domain(),
            FrameField::Sampled(sf) => sf.domain(),
        }
    }

    pub fn eval(&self, s: f64) -> Result<Frame> {
        Ok(match self {
            FrameField::Constant(f) => *f,
            FrameField::Plane { omega } => {
                let (sn, cs) = omega.eval(s)?.sin_cos();
                Frame::new_unchecked(
                    Vec3::new_unchecked(cs, sn, 0.0),
                    Vec3::new_unchecked(-sn, cs, 0.0),
                    Vec3::E3,
                )
            }
            FrameField::Helix { omega, theta } => {
                let (sn, cs) = omega.eval(s)?.sin_cos();
                let (st, ct) = theta.sin_cos();
                Frame::new_unchecked(
                    Vec3::new_unchecked(st * sn, -st * cs, ct),
                    Vec3::new_unchecked(cs, sn, 0.0),
                    Vec3::new_unchecked(-ct * sn, ct * cs, st),
                )
            }
            FrameField::Rotated { source, phase } => rotate_frame(&source.eval(s)?, phase.eval(s)?),
            FrameField::Successor { source, phase } => successor_frame(&source.eval(s)?, phase.eval(s)?),
            FrameField::Mapped { source, map } => source.eval(s)?.map(map),
            FrameField::Sampled(sf) => {
                sf.domain().check(s)?;
                sf.eval(s)
            }
        })
    }
}

/// `(T*, N*, B*) = (−cos φ N + sin φ B, T, sin φ N + cos φ B)`.
pub(crate) fn successor_frame(f: &Frame, phi: f64) -> Frame {
    let (sn, cs) = phi.sin_cos();
    Frame::new_unchecked(f.n2 * sn - f.n1 * cs, f.t, f.n1 * sn + f.n2 * cs)
}

/// Frame field plus curvature and torsion: `(T, N, B, κ, τ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrenetApparatus {
    frames: FrameField,
    kappa: ScalarProfile,
    tau: ScalarProfile,
    generic: bool,
    domain: Interval,
}

impl FrenetApparatus {
    /// The domain is the intersection of the frame and profile domains.
    pub fn new(frames: FrameField, kappa: ScalarProfile, tau: ScalarProfile, generic: bool) -> Result<Self> {
        let domain = kappa.domain().intersect(&tau.domain())?.intersect(&frames.domain())?;
        Ok(FrenetApparatus {
            frames,
            kappa,
            tau,
            generic,
            domain,
        })
    }

    /// Frame at `s`, validated against [`ORTHO_TOL`].
    pub fn frame_at(&self, s: f64) -> Result<Frame> {
        self.domain.check(s)?;
        let f = self.frames.eval(s)?;
        let defect = frame_defect(&f);
        if defect > ORTHO_TOL || defect.is_nan() {
            return Err(Error::InvalidFrame { defect });
        }
        Ok(f)
    }

    pub fn kappa(&self) -> &ScalarProfile {
        &self.kappa
    }

    pub fn tau(&self) -> &ScalarProfile {
        &self.tau
    }

    pub fn frames(&self) -> &FrameField {
        &self.frames
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn is_generic(&self) -> bool {
        self.generic
    }

    /// Grid of the underlying frame samples, if the frame field is sampled.
    pub fn sample_grid(&self) -> Option<&[f64]> {
        match &self.frames {
            FrameField::Sampled(sf) => Some(sf.grid()),
            _ => None,
        }
    }

    /// Copy of the apparatus with frames tabulated on `grid`.
    pub fn tabulate(&self, grid: &[f64]) -> Result<FrenetApparatus> {
        let frames = grid.iter().map(|&s| self.frame_at(s)).collect::<Result<Vec<_>>>()?;
        FrenetApparatus::new(
            FrameField::Sampled(Arc::new(SampledFrames::new(grid.to_vec(), frames)?)),
            self.kappa.clone(),
            self.tau.clone(),
            self.generic,
        )
    }

    /// Applies a fixed proper rotation (rows of `map`) to every frame.
    pub fn mapped(&self, map: [[f64; 3]; 3]) -> FrenetApparatus {
        FrenetApparatus {
            frames: FrameField::Mapped {
                source: Arc::new(self.frames.clone()),
                map,
            },
            ..self.clone()
        }
    }
}

/// Frame field plus Bishop coefficients `(T, N1, N2, k1, k2)`; `k3 ≡ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BishopApparatus {
    frames: FrameField,
    k1: ScalarProfile,
    k2: ScalarProfile,
    domain: Interval,
}

impl BishopApparatus {
    pub fn new(frames: FrameField, k1: ScalarProfile, k2: ScalarProfile) -> Result<Self> {
        let domain = k1.domain().intersect(&k2.domain())?.intersect(&frames.domain())?;
        Ok(BishopApparatus { frames, k1, k2, domain })
    }

    pub fn frame_at(&self, s: f64) -> Result<Frame> {
        self.domain.check(s)?;
        let f = self.frames.eval(s)?;
        let defect = frame_defect(&f);
        if defect > ORTHO_TOL || defect.is_nan() {
            return Err(Error::InvalidFrame { defect });
        }
        Ok(f)
    }

    pub fn k1(&self) -> &ScalarProfile {
        &self.k1
    }

    pub fn k2(&self) -> &ScalarProfile {
        &self.k2
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_frames_exact_at_nodes() {
        let grid: Vec<f64> = (0..20).map(|i| i as f64 * 0.05).collect();
        let field = FrameField::Plane { omega: PhaseFunction::new(0.0, ScalarProfile::constant(1.0)) };
        let frames: Vec<Frame> = grid.iter().map(|&s| field.eval(s).unwrap()).collect();
        let sf = SampledFrames::new(grid.clone(), frames.clone()).unwrap();
        assert_eq!(sf.eval(grid[7]), frames[7]);
        let mid = sf.eval(0.333);
        assert!(mid.max_component_diff(&field.eval(0.333).unwrap()) < 1e-6);
        assert!(frame_defect(&mid) < 1e-15);
    }

    #[test]
    fn helix_frame_is_right_handed() {
        let field = FrameField::Helix {
            omega: PhaseFunction::new(0.0, ScalarProfile::constant(1.0)),
            theta: 0.4,
        };
        for s in [0.0, 0.7, 2.0, -3.1] {
            assert!(frame_defect(&field.eval(s).unwrap()) < 1e-15);
        }
    }

    #[test]
    fn apparatus_domain_is_intersection() {
        let app = FrenetApparatus::new(
            FrameField::Constant(Frame::canonical()),
            ScalarProfile::constant(0.0).restricted(Interval::closed(0.0, 5.0).unwrap()).unwrap(),
            ScalarProfile::salkowski_torsion(0.5).unwrap(),
            true,
        )
        .unwrap();
        assert_eq!(app.domain(), Interval { lo: 0.0, hi: 2.0, lo_closed: true, hi_closed: false });
        assert!(app.frame_at(2.5).is_err());
    }
}
