use crate::error::{Error, Result};
use crate::geomcore::{Frame, FrenetApparatus, Vec3};
use crate::quad::cumulative_simpson;

/// Positions (and optionally frames) of a unit-speed curve on an arc-length grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    pub s_grid: Vec<f64>,
    pub points: Vec<Vec3>,
    pub frames: Option<Vec<Frame>>,
}

impl CurveSamples {
    pub fn new(s_grid: Vec<f64>, points: Vec<Vec3>, frames: Option<Vec<Frame>>) -> Result<Self> {
        if s_grid.len() != points.len() || frames.as_ref().is_some_and(|f| f.len() != s_grid.len()) {
            return Err(Error::InvalidParameter("sample arrays differ in length".into()));
        }
        if s_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::NonIncreasingGrid);
        }
        Ok(CurveSamples { s_grid, points, frames })
    }

    /// Largest `| |x(i+1) − x(i)| − Δs |` over consecutive nodes.
    pub fn unit_speed_defect(&self) -> f64 {
        self.s_grid
            .windows(2)
            .zip(self.points.windows(2))
            .map(|(s, x)| ((x[1] - x[0]).norm() - (s[1] - s[0])).abs())
            .fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.s_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s_grid.is_empty()
    }
}

/// Spacing of a uniform grid, or an error when the grid is not uniform.
pub(crate) fn uniform_spacing(grid: &[f64]) -> Result<f64> {
    let n = grid.len();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, got: n });
    }
    let h = (grid[n - 1] - grid[0]) / (n - 1) as f64;
    let slack = 1e-9 * h + 4.0 * f64::EPSILON * grid[0].abs().max(grid[n - 1].abs());
    if grid.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > slack) {
        return Err(Error::NonUniformGrid);
    }
    Ok(h)
}

/// Recovers positions `x(s) = x0 + ∫T ds` by cumulative Simpson quadrature
/// of the sampled tangent field.
pub fn integrate_position(apparatus: &FrenetApparatus, x0: Vec3) -> Result<CurveSamples> {
    let grid = apparatus
        .sample_grid()
        .ok_or_else(|| Error::InvalidParameter("apparatus has no sampled frame field".into()))?;
    if grid.len() < 3 {
        return Err(Error::TooFewNodes { needed: 3, got: grid.len() });
    }
    let h = uniform_spacing(grid)?;
    let frames = grid.iter().map(|&s| apparatus.frame_at(s)).collect::<Result<Vec<_>>>()?;
    let tangents: Vec<Vec3> = frames.iter().map(|f| f.t).collect();
    let points = cumulative_simpson(&tangents, h)?.into_iter().map(|d| x0 + d).collect();
    CurveSamples::new(grid.to_vec(), points, Some(frames))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::{FrameField, Interval, ScalarProfile};
    use crate::natural::{integrate_frenet, IntegrationConfig};
    use std::f64::consts::PI;

    #[test]
    fn unit_circle_closes() {
        let app = integrate_frenet(
            &ScalarProfile::constant(1.0),
            &ScalarProfile::constant(0.0),
            &Frame::canonical(),
            Interval::closed(0.0, 2.0 * PI).unwrap(),
            &IntegrationConfig::default(),
        )
        .unwrap();
        let c = integrate_position(&app, Vec3::ZERO).unwrap();
        let closure = (c.points[c.len() - 1] - c.points[0]).norm();
        assert!(closure < 1e-7, "{closure}");
        // x(s) = (sin s, 1 − cos s, 0)
        for (s, x) in c.s_grid.iter().zip(&c.points) {
            assert!((*x - Vec3::new_unchecked(s.sin(), 1.0 - s.cos(), 0.0)).max_abs() < 1e-10);
        }
    }

    #[test]
    fn constant_tangent_gives_line() {
        let f = crate::geomcore::rotate_frame(&Frame::canonical(), 0.2);
        let grid: Vec<f64> = (0..11).map(|i| i as f64 * 0.1).collect();
        let app = FrenetApparatus::new(
            FrameField::Constant(f),
            ScalarProfile::constant(0.0),
            ScalarProfile::constant(0.0),
            true,
        )
        .unwrap()
        .tabulate(&grid)
        .unwrap();
        let x0 = Vec3::new_unchecked(1.0, -2.0, 0.5);
        let c = integrate_position(&app, x0).unwrap();
        for (s, x) in c.s_grid.iter().zip(&c.points) {
            assert!((*x - (x0 + f.t * *s)).max_abs() < 1e-14);
        }
    }

    #[test]
    fn needs_sampled_frames_and_three_nodes() {
        let app = FrenetApparatus::new(
            FrameField::Constant(Frame::canonical()),
            ScalarProfile::constant(0.0),
            ScalarProfile::constant(0.0),
            true,
        )
        .unwrap();
        assert!(integrate_position(&app, Vec3::ZERO).is_err());
        let two = app.tabulate(&[0.0, 1.0]).unwrap();
        assert_eq!(integrate_position(&two, Vec3::ZERO), Err(Error::TooFewNodes { needed: 3, got: 2 }));
    }

    #[test]
    fn uniform_spacing_detects_irregular_grid() {
        assert!(uniform_spacing(&[0.0, 0.1, 0.2, 0.35]).is_err());
        assert!((uniform_spacing(&[1.0, 1.5, 2.0]).unwrap() - 0.5).abs() < 1e-16);
    }
}
