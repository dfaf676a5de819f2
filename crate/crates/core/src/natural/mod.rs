//! Numerical solution of the natural equations: integrate the Frenet system
//! for a given development, recover positions, estimate the development back
//! from samples, and test frame periodicity.

mod estimate;
mod integrate;
mod periodic;
mod position;

pub use estimate::{estimate_curvature_torsion, DEGENERATE_CURVATURE};
pub use integrate::{integrate_frenet, uniform_grid, IntegrationConfig};
pub use periodic::{
    approximate_rational, closure_residual, exact_rational, frame_periodicity_check, successor_frame_period, torsion_ratio,
    total_torsion, Periodicity, Rationality, MAX_DENOMINATOR, RATIONAL_TOL,
};
pub use position::{integrate_position, CurveSamples};
