//! Exact frame algebra: vectors, frames, scalar profiles, and the
//! Bishop and successor transformations of a Frenet apparatus.

mod apparatus;
mod frame;
mod interval;
mod profile;
mod transform;
mod vec3;

pub use apparatus::{BishopApparatus, FrameField, FrenetApparatus, SampledFrames};
pub use frame::{frame_defect, rotate_frame, Frame, ORTHO_TOL};
pub use interval::Interval;
pub use profile::{PhaseFunction, ProfileKind, SampledData, ScalarProfile, Wave};
pub use transform::{bishop_transform, darboux_vector, successor_transform, transform_coefficients};
pub use vec3::Vec3;
