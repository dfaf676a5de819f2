//! Natural equations of space curves and the successor transformation.
//!
//! * [`geomcore`]: frames, scalar profiles, Bishop and successor transforms.
//! * [`natural`]: Frenet ODE integration, position recovery, curvature and
//!   torsion estimation, periodicity checks.
//! * [`zoo`]: closed-form plane curves, general helices, slant helices,
//!   Salkowski curves and curves of constant precession.
//! * [`verify`]: invariant suites shared by the test targets and the CLI.

pub mod error;
pub mod geomcore;
pub mod natural;
mod quad;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
