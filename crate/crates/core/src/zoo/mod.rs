//! Closed-form curve families: plane curves, general helices, slant helices,
//! Salkowski curves and curves of constant precession, together with the
//! slant-helix criteria on a curvature/torsion pair.

mod criteria;
mod families;
mod slant;

pub use criteria::{
    phase_curvature_identity_check, slant_slope_estimate, torsion_from_curvature, PhaseIdentityResiduals,
    DOMAIN_MARGIN, VANISHING_CURVATURE,
};
pub use families::{helix_apparatus, helix_apparatus_with_offset, plane_apparatus};
pub use slant::{
    constant_precession_profile, salkowski_profile, slant_helix_apparatus, ConstantPrecession, SalkowskiProfiles,
    SlantHelix, SlantHelixParams, REFLECTION,
};
