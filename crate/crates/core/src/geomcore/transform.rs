use std::sync::Arc;

use super::apparatus::{BishopApparatus, FrameField, FrenetApparatus};
use super::profile::{PhaseFunction, ScalarProfile, Wave};
use super::vec3::Vec3;
use crate::error::Result;

/// Coefficients of an equivalent moving frame rotated by `phi` in the normal plane.
///
/// Returns `(k1 cos φ − k2 sin φ, k1 sin φ + k2 cos φ, k3 − φ')`.
pub fn transform_coefficients(k1: f64, k2: f64, k3: f64, phi: f64, phi_prime: f64) -> (f64, f64, f64) {
    let (s, c) = phi.sin_cos();
    (k1 * c - k2 * s, k1 * s + k2 * c, k3 - phi_prime)
}

/// Rotation angle `φ0 + ∫τ` anchored inside the apparatus domain.
fn torsion_phase(src: &FrenetApparatus, phi0: f64) -> Result<PhaseFunction> {
    PhaseFunction::with_anchor(phi0, src.tau().clone(), src.domain().anchor())
}

/// Bishop (parallel-transport) apparatus equivalent to `src`.
///
/// The normal plane is rotated by `φ(s) = φ0 + ∫τ ds`, which cancels the
/// normal-plane rotation rate; `k1 = κ cos φ`, `k2 = κ sin φ`.
pub fn bishop_transform(src: &FrenetApparatus, phi0: f64) -> Result<BishopApparatus> {
    let phase = torsion_phase(src, phi0)?;
    let domain = src.domain();
    let k1 = ScalarProfile::modulated(src.kappa().clone(), phase.clone(), Wave::Cos)?.restricted(domain)?;
    let k2 = ScalarProfile::modulated(src.kappa().clone(), phase.clone(), Wave::Sin)?.restricted(domain)?;
    let frames = FrameField::Rotated {
        source: Arc::new(src.frames().clone()),
        phase,
    };
    BishopApparatus::new(frames, k1, k2)
}

/// Successor apparatus: a Frenet apparatus whose principal normal is the
/// tangent of `src`.
///
/// With `φ(s) = φ0 + ∫τ ds` the frame is
/// `(−cos φ N + sin φ B, T, sin φ N + cos φ B)` and the development is
/// `(κ cos φ, κ sin φ)`.
pub fn successor_transform(src: &FrenetApparatus, phi0: f64) -> Result<FrenetApparatus> {
    let phase = torsion_phase(src, phi0)?;
    let domain = src.domain();
    let kappa = ScalarProfile::modulated(src.kappa().clone(), phase.clone(), Wave::Cos)?.restricted(domain)?;
    let tau = ScalarProfile::modulated(src.kappa().clone(), phase.clone(), Wave::Sin)?.restricted(domain)?;
    let frames = FrameField::Successor {
        source: Arc::new(src.frames().clone()),
        phase,
    };
    FrenetApparatus::new(frames, kappa, tau, src.is_generic())
}

/// Darboux vector `τ T + κ B` at `s`.
pub fn darboux_vector(app: &FrenetApparatus, s: f64) -> Result<Vec3> {
    let f = app.frame_at(s)?;
    Ok(f.t * app.tau().eval(s)? + f.n2 * app.kappa().eval(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::{frame_defect, rotate_frame, Frame, Interval};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn circle() -> FrenetApparatus {
        FrenetApparatus::new(
            FrameField::Plane { omega: PhaseFunction::new(0.0, ScalarProfile::constant(1.0)) },
            ScalarProfile::constant(1.0),
            ScalarProfile::constant(0.0),
            true,
        )
        .unwrap()
    }

    fn circular_helix(a: f64, b: f64) -> FrenetApparatus {
        let theta = (a / b).atan();
        FrenetApparatus::new(
            FrameField::Helix {
                omega: PhaseFunction::new(0.0, ScalarProfile::constant(a / theta.sin())),
                theta,
            },
            ScalarProfile::constant(a),
            ScalarProfile::constant(b),
            true,
        )
        .unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let (a, b, c) = transform_coefficients(1.0, 0.0, 0.0, FRAC_PI_2, 0.0);
        assert!(a.abs() < 1e-16 && (b - 1.0).abs() < 1e-16 && c == 0.0);
        assert_eq!(transform_coefficients(0.3, -1.2, 2.0, 0.0, 0.0), (0.3, -1.2, 2.0));
        let (a, b, _) = transform_coefficients(3.0, 4.0, 0.0, 0.37, 0.0);
        assert!(((a * a + b * b).sqrt() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn bishop_of_plane_curve_is_unrotated() {
        let b = bishop_transform(&circle(), 0.0).unwrap();
        for s in [0.0, 1.0, 4.0] {
            assert_eq!(b.k1().eval(s).unwrap(), 1.0);
            assert_eq!(b.k2().eval(s).unwrap(), 0.0);
            assert_eq!(b.frame_at(s).unwrap(), circle().frame_at(s).unwrap());
        }
    }

    #[test]
    fn bishop_of_circular_helix() {
        let b = bishop_transform(&circular_helix(2.0, 0.5), 0.0).unwrap();
        for s in [0.0, 0.3, 2.5, 7.0] {
            assert!((b.k1().eval(s).unwrap() - 2.0 * (0.5 * s).cos()).abs() < 1e-14);
            assert!((b.k2().eval(s).unwrap() - 2.0 * (0.5 * s).sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn successor_of_circle_is_circular_helix() {
        for theta in [FRAC_PI_6, FRAC_PI_4, FRAC_PI_3] {
            let succ = successor_transform(&circle(), FRAC_PI_2 - theta).unwrap();
            for s in [0.0, 1.0, 5.5] {
                assert!((succ.kappa().eval(s).unwrap() - theta.sin()).abs() < 1e-15);
                assert!((succ.tau().eval(s).unwrap() - theta.cos()).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn successor_with_zero_torsion_keeps_development() {
        let kappa = ScalarProfile::harmonic(1.5, 0.8, 0.1, Wave::Sin);
        let src = FrenetApparatus::new(
            FrameField::Plane { omega: PhaseFunction::new(0.0, kappa.clone()) },
            kappa.clone(),
            ScalarProfile::constant(0.0),
            true,
        )
        .unwrap();
        let succ = successor_transform(&src, 0.0).unwrap();
        for s in [-2.0, 0.0, 1.3] {
            assert_eq!(succ.kappa().eval(s).unwrap(), kappa.eval(s).unwrap());
            assert_eq!(succ.tau().eval(s).unwrap(), 0.0);
        }
    }

    #[test]
    fn successor_of_circular_helix_is_constant_precession() {
        let succ = successor_transform(&circular_helix(3.0, 4.0), 0.0).unwrap();
        for i in 0..=100 {
            let s = i as f64 * 0.1;
            assert!((succ.kappa().eval(s).unwrap() - 3.0 * (4.0 * s).cos()).abs() < 1e-12);
            assert!((succ.tau().eval(s).unwrap() - 3.0 * (4.0 * s).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn successor_normal_is_source_tangent() {
        let src = circular_helix(1.2, 0.7);
        let succ = successor_transform(&src, 0.4).unwrap();
        for s in [0.0, 0.5, 3.3] {
            assert_eq!(succ.frame_at(s).unwrap().n1, src.frame_at(s).unwrap().t);
        }
        assert!(succ.is_generic());
    }

    #[test]
    fn darboux_examples() {
        let d = darboux_vector(&circle(), 2.0).unwrap();
        assert_eq!(d, Vec3::E3);
        let h = circular_helix(2.0, 3.0);
        for s in [0.0, 1.0, 2.0] {
            assert!((darboux_vector(&h, s).unwrap().norm() - 13f64.sqrt()).abs() < 1e-12);
        }
        let succ = successor_transform(&h, 0.3).unwrap();
        for s in [0.0, 0.7, 1.9] {
            let want = h.frame_at(s).unwrap().n2 * 2.0;
            assert!((darboux_vector(&succ, s).unwrap() - want).max_abs() < 1e-12);
        }
    }

    #[test]
    fn darboux_outside_domain() {
        let app = circle();
        let restricted = FrenetApparatus::new(
            app.frames().clone(),
            app.kappa().clone().restricted(Interval::closed(0.0, 1.0).unwrap()).unwrap(),
            app.tau().clone(),
            true,
        )
        .unwrap();
        assert!(darboux_vector(&restricted, 1.5).is_err());
    }

    proptest! {
        #[test]
        fn coefficient_norm_preserved(k1 in -10.0f64..10.0, k2 in -10.0f64..10.0, phi in -10.0f64..10.0) {
            let (a, b, _) = transform_coefficients(k1, k2, 0.0, phi, 0.0);
            prop_assert!(((a * a + b * b) - (k1 * k1 + k2 * k2)).abs() < 1e-12 * (1.0 + k1 * k1 + k2 * k2));
        }

        // Two Bishop systems (equivalently, two successor systems) with
        // parameters a and b differ by the constant rotation b − a.
        #[test]
        fn composition_law(a in -3.0f64..3.0, b in -3.0f64..3.0, s in 0.0f64..5.0) {
            let src = circular_helix(1.5, 0.8);
            let ba = bishop_transform(&src, a).unwrap();
            let bb = bishop_transform(&src, b).unwrap();
            let rotated = rotate_frame(&ba.frame_at(s).unwrap(), b - a);
            prop_assert!(rotated.max_component_diff(&bb.frame_at(s).unwrap()) < 1e-12);
            let (k1, k2, k3) = transform_coefficients(ba.k1().eval(s).unwrap(), ba.k2().eval(s).unwrap(), 0.0, b - a, 0.0);
            prop_assert!((k1 - bb.k1().eval(s).unwrap()).abs() < 1e-12);
            prop_assert!((k2 - bb.k2().eval(s).unwrap()).abs() < 1e-12);
            prop_assert_eq!(k3, 0.0);

            let sa = successor_transform(&src, a).unwrap().frame_at(s).unwrap();
            let sb = successor_transform(&src, b).unwrap().frame_at(s).unwrap();
            // the successor frame is the Bishop frame rearranged as (−N1, T, N2)
            let rearranged = |f: Frame| Frame::new_unchecked(-f.n1, f.t, f.n2);
            prop_assert!(rearranged(rotated).max_component_diff(&sb) < 1e-12);
            prop_assert!(frame_defect(&sa) < 1e-13);
        }
    }
}
