use super::vec3::Vec3;
use crate::error::{Error, Result};

/// Tolerance used when validating frame orthonormality.
pub const ORTHO_TOL: f64 = 1e-9;

/// A positively oriented orthonormal triple attached to one point of a curve.
///
/// `t` is the unit tangent; `n1`, `n2` span the normal plane. For a Frenet
/// frame they are the principal normal and binormal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub t: Vec3,
    pub n1: Vec3,
    pub n2: Vec3,
}

impl Frame {
    /// Builds a frame and checks that its defect is within [`ORTHO_TOL`].
    pub fn new(t: Vec3, n1: Vec3, n2: Vec3) -> Result<Self> {
        if !(t.is_finite() && n1.is_finite() && n2.is_finite()) {
            return Err(Error::NonFinite("frame"));
        }
        let frame = Frame { t, n1, n2 };
        let defect = frame_defect(&frame);
        if defect > ORTHO_TOL {
            return Err(Error::InvalidFrame { defect });
        }
        Ok(frame)
    }

    pub const fn new_unchecked(t: Vec3, n1: Vec3, n2: Vec3) -> Self {
        Frame { t, n1, n2 }
    }

    /// The standard basis `(e1, e2, e3)`.
    pub const fn canonical() -> Self {
        Frame::new_unchecked(Vec3::E1, Vec3::E2, Vec3::E3)
    }

    /// Determinant of the matrix with rows `t`, `n1`, `n2`.
    pub fn det(&self) -> f64 {
        self.t.dot(self.n1.cross(self.n2))
    }

    /// Re-orthonormalizes by modified Gram-Schmidt anchored at the tangent:
    /// `t` is normalized, `n1` is orthogonalized against it, and `n2 = t × n1`.
    pub fn orthonormalized(&self) -> Frame {
        let t = self.t.normalized();
        let n1 = (self.n1 - t * t.dot(self.n1)).normalized();
        Frame::new_unchecked(t, n1, t.cross(n1))
    }

    /// Applies a fixed linear map (rows of `m`) to every axis of the frame.
    pub fn map(&self, m: &[[f64; 3]; 3]) -> Frame {
        let apply = |v: Vec3| {
            Vec3::new_unchecked(
                m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
            )
        };
        Frame::new_unchecked(apply(self.t), apply(self.n1), apply(self.n2))
    }

    pub fn axes(&self) -> [Vec3; 3] {
        [self.t, self.n1, self.n2]
    }

    /// Largest absolute difference over all nine components.
    pub fn max_component_diff(&self, other: &Frame) -> f64 {
        self.axes()
            .iter()
            .zip(other.axes().iter())
            .map(|(a, b)| (*a - *b).max_abs())
            .fold(0.0, f64::max)
    }
}

/// Maximum deviation of `frame` from a positively oriented orthonormal basis.
///
/// Returns the largest of `| |v| - 1 |` per axis, `|<vi, vj>|` for `i != j`,
/// and `|det - 1|`. Zero for a perfect frame.
pub fn frame_defect(frame: &Frame) -> f64 {
    let [t, n1, n2] = frame.axes();
    [
        (t.norm() - 1.0).abs(),
        (n1.norm() - 1.0).abs(),
        (n2.norm() - 1.0).abs(),
        t.dot(n1).abs(),
        t.dot(n2).abs(),
        n1.dot(n2).abs(),
        (frame.det() - 1.0).abs(),
    ]
    .into_iter()
    .fold(0.0, |acc: f64, v| if v.is_nan() { f64::NAN } else { acc.max(v) })
}

/// Rotates the normal plane of `frame` by `phi` radians, keeping the tangent.
///
/// Returns `(t, cos φ·n1 − sin φ·n2, sin φ·n1 + cos φ·n2)`.
pub fn rotate_frame(frame: &Frame, phi: f64) -> Frame {
    let (s, c) = phi.sin_cos();
    Frame::new_unchecked(
        frame.t,
        frame.n1 * c - frame.n2 * s,
        frame.n1 * s + frame.n2 * c,
    )
}
