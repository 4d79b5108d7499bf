//! Rotations of SO(2)/SO(3) and elements of SE(2)/SE(3).
//!
//! Conventions, fixed once for the whole crate:
//! - SO(2) rotations are parameterized by an angle θ ∈ [0, 2π) with matrix
//!   [[cos θ, sin θ], [−sin θ, cos θ]], which maps a point at polar angle φ
//!   to polar angle φ − θ. The irreps are ρ_k(θ) = e^{ikθ}.
//! - SO(3) rotations use z-y-z Euler angles (α, β, γ) with α, γ ∈ [0, 2π),
//!   β ∈ [0, π], and R = R_z(α) R_y(β) R_z(γ) built from the usual
//!   counterclockwise axis rotations.

use crate::error::{Result, SteerError};
use serde::{Deserialize, Serialize};

pub const TAU: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    So2,
    So3,
}

impl Group {
    pub fn dim(self) -> usize {
        match self {
            Group::So2 => 2,
            Group::So3 => 3,
        }
    }

    pub fn from_spatial_dim(dim: usize) -> Result<Group> {
        match dim {
            2 => Ok(Group::So2),
            3 => Ok(Group::So3),
            d => Err(SteerError::invalid(format!(
                "spatial dimension must be 2 or 3, got {d}"
            ))),
        }
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::So2 => write!(f, "SO(2)"),
            Group::So3 => write!(f, "SO(3)"),
        }
    }
}

/// A rotation of SO(2) or SO(3).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Rotation {
    Angle(f64),
    Euler { alpha: f64, beta: f64, gamma: f64 },
}

fn wrap_angle(a: f64) -> f64 {
    let mut a = a % TAU;
    if a < 0.0 {
        a += TAU;
    }
    if a >= TAU {
        a -= TAU;
    }
    a
}

impl Rotation {
    pub fn identity(group: Group) -> Rotation {
        match group {
            Group::So2 => Rotation::Angle(0.0),
            Group::So3 => Rotation::Euler {
                alpha: 0.0,
                beta: 0.0,
                gamma: 0.0,
            },
        }
    }

    pub fn so2(theta: f64) -> Rotation {
        Rotation::Angle(wrap_angle(theta))
    }

    pub fn so3(alpha: f64, beta: f64, gamma: f64) -> Rotation {
        Rotation::Euler {
            alpha: wrap_angle(alpha),
            beta,
            gamma: wrap_angle(gamma),
        }
    }

    pub fn group(&self) -> Group {
        match self {
            Rotation::Angle(_) => Group::So2,
            Rotation::Euler { .. } => Group::So3,
        }
    }

    /// 2×2 rotation matrix (row-major).
    pub fn matrix2(&self) -> [[f64; 2]; 2] {
        match self {
            Rotation::Angle(t) => {
                let (s, c) = t.sin_cos();
                [[c, s], [-s, c]]
            }
            Rotation::Euler { .. } => panic!("matrix2 called on an SO(3) rotation"),
        }
    }

    /// 3×3 rotation matrix R_z(α) R_y(β) R_z(γ) (row-major).
    pub fn matrix3(&self) -> [[f64; 3]; 3] {
        match self {
            Rotation::Angle(_) => panic!("matrix3 called on an SO(2) rotation"),
            Rotation::Euler { alpha, beta, gamma } => {
                let (sa, ca) = alpha.sin_cos();
                let (sb, cb) = beta.sin_cos();
                let (sg, cg) = gamma.sin_cos();
                [
                    [
                        ca * cb * cg - sa * sg,
                        -ca * cb * sg - sa * cg,
                        ca * sb,
                    ],
                    [
                        sa * cb * cg + ca * sg,
                        -sa * cb * sg + ca * cg,
                        sa * sb,
                    ],
                    [-sb * cg, sb * sg, cb],
                ]
            }
        }
    }

    /// Extract z-y-z Euler angles from an orthogonal matrix with det 1.
    pub fn from_matrix3(m: &[[f64; 3]; 3]) -> Rotation {
        let cb = m[2][2].clamp(-1.0, 1.0);
        let beta = cb.acos();
        let sb = beta.sin();
        if sb > 1e-12 {
            let alpha = m[1][2].atan2(m[0][2]);
            let gamma = m[2][1].atan2(-m[2][0]);
            Rotation::so3(alpha, beta, gamma)
        } else if cb > 0.0 {
            // β ≈ 0: pure z rotation by α + γ.
            let alpha = m[1][0].atan2(m[0][0]);
            Rotation::so3(alpha, 0.0, 0.0)
        } else {
            // β ≈ π: R = R_z(α) R_y(π), with α − γ determined.
            let alpha = (-m[1][0]).atan2(-m[0][0]);
            Rotation::so3(alpha, std::f64::consts::PI, 0.0)
        }
    }

    pub fn compose(&self, other: &Rotation) -> Result<Rotation> {
        match (self, other) {
            (Rotation::Angle(a), Rotation::Angle(b)) => Ok(Rotation::so2(a + b)),
            (Rotation::Euler { .. }, Rotation::Euler { .. }) => {
                let a = self.matrix3();
                let b = other.matrix3();
                let mut m = [[0.0; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            m[i][j] += a[i][k] * b[k][j];
                        }
                    }
                }
                Ok(Rotation::from_matrix3(&m))
            }
            _ => Err(SteerError::GroupMismatch {
                expected: self.group().to_string(),
                got: other.group().to_string(),
            }),
        }
    }

    pub fn inverse(&self) -> Rotation {
        match self {
            Rotation::Angle(t) => Rotation::so2(-t),
            Rotation::Euler { alpha, beta, gamma } => Rotation::so3(
                std::f64::consts::PI - gamma,
                *beta,
                std::f64::consts::PI - alpha,
            ),
        }
    }

    /// Apply the rotation to a point, writing into `out`.
    pub fn apply(&self, p: &[f64], out: &mut [f64]) {
        match self {
            Rotation::Angle(_) => {
                let m = self.matrix2();
                out[0] = m[0][0] * p[0] + m[0][1] * p[1];
                out[1] = m[1][0] * p[0] + m[1][1] * p[1];
            }
            Rotation::Euler { .. } => {
                let m = self.matrix3();
                for i in 0..3 {
                    out[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
                }
            }
        }
    }

    /// True when the rotation maps the integer lattice onto itself
    /// (matrix entries all within `tol` of integers).
    pub fn is_lattice(&self, tol: f64) -> bool {
        match self {
            Rotation::Angle(_) => {
                let m = self.matrix2();
                m.iter()
                    .flatten()
                    .all(|v| (v - v.round()).abs() <= tol)
            }
            Rotation::Euler { .. } => {
                let m = self.matrix3();
                m.iter()
                    .flatten()
                    .all(|v| (v - v.round()).abs() <= tol)
            }
        }
    }
}

/// An element (t, R) of SE(2) or SE(3), acting on points as x ↦ Rx + t.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    pub translation: Vec<f64>,
    pub rotation: Rotation,
}

impl GroupElement {
    pub fn new(translation: Vec<f64>, rotation: Rotation) -> Result<GroupElement> {
        let d = rotation.group().dim();
        if translation.len() != d {
            return Err(SteerError::DimensionMismatch {
                expected: d,
                got: translation.len(),
            });
        }
        Ok(GroupElement {
            translation,
            rotation,
        })
    }

    pub fn identity(group: Group) -> GroupElement {
        GroupElement {
            translation: vec![0.0; group.dim()],
            rotation: Rotation::identity(group),
        }
    }

    pub fn rotation_only(rotation: Rotation) -> GroupElement {
        GroupElement {
            translation: vec![0.0; rotation.group().dim()],
            rotation,
        }
    }

    pub fn dim(&self) -> usize {
        self.rotation.group().dim()
    }
}

/// (t1, R1)·(t2, R2) = (t1 + R1 t2, R1 R2).
pub fn se_compose(g1: &GroupElement, g2: &GroupElement) -> Result<GroupElement> {
    if g1.dim() != g2.dim() {
        return Err(SteerError::DimensionMismatch {
            expected: g1.dim(),
            got: g2.dim(),
        });
    }
    let d = g1.dim();
    let mut t = vec![0.0; d];
    g1.rotation.apply(&g2.translation, &mut t);
    for i in 0..d {
        t[i] += g1.translation[i];
    }
    Ok(GroupElement {
        translation: t,
        rotation: g1.rotation.compose(&g2.rotation)?,
    })
}

/// (t, R)^{-1} = (−R^{-1} t, R^{-1}).
pub fn se_inverse(g: &GroupElement) -> GroupElement {
    let d = g.dim();
    let rinv = g.rotation.inverse();
    let mut t = vec![0.0; d];
    rinv.apply(&g.translation, &mut t);
    for v in t.iter_mut() {
        *v = -*v;
    }
    GroupElement {
        translation: t,
        rotation: rinv,
    }
}

/// (t, R)·x = Rx + t.
pub fn se_apply(g: &GroupElement, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != g.dim() {
        return Err(SteerError::DimensionMismatch {
            expected: g.dim(),
            got: x.len(),
        });
    }
    let mut out = vec![0.0; x.len()];
    g.rotation.apply(x, &mut out);
    for i in 0..out.len() {
        out[i] += g.translation[i];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_matrices_are_special_orthogonal() {
        let rots = [
            Rotation::so2(0.7),
            Rotation::so2(5.9),
            Rotation::so3(0.3, 1.1, 4.2),
            Rotation::so3(2.0, 3.0, 0.1),
        ];
        for r in rots {
            match r.group() {
                Group::So2 => {
                    let m = r.matrix2();
                    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                    assert!((det - 1.0).abs() < 1e-12);
                    // orthogonality
                    let dot = m[0][0] * m[1][0] + m[0][1] * m[1][1];
                    assert!(dot.abs() < 1e-12);
                }
                Group::So3 => {
                    let m = r.matrix3();
                    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                    assert!((det - 1.0).abs() < 1e-12);
                    for i in 0..3 {
                        for j in 0..3 {
                            let dot: f64 = (0..3).map(|k| m[i][k] * m[j][k]).sum();
                            let expect = if i == j { 1.0 } else { 0.0 };
                            assert!((dot - expect).abs() < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn euler_round_trip() {
        let r = Rotation::so3(1.3, 0.8, 5.5);
        let m = r.matrix3();
        let r2 = Rotation::from_matrix3(&m);
        let m2 = r2.matrix3();
        for i in 0..3 {
            for j in 0..3 {
                assert!((m[i][j] - m2[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let g = GroupElement::new(vec![1.5, -0.25, 3.0], Rotation::so3(0.4, 2.0, 1.0)).unwrap();
        let e = se_compose(&g, &se_inverse(&g)).unwrap();
        for t in &e.translation {
            assert!(t.abs() < 1e-12);
        }
        let m = e.rotation.matrix3();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((m[i][j] - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pure_translation_action() {
        let g = GroupElement::new(vec![2.0, -1.0], Rotation::so2(0.0)).unwrap();
        let y = se_apply(&g, &[0.5, 0.5]).unwrap();
        assert!((y[0] - 2.5).abs() < 1e-15);
        assert!((y[1] - (-0.5)).abs() < 1e-15);
    }

    #[test]
    fn composition_matches_double_application() {
        let g1 = GroupElement::new(vec![0.3, 0.7], Rotation::so2(1.1)).unwrap();
        let g2 = GroupElement::new(vec![-1.0, 0.2], Rotation::so2(4.0)).unwrap();
        let x = [0.9, -2.2];
        let once = se_apply(&se_compose(&g1, &g2).unwrap(), &x).unwrap();
        let twice = se_apply(&g1, &se_apply(&g2, &x).unwrap()).unwrap();
        for i in 0..2 {
            assert!((once[i] - twice[i]).abs() < 1e-12);
        }

        let g1 = GroupElement::new(vec![0.3, 0.7, -0.5], Rotation::so3(1.1, 0.4, 2.2)).unwrap();
        let g2 = GroupElement::new(vec![-1.0, 0.2, 0.8], Rotation::so3(4.0, 2.9, 0.3)).unwrap();
        let x = [0.9, -2.2, 1.4];
        let once = se_apply(&se_compose(&g1, &g2).unwrap(), &x).unwrap();
        let twice = se_apply(&g1, &se_apply(&g2, &x).unwrap()).unwrap();
        for i in 0..3 {
            assert!((once[i] - twice[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(GroupElement::new(vec![1.0, 2.0, 3.0], Rotation::so2(0.5)).is_err());
        let g1 = GroupElement::identity(Group::So2);
        let g2 = GroupElement::identity(Group::So3);
        assert!(se_compose(&g1, &g2).is_err());
        assert!(se_apply(&g1, &[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn lattice_rotation_detection() {
        assert!(Rotation::so2(std::f64::consts::FRAC_PI_2).is_lattice(1e-12));
        assert!(Rotation::so2(std::f64::consts::PI).is_lattice(1e-12));
        assert!(!Rotation::so2(0.3).is_lattice(1e-9));
        assert!(Rotation::so3(std::f64::consts::FRAC_PI_2, 0.0, 0.0).is_lattice(1e-12));
    }
}
