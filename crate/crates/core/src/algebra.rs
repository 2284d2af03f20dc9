use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix3, Matrix4, Matrix6, Vector3, Vector6};

use crate::error::{check_finite, Result};
use crate::kernels::check_angle;
use crate::transform::Transform;

pub type Vec3 = Vector3<f64>;
pub type Vec6 = Vector6<f64>;
pub type Mat3 = Matrix3<f64>;
pub type Mat6 = Matrix6<f64>;

/// Screw coordinates (x, y): rotation part first, translation part second.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Screw(Vec6);

impl Screw {
    pub fn new(x: Vec3, y: Vec3) -> Self {
        Self(Vec6::new(x[0], x[1], x[2], y[0], y[1], y[2]))
    }

    pub fn from_vector(v: Vec6) -> Self {
        Self(v)
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Self(Vec6::from_column_slice(&a))
    }

    pub fn zero() -> Self {
        Self(Vec6::zeros())
    }

    /// The j-th coordinate direction.
    pub fn basis(j: usize) -> Self {
        let mut v = Vec6::zeros();
        v[j] = 1.0;
        Self(v)
    }

    pub fn vector(&self) -> &Vec6 {
        &self.0
    }

    pub fn rotation(&self) -> Vec3 {
        self.0.fixed_rows::<3>(0).into_owned()
    }

    pub fn translation(&self) -> Vec3 {
        self.0.fixed_rows::<3>(3).into_owned()
    }

    /// Rotation angle φ = ‖x‖.
    pub fn angle(&self) -> f64 {
        self.rotation().norm()
    }

    /// Checks finiteness and the principal range, returning φ.
    pub fn checked_angle(&self) -> Result<f64> {
        check_finite(self.0.as_slice(), "screw")?;
        let phi = self.angle();
        check_angle(phi)?;
        Ok(phi)
    }

    pub fn dot(&self, other: &Screw) -> f64 {
        self.0.dot(&other.0)
    }
}

impl From<Vec6> for Screw {
    fn from(v: Vec6) -> Self {
        Self(v)
    }
}

impl From<[f64; 6]> for Screw {
    fn from(a: [f64; 6]) -> Self {
        Self::from_array(a)
    }
}

impl Add for Screw {
    type Output = Screw;
    fn add(self, o: Screw) -> Screw {
        Screw(self.0 + o.0)
    }
}

impl Sub for Screw {
    type Output = Screw;
    fn sub(self, o: Screw) -> Screw {
        Screw(self.0 - o.0)
    }
}

impl Neg for Screw {
    type Output = Screw;
    fn neg(self) -> Screw {
        Screw(-self.0)
    }
}

impl Mul<f64> for Screw {
    type Output = Screw;
    fn mul(self, c: f64) -> Screw {
        Screw(self.0 * c)
    }
}

impl Mul<Screw> for f64 {
    type Output = Screw;
    fn mul(self, s: Screw) -> Screw {
        Screw(s.0 * self)
    }
}

/// Cross-product matrix: skew(a)·b = a × b.
pub fn skew(a: &Vec3) -> Mat3 {
    Mat3::new(0.0, -a[2], a[1], a[2], 0.0, -a[0], -a[1], a[0], 0.0)
}

/// Inverse of [`skew`] applied to the skew part of `m`.
pub fn vee(m: &Mat3) -> Vec3 {
    Vec3::new(
        m[(2, 1)] - m[(1, 2)],
        m[(0, 2)] - m[(2, 0)],
        m[(1, 0)] - m[(0, 1)],
    ) * 0.5
}

/// The 4×4 se(3) matrix [[x̃, y], [0, 0]].
pub fn hat(x: &Screw) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<3, 3>(0, 0)
        .copy_from(&skew(&x.rotation()));
    m.fixed_view_mut::<3, 1>(0, 3).copy_from(&x.translation());
    m
}

fn blocks(tl: &Mat3, tr: &Mat3, bl: &Mat3, br: &Mat3) -> Mat6 {
    let mut m = Mat6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(tl);
    m.fixed_view_mut::<3, 3>(0, 3).copy_from(tr);
    m.fixed_view_mut::<3, 3>(3, 0).copy_from(bl);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(br);
    m
}

pub(crate) fn block_lower(diag: &Mat3, offdiag: &Mat3) -> Mat6 {
    blocks(diag, &Mat3::zeros(), offdiag, diag)
}

/// ad_X = [[x̃, 0], [ỹ, x̃]], so that ad_X·Z is the bracket [X, Z].
pub fn ad(x: &Screw) -> Mat6 {
    block_lower(&skew(&x.rotation()), &skew(&x.translation()))
}

/// P_0..P_kmax with P_i = ad_X^i.
pub fn ad_powers(x: &Screw, kmax: usize) -> Vec<Mat6> {
    let a = ad(x);
    let mut p = Vec::with_capacity(kmax + 1);
    p.push(Mat6::identity());
    for i in 1..=kmax {
        let next = a * p[i - 1];
        p.push(next);
    }
    p
}

/// Coadjoint matrix [[ũ, ṽ], [ṽ, 0]] with ad_Xᵀ·U = ad_bar(U)·X.
pub fn ad_bar(u: &Vec6) -> Mat6 {
    let us = skew(&u.fixed_rows::<3>(0).into_owned());
    let vs = skew(&u.fixed_rows::<3>(3).into_owned());
    blocks(&us, &vs, &vs, &Mat3::zeros())
}

/// Ad_H = [[R, 0], [r̃R, R]].
pub fn adjoint_of_transform(h: &Transform) -> Mat6 {
    let r = h.rotation();
    blocks(r, &Mat3::zeros(), &(skew(h.translation()) * r), r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ad_layout_for_unit_vectors() {
        let x = Screw::new(Vec3::x(), Vec3::y());
        let a = ad(&x);
        let e1 = skew(&Vec3::x());
        let e2 = skew(&Vec3::y());
        assert_eq!(a.fixed_view::<3, 3>(0, 0).into_owned(), e1);
        assert_eq!(a.fixed_view::<3, 3>(3, 3).into_owned(), e1);
        assert_eq!(a.fixed_view::<3, 3>(3, 0).into_owned(), e2);
        assert_eq!(a.fixed_view::<3, 3>(0, 3).into_owned(), Mat3::zeros());
        assert_eq!(ad(&Screw::zero()), Mat6::zeros());
    }

    #[test]
    fn skew_vee_roundtrip() {
        let a = Vec3::new(0.3, -1.2, 2.5);
        assert_eq!(vee(&skew(&a)), a);
        assert_eq!(
            skew(&a) * Vec3::new(1.0, 2.0, 3.0),
            a.cross(&Vec3::new(1.0, 2.0, 3.0))
        );
    }

    #[test]
    fn pure_translation_adjoint() {
        let r = Vec3::new(1.0, -2.0, 0.5);
        let h = Transform::new(Mat3::identity(), r);
        let m = adjoint_of_transform(&h);
        assert_eq!(m.fixed_view::<3, 3>(3, 0).into_owned(), skew(&r));
        assert_eq!(m.fixed_view::<3, 3>(0, 0).into_owned(), Mat3::identity());
        assert_eq!(
            adjoint_of_transform(&Transform::identity()),
            Mat6::identity()
        );
    }
}
