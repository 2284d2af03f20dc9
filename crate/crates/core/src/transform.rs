use std::ops::Mul;

use nalgebra::Matrix4;

use crate::algebra::{Mat3, Vec3};
use crate::error::{check_finite, Error, Result};

/// Rigid transform (R, r), i.e. the homogeneous matrix [[R, r], [0, 1]].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transform {
    rotation: Mat3,
    translation: Vec3,
}

/// Orthonormality tolerance accepted on input rotations.
pub const ORTHONORMAL_TOL: f64 = 1e-9;

impl Transform {
    /// Unchecked constructor; use [`Transform::try_new`] for external data.
    pub fn new(rotation: Mat3, translation: Vec3) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    pub fn try_new(rotation: Mat3, translation: Vec3) -> Result<Self> {
        check_rotation(&rotation)?;
        check_finite(translation.as_slice(), "translation")?;
        Ok(Self::new(rotation, translation))
    }

    pub fn identity() -> Self {
        Self::new(Mat3::identity(), Vec3::zeros())
    }

    pub fn rotation(&self) -> &Mat3 {
        &self.rotation
    }

    pub fn translation(&self) -> &Vec3 {
        &self.translation
    }

    pub fn to_matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.rotation);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.translation);
        m
    }

    pub fn from_matrix(m: &Matrix4<f64>) -> Result<Self> {
        let bottom = m.fixed_view::<1, 4>(3, 0);
        if (bottom[0].abs() + bottom[1].abs() + bottom[2].abs() + (bottom[3] - 1.0).abs())
            > ORTHONORMAL_TOL
        {
            return Err(Error::InvalidArgument(
                "bottom row of a homogeneous matrix must be (0,0,0,1)".into(),
            ));
        }
        Self::try_new(
            m.fixed_view::<3, 3>(0, 0).into_owned(),
            m.fixed_view::<3, 1>(0, 3).into_owned(),
        )
    }

    pub fn inverse(&self) -> Self {
        let rt = self.rotation.transpose();
        Self::new(rt, -(rt * self.translation))
    }

    /// Largest entry-wise deviation between two transforms.
    pub fn max_deviation(&self, other: &Transform) -> f64 {
        (self.to_matrix() - other.to_matrix()).amax()
    }
}

impl Mul for Transform {
    type Output = Transform;
    fn mul(self, o: Transform) -> Transform {
        Transform::new(
            self.rotation * o.rotation,
            self.rotation * o.translation + self.translation,
        )
    }
}

pub(crate) fn check_rotation(r: &Mat3) -> Result<()> {
    check_finite(r.as_slice(), "rotation")?;
    let dev = (r.transpose() * r - Mat3::identity())
        .amax()
        .max((r.determinant() - 1.0).abs());
    if dev > ORTHONORMAL_TOL {
        return Err(Error::InvalidArgument(format!(
            "rotation is not orthonormal (deviation {dev:e})"
        )));
    }
    Ok(())
}
