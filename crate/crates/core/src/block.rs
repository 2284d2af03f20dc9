//! Block-partitioned (3×3) forms of exp, dexp, dexp⁻¹ and their first
//! directional derivatives. Used only to cross-check the 6×6 forms.
//!
//! The scalar multipliers are the ones printed for this formulation, each a
//! function of φ² evaluated through [`Coefficient`] so that the block forms
//! stay finite at x = 0.

use crate::algebra::{block_lower, skew, Mat3, Mat6, Screw, Vec3};
use crate::error::Result;
use crate::kernels::{base_coeffs, Coefficient};
use crate::so3::{dexp_so3, dexpinv_so3, exp_so3};
use crate::transform::Transform;
use crate::Variant;

/// Translation per unit rotation, h = xᵀy/φ².
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScrewPitch {
    Finite(f64),
    /// Pure translation, x = 0.
    Infinite,
}

pub fn pitch(x: &Screw) -> ScrewPitch {
    let phi2 = x.rotation().norm_squared();
    if phi2 == 0.0 {
        ScrewPitch::Infinite
    } else {
        ScrewPitch::Finite(x.rotation().dot(&x.translation()) / phi2)
    }
}

/// [[diag, 0], [offdiag, diag]]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockTangent {
    pub diag: Mat3,
    pub offdiag: Mat3,
}

impl BlockTangent {
    pub fn assemble(&self) -> Mat6 {
        block_lower(&self.diag, &self.offdiag)
    }
}

/// exp as [[R, (I − R)x̃y/φ² + h x], [0, 1]].
pub fn exp_block(x: &Screw) -> Result<Transform> {
    let phi = x.checked_angle()?;
    let (xr, y) = (x.rotation(), x.translation());
    let r = exp_so3(&xr)?;
    let h = match pitch(x) {
        ScrewPitch::Infinite => return Ok(Transform::new(r, y)),
        ScrewPitch::Finite(h) => h,
    };
    let b = base_coeffs(phi)?;
    let k = skew(&xr);
    // I − R without cancellation
    let i_minus_r = -(k * b.alpha + k * k * (0.5 * b.beta));
    let t = i_minus_r * k * y / (phi * phi) + xr * h;
    Ok(Transform::new(r, t))
}

/// (D_x dexp)(y) or (D_x dexp⁻¹)(y) on SO(3).
pub fn ddexp_so3_block(x: &Vec3, y: &Vec3, variant: Variant) -> Result<Mat3> {
    let phi = Screw::new(*x, *y).checked_angle()?;
    let (kx, ky) = (skew(x), skew(y));
    let xy = x.dot(y);
    let sym = kx * ky + ky * kx;
    Ok(match variant {
        Variant::Dexp => {
            let b = base_coeffs(phi)?;
            ky * (0.5 * b.beta)
                + sym * b.delta
                + kx * (xy * Coefficient::PitchRot.eval(phi))
                + kx * kx * (xy * Coefficient::PitchRotSq.eval(phi))
        }
        Variant::DexpInv => {
            -ky * 0.5
                + sym * Coefficient::So3Inv.eval(phi)
                + kx * kx * (xy * Coefficient::InvPitch.eval(phi))
        }
    })
}

/// Lower-left block of (D_X dexp)(U): the derivative of (D_x dexp)(y)
/// along U = (u, v), both arguments varying.
pub fn ddexp_offdiag(x: &Screw, u: &Screw, variant: Variant) -> Result<Mat3> {
    let phi = x.checked_angle()?;
    let (xr, y, ur, v) = (x.rotation(), x.translation(), u.rotation(), u.translation());
    let (kx, ky, ku, kv) = (skew(&xr), skew(&y), skew(&ur), skew(&v));
    let (xy, xu, mixed) = (xr.dot(&y), xr.dot(&ur), xr.dot(&v) + y.dot(&ur));
    let kx2 = kx * kx;
    let s_xy = kx * ky + ky * kx;
    let s_xu = kx * ku + ku * kx;
    let s_x_v_y_u = kx * kv + kv * kx + ky * ku + ku * ky;
    Ok(match variant {
        Variant::Dexp => {
            let b = base_coeffs(phi)?;
            let k1 = Coefficient::PitchRot.eval(phi);
            let k2 = Coefficient::PitchRotSq.eval(phi);
            let k1b = Coefficient::PitchRotBar.eval(phi);
            let k2b = Coefficient::PitchRotSqBar.eval(phi);
            kv * (0.5 * b.beta)
                + (ky * xu + kx * mixed + ku * xy) * k1
                + s_x_v_y_u * b.delta
                + (s_xu * xy + s_xy * xu + kx2 * mixed) * k2
                + (kx * k1b + kx2 * k2b) * (xy * xu)
        }
        Variant::DexpInv => {
            let c1 = Coefficient::So3Inv.eval(phi);
            let c1b = Coefficient::So3InvBar.eval(phi);
            let c2 = Coefficient::InvPitch.eval(phi);
            let c2b = Coefficient::InvPitchBar.eval(phi);
            -kv * 0.5
                + s_x_v_y_u * c1
                + s_xy * (xu * c1b)
                + (kx2 * mixed + s_xu * xy) * c2
                + kx2 * (xy * xu * c2b)
        }
    })
}

/// The inverse lower-left block in the arrangement in which it is usually
/// printed: the ¼-term without 1/φ² and the leading minus over the whole
/// bracket. Kept to show that this reading disagrees with finite differences.
pub fn ddexpinv_offdiag_as_printed(x: &Screw, u: &Screw) -> Result<Mat3> {
    let phi = x.checked_angle()?;
    let b = base_coeffs(phi)?;
    let (al, be, ga) = (b.alpha, b.beta, b.gamma);
    let t = phi * phi;
    let (xr, y, ur, v) = (x.rotation(), x.translation(), u.rotation(), u.translation());
    let (kx, ky, ku, kv) = (skew(&xr), skew(&y), skew(&ur), skew(&v));
    let (xy, xu, mixed) = (xr.dot(&y), xr.dot(&ur), xr.dot(&v) + y.dot(&ur));
    let kx2 = kx * kx;
    let s_xy = kx * ky + ky * kx;
    let s_xu = kx * ku + ku * kx;
    Ok(
        -kv * 0.5 + (kx * kv + kv * kx + ky * ku + ku * ky) * ((1.0 - ga) / t) + s_xy * (0.25 * xu)
            - (s_xy * ((1.0 - ga) * xu * (2.0 + ga))
                + (s_xu * xy + kx2 * mixed) * (ga + 1.0 / be - 2.0)
                - kx2 * (0.25 * xy * xu))
                / (t * t)
            + kx2
                * (xy * xu * (8.0 - 3.0 * ga - ga * ga - 2.0 * (al + be) / (be * be))
                    / (t * t * t)),
    )
}

pub fn dexp_block(x: &Screw, variant: Variant) -> Result<BlockTangent> {
    let (xr, y) = (x.rotation(), x.translation());
    let diag = match variant {
        Variant::Dexp => dexp_so3(&xr)?,
        Variant::DexpInv => dexpinv_so3(&xr)?,
    };
    Ok(BlockTangent {
        diag,
        offdiag: ddexp_so3_block(&xr, &y, variant)?,
    })
}

pub fn ddexp_block(x: &Screw, u: &Screw, variant: Variant) -> Result<BlockTangent> {
    Ok(BlockTangent {
        diag: ddexp_so3_block(&x.rotation(), &u.rotation(), variant)?,
        offdiag: ddexp_offdiag(x, u, variant)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_at_zero() {
        let y = Vec3::new(0.4, -0.2, 1.1);
        let z = Vec3::zeros();
        assert_eq!(
            ddexp_so3_block(&z, &y, Variant::Dexp).unwrap(),
            skew(&y) * 0.5
        );
        assert_eq!(
            ddexp_so3_block(&z, &y, Variant::DexpInv).unwrap(),
            skew(&y) * -0.5
        );
        let x = Screw::new(z, y);
        let u = Screw::from_array([0.1, 1.0, -1.0, 0.9, 0.5, 0.3]);
        let (ky, ku, kv) = (skew(&y), skew(&u.rotation()), skew(&u.translation()));
        let d = ddexp_offdiag(&x, &u, Variant::Dexp).unwrap();
        assert!((d - (kv * 0.5 + (ky * ku + ku * ky) / 6.0)).amax() < 1e-15);
        let d = ddexp_offdiag(&x, &u, Variant::DexpInv).unwrap();
        assert!((d - (kv * -0.5 + (ky * ku + ku * ky) / 12.0)).amax() < 1e-15);
    }

    #[test]
    fn pure_translation_and_pitch() {
        let y = Vec3::new(1.0, 2.0, 3.0);
        let x = Screw::new(Vec3::zeros(), y);
        assert_eq!(pitch(&x), ScrewPitch::Infinite);
        assert_eq!(exp_block(&x).unwrap(), Transform::new(Mat3::identity(), y));
        assert_eq!(exp_block(&Screw::zero()).unwrap(), Transform::identity());
        assert_eq!(
            pitch(&Screw::from_array([1.0, 0.0, 0.0, 2.0, 5.0, 0.0])),
            ScrewPitch::Finite(2.0)
        );
    }
}
