//! Rotation-group primitives.

use std::f64::consts::PI;

use crate::algebra::{skew, vee, Mat3, Vec3};
use crate::error::{check_finite, Error, Result};
use crate::kernels::{base_coeffs, Coefficient};
use crate::transform::check_rotation;

/// Rotations closer than this to π are rejected by [`log_so3`].
pub const ANTIPODAL_MARGIN: f64 = 1e-6;

fn checked(x: &Vec3) -> Result<f64> {
    check_finite(x.as_slice(), "rotation vector")?;
    let phi = x.norm();
    crate::kernels::check_angle(phi)?;
    Ok(phi)
}

/// Euler–Rodrigues: R = I + α x̃ + ½β x̃².
pub fn exp_so3(x: &Vec3) -> Result<Mat3> {
    let b = base_coeffs(checked(x)?)?;
    let k = skew(x);
    Ok(Mat3::identity() + k * b.alpha + k * k * (0.5 * b.beta))
}

/// dexp = I + ½β x̃ + δ x̃².
pub fn dexp_so3(x: &Vec3) -> Result<Mat3> {
    let b = base_coeffs(checked(x)?)?;
    let k = skew(x);
    Ok(Mat3::identity() + k * (0.5 * b.beta) + k * k * b.delta)
}

/// dexp⁻¹ = I − ½ x̃ + ((1 − γ)/φ²) x̃².
pub fn dexpinv_so3(x: &Vec3) -> Result<Mat3> {
    let phi = checked(x)?;
    let k = skew(x);
    Ok(Mat3::identity() - k * 0.5 + k * k * Coefficient::So3Inv.eval(phi))
}

/// Variant written with the unit axis: I + ½β x̃ + (1 − α) ñ².
pub fn dexp_so3_normalized(x: &Vec3) -> Result<Mat3> {
    let phi = checked(x)?;
    if phi == 0.0 {
        return Ok(Mat3::identity());
    }
    let b = base_coeffs(phi)?;
    let n = skew(&(x / phi));
    Ok(Mat3::identity() + skew(x) * (0.5 * b.beta) + n * n * (1.0 - b.alpha))
}

/// Variant written with the unit axis: I − ½ x̃ + (1 − γ) ñ².
pub fn dexpinv_so3_normalized(x: &Vec3) -> Result<Mat3> {
    let phi = checked(x)?;
    if phi == 0.0 {
        return Ok(Mat3::identity());
    }
    let b = base_coeffs(phi)?;
    let n = skew(&(x / phi));
    Ok(Mat3::identity() - skew(x) * 0.5 + n * n * (1.0 - b.gamma))
}

/// Principal logarithm. Angle from atan2 of the trace and skew parts.
pub fn log_so3(r: &Mat3) -> Result<Vec3> {
    check_rotation(r)?;
    let w = vee(r);
    let s = w.norm();
    let c = 0.5 * (r.trace() - 1.0);
    let phi = s.atan2(c);
    if phi > PI - ANTIPODAL_MARGIN {
        return Err(Error::Singular(format!(
            "rotation angle {phi} is within {ANTIPODAL_MARGIN:e} of π"
        )));
    }
    let sinc = if phi == 0.0 { 1.0 } else { phi.sin() / phi };
    Ok(w / sinc)
}
