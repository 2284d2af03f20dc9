//! Exponential, logarithm and the 6×6 tangent operator on SE(3).

use std::sync::OnceLock;

use nalgebra::Matrix4;
use num::{BigInt, BigRational};

use crate::algebra::{ad, ad_powers, hat, Mat6, Screw};
use crate::error::{Error, Result};
use crate::kernels::{base_coeffs, TangentCoeffs};
use crate::series::{bernoulli, factorial_ratio};
use crate::so3::{dexpinv_so3, log_so3};
use crate::transform::Transform;
use crate::Variant;

/// Highest order accepted by [`series_oracle`].
pub const MAX_SERIES_ORDER: usize = 60;

/// exp(X̂) = I + X̂ + ½β X̂² + δ X̂³.
pub fn exp_se3(x: &Screw) -> Result<Transform> {
    let b = base_coeffs(x.checked_angle()?)?;
    let h = hat(x);
    let h2 = h * h;
    let m: Matrix4<f64> = Matrix4::identity() + h + h2 * (0.5 * b.beta) + h2 * h * b.delta;
    Ok(Transform::new(
        m.fixed_view::<3, 3>(0, 0).into_owned(),
        m.fixed_view::<3, 1>(0, 3).into_owned(),
    ))
}

/// Principal logarithm: x = log R, y = dexp⁻¹_so3(x)·r.
pub fn log_se3(h: &Transform) -> Result<Screw> {
    let x = log_so3(h.rotation())?;
    let y = dexpinv_so3(&x)? * h.translation();
    Ok(Screw::new(x, y))
}

/// I + Σ w_i P_i for a given coefficient set.
pub fn dexp_with(x: &Screw, c: &TangentCoeffs) -> Mat6 {
    let p = ad_powers(x, 4);
    (1..=4).fold(Mat6::identity(), |acc, i| acc + p[i] * c.w[i])
}

pub fn dexp(x: &Screw) -> Result<Mat6> {
    tangent(x, Variant::Dexp)
}

pub fn dexpinv(x: &Screw) -> Result<Mat6> {
    tangent(x, Variant::DexpInv)
}

pub fn tangent(x: &Screw, variant: Variant) -> Result<Mat6> {
    Ok(dexp_with(
        x,
        &TangentCoeffs::at(x.checked_angle()?, variant)?,
    ))
}

/// Form in terms of N = X/φ, which needs no division by φ in the
/// coefficients. Only defined for φ > 0; returns I at φ = 0.
pub fn tangent_normalized(x: &Screw, variant: Variant) -> Result<Mat6> {
    let phi = x.checked_angle()?;
    if phi == 0.0 {
        return Ok(Mat6::identity());
    }
    let b = base_coeffs(phi)?;
    let (al, be) = (b.alpha, b.beta);
    let ax = ad(x);
    let an = ad(&(*x * (1.0 / phi)));
    let an2 = an * an;
    let an4 = an2 * an2;
    let ax2 = ax * ax;
    Ok(match variant {
        Variant::Dexp => {
            Mat6::identity() + ax * (be - al / 2.0) - ax2 * (be / 4.0)
                + an2 * (2.5 - 2.5 * al)
                + an2 * ax * (0.5 * (be - al))
                - an2 * ax2 * (be / 4.0)
                + an4 * (1.5 - 1.5 * al)
        }
        Variant::DexpInv => {
            Mat6::identity() - ax * 0.5
                + an2 * (2.0 - (1.0 + 3.0 * al) / (2.0 * be))
                + an4 * (1.0 - (1.0 + al) / (2.0 * be))
        }
    })
}

/// Weights of ad^i in the defining series: 1/(i+1)! or B_i/i!.
pub fn series_weights(variant: Variant) -> &'static [f64] {
    static DEXP: OnceLock<Vec<f64>> = OnceLock::new();
    static INV: OnceLock<Vec<f64>> = OnceLock::new();
    match variant {
        Variant::Dexp => DEXP.get_or_init(|| {
            let one = BigRational::from_integer(BigInt::from(1));
            (0..=MAX_SERIES_ORDER)
                .map(|i| factorial_ratio(&one, i as u32 + 1))
                .collect()
        }),
        Variant::DexpInv => INV.get_or_init(|| {
            bernoulli(MAX_SERIES_ORDER)
                .iter()
                .enumerate()
                .map(|(i, b)| factorial_ratio(b, i as u32))
                .collect()
        }),
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::UnsupportedOrder {
            target: "series oracle",
            order,
        });
    }
    Ok(())
}

/// Literal truncated sum Σ_{i ≤ order} w_i ad^i.
pub fn series_oracle(x: &Screw, variant: Variant, order: usize) -> Result<Mat6> {
    check_order(order)?;
    x.checked_angle()?;
    let w = series_weights(variant);
    let a = ad(x);
    let mut p = Mat6::identity();
    let mut sum = Mat6::identity();
    for wi in &w[1..=order] {
        p = a * p;
        sum += p * *wi;
    }
    Ok(sum)
}

/// Truncated series of the directional derivative, Σ w_i D P_i(U), with
/// D P_i = ad_U P_{i−1} + ad_X D P_{i−1}.
pub fn series_oracle_derivative(
    x: &Screw,
    u: &Screw,
    variant: Variant,
    order: usize,
) -> Result<Mat6> {
    check_order(order)?;
    x.checked_angle()?;
    let w = series_weights(variant);
    let (ax, au) = (ad(x), ad(u));
    let mut p = Mat6::identity();
    let mut dp = Mat6::zeros();
    let mut sum = Mat6::zeros();
    for wi in &w[1..=order] {
        dp = au * p + ax * dp;
        p = ax * p;
        sum += dp * *wi;
    }
    Ok(sum)
}
