//! Directional derivatives of P_i = ad_X^i, of dexp and of dexp⁻¹.

use crate::algebra::{ad, ad_powers, Mat6, Screw};
use crate::error::{check_finite, Error, Result};
use crate::kernels::TangentCoeffs;
use crate::Variant;

/// D P_i(U) = Σ_{j<i} P_j ad_U P_{i−j−1}, from precomputed powers.
pub(crate) fn power_derivative_from(p: &[Mat6], au: &Mat6, i: usize) -> Mat6 {
    (0..i).fold(Mat6::zeros(), |acc, j| acc + p[j] * au * p[i - j - 1])
}

/// D P_0..D P_kmax.
pub(crate) fn power_derivatives_from(p: &[Mat6], au: &Mat6, kmax: usize) -> Vec<Mat6> {
    (0..=kmax)
        .map(|i| power_derivative_from(p, au, i))
        .collect()
}

/// D²P_i(U)(S) = Σ_{j=1}^{i−1} [D P_j(S) ad_U P_{i−j−1} + P_{i−j−1} ad_U D P_j(S)].
pub(crate) fn power_second_derivative_from(p: &[Mat6], dp_s: &[Mat6], au: &Mat6, i: usize) -> Mat6 {
    (1..i).fold(Mat6::zeros(), |acc, j| {
        acc + dp_s[j] * au * p[i - j - 1] + p[i - j - 1] * au * dp_s[j]
    })
}

fn check_index(i: usize, lo: usize) -> Result<()> {
    if !(lo..=4).contains(&i) {
        return Err(Error::IndexOutOfRange(format!(
            "power index {i} not in [{lo}, 4]"
        )));
    }
    Ok(())
}

/// (D_X P_i)(U) for i in 1..=4.
pub fn d_power(x: &Screw, u: &Screw, i: usize) -> Result<Mat6> {
    check_index(i, 1)?;
    Ok(power_derivative_from(&ad_powers(x, i), &ad(u), i))
}

/// (D²_X P_i)(U)(S) for i in 2..=4.
pub fn d2_power(x: &Screw, u: &Screw, s: &Screw, i: usize) -> Result<Mat6> {
    check_index(i, 2)?;
    let p = ad_powers(x, i);
    let dp_s = power_derivatives_from(&p, &ad(s), i);
    Ok(power_second_derivative_from(&p, &dp_s, &ad(u), i))
}

/// Σ w_i D P_i(U) + (xᵀu) Σ w̄_i P_i.
pub fn ddexp_with(x: &Screw, u: &Screw, c: &TangentCoeffs) -> Mat6 {
    let p = ad_powers(x, 4);
    let au = ad(u);
    let xu = x.rotation().dot(&u.rotation());
    (1..=4).fold(Mat6::zeros(), |acc, i| {
        acc + power_derivative_from(&p, &au, i) * c.w[i] + p[i] * (xu * c.w_bar[i])
    })
}

/// (D_X dexp)(U) or (D_X dexp⁻¹)(U).
pub fn ddexp(x: &Screw, u: &Screw, variant: Variant) -> Result<Mat6> {
    let phi = x.checked_angle()?;
    check_finite(u.vector().as_slice(), "direction")?;
    Ok(ddexp_with(x, u, &TangentCoeffs::at(phi, variant)?))
}

pub fn d2dexp_with(x: &Screw, u: &Screw, s: &Screw, c: &TangentCoeffs) -> Mat6 {
    let p = ad_powers(x, 4);
    let (au, as_) = (ad(u), ad(s));
    let dp_u = power_derivatives_from(&p, &au, 4);
    let dp_s = power_derivatives_from(&p, &as_, 4);
    let (xr, ur, sr) = (x.rotation(), u.rotation(), s.rotation());
    let (xu, xs, su) = (xr.dot(&ur), xr.dot(&sr), sr.dot(&ur));
    (1..=4).fold(Mat6::zeros(), |acc, i| {
        acc + p[i] * (su * c.w_bar[i] + xu * xs * c.w_breve[i])
            + power_second_derivative_from(&p, &dp_s, &au, i) * c.w[i]
            + dp_s[i] * (xu * c.w_bar[i])
            + dp_u[i] * (xs * c.w_bar[i])
    })
}

/// (D²_X dexp)(U)(S) or its inverse counterpart.
pub fn d2dexp(x: &Screw, u: &Screw, s: &Screw, variant: Variant) -> Result<Mat6> {
    let phi = x.checked_angle()?;
    check_finite(u.vector().as_slice(), "direction")?;
    check_finite(s.vector().as_slice(), "direction")?;
    Ok(d2dexp_with(x, u, s, &TangentCoeffs::at(phi, variant)?))
}

/// Spatial twist and its first two time derivatives along X(t):
/// V = dexp Ẋ, V̇ = dexp Ẍ + D(Ẋ)Ẋ,
/// V̈ = dexp X⃛ + 2 D(Ẋ)Ẍ + D(Ẍ)Ẋ + D²(Ẋ)(Ẋ)Ẋ.
pub fn twist_derivatives(
    x: &Screw,
    xd: &Screw,
    xdd: &Screw,
    xddd: &Screw,
) -> Result<(Screw, Screw, Screw)> {
    let phi = x.checked_angle()?;
    let c = TangentCoeffs::at(phi, Variant::Dexp)?;
    let t = crate::exp_dexp::dexp_with(x, &c);
    let d_xd = ddexp_with(x, xd, &c);
    let d_xdd = ddexp_with(x, xdd, &c);
    let d2 = d2dexp_with(x, xd, xd, &c);
    let (a, b, cc, d) = (xd.vector(), xdd.vector(), xddd.vector(), xd.vector());
    let v = t * a;
    let vd = t * b + d_xd * d;
    let vdd = t * cc + d_xd * b * 2.0 + d_xdd * a + d2 * a;
    Ok((v.into(), vd.into(), vdd.into()))
}
