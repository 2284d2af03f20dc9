//! Jacobians of the evaluation maps X ↦ dexp_X Z, X ↦ dexp⁻¹_X Z and
//! X ↦ dexpᵀ_X Z, and Hessians of X ↦ Qᵀ dexp_X Z.

use crate::algebra::{ad, ad_bar, ad_powers, Mat6, Screw, Vec6};
use crate::error::{check_finite, Result};
use crate::kernels::TangentCoeffs;
use crate::Variant;

/// The three evaluation maps with closed-form Jacobians.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalMap {
    Dexp,
    DexpInv,
    /// X ↦ dexp_Xᵀ Z
    DexpT,
}

impl EvalMap {
    pub fn variant(self) -> Variant {
        match self {
            EvalMap::Dexp | EvalMap::DexpT => Variant::Dexp,
            EvalMap::DexpInv => Variant::DexpInv,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EvalMap::Dexp => "dexp",
            EvalMap::DexpInv => "dexpinv",
            EvalMap::DexpT => "dexpT",
        }
    }
}

/// Z_k = P_k Z for k = 0..=kmax.
pub(crate) fn z_powers(p: &[Mat6], z: &Vec6) -> Vec<Vec6> {
    p.iter().map(|pk| pk * z).collect()
}

/// P_{i,j} = −P_j ad(Z_{i−j−1}).
pub(crate) fn p_ij_from(p: &[Mat6], zk: &[Vec6], i: usize, j: usize) -> Mat6 {
    -(p[j] * ad(&zk[i - j - 1].into()))
}

/// J_i = Σ_{j<i} P_{i,j}, so that D P_i(U) Z = J_i U.
pub(crate) fn j_sum_from(p: &[Mat6], zk: &[Vec6], i: usize) -> Mat6 {
    (0..i).fold(Mat6::zeros(), |acc, j| acc + p_ij_from(p, zk, i, j))
}

/// Σ_{j<i} P_{i−j−1}ᵀ ad_bar(P_jᵀ Z): D P_i(U)ᵀ Z as a matrix acting on U.
pub(crate) fn j_sum_transposed_from(p: &[Mat6], zbar: &[Vec6], i: usize) -> Mat6 {
    (0..i).fold(Mat6::zeros(), |acc, j| {
        acc + p[i - j - 1].transpose() * ad_bar(&zbar[j])
    })
}

/// The row (xᵀ, 0) as a 6-vector.
fn rot_row(x: &Screw) -> Vec6 {
    let r = x.rotation();
    Vec6::new(r[0], r[1], r[2], 0.0, 0.0, 0.0)
}

pub fn jac_eval_with(x: &Screw, z: &Screw, map: EvalMap, c: &TangentCoeffs) -> Mat6 {
    let p = ad_powers(x, 4);
    let xr = rot_row(x);
    match map {
        EvalMap::Dexp | EvalMap::DexpInv => {
            let zk = z_powers(&p, z.vector());
            (1..=4).fold(Mat6::zeros(), |acc, i| {
                acc + j_sum_from(&p, &zk, i) * c.w[i] + zk[i] * xr.transpose() * c.w_bar[i]
            })
        }
        EvalMap::DexpT => {
            let zbar: Vec<Vec6> = p.iter().map(|pk| pk.transpose() * z.vector()).collect();
            (1..=4).fold(Mat6::zeros(), |acc, i| {
                acc + j_sum_transposed_from(&p, &zbar, i) * c.w[i]
                    + zbar[i] * xr.transpose() * c.w_bar[i]
            })
        }
    }
}

/// ∂f/∂X for f(X) = dexp_X Z, dexp⁻¹_X Z or dexp_Xᵀ Z.
pub fn jac_eval(x: &Screw, z: &Screw, map: EvalMap) -> Result<Mat6> {
    let phi = x.checked_angle()?;
    check_finite(z.vector().as_slice(), "evaluation argument")?;
    Ok(jac_eval_with(
        x,
        z,
        map,
        &TangentCoeffs::at(phi, map.variant())?,
    ))
}

/// H̄_i = Σ_{j=1}^{i−1} Σ_{l<j} ad_bar(P_{i−j−1}ᵀ Q) P_l ad(Z_{j−l−1}).
pub(crate) fn hbar_from(p: &[Mat6], q: &Vec6, zk: &[Vec6], i: usize) -> Mat6 {
    let mut h = Mat6::zeros();
    for j in 1..i {
        let qb = ad_bar(&(p[i - j - 1].transpose() * q));
        for l in 0..j {
            h += qb * p[l] * ad(&zk[j - l - 1].into());
        }
    }
    h
}

/// The matrix H̄_i for a given X, Q, Z; i ≥ 2.
pub fn hbar(x: &Screw, q: &Vec6, z: &Screw, i: usize) -> Mat6 {
    let p = ad_powers(x, i);
    hbar_from(&p, q, &z_powers(&p, z.vector()), i)
}

/// The three contributions to the Hessian, before symmetrization.
#[derive(Clone, Copy, Debug)]
pub struct HessianParts {
    /// Coefficient second derivatives, top-left block only.
    pub h1: Mat6,
    /// Second derivatives of the powers P_i.
    pub h2: Mat6,
    /// Mixed coefficient/power terms.
    pub h3: Mat6,
}

impl HessianParts {
    pub fn total(&self) -> Mat6 {
        self.h1 + self.h2 + self.h3
    }
}

pub fn hessian_parts_with(x: &Screw, q: &Vec6, z: &Screw, c: &TangentCoeffs) -> HessianParts {
    let p = ad_powers(x, 4);
    let zk = z_powers(&p, z.vector());
    let xr = rot_row(x);
    let xv = x.rotation();
    let xxt = xv * xv.transpose();
    let mut parts = HessianParts {
        h1: Mat6::zeros(),
        h2: Mat6::zeros(),
        h3: Mat6::zeros(),
    };
    for i in 1..=4 {
        let qz = q.dot(&zk[i]);
        let block = (crate::Mat3::identity() * c.w_bar[i] + xxt * c.w_breve[i]) * qz;
        let mut tl = parts.h1.fixed_view_mut::<3, 3>(0, 0);
        tl += block;
        if i >= 2 {
            let hb = hbar_from(&p, q, &zk, i);
            parts.h2 += (hb + hb.transpose()) * c.w[i];
        }
        let row = j_sum_from(&p, &zk, i).transpose() * q;
        let m = xr * row.transpose();
        parts.h3 += (m + m.transpose()) * c.w_bar[i];
    }
    parts
}

pub fn hessian_eval_with(x: &Screw, q: &Vec6, z: &Screw, c: &TangentCoeffs) -> Mat6 {
    let h = hessian_parts_with(x, q, z, c).total();
    debug_assert!((h - h.transpose()).amax() <= 1e-12 * h.amax().max(1.0));
    (h + h.transpose()) * 0.5
}

/// Hessian of X ↦ Qᵀ dexp_X Z (or with dexp⁻¹).
pub fn hessian_eval(x: &Screw, q: &Vec6, z: &Screw, variant: Variant) -> Result<Mat6> {
    let phi = x.checked_angle()?;
    check_finite(q.as_slice(), "covector")?;
    check_finite(z.vector().as_slice(), "evaluation argument")?;
    Ok(hessian_eval_with(
        x,
        q,
        z,
        &TangentCoeffs::at(phi, variant)?,
    ))
}
