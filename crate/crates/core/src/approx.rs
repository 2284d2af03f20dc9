//! Truncated-series approximations and the switching policy that replaces
//! the closed forms near x = 0.

use crate::algebra::{ad, ad_powers, Mat6, Screw, Vec6};
use crate::derivatives::{
    d2dexp_with, ddexp_with, power_derivatives_from, power_second_derivative_from,
};
use crate::error::{check_finite, Error, Result};
use crate::exp_dexp::{dexp_with, series_weights};
use crate::jacobians::{
    hbar_from, hessian_eval_with, j_sum_from, j_sum_transposed_from, jac_eval_with, z_powers,
    EvalMap,
};
use crate::kernels::TangentCoeffs;
use crate::Variant;

/// Largest order accepted by [`dexp_approx`].
pub const MAX_TANGENT_ORDER: usize = 8;

const TANGENT_ORDERS: [usize; 9] = [0, 1, 2, 3, 4, 5, 6, 7, 8];
const FIRST_ORDERS: [usize; 4] = [0, 1, 2, 3];
const SECOND_ORDERS: [usize; 3] = [0, 1, 2];
const SECOND_ORDERS_INV: [usize; 2] = [0, 2];

fn check_indices(i: usize, j: usize) -> Result<()> {
    if j >= i {
        return Err(Error::IndexOutOfRange(format!(
            "P_{{i,j}} needs j < i, got i={i}, j={j}"
        )));
    }
    Ok(())
}

/// P_{i,j}(X, Z) = −P_j ad(Z_{i−j−1}), so that P_{i,j} U = P_j ad_U P_{i−j−1} Z.
pub fn p_ij(x: &Screw, z: &Screw, i: usize, j: usize) -> Result<Mat6> {
    check_indices(i, j)?;
    let p = ad_powers(x, i);
    Ok(crate::jacobians::p_ij_from(
        &p,
        &z_powers(&p, z.vector()),
        i,
        j,
    ))
}

/// Same matrix from P_{i,j} = ad_X P_{i−1,j} + P_j ad(Z_{i−j−2}) ad_X,
/// starting at P_{j+1,j} = −P_j ad_Z.
pub fn p_ij_recursive(x: &Screw, z: &Screw, i: usize, j: usize) -> Result<Mat6> {
    check_indices(i, j)?;
    let p = ad_powers(x, i);
    let zk = z_powers(&p, z.vector());
    let ax = ad(x);
    let mut m = -(p[j] * ad(z));
    for n in (j + 2)..=i {
        m = ax * m + p[j] * ad(&zk[n - j - 2].into()) * ax;
    }
    Ok(m)
}

fn unsupported(target: &'static str, order: usize) -> Error {
    Error::UnsupportedOrder { target, order }
}

/// Σ_{i ≤ k} w_i P_i.
pub fn dexp_approx(x: &Screw, k: usize, variant: Variant) -> Result<Mat6> {
    if k > MAX_TANGENT_ORDER {
        return Err(unsupported("dexp_approx", k));
    }
    check_finite(x.vector().as_slice(), "screw")?;
    let w = series_weights(variant);
    let p = ad_powers(x, k);
    Ok((1..=k).fold(Mat6::identity(), |acc, i| acc + p[i] * w[i]))
}

fn first_order_ok(k: usize, name: &'static str) -> Result<()> {
    if FIRST_ORDERS.contains(&k) {
        Ok(())
    } else {
        Err(unsupported(name, k))
    }
}

fn second_order_ok(k: usize, variant: Variant, name: &'static str) -> Result<()> {
    let ok = match variant {
        Variant::Dexp => SECOND_ORDERS.contains(&k),
        Variant::DexpInv => SECOND_ORDERS_INV.contains(&k),
    };
    if ok {
        Ok(())
    } else {
        Err(unsupported(name, k))
    }
}

/// Σ_{i=1}^{k+1} w_i D P_i(U).
pub fn ddexp_approx(x: &Screw, u: &Screw, k: usize, variant: Variant) -> Result<Mat6> {
    first_order_ok(k, "ddexp_approx")?;
    let w = series_weights(variant);
    let p = ad_powers(x, k + 1);
    let dp = power_derivatives_from(&p, &ad(u), k + 1);
    Ok((1..=k + 1).fold(Mat6::zeros(), |acc, i| acc + dp[i] * w[i]))
}

/// Σ_{i=1}^{k+1} w_i Σ_j P_{i,j} (or the transposed-map analogue).
pub fn jac_eval_approx(x: &Screw, z: &Screw, k: usize, map: EvalMap) -> Result<Mat6> {
    first_order_ok(k, "jac_eval_approx")?;
    let w = series_weights(map.variant());
    let p = ad_powers(x, k + 1);
    Ok(match map {
        EvalMap::Dexp | EvalMap::DexpInv => {
            let zk = z_powers(&p, z.vector());
            (1..=k + 1).fold(Mat6::zeros(), |acc, i| acc + j_sum_from(&p, &zk, i) * w[i])
        }
        EvalMap::DexpT => {
            let zbar: Vec<Vec6> = p.iter().map(|pk| pk.transpose() * z.vector()).collect();
            (1..=k + 1).fold(Mat6::zeros(), |acc, i| {
                acc + j_sum_transposed_from(&p, &zbar, i) * w[i]
            })
        }
    })
}

/// Σ_{i=2}^{k+2} w_i D²P_i(U)(S).
pub fn d2dexp_approx(x: &Screw, u: &Screw, s: &Screw, k: usize, variant: Variant) -> Result<Mat6> {
    second_order_ok(k, variant, "d2dexp_approx")?;
    let w = series_weights(variant);
    let n = k + 2;
    let p = ad_powers(x, n);
    let dp_s = power_derivatives_from(&p, &ad(s), n);
    let au = ad(u);
    Ok((2..=n).fold(Mat6::zeros(), |acc, i| {
        acc + power_second_derivative_from(&p, &dp_s, &au, i) * w[i]
    }))
}

/// Σ_{i=2}^{k+2} w_i (H̄_i + H̄_iᵀ).
pub fn hessian_approx(x: &Screw, q: &Vec6, z: &Screw, k: usize, variant: Variant) -> Result<Mat6> {
    second_order_ok(k, variant, "hessian_approx")?;
    let w = series_weights(variant);
    let n = k + 2;
    let p = ad_powers(x, n);
    let zk = z_powers(&p, z.vector());
    Ok((2..=n).fold(Mat6::zeros(), |acc, i| {
        let h = hbar_from(&p, q, &zk, i);
        acc + (h + h.transpose()) * w[i]
    }))
}

/// A quantity that can be evaluated exactly or approximately.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Target {
    Tangent(Variant),
    Derivative {
        variant: Variant,
        u: Screw,
    },
    Jacobian {
        map: EvalMap,
        z: Screw,
    },
    SecondDerivative {
        variant: Variant,
        u: Screw,
        s: Screw,
    },
    Hessian {
        variant: Variant,
        q: Vec6,
        z: Screw,
    },
}

impl Target {
    pub fn supported_orders(&self) -> &'static [usize] {
        match self {
            Target::Tangent(_) => &TANGENT_ORDERS,
            Target::Derivative { .. } | Target::Jacobian { .. } => &FIRST_ORDERS,
            Target::SecondDerivative { variant, .. } | Target::Hessian { variant, .. } => {
                match variant {
                    Variant::Dexp => &SECOND_ORDERS,
                    Variant::DexpInv => &SECOND_ORDERS_INV,
                }
            }
        }
    }

    /// Largest supported order not above `k`.
    pub fn clamp_order(&self, k: usize) -> usize {
        self.supported_orders()
            .iter()
            .copied()
            .filter(|o| *o <= k)
            .max()
            .unwrap_or(0)
    }

    pub fn approx(&self, x: &Screw, k: usize) -> Result<Mat6> {
        match *self {
            Target::Tangent(v) => dexp_approx(x, k, v),
            Target::Derivative { variant, u } => ddexp_approx(x, &u, k, variant),
            Target::Jacobian { map, z } => jac_eval_approx(x, &z, k, map),
            Target::SecondDerivative { variant, u, s } => d2dexp_approx(x, &u, &s, k, variant),
            Target::Hessian { variant, q, z } => hessian_approx(x, &q, &z, k, variant),
        }
    }

    fn variant(&self) -> Variant {
        match *self {
            Target::Tangent(v) => v,
            Target::Derivative { variant, .. }
            | Target::SecondDerivative { variant, .. }
            | Target::Hessian { variant, .. } => variant,
            Target::Jacobian { map, .. } => map.variant(),
        }
    }

    /// Evaluates the closed form with the given coefficients.
    pub fn closed_with(&self, x: &Screw, c: &TangentCoeffs) -> Mat6 {
        match *self {
            Target::Tangent(_) => dexp_with(x, c),
            Target::Derivative { u, .. } => ddexp_with(x, &u, c),
            Target::Jacobian { map, z } => jac_eval_with(x, &z, map, c),
            Target::SecondDerivative { u, s, .. } => d2dexp_with(x, &u, &s, c),
            Target::Hessian { q, z, .. } => hessian_eval_with(x, &q, &z, c),
        }
    }

    /// Closed form with singularity-free coefficients.
    pub fn exact(&self, x: &Screw) -> Result<Mat6> {
        let phi = x.checked_angle()?;
        Ok(self.closed_with(x, &TangentCoeffs::at(phi, self.variant())?))
    }

    /// Closed form with the printed coefficient formulas taken literally.
    pub fn literal(&self, x: &Screw) -> Mat6 {
        self.closed_with(x, &TangentCoeffs::literal(x.angle(), self.variant()))
    }
}

/// Closed forms above ε, a truncated series of order at most `max_order`
/// at or below it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SwitchPolicy {
    epsilon: f64,
    max_order: Option<usize>,
}

pub const DEFAULT_EPSILON: f64 = 1e-4;

impl Default for SwitchPolicy {
    fn default() -> Self {
        Self {
            epsilon: DEFAULT_EPSILON,
            max_order: None,
        }
    }
}

impl SwitchPolicy {
    /// `max_order = None` selects the highest order each target supports.
    pub fn new(epsilon: f64, max_order: Option<usize>) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "switch threshold {epsilon} must be positive"
            )));
        }
        Ok(Self { epsilon, max_order })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn order_for(&self, target: &Target) -> usize {
        target.clamp_order(self.max_order.unwrap_or(usize::MAX))
    }
}

pub fn robust_eval(x: &Screw, target: &Target, policy: &SwitchPolicy) -> Result<Mat6> {
    if x.checked_angle()? > policy.epsilon {
        target.exact(x)
    } else {
        target.approx(x, policy.order_for(target))
    }
}

/// How closed-form quantities are evaluated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Evaluator {
    /// Printed formulas, no protection at x = 0.
    Literal,
    /// Robust coefficients with no structural switch.
    Exact,
    Switched(SwitchPolicy),
}

impl Evaluator {
    pub fn eval(&self, x: &Screw, target: &Target) -> Result<Mat6> {
        match self {
            Evaluator::Literal => Ok(target.literal(x)),
            Evaluator::Exact => target.exact(x),
            Evaluator::Switched(p) => robust_eval(x, target, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Screw {
        Screw::from_array([0.1, 1.0, -1.0, 0.9, 0.5, 0.3])
    }

    #[test]
    fn table_one_rows() {
        let x = Screw::from_array([0.3, -0.4, 1.0, 0.1, 0.2, -0.4]);
        assert_eq!(p_ij(&x, &z(), 1, 0).unwrap(), -ad(&z()));
        let z1: Screw = (ad(&x) * z().vector()).into();
        let row2 = p_ij(&x, &z(), 2, 0).unwrap() + p_ij(&x, &z(), 2, 1).unwrap();
        assert!((row2 - (-ad(&z1) - ad(&x) * ad(&z()))).amax() < 1e-15);
        assert!(p_ij(&x, &z(), 2, 2).is_err());
    }

    #[test]
    fn low_orders() {
        let x = Screw::from_array([0.03, -0.04, 0.1, 0.01, 0.02, -0.04]);
        assert_eq!(dexp_approx(&x, 0, Variant::Dexp).unwrap(), Mat6::identity());
        assert_eq!(
            dexp_approx(&x, 1, Variant::Dexp).unwrap(),
            Mat6::identity() + ad(&x) * 0.5
        );
        assert_eq!(
            ddexp_approx(&x, &z(), 0, Variant::Dexp).unwrap(),
            ad(&z()) * 0.5
        );
        assert_eq!(
            ddexp_approx(&x, &z(), 0, Variant::DexpInv).unwrap(),
            ad(&z()) * -0.5
        );
        assert_eq!(
            jac_eval_approx(&x, &z(), 0, EvalMap::Dexp).unwrap(),
            ad(&z()) * -0.5
        );
        assert_eq!(
            jac_eval_approx(&x, &z(), 0, EvalMap::DexpInv).unwrap(),
            ad(&z()) * 0.5
        );
        assert!(d2dexp_approx(&x, &z(), &z(), 1, Variant::DexpInv).is_err());
        assert!(hessian_approx(&x, z().vector(), &z(), 3, Variant::Dexp).is_err());
        assert!(ddexp_approx(&x, &z(), 4, Variant::Dexp).is_err());
        assert!(dexp_approx(&x, 9, Variant::Dexp).is_err());
    }

    #[test]
    fn policy_and_switch() {
        assert!(SwitchPolicy::new(0.0, None).is_err());
        let pol = SwitchPolicy::new(1e-3, Some(3)).unwrap();
        let t = Target::SecondDerivative {
            variant: Variant::DexpInv,
            u: z(),
            s: z(),
        };
        assert_eq!(pol.order_for(&t), 2);
        let t1 = Target::SecondDerivative {
            variant: Variant::DexpInv,
            u: z(),
            s: z(),
        };
        assert_eq!(SwitchPolicy::new(1e-3, Some(1)).unwrap().order_for(&t1), 0);
        let d = Target::Derivative {
            variant: Variant::Dexp,
            u: z(),
        };
        assert_eq!(
            robust_eval(&Screw::zero(), &d, &pol).unwrap(),
            ad(&z()) * 0.5
        );
        let x = Screw::from_array([2e-3, 0.0, 0.0, 0.1, 0.2, 0.3]);
        assert_eq!(robust_eval(&x, &d, &pol).unwrap(), d.exact(&x).unwrap());
    }
}
