//! Cosserat rod with a prescribed displacement field: reference-field
//! construction, deformation measures and the elastic potential.

use std::f64::consts::PI;

use crate::algebra::{vee, Mat6, Screw, Vec3, Vec6};
use crate::approx::{Evaluator, Target};
use crate::error::{Error, Result};
use crate::exp_dexp::log_se3;
use crate::fd::sixth_order_derivative;
use crate::jacobians::EvalMap;
use crate::so3::exp_so3;
use crate::transform::Transform;
use crate::Variant;

/// Rectangular cross-section rod, lengths in mm and moduli in MPa.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RodConfig {
    pub length: f64,
    pub width: f64,
    pub height: f64,
    pub youngs: f64,
    pub shear: f64,
}

impl Default for RodConfig {
    fn default() -> Self {
        Self {
            length: 100.0,
            width: 8.0,
            height: 8.0,
            youngs: 10.0,
            shear: 0.3,
        }
    }
}

impl RodConfig {
    pub fn validate(&self) -> Result<()> {
        let all = [
            self.length,
            self.width,
            self.height,
            self.youngs,
            self.shear,
        ];
        if all.iter().all(|v| v.is_finite() && *v > 0.0) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "rod parameters must be positive: {self:?}"
            )))
        }
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    /// Second moment about the y axis, w·h³/12.
    pub fn i_yy(&self) -> f64 {
        self.width * self.height.powi(3) / 12.0
    }

    pub fn i_zz(&self) -> f64 {
        self.height * self.width.powi(3) / 12.0
    }

    /// Polar moment I_yy + I_zz.
    pub fn j_x(&self) -> f64 {
        self.i_yy() + self.i_zz()
    }

    /// K = (1/L) diag(G J, E I_yy, E I_zz, E A, G A, G A).
    pub fn stiffness(&self) -> Result<Mat6> {
        self.validate()?;
        let (e, g, a) = (self.youngs, self.shear, self.area());
        let d = Vec6::new(
            g * self.j_x(),
            e * self.i_yy(),
            e * self.i_zz(),
            e * a,
            g * a,
            g * a,
        ) / self.length;
        Ok(Mat6::from_diagonal(&d))
    }
}

/// Undeformed straight rod: no curvature, unit stretch along the first axis.
pub fn straight_reference() -> Screw {
    Screw::from_array([0.0, 0.0, 0.0, 1.0, 0.0, 0.0])
}

pub(crate) fn displacement_unchecked(tau: f64) -> (Vec3, Vec3) {
    let s2 = (2.0 * PI * tau).sin();
    let x = Vec3::new(0.5 * s2, 0.5 * (PI * tau).cos(), 0.5 * s2);
    let a = 0.1 * s2;
    let rho = Vec3::new(a.cos(), a.sin() * s2.cos(), a.sin() * s2.sin());
    (x, rho)
}

/// Rotation vector x(τ) and stretch ρ(τ) of the demo field.
pub fn prescribed_displacement(tau: f64) -> Result<(Vec3, Vec3)> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::InvalidArgument(format!(
            "arc length {tau} outside [0, 1]"
        )));
    }
    Ok(displacement_unchecked(tau))
}

fn rotation_at(tau: f64) -> Result<crate::Mat3> {
    exp_so3(&displacement_unchecked(tau).0)
}

/// Reference frame H(τ) = (R(τ), r(τ)) with R = exp x(τ) and r′ = R ρ.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceRod {
    steps: usize,
    steps_d1: f64,
    steps_d2: f64,
    steps_d3: f64,
}

impl Default for ReferenceRod {
    fn default() -> Self {
        Self {
            steps: 2000,
            steps_d1: 1e-4,
            steps_d2: 1e-3,
            steps_d3: 5e-3,
        }
    }
}

/// X_ref and its first three arc-length derivatives at τ.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceSample {
    pub tau: f64,
    pub x: Screw,
    pub xp: Screw,
    pub xpp: Screw,
    pub xppp: Screw,
}

impl ReferenceRod {
    /// `steps` quadrature steps over [0, τ]; finite-difference steps for the
    /// first, second and third τ-derivatives of X_ref.
    pub fn new(steps: usize, fd_steps: [f64; 3]) -> Result<Self> {
        if steps == 0 || fd_steps.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
            return Err(Error::InvalidArgument(
                "quadrature and difference steps must be positive".into(),
            ));
        }
        Ok(Self {
            steps,
            steps_d1: fd_steps[0],
            steps_d2: fd_steps[1],
            steps_d3: fd_steps[2],
        })
    }

    /// r(τ) by the classical fourth-order scheme with `steps` equal steps on
    /// [0, τ] and compensated summation. Defined for τ slightly outside
    /// [0, 1] so difference stencils can reach the ends.
    pub fn position(&self, tau: f64) -> Result<Vec3> {
        let f = |t: f64| -> Result<Vec3> { Ok(rotation_at(t)? * displacement_unchecked(t).1) };
        let h = tau / self.steps as f64;
        let mut sum = Vec3::zeros();
        let mut comp = Vec3::zeros();
        let mut f0 = f(0.0)?;
        for n in 0..self.steps {
            let t0 = n as f64 * h;
            let fm = f(t0 + 0.5 * h)?;
            let f1 = f(t0 + h)?;
            let inc = (f0 + fm * 4.0 + f1) * (h / 6.0);
            for k in 0..3 {
                let s = sum[k] + inc[k];
                comp[k] += if sum[k].abs() >= inc[k].abs() {
                    (sum[k] - s) + inc[k]
                } else {
                    (inc[k] - s) + sum[k]
                };
                sum[k] = s;
            }
            f0 = f1;
        }
        Ok(sum + comp)
    }

    pub fn frame(&self, tau: f64) -> Result<Transform> {
        Ok(Transform::new(rotation_at(tau)?, self.position(tau)?))
    }

    /// X_ref(τ) = log H(τ).
    pub fn screw(&self, tau: f64) -> Result<Screw> {
        log_se3(&self.frame(tau)?)
    }

    pub fn sample(&self, tau: f64) -> Result<ReferenceSample> {
        let x = self.screw(tau)?;
        let mut err = None;
        let mut f = |t: f64| -> Vec6 {
            match self.screw(t) {
                Ok(s) => *s.vector(),
                Err(e) => {
                    err.get_or_insert(e);
                    Vec6::repeat(f64::NAN)
                }
            }
        };
        let xp = sixth_order_derivative(&mut f, tau, self.steps_d1, 1);
        let xpp = sixth_order_derivative(&mut f, tau, self.steps_d2, 2);
        let xppp = sixth_order_derivative(&mut f, tau, self.steps_d3, 3);
        if let Some(e) = err {
            return Err(e);
        }
        Ok(ReferenceSample {
            tau,
            x,
            xp: xp.into(),
            xpp: xpp.into(),
            xppp: xppp.into(),
        })
    }

    /// χ = (κ, ρ) from κ̃ = RᵀR′ with R′ by differences of exp x(τ), without
    /// going through the screw coordinates.
    pub fn direct_deformation(&self, tau: f64) -> Result<Screw> {
        let r = rotation_at(tau)?;
        let mut err = None;
        let rp = sixth_order_derivative(
            |t: f64| match rotation_at(t) {
                Ok(m) => m,
                Err(e) => {
                    err.get_or_insert(e);
                    crate::Mat3::repeat(f64::NAN)
                }
            },
            tau,
            self.steps_d1,
            1,
        );
        if let Some(e) = err {
            return Err(e);
        }
        Ok(Screw::new(
            vee(&(r.transpose() * rp)),
            displacement_unchecked(tau).1,
        ))
    }
}

/// Samples X_ref and derivatives on a sorted grid in [0, 1].
pub fn build_reference(grid: &[f64]) -> Result<Vec<ReferenceSample>> {
    build_reference_with(&ReferenceRod::default(), grid)
}

pub fn build_reference_with(rod: &ReferenceRod, grid: &[f64]) -> Result<Vec<ReferenceSample>> {
    if grid.windows(2).any(|w| w[0] > w[1]) || grid.iter().any(|t| !(0.0..=1.0).contains(t)) {
        return Err(Error::InvalidArgument(
            "grid must be sorted within [0, 1]".into(),
        ));
    }
    crate::par::map(grid.len(), |i| rod.sample(grid[i]))
        .into_iter()
        .collect()
}

fn apply(m: &Mat6, v: &Screw) -> Screw {
    (m * v.vector()).into()
}

/// χ = dexp(−X) X′.
pub fn deformation(x: &Screw, xp: &Screw) -> Result<Screw> {
    deformation_with(x, xp, &Evaluator::Exact)
}

pub fn deformation_with(x: &Screw, xp: &Screw, ev: &Evaluator) -> Result<Screw> {
    Ok(apply(&ev.eval(&-*x, &Target::Tangent(Variant::Dexp))?, xp))
}

/// χ′ = dexp(−X)X″ − D(X′)X′ and
/// χ″ = dexp(−X)X‴ − 2 D(X′)X″ − D(X″)X′ + D²(X′)(X′)X′, all at −X.
pub fn deformation_rates(
    x: &Screw,
    xp: &Screw,
    xpp: &Screw,
    xppp: &Screw,
) -> Result<(Screw, Screw)> {
    deformation_rates_with(x, xp, xpp, xppp, &Evaluator::Exact)
}

pub fn deformation_rates_with(
    x: &Screw,
    xp: &Screw,
    xpp: &Screw,
    xppp: &Screw,
    ev: &Evaluator,
) -> Result<(Screw, Screw)> {
    let y = -*x;
    let v = Variant::Dexp;
    let t = ev.eval(&y, &Target::Tangent(v))?;
    let d1 = ev.eval(&y, &Target::Derivative { variant: v, u: *xp })?;
    let d2 = ev.eval(
        &y,
        &Target::Derivative {
            variant: v,
            u: *xpp,
        },
    )?;
    let dd = ev.eval(
        &y,
        &Target::SecondDerivative {
            variant: v,
            u: *xp,
            s: *xp,
        },
    )?;
    let chi_p = apply(&t, xpp) - apply(&d1, xp);
    let chi_pp = apply(&t, xppp) - apply(&d1, xpp) * 2.0 - apply(&d2, xp) + apply(&dd, xp);
    Ok((chi_p, chi_pp))
}

/// ∂χ/∂X for χ(X) = dexp(−X)X′ with X′ fixed: −J(−X) where J is the
/// Jacobian of Y ↦ dexp_Y X′.
pub fn deformation_jacobian(x: &Screw, xp: &Screw, ev: &Evaluator) -> Result<Mat6> {
    Ok(-ev.eval(
        &-*x,
        &Target::Jacobian {
            map: EvalMap::Dexp,
            z: *xp,
        },
    )?)
}

/// V̄(X) = ½ (χ − χ₀)ᵀ K (χ − χ₀).
pub fn potential(x: &Screw, xp: &Screw, chi0: &Screw, k: &Mat6) -> Result<f64> {
    let e = deformation(x, xp)? - *chi0;
    Ok(0.5 * e.vector().dot(&(k * e.vector())))
}

pub fn potential_gradient(x: &Screw, xp: &Screw, chi0: &Screw, k: &Mat6) -> Result<Vec6> {
    potential_gradient_with(x, xp, chi0, k, &Evaluator::Exact)
}

pub fn potential_gradient_with(
    x: &Screw,
    xp: &Screw,
    chi0: &Screw,
    k: &Mat6,
    ev: &Evaluator,
) -> Result<Vec6> {
    let a = k * (deformation_with(x, xp, ev)? - *chi0).vector();
    Ok(deformation_jacobian(x, xp, ev)?.transpose() * a)
}

pub fn potential_hessian(x: &Screw, xp: &Screw, chi0: &Screw, k: &Mat6) -> Result<Mat6> {
    potential_hessian_with(x, xp, chi0, k, &Evaluator::Exact)
}

/// Hessian of aᵀ dexp_(−X) X′ (the sign of −X cancels) plus JᵀKJ, with
/// a = K(χ − χ₀) held fixed during differentiation.
pub fn potential_hessian_with(
    x: &Screw,
    xp: &Screw,
    chi0: &Screw,
    k: &Mat6,
    ev: &Evaluator,
) -> Result<Mat6> {
    let a = k * (deformation_with(x, xp, ev)? - *chi0).vector();
    let j = deformation_jacobian(x, xp, ev)?;
    let h = ev.eval(
        &-*x,
        &Target::Hessian {
            variant: Variant::Dexp,
            q: a,
            z: *xp,
        },
    )?;
    let total = h + j.transpose() * k * j;
    Ok((total + total.transpose()) * 0.5)
}
