//! Numerical studies: approximation-error sweeps along a ray of screws,
//! convergence-order fits, and the rod switching experiments.

use crate::algebra::{Mat6, Screw, Vec3, Vec6};
use crate::approx::{Evaluator, SwitchPolicy, Target};
use crate::error::{Error, Result};
use crate::jacobians::EvalMap;
use crate::rod::{self, ReferenceRod, ReferenceSample};
use crate::Variant;

/// The fixed vectors of the published error study.
#[derive(Clone, Copy, Debug)]
pub struct TestVectors {
    pub x: Vec3,
    pub y: Vec3,
    pub u: Screw,
    pub s: Screw,
}

impl Default for TestVectors {
    fn default() -> Self {
        Self {
            x: Vec3::new(0.3, -0.4, 1.0),
            y: Vec3::new(0.1, 0.2, -0.4),
            u: Screw::from_array([0.1, 1.0, -1.0, 0.9, 0.5, 0.3]),
            s: Screw::from_array([1.7, -2.9, -9.2, 7.6, 6.7, 2.4]),
        }
    }
}

impl TestVectors {
    /// X(s) = s·[n; y] with n = x/‖x‖.
    pub fn ray(&self, s: f64) -> Screw {
        Screw::new(self.x.normalize(), self.y) * s
    }
}

/// Quantity family in an error sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Tangent(Variant),
    Derivative(Variant),
    Jacobian(EvalMap),
    SecondDerivative(Variant),
    Hessian(Variant),
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Tangent(Variant::Dexp),
        Family::Tangent(Variant::DexpInv),
        Family::Derivative(Variant::Dexp),
        Family::Derivative(Variant::DexpInv),
        Family::Jacobian(EvalMap::Dexp),
        Family::Jacobian(EvalMap::DexpInv),
        Family::Jacobian(EvalMap::DexpT),
        Family::SecondDerivative(Variant::Dexp),
        Family::SecondDerivative(Variant::DexpInv),
        Family::Hessian(Variant::Dexp),
        Family::Hessian(Variant::DexpInv),
    ];

    pub fn name(&self) -> String {
        match self {
            Family::Tangent(v) => v.name().to_string(),
            Family::Derivative(v) => format!("d{}", v.name()),
            Family::Jacobian(m) => format!("jac_{}", m.name()),
            Family::SecondDerivative(v) => format!("d2{}", v.name()),
            Family::Hessian(v) => format!("hess_{}", v.name()),
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Jacobians use Z = U; Hessians use Q = S and Z = U.
    pub fn target(&self, v: &TestVectors) -> Target {
        match *self {
            Family::Tangent(variant) => Target::Tangent(variant),
            Family::Derivative(variant) => Target::Derivative { variant, u: v.u },
            Family::Jacobian(map) => Target::Jacobian { map, z: v.u },
            Family::SecondDerivative(variant) => Target::SecondDerivative {
                variant,
                u: v.u,
                s: v.s,
            },
            Family::Hessian(variant) => Target::Hessian {
                variant,
                q: *v.s.vector(),
                z: v.u,
            },
        }
    }

    /// Orders reported in the sweeps. Beyond order 3 the tangent series is
    /// not part of the study.
    pub fn orders(&self) -> Vec<usize> {
        let t = self.target(&TestVectors::default());
        t.supported_orders()
            .iter()
            .copied()
            .filter(|k| *k <= 3)
            .collect()
    }

    /// Orders that give distinct truncations; for the inverse family the
    /// vanishing odd Bernoulli numbers make some orders coincide.
    pub fn distinct_orders(&self) -> Vec<usize> {
        match self {
            Family::Tangent(Variant::DexpInv) => vec![0, 1, 2],
            Family::Derivative(Variant::DexpInv) | Family::Jacobian(EvalMap::DexpInv) => {
                vec![0, 1, 3]
            }
            _ => self.orders(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SweepTarget {
    pub family: Family,
    pub order: usize,
}

impl SweepTarget {
    pub fn name(&self) -> String {
        format!("{}_k{}", self.family.name(), self.order)
    }

    /// Parses `family:k`, e.g. `ddexpinv:3`.
    pub fn parse(s: &str) -> Result<Self> {
        let (f, k) = s.split_once(':').ok_or_else(|| {
            Error::InvalidArgument(format!("target `{s}` is not of the form family:k"))
        })?;
        let family = Family::parse(f.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown target family `{f}`")))?;
        let order: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("order `{k}` is not an integer")))?;
        if !family
            .target(&TestVectors::default())
            .supported_orders()
            .contains(&order)
        {
            return Err(Error::UnsupportedOrder {
                target: "sweep target",
                order,
            });
        }
        Ok(Self { family, order })
    }
}

pub fn default_targets() -> Vec<SweepTarget> {
    Family::ALL
        .iter()
        .flat_map(|f| {
            f.orders()
                .into_iter()
                .map(move |order| SweepTarget { family: *f, order })
        })
        .collect()
}

/// Spectral norm.
pub fn l2_norm(m: &Mat6) -> f64 {
    m.singular_values().max()
}

/// ‖approximation − closed form‖₂ at X(s).
pub fn approximation_error(v: &TestVectors, t: &SweepTarget, s: f64) -> Result<f64> {
    let x = v.ray(s);
    let target = t.family.target(v);
    Ok(l2_norm(&(target.approx(&x, t.order)? - target.exact(&x)?)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub s_min: f64,
    pub s_max: f64,
    pub samples: usize,
    pub log: bool,
    pub targets: Vec<SweepTarget>,
}

impl SweepSpec {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail
    pub fn validate(&self) -> Result<()> {
        if !(self.s_min < self.s_max) || self.samples < 2 || self.targets.is_empty() {
            return Err(Error::InvalidArgument(
                "sweep needs s_min < s_max, samples >= 2 and a target".into(),
            ));
        }
        if self.log && self.s_min <= 0.0 {
            return Err(Error::InvalidArgument("log spacing needs s_min > 0".into()));
        }
        if self.s_min < 0.0 {
            return Err(Error::InvalidArgument("s must be non-negative".into()));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.samples - 1;
        (0..=n)
            .map(|i| {
                let f = i as f64 / n as f64;
                if self.log {
                    (self.s_min.ln() + f * (self.s_max.ln() - self.s_min.ln())).exp()
                } else {
                    self.s_min + f * (self.s_max - self.s_min)
                }
            })
            .collect()
    }
}

pub struct SweepTable {
    pub s: Vec<f64>,
    pub targets: Vec<SweepTarget>,
    /// rows[i][j]: error of target j at s[i]
    pub rows: Vec<Vec<f64>>,
}

pub fn run_sweep(spec: &SweepSpec, v: &TestVectors) -> Result<SweepTable> {
    spec.validate()?;
    let s = spec.points();
    let rows: Result<Vec<Vec<f64>>> = crate::par::map(s.len(), |i| {
        spec.targets
            .iter()
            .map(|t| approximation_error(v, t, s[i]))
            .collect()
    })
    .into_iter()
    .collect();
    Ok(SweepTable {
        s,
        targets: spec.targets.clone(),
        rows: rows?,
    })
}

/// Least-squares slope of log(err) against log(s), using only points whose
/// error is above `floor` (round-off hides the truncation error below it).
/// None if fewer than three points qualify.
pub fn loglog_slope(s: &[f64], err: &[f64], floor: f64) -> Option<f64> {
    let pts: Vec<(f64, f64)> = s
        .iter()
        .zip(err)
        .filter(|(si, e)| **si > 0.0 && **e > floor && e.is_finite())
        .map(|(si, e)| (si.ln(), e.ln()))
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as f64;
    let (mx, my) = pts
        .iter()
        .fold((0.0, 0.0), |a, p| (a.0 + p.0 / n, a.1 + p.1 / n));
    let (sxy, sxx) = pts.iter().fold((0.0, 0.0), |a, p| {
        (a.0 + (p.0 - mx) * (p.1 - my), a.1 + (p.0 - mx).powi(2))
    });
    Some(sxy / sxx)
}

/// Error level treated as round-off for a target on the test ray.
pub fn noise_floor(v: &TestVectors, family: Family) -> Result<f64> {
    let scale = l2_norm(&family.target(v).exact(&v.ray(1e-3))?);
    Ok(1e-13 * scale.max(1.0))
}

// ---------------------------------------------------------------------------
// Rod experiments

/// Arc length on either side of 0.5 at which ‖x(τ)‖ = ε.
pub fn switch_boundaries(epsilon: f64) -> (f64, f64) {
    let norm = |t: f64| rod::displacement_unchecked(t).0.norm();
    let solve = |mut inside: f64, mut outside: f64| {
        for _ in 0..200 {
            let mid = 0.5 * (inside + outside);
            if norm(mid) <= epsilon {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        0.5 * (inside + outside)
    };
    (solve(0.5, 0.4), solve(0.5, 0.6))
}

/// Discontinuity measures of a quantity sampled across the switch band.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Continuity {
    /// Largest change between evaluations just inside and just outside the
    /// switch boundary.
    pub boundary_jump: f64,
    /// Largest second difference on a uniform grid through the band; a jump
    /// shows up here at full size, smooth variation does not.
    pub max_second_difference: f64,
}

impl Continuity {
    pub fn worst(&self) -> f64 {
        self.boundary_jump.max(self.max_second_difference)
    }
}

/// Largest acceptable jump of the potential gradient or Hessian norm across
/// the switch band.
pub const POTENTIAL_CONTINUITY_TOL: f64 = 1e-8;

const BOUNDARY_OFFSET: f64 = 1e-12;
const BAND_SAMPLES: usize = 101;

fn continuity_of(
    f: impl Fn(f64) -> Result<Vec<f64>> + Sync + Send,
    epsilon: f64,
) -> Result<Continuity> {
    let dist = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    };
    let (lo, hi) = switch_boundaries(epsilon);
    let mut jump: f64 = 0.0;
    for tb in [lo, hi] {
        let a = f(tb - BOUNDARY_OFFSET)?;
        let b = f(tb + BOUNDARY_OFFSET)?;
        jump = jump.max(dist(&a, &b));
    }
    let half = 2.0 * (0.5 - lo);
    let grid: Vec<f64> = (0..BAND_SAMPLES)
        .map(|i| 0.5 - half + 2.0 * half * i as f64 / (BAND_SAMPLES - 1) as f64)
        .collect();
    let vals: Result<Vec<Vec<f64>>> = crate::par::map(grid.len(), |i| f(grid[i]))
        .into_iter()
        .collect();
    let vals = vals?;
    let mut second: f64 = 0.0;
    for w in vals.windows(3) {
        let d: Vec<f64> = (0..w[0].len())
            .map(|k| w[0][k] - 2.0 * w[1][k] + w[2][k])
            .collect();
        second = second.max(d.iter().map(|v| v.abs()).fold(0.0, f64::max));
    }
    if vals.iter().flatten().any(|v| !v.is_finite()) {
        second = f64::INFINITY;
    }
    Ok(Continuity {
        boundary_jump: jump,
        max_second_difference: second,
    })
}

/// Continuity of χ′ across the switch band around τ = 0.5.
pub fn chi_prime_continuity(
    rod: &ReferenceRod,
    ev: &Evaluator,
    epsilon: f64,
) -> Result<Continuity> {
    continuity_of(
        |t| {
            let r = rod.sample(t)?;
            let (cp, _) = rod::deformation_rates_with(&r.x, &r.xp, &r.xpp, &r.xppp, ev)?;
            Ok(cp.vector().as_slice().to_vec())
        },
        epsilon,
    )
}

/// Continuity of the potential gradient and of ‖Hessian‖₂ across the band.
pub fn potential_continuity(
    rod: &ReferenceRod,
    ev: &Evaluator,
    epsilon: f64,
    k: &Mat6,
    chi0: &Screw,
) -> Result<(Continuity, Continuity)> {
    let grad = continuity_of(
        |t| {
            let r = rod.sample(t)?;
            Ok(rod::potential_gradient_with(&r.x, &r.xp, chi0, k, ev)?
                .as_slice()
                .to_vec())
        },
        epsilon,
    )?;
    let hess = continuity_of(
        |t| {
            let r = rod.sample(t)?;
            Ok(vec![l2_norm(&rod::potential_hessian_with(
                &r.x, &r.xp, chi0, k, ev,
            )?)])
        },
        epsilon,
    )?;
    Ok((grad, hess))
}

/// One row of the rod output: a τ sample evaluated literally and robustly.
#[derive(Clone, Debug)]
pub struct RodRow {
    pub tau: f64,
    pub sample: ReferenceSample,
    pub chi_literal: Vec6,
    pub chi_robust: Vec6,
    pub chi_p_literal: Vec6,
    pub chi_p_robust: Vec6,
    pub chi_pp_literal: Vec6,
    pub chi_pp_robust: Vec6,
    pub grad_literal: Vec6,
    pub grad_robust: Vec6,
    pub hess_norm_literal: f64,
    pub hess_norm_robust: f64,
}

pub fn rod_rows(
    rod: &ReferenceRod,
    grid: &[f64],
    policy: &SwitchPolicy,
    k: &Mat6,
    chi0: &Screw,
) -> Result<Vec<RodRow>> {
    let samples = rod::build_reference_with(rod, grid)?;
    let robust = Evaluator::Switched(*policy);
    crate::par::map(samples.len(), |i| {
        let r = samples[i];
        let one = |ev: &Evaluator| -> Result<(Vec6, Vec6, Vec6, Vec6, f64)> {
            let chi = rod::deformation_with(&r.x, &r.xp, ev)?;
            let (cp, cpp) = rod::deformation_rates_with(&r.x, &r.xp, &r.xpp, &r.xppp, ev)?;
            let g = rod::potential_gradient_with(&r.x, &r.xp, chi0, k, ev)?;
            let h = rod::potential_hessian_with(&r.x, &r.xp, chi0, k, ev)?;
            let hn = if h.iter().all(|v| v.is_finite()) {
                l2_norm(&h)
            } else {
                f64::NAN
            };
            Ok((*chi.vector(), *cp.vector(), *cpp.vector(), g, hn))
        };
        let lit = one(&Evaluator::Literal)?;
        let rob = one(&robust)?;
        Ok(RodRow {
            tau: r.tau,
            sample: r,
            chi_literal: lit.0,
            chi_robust: rob.0,
            chi_p_literal: lit.1,
            chi_p_robust: rob.1,
            chi_pp_literal: lit.2,
            chi_pp_robust: rob.2,
            grad_literal: lit.3,
            grad_robust: rob.3,
            hess_norm_literal: lit.4,
            hess_norm_robust: rob.4,
        })
    })
    .into_iter()
    .collect()
}

/// ‖χ′_exact − χ′_switched‖ at one sample for threshold ε and order k.
pub fn switching_error(r: &ReferenceSample, epsilon: f64, order: usize) -> Result<f64> {
    let policy = SwitchPolicy::new(epsilon, Some(order))?;
    let (exact, _) = rod::deformation_rates_with(&r.x, &r.xp, &r.xpp, &r.xppp, &Evaluator::Exact)?;
    let (sw, _) =
        rod::deformation_rates_with(&r.x, &r.xp, &r.xpp, &r.xppp, &Evaluator::Switched(policy))?;
    Ok((exact - sw).vector().norm())
}

pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
