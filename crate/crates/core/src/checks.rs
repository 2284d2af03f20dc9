//! Oracle suites comparing the closed forms against independent routes:
//! truncated series, the block-partitioned forms, finite differences and
//! the limits at x = 0.

use crate::algebra::{ad, Mat6, Screw, Vec6};
use crate::block::{ddexp_block, dexp_block, exp_block};
use crate::derivatives::{d2dexp_with, ddexp_with};
use crate::error::Result;
use crate::exp_dexp::{
    dexp_with, exp_se3, series_oracle, series_oracle_derivative, MAX_SERIES_ORDER,
};
use crate::fd::{fd_directional, fd_hessian, fd_jacobian, fd_second, FdScheme};
use crate::jacobians::{hessian_eval_with, hessian_parts_with, jac_eval_with, EvalMap};
use crate::kernels::{exact_series, Coefficient, TangentCoeffs};
use crate::sampling::{ScrewSampler, DEFAULT_SEED};
use crate::Variant;

/// Truncation degree of the series oracle for dexp. The dexp⁻¹ series
/// converges only for φ < 2π and needs more terms at φ = 3.
pub const SERIES_DEGREE_DEXP: usize = 30;
pub const SERIES_DEGREE_DEXPINV: usize = MAX_SERIES_ORDER;

pub const TOL_SERIES: f64 = 1e-12;
pub const TOL_BLOCK: f64 = 1e-11;
pub const TOL_EXP_BLOCK: f64 = 1e-13;
pub const TOL_FD_FIRST: f64 = 1e-7;
pub const TOL_FD_SECOND: f64 = 1e-5;
pub const TOL_INVERSE: f64 = 1e-12;
pub const TOL_INVERSE_DERIVATIVE: f64 = 1e-11;
pub const TOL_HESSIAN_SYMMETRY: f64 = 1e-12;
pub const TOL_D2_SYMMETRY: f64 = 1e-13;
pub const TOL_LIMITS: f64 = 1e-15;

/// Inputs and an optional deliberate corruption of the closed forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckConfig {
    pub samples: usize,
    pub seed: u64,
    pub min_angle: f64,
    pub max_angle: f64,
    /// Added to the coefficient a₂ of dexp in every closed-form evaluation.
    /// Nonzero only to show that the suites notice.
    pub a2_shift: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            samples: 200,
            seed: DEFAULT_SEED,
            min_angle: 1e-3,
            max_angle: 3.0,
            a2_shift: 0.0,
        }
    }
}

impl CheckConfig {
    fn coeffs(&self, x: &Screw, variant: Variant) -> Result<TangentCoeffs> {
        let mut c = TangentCoeffs::at(x.checked_angle()?, variant)?;
        if variant == Variant::Dexp {
            c.w[2] += self.a2_shift;
        }
        Ok(c)
    }

    fn dexp(&self, x: &Screw, variant: Variant) -> Result<Mat6> {
        Ok(dexp_with(x, &self.coeffs(x, variant)?))
    }

    fn ddexp(&self, x: &Screw, u: &Screw, variant: Variant) -> Result<Mat6> {
        Ok(ddexp_with(x, u, &self.coeffs(x, variant)?))
    }

    fn d2dexp(&self, x: &Screw, u: &Screw, s: &Screw, variant: Variant) -> Result<Mat6> {
        Ok(d2dexp_with(x, u, s, &self.coeffs(x, variant)?))
    }

    fn jac(&self, x: &Screw, z: &Screw, map: EvalMap) -> Result<Mat6> {
        Ok(jac_eval_with(x, z, map, &self.coeffs(x, map.variant())?))
    }

    fn hessian(&self, x: &Screw, q: &Vec6, z: &Screw, variant: Variant) -> Result<Mat6> {
        Ok(hessian_eval_with(x, q, z, &self.coeffs(x, variant)?))
    }
}

#[derive(Clone, Copy, Debug)]
struct Input {
    x: Screw,
    u: Screw,
    s: Screw,
    q: Vec6,
}

fn inputs(cfg: &CheckConfig) -> Vec<Input> {
    let mut rng = ScrewSampler::new(cfg.seed);
    (0..cfg.samples)
        .map(|_| Input {
            x: rng.screw(cfg.min_angle, cfg.max_angle),
            u: rng.direction(),
            s: rng.direction(),
            q: rng.vec6(),
        })
        .collect()
}

/// One named comparison within a suite.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRow {
    pub suite: &'static str,
    pub check: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub rows: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(|r| r.max_deviation).fold(0.0, nan_max)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(CheckRow::passed)
    }
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn dev(a: &Mat6, b: &Mat6) -> f64 {
    let d = a - b;
    if d.iter().any(|v| !v.is_finite()) {
        return f64::NAN;
    }
    d.amax()
}

/// Runs `f` on every input in parallel and keeps the elementwise maximum of
/// the returned deviations.
fn sweep<const N: usize>(
    inputs: &[Input],
    f: impl Fn(&Input) -> Result<[f64; N]> + Sync,
) -> Result<[f64; N]> {
    let per: Result<Vec<[f64; N]>> = crate::par::map(inputs.len(), |i| f(&inputs[i]))
        .into_iter()
        .collect();
    Ok(per?.into_iter().fold([0.0; N], |mut acc, d| {
        for (a, v) in acc.iter_mut().zip(d) {
            *a = nan_max(*a, v);
        }
        acc
    }))
}

fn rows<const N: usize>(
    suite: &'static str,
    names: [(&'static str, f64); N],
    devs: [f64; N],
) -> SuiteReport {
    SuiteReport {
        name: suite,
        rows: names
            .iter()
            .zip(devs)
            .map(|((check, tolerance), max_deviation)| CheckRow {
                suite,
                check,
                max_deviation,
                tolerance: *tolerance,
            })
            .collect(),
    }
}

pub fn series_suite(cfg: &CheckConfig) -> Result<SuiteReport> {
    let devs = sweep(&inputs(cfg), |p| {
        Ok([
            dev(
                &cfg.dexp(&p.x, Variant::Dexp)?,
                &series_oracle(&p.x, Variant::Dexp, SERIES_DEGREE_DEXP)?,
            ),
            dev(
                &cfg.dexp(&p.x, Variant::DexpInv)?,
                &series_oracle(&p.x, Variant::DexpInv, SERIES_DEGREE_DEXPINV)?,
            ),
            dev(
                &cfg.ddexp(&p.x, &p.u, Variant::Dexp)?,
                &series_oracle_derivative(&p.x, &p.u, Variant::Dexp, SERIES_DEGREE_DEXP)?,
            ),
            dev(
                &cfg.ddexp(&p.x, &p.u, Variant::DexpInv)?,
                &series_oracle_derivative(&p.x, &p.u, Variant::DexpInv, SERIES_DEGREE_DEXPINV)?,
            ),
        ])
    })?;
    Ok(rows(
        "series",
        [
            ("dexp", TOL_SERIES),
            ("dexpinv", TOL_SERIES),
            ("ddexp", TOL_SERIES),
            ("ddexpinv", TOL_SERIES),
        ],
        devs,
    ))
}

pub fn block_suite(cfg: &CheckConfig) -> Result<SuiteReport> {
    let devs = sweep(&inputs(cfg), |p| {
        let e = exp_se3(&p.x)?.max_deviation(&exp_block(&p.x)?);
        Ok([
            e,
            dev(
                &cfg.dexp(&p.x, Variant::Dexp)?,
                &dexp_block(&p.x, Variant::Dexp)?.assemble(),
            ),
            dev(
                &cfg.dexp(&p.x, Variant::DexpInv)?,
                &dexp_block(&p.x, Variant::DexpInv)?.assemble(),
            ),
            dev(
                &cfg.ddexp(&p.x, &p.u, Variant::Dexp)?,
                &ddexp_block(&p.x, &p.u, Variant::Dexp)?.assemble(),
            ),
            dev(
                &cfg.ddexp(&p.x, &p.u, Variant::DexpInv)?,
                &ddexp_block(&p.x, &p.u, Variant::DexpInv)?.assemble(),
            ),
        ])
    })?;
    Ok(rows(
        "block",
        [
            ("exp", TOL_EXP_BLOCK),
            ("dexp", TOL_BLOCK),
            ("dexpinv", TOL_BLOCK),
            ("ddexp", TOL_BLOCK),
            ("ddexpinv", TOL_BLOCK),
        ],
        devs,
    ))
}

pub fn fd_suite(cfg: &CheckConfig) -> Result<SuiteReport> {
    let devs = sweep(&inputs(cfg), |p| {
        let (x, u, s, q) = (&p.x, &p.u, &p.s, &p.q);
        let z = s;
        let first = FdScheme::first(x);
        let second = FdScheme::second();
        let nan = Mat6::from_element(f64::NAN);
        // ddexp, ddexpinv, jacobians, d2dexp, d2dexpinv, hessian_dexp, hessian_dexpinv
        let mut out = [0.0; 7];
        for (k, v) in [Variant::Dexp, Variant::DexpInv].into_iter().enumerate() {
            let m = |y: &Screw| cfg.dexp(y, v).unwrap_or(nan);
            out[k] = dev(&cfg.ddexp(x, u, v)?, &fd_directional(m, x, u, first));
            out[3 + k] = dev(&cfg.d2dexp(x, u, s, v)?, &fd_second(m, x, u, s, second));
            let h = |y: &Screw| q.dot(&(m(y) * z.vector()));
            out[5 + k] = dev(&cfg.hessian(x, q, z, v)?, &fd_hessian(h, x, second));
        }
        let f = |y: &Screw| cfg.dexp(y, Variant::Dexp).unwrap_or(nan);
        let finv = |y: &Screw| cfg.dexp(y, Variant::DexpInv).unwrap_or(nan);
        let jac = [
            (EvalMap::Dexp, fd_jacobian(|y| f(y) * z.vector(), x, first)),
            (
                EvalMap::DexpInv,
                fd_jacobian(|y| finv(y) * z.vector(), x, first),
            ),
            (
                EvalMap::DexpT,
                fd_jacobian(|y| f(y).transpose() * z.vector(), x, first),
            ),
        ];
        for (map, fdm) in &jac {
            out[2] = nan_max(out[2], dev(&cfg.jac(x, z, *map)?, fdm));
        }
        Ok(out)
    })?;
    Ok(rows(
        "fd",
        [
            ("ddexp", TOL_FD_FIRST),
            ("ddexpinv", TOL_FD_FIRST),
            ("jacobians", TOL_FD_FIRST),
            ("d2dexp", TOL_FD_SECOND),
            ("d2dexpinv", TOL_FD_SECOND),
            ("hessian_dexp", TOL_FD_SECOND),
            ("hessian_dexpinv", TOL_FD_SECOND),
        ],
        devs,
    ))
}

/// Inverse pair, derivative of the identity dexp·dexp⁻¹ = I, and symmetries.
pub fn inverse_suite(cfg: &CheckConfig) -> Result<SuiteReport> {
    let devs = sweep(&inputs(cfg), |p| {
        let (x, u, s, q) = (&p.x, &p.u, &p.s, &p.q);
        let (a, b) = (cfg.dexp(x, Variant::Dexp)?, cfg.dexp(x, Variant::DexpInv)?);
        let inv = dev(&(a * b), &Mat6::identity());
        let d = cfg.ddexp(x, u, Variant::Dexp)? * b + a * cfg.ddexp(x, u, Variant::DexpInv)?;
        let dinv = dev(&d, &Mat6::zeros());
        let mut hs: f64 = 0.0;
        let mut d2s: f64 = 0.0;
        for v in [Variant::Dexp, Variant::DexpInv] {
            let h = hessian_parts_with(x, q, s, &cfg.coeffs(x, v)?).total();
            hs = nan_max(hs, dev(&h, &h.transpose()));
            d2s = nan_max(d2s, dev(&cfg.d2dexp(x, u, s, v)?, &cfg.d2dexp(x, s, u, v)?));
        }
        Ok([inv, dinv, hs, d2s])
    })?;
    Ok(rows(
        "inverse",
        [
            ("dexp_dexpinv", TOL_INVERSE),
            ("derivative_of_identity", TOL_INVERSE_DERIVATIVE),
            ("hessian_symmetry", TOL_HESSIAN_SYMMETRY),
            ("d2dexp_symmetry", TOL_D2_SYMMETRY),
        ],
        devs,
    ))
}

/// Values at x = 0: every coefficient against its exact series constant,
/// and the tangent quantities against their limits in terms of ad.
pub fn limits_suite(cfg: &CheckConfig) -> Result<SuiteReport> {
    let series = exact_series();
    let kernels = Coefficient::ALL
        .iter()
        .map(|c| {
            let s = series(*c);
            let exact = crate::series::factorial_ratio(s.coeff(0), 0);
            (c.eval(0.0) - exact).abs()
        })
        .fold(0.0, nan_max);
    let u = Screw::from_array([0.1, 1.0, -1.0, 0.9, 0.5, 0.3]);
    let s = Screw::from_array([1.7, -2.9, -9.2, 7.6, 6.7, 2.4]);
    let zero = Screw::zero();
    let (au, as_) = (ad(&u), ad(&s));
    let mut tangent: f64 = 0.0;
    for (v, sign, second) in [
        (Variant::Dexp, 0.5, 1.0 / 6.0),
        (Variant::DexpInv, -0.5, 1.0 / 12.0),
    ] {
        tangent = nan_max(tangent, dev(&cfg.dexp(&zero, v)?, &Mat6::identity()));
        tangent = nan_max(tangent, dev(&cfg.ddexp(&zero, &u, v)?, &(au * sign)));
        tangent = nan_max(
            tangent,
            dev(
                &cfg.d2dexp(&zero, &u, &s, v)?,
                &((au * as_ + as_ * au) * second),
            ),
        );
    }
    Ok(rows(
        "limits",
        [("kernels", TOL_LIMITS), ("tangent", TOL_LIMITS)],
        [kernels, tangent],
    ))
}

pub fn run_all(cfg: &CheckConfig) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        series_suite(cfg)?,
        block_suite(cfg)?,
        fd_suite(cfg)?,
        inverse_suite(cfg)?,
        limits_suite(cfg)?,
    ])
}
