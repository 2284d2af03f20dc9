//! Scalar coefficient families of the closed forms.
//!
//! Every coefficient is a function of t = φ². Below [`SERIES_RADIUS`] it is
//! evaluated from its exact Taylor expansion (rational coefficients rounded
//! once and frozen in `kernel_table.rs`), above from the closed form. The closed forms with
//! 1/φ⁶ and 1/φ⁸ factors lose all digits long before φ = 1e-2, so the switch
//! sits far out where both representations agree to rounding.

use num::{BigInt, BigRational};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::series::{horner, RationalSeries};
use crate::Variant;

/// Angle below which the Taylor expansions are used.
pub const SERIES_RADIUS: f64 = 3.5;

const GENERATED_TERMS: usize = 64;
const EVALUATED_TERMS: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Delta,
    A1,
    A2,
    A3,
    A4,
    B2,
    B4,
    ABar1,
    ABar2,
    ABar3,
    ABar4,
    BBar2,
    BBar4,
    ABreve1,
    ABreve2,
    ABreve3,
    ABreve4,
    BBreve2,
    BBreve4,
    /// (1 − γ)/φ², the ñ²-free coefficient of dexpinv on SO(3).
    So3Inv,
    /// 2 d/dt of `So3Inv`.
    So3InvBar,
    /// (α − β)/φ²
    PitchRot,
    /// (β/2 − 3δ)/φ²
    PitchRotSq,
    PitchRotBar,
    PitchRotSqBar,
    /// (1/β + γ − 2)/φ⁴
    InvPitch,
    InvPitchBar,
}

impl Coefficient {
    pub const ALL: [Coefficient; 27] = [
        Self::Delta,
        Self::A1,
        Self::A2,
        Self::A3,
        Self::A4,
        Self::B2,
        Self::B4,
        Self::ABar1,
        Self::ABar2,
        Self::ABar3,
        Self::ABar4,
        Self::BBar2,
        Self::BBar4,
        Self::ABreve1,
        Self::ABreve2,
        Self::ABreve3,
        Self::ABreve4,
        Self::BBreve2,
        Self::BBreve4,
        Self::So3Inv,
        Self::So3InvBar,
        Self::PitchRot,
        Self::PitchRotSq,
        Self::PitchRotBar,
        Self::PitchRotSqBar,
        Self::InvPitch,
        Self::InvPitchBar,
    ];

    fn index(self) -> usize {
        Self::ALL.iter().position(|c| *c == self).expect("listed")
    }

    /// Robust evaluation; `phi` must already be validated.
    pub fn eval(self, phi: f64) -> f64 {
        if phi <= SERIES_RADIUS {
            self.eval_series(phi)
        } else {
            self.eval_closed(phi)
        }
    }

    pub fn eval_series(self, phi: f64) -> f64 {
        horner(&table()[self.index()], phi * phi)
    }

    /// The closed form, literally. Undefined (NaN or garbage) near φ = 0.
    pub fn eval_closed(self, phi: f64) -> f64 {
        let b = Trig::new(phi);
        let (al, be, ga, de, t) = (b.alpha, b.beta, b.gamma, b.delta, b.t);
        let t2 = t * t;
        let t3 = t2 * t;
        let t4 = t3 * t;
        match self {
            Self::Delta => de,
            Self::A1 => be - al / 2.0,
            Self::A2 => 0.5 * (5.0 * de - be / 2.0),
            Self::A3 => (be - al) / (2.0 * t),
            Self::A4 => (3.0 * de - be / 2.0) / (2.0 * t),
            Self::B2 => (2.0 - (1.0 + 3.0 * al) / (2.0 * be)) / t,
            Self::B4 => (1.0 - (1.0 + al) / (2.0 * be)) / t2,
            Self::ABar1 => be / 4.0 + (2.5 * al - 2.0 * be - 0.5) / t,
            Self::ABar2 => (1.75 * be - al / 2.0) / t + 7.5 * (al - 1.0) / t2,
            Self::ABar3 => Self::ABar1.eval_closed(phi) / t,
            Self::ABar4 => Self::ABar2.eval_closed(phi) / t,
            Self::BBar2 => {
                (0.75 - 1.5 * de / be) / t + ((al + 3.0 * al * al) / (be * be) - 4.0) / t2
            }
            Self::BBar4 => {
                (0.25 - de / (2.0 * be)) / t2
                    + ((1.0 + al) * (al / (be * be) + 1.0 / be) - 4.0) / t3
            }
            Self::ABreve1 => (al / 2.0 - 1.75 * be) / t + (3.5 - 11.5 * al + 8.0 * be) / t2,
            Self::ABreve2 => {
                be / (4.0 * t) + (5.0 * al - 10.75 * be - 0.5) / t2 + 37.5 * (1.0 - al) / t3
            }
            Self::ABreve3 => (al / 2.0 - 2.25 * be) / t2 + (4.5 - 16.5 * al + 12.0 * be) / t3,
            Self::ABreve4 => {
                be / (4.0 * t2) + (6.0 * al - 0.5 - 14.25 * be) / t3 + 52.5 * (1.0 - al) / t4
            }
            Self::BBreve2 => {
                (16.0 + 1.0 / (be * be) + (8.0 / be - 4.5) * ga
                    - (9.0 + 4.0 / be) * ga * ga
                    - 12.0 * ga * ga * ga
                    + 4.5 / be)
                    / t3
                    - (2.25 + 3.0 * ga + 0.5 / be) / t2
            }
            Self::BBreve4 => {
                (24.0
                    - 2.0 / be
                    - (7.5 + 4.0 / be) * ga
                    - (5.5 + 3.0 / be) * ga * ga
                    - 2.0 * ga * ga * ga)
                    / t4
                    - (1.375 + 0.25 / be + ga / 2.0) / t3
            }
            Self::So3Inv => (1.0 - ga) / t,
            Self::So3InvBar => 0.25 / t - (1.0 - ga) * (2.0 + ga) / t2,
            Self::PitchRot => (al - be) / t,
            Self::PitchRotSq => (be / 2.0 - 3.0 * de) / t,
            Self::PitchRotBar => (1.0 - 5.0 * al + 4.0 * be) / t2 - be / (2.0 * t),
            Self::PitchRotSqBar => (al - 3.5 * be + 15.0 * de) / t2,
            Self::InvPitch => (1.0 / be + ga - 2.0) / t2,
            Self::InvPitchBar => {
                -0.25 / t2 + (8.0 - 3.0 * ga - ga * ga - 2.0 * (al + be) / (be * be)) / t3
            }
        }
    }
}

struct Trig {
    t: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
}

impl Trig {
    fn new(phi: f64) -> Self {
        let alpha = phi.sin() / phi;
        let h = half_sinc(phi);
        let beta = h * h;
        let t = phi * phi;
        Self {
            t,
            alpha,
            beta,
            gamma: alpha / beta,
            delta: (1.0 - alpha) / t,
        }
    }
}

/// sinc(φ/2)
fn half_sinc(phi: f64) -> f64 {
    (phi / 2.0).sin() / (phi / 2.0)
}

fn table() -> &'static [[f64; EVALUATED_TERMS]; 27] {
    &kernel_table::TAYLOR
}

#[rustfmt::skip]
mod kernel_table;

/// Exact Taylor expansions in t = φ² of every coefficient.
pub fn exact_series() -> impl Fn(Coefficient) -> RationalSeries {
    let n = GENERATED_TERMS;
    let one = || BigRational::from_integer(BigInt::from(1));
    let int = |k: i64| BigRational::from_integer(BigInt::from(k));
    let al = RationalSeries::sinc(n);
    let be = RationalSeries::half_sinc_sq(n);
    let de = RationalSeries::one_minus_sinc_over_sq(n);
    let inv_be = be.recip();
    let ga = al.mul(&inv_be);

    let a1 = be.sub(&al.scale_ratio(1, 2));
    let a2 = de.scale_ratio(5, 2).sub(&be.scale_ratio(1, 4));
    let a3 = be.sub(&al).shift_down(1).scale_ratio(1, 2);
    let a4 = de
        .scale_int(3)
        .sub(&be.scale_ratio(1, 2))
        .shift_down(1)
        .scale_ratio(1, 2);
    // (2 − (1+3α)/(2β))/t and (1 − (1+α)/(2β))/t²
    let b2 = al
        .scale_int(3)
        .add_const(one())
        .mul(&inv_be)
        .scale_ratio(-1, 2)
        .add_const(int(2))
        .shift_down(1);
    let b4 = al
        .add_const(one())
        .mul(&inv_be)
        .scale_ratio(-1, 2)
        .add_const(one())
        .shift_down(2);
    let so3_inv = ga.scale_int(-1).add_const(one()).shift_down(1);
    let pitch_rot = al.sub(&be).shift_down(1);
    let pitch_rot_sq = be.scale_ratio(1, 2).sub(&de.scale_int(3)).shift_down(1);
    let inv_pitch = inv_be.add(&ga).add_const(int(-2)).shift_down(2);

    move |c: Coefficient| -> RationalSeries {
        let d = |s: &RationalSeries| s.derivative_multiplier();
        match c {
            Coefficient::Delta => de.clone(),
            Coefficient::A1 => a1.clone(),
            Coefficient::A2 => a2.clone(),
            Coefficient::A3 => a3.clone(),
            Coefficient::A4 => a4.clone(),
            Coefficient::B2 => b2.clone(),
            Coefficient::B4 => b4.clone(),
            Coefficient::ABar1 => d(&a1),
            Coefficient::ABar2 => d(&a2),
            Coefficient::ABar3 => d(&a3),
            Coefficient::ABar4 => d(&a4),
            Coefficient::BBar2 => d(&b2),
            Coefficient::BBar4 => d(&b4),
            Coefficient::ABreve1 => d(&d(&a1)),
            Coefficient::ABreve2 => d(&d(&a2)),
            Coefficient::ABreve3 => d(&d(&a3)),
            Coefficient::ABreve4 => d(&d(&a4)),
            Coefficient::BBreve2 => d(&d(&b2)),
            Coefficient::BBreve4 => d(&d(&b4)),
            Coefficient::So3Inv => so3_inv.clone(),
            Coefficient::So3InvBar => d(&so3_inv),
            Coefficient::PitchRot => pitch_rot.clone(),
            Coefficient::PitchRotSq => pitch_rot_sq.clone(),
            Coefficient::PitchRotBar => d(&pitch_rot),
            Coefficient::PitchRotSqBar => d(&pitch_rot_sq),
            Coefficient::InvPitch => inv_pitch.clone(),
            Coefficient::InvPitchBar => d(&inv_pitch),
        }
    }
}

/// Rejects angles outside [0, 2π) and non-finite input.
pub fn check_angle(phi: f64) -> Result<()> {
    if !phi.is_finite() {
        return Err(Error::InvalidArgument(format!("angle {phi} is not finite")));
    }
    if !(0.0..TAU).contains(&phi) {
        return Err(Error::OutOfDomain { angle: phi });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BaseCoeffs {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

pub fn base_coeffs(phi: f64) -> Result<BaseCoeffs> {
    check_angle(phi)?;
    Ok(base_coeffs_unchecked(phi))
}

pub(crate) fn base_coeffs_unchecked(phi: f64) -> BaseCoeffs {
    let (alpha, beta) = if phi == 0.0 {
        (1.0, 1.0)
    } else {
        let h = half_sinc(phi);
        (phi.sin() / phi, h * h)
    };
    BaseCoeffs {
        alpha,
        beta,
        gamma: alpha / beta,
        delta: Coefficient::Delta.eval(phi),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DexpCoeffs {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub b1: f64,
    pub b2: f64,
    pub b4: f64,
}

pub fn dexp_coeffs(phi: f64) -> Result<DexpCoeffs> {
    check_angle(phi)?;
    Ok(dexp_coeffs_with(phi, Coefficient::eval))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DexpCoeffDerivs {
    pub abar1: f64,
    pub abar2: f64,
    pub abar3: f64,
    pub abar4: f64,
    pub bbar2: f64,
    pub bbar4: f64,
    pub abreve1: f64,
    pub abreve2: f64,
    pub abreve3: f64,
    pub abreve4: f64,
    pub bbreve2: f64,
    pub bbreve4: f64,
}

pub fn dexp_coeff_derivs(phi: f64) -> Result<DexpCoeffDerivs> {
    check_angle(phi)?;
    Ok(dexp_coeff_derivs_with(phi, Coefficient::eval))
}

fn dexp_coeffs_with(phi: f64, f: fn(Coefficient, f64) -> f64) -> DexpCoeffs {
    use Coefficient as C;
    DexpCoeffs {
        a1: f(C::A1, phi),
        a2: f(C::A2, phi),
        a3: f(C::A3, phi),
        a4: f(C::A4, phi),
        b1: -0.5,
        b2: f(C::B2, phi),
        b4: f(C::B4, phi),
    }
}

fn dexp_coeff_derivs_with(phi: f64, f: fn(Coefficient, f64) -> f64) -> DexpCoeffDerivs {
    use Coefficient as C;
    DexpCoeffDerivs {
        abar1: f(C::ABar1, phi),
        abar2: f(C::ABar2, phi),
        abar3: f(C::ABar3, phi),
        abar4: f(C::ABar4, phi),
        bbar2: f(C::BBar2, phi),
        bbar4: f(C::BBar4, phi),
        abreve1: f(C::ABreve1, phi),
        abreve2: f(C::ABreve2, phi),
        abreve3: f(C::ABreve3, phi),
        abreve4: f(C::ABreve4, phi),
        bbreve2: f(C::BBreve2, phi),
        bbreve4: f(C::BBreve4, phi),
    }
}

/// Coefficients of P_0..P_4 in dexp or dexpinv, with the multipliers of their
/// first and second directional derivatives. Index i is the power of ad_X.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentCoeffs {
    pub w: [f64; 5],
    pub w_bar: [f64; 5],
    pub w_breve: [f64; 5],
}

impl TangentCoeffs {
    pub fn at(phi: f64, variant: Variant) -> Result<Self> {
        check_angle(phi)?;
        Ok(Self::from_parts(
            dexp_coeffs_with(phi, Coefficient::eval),
            dexp_coeff_derivs_with(phi, Coefficient::eval),
            variant,
        ))
    }

    /// The printed closed forms evaluated as they stand, with no series
    /// fallback. Breaks down near φ = 0; kept to reproduce that breakdown.
    pub fn literal(phi: f64, variant: Variant) -> Self {
        Self::from_parts(
            dexp_coeffs_with(phi, Coefficient::eval_closed),
            dexp_coeff_derivs_with(phi, Coefficient::eval_closed),
            variant,
        )
    }

    fn from_parts(c: DexpCoeffs, d: DexpCoeffDerivs, variant: Variant) -> Self {
        match variant {
            Variant::Dexp => Self {
                w: [1.0, c.a1, c.a2, c.a3, c.a4],
                w_bar: [0.0, d.abar1, d.abar2, d.abar3, d.abar4],
                w_breve: [0.0, d.abreve1, d.abreve2, d.abreve3, d.abreve4],
            },
            Variant::DexpInv => Self {
                w: [1.0, c.b1, c.b2, 0.0, c.b4],
                w_bar: [0.0, 0.0, d.bbar2, 0.0, d.bbar4],
                w_breve: [0.0, 0.0, d.bbreve2, 0.0, d.bbreve4],
            },
        }
    }
}
