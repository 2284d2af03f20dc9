//! Central finite differences, the independent oracle for every derivative.

use std::ops::{Add, Mul, Sub};

use crate::algebra::{Mat6, Screw, Vec6};
use crate::error::{Error, Result};

/// Values that finite differences can be taken of.
pub trait FdValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
}

impl<T> FdValue for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOrder {
    Second,
    Fourth,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdScheme {
    pub order: FdOrder,
    pub step: f64,
}

impl FdScheme {
    pub fn new(order: FdOrder, step: f64) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "finite-difference step {step} must be positive"
            )));
        }
        Ok(Self { order, step })
    }

    /// Fourth order, h = 1e-4·max(1, ‖X‖).
    pub fn first(x: &Screw) -> Self {
        Self {
            order: FdOrder::Fourth,
            step: 1e-4 * x.vector().norm().max(1.0),
        }
    }

    /// Fourth order, h = 1e-3.
    pub fn second() -> Self {
        Self {
            order: FdOrder::Fourth,
            step: 1e-3,
        }
    }
}

/// d/dt f(t) at t = 0 by a central stencil.
pub fn fd_line<T: FdValue>(f: impl Fn(f64) -> T, scheme: FdScheme) -> T {
    let h = scheme.step;
    match scheme.order {
        FdOrder::Second => (f(h) - f(-h)) * (0.5 / h),
        FdOrder::Fourth => ((f(h) - f(-h)) * 8.0 - (f(2.0 * h) - f(-2.0 * h))) * (1.0 / (12.0 * h)),
    }
}

/// d/dt map(X + tU) at t = 0.
pub fn fd_directional<T: FdValue>(
    map: impl Fn(&Screw) -> T,
    x: &Screw,
    u: &Screw,
    scheme: FdScheme,
) -> T {
    fd_line(|t| map(&(*x + *u * t)), scheme)
}

/// Mixed difference d/dt d/ds map(X + sU + tS).
pub fn fd_second<T: FdValue>(
    map: impl Fn(&Screw) -> T,
    x: &Screw,
    u: &Screw,
    s: &Screw,
    scheme: FdScheme,
) -> T {
    fd_line(|t| fd_directional(&map, &(*x + *s * t), u, scheme), scheme)
}

/// Jacobian of a vector map, one directional difference per column.
pub fn fd_jacobian(map: impl Fn(&Screw) -> Vec6, x: &Screw, scheme: FdScheme) -> Mat6 {
    Mat6::from_fn(|r, c| fd_directional(&map, x, &Screw::basis(c), scheme)[r])
}

/// Hessian of a scalar map by mixed differences.
pub fn fd_hessian(map: impl Fn(&Screw) -> f64, x: &Screw, scheme: FdScheme) -> Mat6 {
    let mut h = Mat6::zeros();
    for r in 0..6 {
        for c in r..6 {
            let v = fd_second(&map, x, &Screw::basis(c), &Screw::basis(r), scheme);
            h[(r, c)] = v;
            h[(c, r)] = v;
        }
    }
    h
}

const D1: [f64; 7] = [
    -1.0 / 60.0,
    3.0 / 20.0,
    -3.0 / 4.0,
    0.0,
    3.0 / 4.0,
    -3.0 / 20.0,
    1.0 / 60.0,
];
const D2: [f64; 7] = [
    1.0 / 90.0,
    -3.0 / 20.0,
    3.0 / 2.0,
    -49.0 / 18.0,
    3.0 / 2.0,
    -3.0 / 20.0,
    1.0 / 90.0,
];
const D3: [f64; 9] = [
    -7.0 / 240.0,
    3.0 / 10.0,
    -169.0 / 120.0,
    61.0 / 30.0,
    0.0,
    -61.0 / 30.0,
    169.0 / 120.0,
    -3.0 / 10.0,
    7.0 / 240.0,
];

/// n-th derivative (n = 1, 2, 3) of a function of one variable by
/// sixth-order central differences with step h.
pub fn sixth_order_derivative<T: FdValue>(
    mut f: impl FnMut(f64) -> T,
    t: f64,
    h: f64,
    n: usize,
) -> T {
    let (w, power): (&[f64], i32) = match n {
        1 => (&D1, 1),
        2 => (&D2, 2),
        3 => (&D3, 3),
        _ => panic!("derivative order {n} not tabulated"),
    };
    let half = (w.len() / 2) as i64;
    let mut acc: Option<T> = None;
    for (k, wk) in w.iter().enumerate() {
        if *wk == 0.0 {
            continue;
        }
        let term = f(t + (k as i64 - half) as f64 * h) * *wk;
        acc = Some(match acc {
            None => term,
            Some(a) => a + term,
        });
    }
    acc.expect("nonempty stencil") * (1.0 / h.powi(power))
}
