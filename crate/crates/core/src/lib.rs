//! Closed-form exponential map on SE(3), its right-trivialized differential
//! (the 6×6 tangent operator) and inverse, their first and second directional
//! derivatives, Jacobians and Hessians of evaluation maps, truncated-series
//! approximations with a switching policy, and a Cosserat rod application.
//!
//! Screw coordinates are ordered X = (x, y) with x the rotation part.

pub mod algebra;
pub mod approx;
pub mod block;
pub mod checks;
pub mod derivatives;
pub mod error;
pub mod exp_dexp;
pub mod fd;
pub mod jacobians;
pub mod kernels;
pub mod par;
pub mod rod;
pub mod sampling;
pub mod series;
pub mod so3;
pub mod study;
pub mod transform;

pub use algebra::{
    ad, ad_bar, ad_powers, adjoint_of_transform, hat, skew, vee, Mat3, Mat6, Screw, Vec3, Vec6,
};
pub use error::{Error, Result};
pub use transform::Transform;

/// Which member of the tangent-operator pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Dexp,
    DexpInv,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Dexp => "dexp",
            Variant::DexpInv => "dexpinv",
        }
    }
}
