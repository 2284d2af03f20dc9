mod common;

use common::strategies::{direction, screw};
use proptest::prelude::*;
use se3_dexp::exp_dexp::{dexp, exp_se3};
use se3_dexp::{
    ad, ad_bar, ad_powers, adjoint_of_transform, hat, skew, Mat3, Mat6, Screw, Transform, Vec3,
};

#[test]
fn zero_inputs() {
    assert_eq!(ad(&Screw::zero()), Mat6::zeros());
    assert_eq!(ad_bar(Screw::zero().vector()), Mat6::zeros());
    assert_eq!(
        adjoint_of_transform(&Transform::identity()),
        Mat6::identity()
    );
}

#[test]
fn block_layout() {
    let (e1, e2) = (Vec3::x(), Vec3::y());
    let a = ad(&Screw::new(e1, e2));
    assert_eq!(a.fixed_view::<3, 3>(0, 0), skew(&e1));
    assert_eq!(a.fixed_view::<3, 3>(0, 3), Mat3::zeros());
    assert_eq!(a.fixed_view::<3, 3>(3, 0), skew(&e2));
    assert_eq!(a.fixed_view::<3, 3>(3, 3), skew(&e1));
}

#[test]
fn pure_translation_adjoint() {
    let r = Vec3::new(0.3, -1.0, 2.0);
    let a = adjoint_of_transform(&Transform::new(Mat3::identity(), r));
    let mut want = Mat6::identity();
    want.fixed_view_mut::<3, 3>(3, 0).copy_from(&skew(&r));
    assert_eq!(a, want);
}

#[test]
fn first_power_is_identity() {
    let x = Screw::from_array([0.3, -0.4, 1.0, 0.1, 0.2, -0.4]);
    assert_eq!(ad_powers(&x, 0)[0], Mat6::identity());
}

proptest! {
    #[test]
    fn bracket_with_itself(x in screw(0.0, 3.0)) {
        prop_assert!((ad(&x) * x.vector()).amax() < 1e-15);
    }

    #[test]
    fn quintic_reduction(x in screw(0.1, 3.0)) {
        let p = ad_powers(&x, 5);
        let t = x.rotation().norm_squared();
        let r = p[3] * (-2.0 * t) - p[1] * (t * t);
        prop_assert!((p[5] - r).amax() <= 1e-11 * p[5].amax().max(1.0));
        prop_assert!((p[2] - ad(&x) * ad(&x)).amax() <= 1e-15);
    }

    #[test]
    fn coadjoint_bar(x in screw(0.0, 3.0), u in direction()) {
        let b = ad_bar(u.vector());
        prop_assert!((ad(&x).transpose() * u.vector() - b * x.vector()).amax() < 1e-14);
        prop_assert_eq!(b + b.transpose(), Mat6::zeros());
    }

    #[test]
    fn jacobi_identity(x in screw(0.0, 3.0), z in direction()) {
        let bracket: Screw = (ad(&x) * z.vector()).into();
        let (ax, az) = (ad(&x), ad(&z));
        prop_assert!((ad(&bracket) - (ax * az - az * ax)).amax() < 1e-13);
    }

    #[test]
    fn left_and_right_trivializations(x in screw(1e-3, 3.0)) {
        let ad_h = adjoint_of_transform(&exp_se3(&x).unwrap());
        prop_assert!((dexp(&x).unwrap() - ad_h * dexp(&-x).unwrap()).amax() < 1e-12);
    }

    /// X̂⁴ + φ² X̂² = 0 holds for every screw.
    #[test]
    fn characteristic_identity(x in screw(0.1, 3.0)) {
        let h = hat(&x);
        let t = x.rotation().norm_squared();
        let h2 = h * h;
        prop_assert!((h2 * h2 + h2 * t).amax() < 1e-12);
    }
}

/// The quartic relation written with X̂ in place of X̂² fails unless the
/// screw is degenerate.
#[test]
fn characteristic_identity_with_first_power_fails() {
    let x = Screw::from_array([0.3, -0.4, 1.0, 0.1, 0.2, -0.4]);
    let h = hat(&x);
    let t = x.rotation().norm_squared();
    let h2 = h * h;
    assert!((h2 * h2 + h * t).amax() > 0.1);
}
