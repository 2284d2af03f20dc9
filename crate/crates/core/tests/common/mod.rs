//! Printed rows of the approximation tables, transcribed term by term, and
//! the matching outputs of the generic series machinery.
#![allow(dead_code)]

use se3_dexp::approx::{d2dexp_approx, ddexp_approx, hessian_approx, jac_eval_approx, p_ij};
use se3_dexp::derivatives::d_power;
use se3_dexp::jacobians::{hbar, EvalMap};
use se3_dexp::{ad, ad_bar, ad_powers, Mat6, Screw, Variant, Vec6};

pub struct TableRow {
    pub name: String,
    pub printed: Mat6,
    pub generated: Mat6,
    /// Set when the printed row had to be read differently from how it
    /// stands.
    pub reading: Option<&'static str>,
}

impl TableRow {
    pub fn deviation(&self) -> f64 {
        (self.printed - self.generated).amax()
    }
}

pub struct Fixture {
    pub x: Screw,
    pub u: Screw,
    pub s: Screw,
    pub z: Screw,
    pub q: Vec6,
}

/// Moderate inputs, so that entries stay near unit size and 1e-15 is a
/// round-off-level comparison.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            x: Screw::from_array([0.1, -0.15, 0.2, 0.05, 0.1, -0.2]),
            u: Screw::from_array([0.1, 0.4, -0.4, 0.3, 0.2, 0.1]),
            s: Screw::from_array([0.2, -0.3, -0.5, 0.4, 0.35, 0.1]),
            z: Screw::from_array([-0.3, 0.2, 0.1, 0.5, -0.4, 0.25]),
            q: Vec6::new(0.3, -0.2, 0.4, 0.1, -0.5, 0.2),
        },
        Fixture {
            x: Screw::from_array([-0.2, 0.05, 0.12, -0.3, 0.2, 0.1]),
            u: Screw::from_array([0.5, -0.1, 0.2, -0.3, 0.4, 0.2]),
            s: Screw::from_array([-0.4, 0.3, 0.1, 0.2, -0.2, 0.5]),
            z: Screw::from_array([0.2, 0.3, -0.1, -0.2, 0.1, 0.4]),
            q: Vec6::new(-0.1, 0.4, 0.2, -0.3, 0.1, 0.3),
        },
    ]
}

fn row(name: String, printed: Mat6, generated: Mat6, reading: Option<&'static str>) -> TableRow {
    TableRow {
        name,
        printed,
        generated,
        reading,
    }
}

pub fn table_rows(f: &Fixture) -> Vec<TableRow> {
    let (x, u, s, z, q) = (&f.x, &f.u, &f.s, &f.z, &f.q);
    let p = ad_powers(x, 4);
    let (p1, p2, p3) = (p[1], p[2], p[3]);
    let (au, as_, az) = (ad(u), ad(s), ad(z));
    let zk: Vec<Mat6> = (0..4).map(|i| ad(&(p[i] * z.vector()).into())).collect();
    let (az1, az2, az3) = (zk[1], zk[2], zk[3]);
    let sum_pij = |i: usize| {
        (0..i)
            .map(|j| p_ij(x, z, i, j).unwrap())
            .fold(Mat6::zeros(), |a, m| a + m)
    };
    let dd = |k, v| ddexp_approx(x, u, k, v).unwrap();
    let jj = |k, m| jac_eval_approx(x, z, k, m).unwrap();
    let d2 = |k, v| d2dexp_approx(x, u, s, k, v).unwrap();
    let hh = |k, v| hessian_approx(x, q, z, k, v).unwrap();
    let mut rows = Vec::new();

    // derivatives of ad powers, P_{i,j} sums
    let dp = [
        au,
        au * p1 + p1 * au,
        au * p2 + p1 * au * p1 + p2 * au,
        au * p3 + p2 * au * p1 + p1 * au * p2 + p3 * au,
    ];
    let sp = [
        -az,
        -az1 - p1 * az,
        -az2 - p1 * az1 - p2 * az,
        -az3 - p1 * az2 - p2 * az1 - p3 * az,
    ];
    for i in 1..=4 {
        rows.push(row(
            format!("dp_{i}"),
            dp[i - 1],
            d_power(x, u, i).unwrap(),
            None,
        ));
        rows.push(row(format!("sum_pij_{i}"), sp[i - 1], sum_pij(i), None));
    }

    // dexp: first derivative and Jacobian
    let t2d0 = au * 0.5;
    let t2d1 = au * 0.5 + (au * p1 + p1 * au) / 6.0;
    let t2d2 = t2d1 + (au * p2 + p1 * au * p1 + p2 * au) / 24.0;
    let t2d3 = t2d2 + (au * p3 + p2 * au * p1 + p1 * au * p2 + p3 * au) / 120.0;
    let t2j0 = -az * 0.5;
    let t2j1 = -az * 0.5 - (az1 + p1 * az) / 6.0;
    let t2j2 = t2j1 - (az2 + p1 * az1 + p2 * az) / 24.0;
    let t2j3 = t2j2 - (az3 + p1 * az2 + p2 * az1 + p3 * az) / 120.0;
    let self_ref = Some("self-reference to the same order read as the previous order");
    rows.push(row("ddexp_k0".into(), t2d0, dd(0, Variant::Dexp), None));
    rows.push(row("ddexp_k1".into(), t2d1, dd(1, Variant::Dexp), None));
    rows.push(row(
        "ddexp_k2".into(),
        t2d2,
        dd(2, Variant::Dexp),
        self_ref,
    ));
    rows.push(row(
        "ddexp_k3".into(),
        t2d3,
        dd(3, Variant::Dexp),
        self_ref,
    ));
    rows.push(row("jac_dexp_k0".into(), t2j0, jj(0, EvalMap::Dexp), None));
    rows.push(row("jac_dexp_k1".into(), t2j1, jj(1, EvalMap::Dexp), None));
    rows.push(row("jac_dexp_k2".into(), t2j2, jj(2, EvalMap::Dexp), None));
    rows.push(row(
        "jac_dexp_k3".into(),
        t2j3,
        jj(3, EvalMap::Dexp),
        Some("printed as the order-2 row alone; the order-3 term is restored"),
    ));

    // dexp⁻¹: first derivative and Jacobian
    let t3d0 = -au * 0.5;
    let t3d1 = -au * 0.5 + (au * p1 + p1 * au) / 12.0;
    let t3d3 = t3d1 - (au * p3 + p2 * au * p1 + p1 * au * p2 + p3 * au) / 720.0;
    let t3j0 = az * 0.5;
    let t3j1 = az * 0.5 - (az1 + p1 * az) / 12.0;
    let t3j3 = t3j1 + (az3 + p1 * az2 + p2 * az1 + p3 * az) / 720.0;
    rows.push(row(
        "ddexpinv_k0".into(),
        t3d0,
        dd(0, Variant::DexpInv),
        None,
    ));
    rows.push(row(
        "ddexpinv_k1".into(),
        t3d1,
        dd(1, Variant::DexpInv),
        None,
    ));
    rows.push(row(
        "ddexpinv_k1_is_k2".into(),
        t3d1,
        dd(2, Variant::DexpInv),
        None,
    ));
    rows.push(row(
        "ddexpinv_k3".into(),
        t3d3,
        dd(3, Variant::DexpInv),
        None,
    ));
    rows.push(row("jac_dexpinv_k0".into(), t3j0, jj(0, EvalMap::DexpInv), None));
    rows.push(row("jac_dexpinv_k1".into(), t3j1, jj(1, EvalMap::DexpInv), None));
    rows.push(row(
        "jac_dexpinv_k1_is_k2".into(),
        t3j1,
        jj(2, EvalMap::DexpInv),
        None,
    ));
    rows.push(row("jac_dexpinv_k3".into(), t3j3, jj(3, EvalMap::DexpInv), None));

    // dexp: second derivative
    let sym = as_ * au + au * as_;
    let t4k0 = sym / 6.0;
    let t4k1 = t4k0
        + (p1 * as_ + as_ * p1) * au / 24.0
        + (au * as_ + as_ * au) * p1 / 24.0
        + (au * p1 + p1 * au) * as_ / 24.0;
    let t4k2 = t4k1
        + as_ * (p2 * au + au * p2 + p1 * au * p1) / 120.0
        + au * (p2 * as_ + as_ * p2 + p1 * as_ * p1) / 120.0
        + p2 * sym / 120.0
        + p1 * (as_ * (p1 * au + au * p1) + au * (p1 * as_ + as_ * p1)) / 120.0;
    rows.push(row("d2dexp_k0".into(), t4k0, d2(0, Variant::Dexp), None));
    rows.push(row(
        "d2dexp_k1".into(),
        t4k1,
        d2(1, Variant::Dexp),
        Some("unbalanced parenthesis dropped"),
    ));
    rows.push(row("d2dexp_k2".into(), t4k2, d2(2, Variant::Dexp), None));

    // dexp⁻¹: second derivative
    let t5k0 = sym / 12.0;
    let t5k2 = t5k0
        - as_ * (p2 * au + au * p2 + p1 * au * p1) / 720.0
        - au * (p2 * as_ + as_ * p2 + p1 * as_ * p1) / 720.0
        - p2 * sym / 720.0
        - p1 * (as_ * (p1 * au + au * p1) + au * (p1 * as_ + as_ * p1)) / 720.0;
    rows.push(row(
        "d2dexpinv_k0".into(),
        t5k0,
        d2(0, Variant::DexpInv),
        None,
    ));
    rows.push(row(
        "d2dexpinv_k2".into(),
        t5k2,
        d2(2, Variant::DexpInv),
        Some("reference to the nonexistent order 1 read as order 0"),
    ));

    // H̄ rows, labelled 0, 1, 2 where H̄_2, H̄_3, H̄_4 are meant; Q̄_j = P_jᵀ Q.
    let qb = |j: usize| ad_bar(&(p[j].transpose() * q));
    let h2 = qb(0) * az;
    let h3 = qb(0) * (p1 * az + az1) + qb(1) * az;
    let h4 = qb(0) * (p2 * az + p1 * az1 + az2) + qb(1) * (p1 * az + az1) + qb(2) * az;
    let relabel = Some("row label i read as i + 2");
    rows.push(row("hbar_2".into(), h2, hbar(x, q, z, 2), relabel));
    rows.push(row("hbar_3".into(), h3, hbar(x, q, z, 3), relabel));
    rows.push(row("hbar_4".into(), h4, hbar(x, q, z, 4), relabel));
    let hs = |m: Mat6| m + m.transpose();
    let hk0 = hs(h2) / 6.0;
    let hk1 = hk0 + hs(h3) / 24.0;
    let hk2 = hk1 + hs(h4) / 120.0;
    let hi0 = hs(h2) / 12.0;
    let hi2 = hi0 - hs(h4) / 720.0;
    rows.push(row("hess_k0".into(), hk0, hh(0, Variant::Dexp), None));
    rows.push(row("hess_k1".into(), hk1, hh(1, Variant::Dexp), None));
    rows.push(row(
        "hess_k2".into(),
        hk2,
        hh(2, Variant::Dexp),
        Some("printed with the label of order 3"),
    ));
    rows.push(row(
        "hess_inv_k0".into(),
        hi0,
        hh(0, Variant::DexpInv),
        None,
    ));
    rows.push(row(
        "hess_inv_k2".into(),
        hi2,
        hh(2, Variant::DexpInv),
        None,
    ));
    rows
}

pub mod strategies {
    use proptest::prelude::*;
    use se3_dexp::{Screw, Vec3};

    pub fn unit() -> impl Strategy<Value = Vec3> {
        prop::array::uniform3(-1.0f64..1.0)
            .prop_filter("away from zero", |a| Vec3::from(*a).norm() > 1e-2)
            .prop_map(|a| Vec3::from(a).normalize())
    }

    pub fn rotation(lo: f64, hi: f64) -> impl Strategy<Value = Vec3> {
        (unit(), lo..=hi).prop_map(|(n, phi)| n * phi)
    }

    /// Rotation angle in [lo, hi], translation entries in [-1, 1].
    pub fn screw(lo: f64, hi: f64) -> impl Strategy<Value = Screw> {
        (rotation(lo, hi), prop::array::uniform3(-1.0f64..1.0))
            .prop_map(|(x, y)| Screw::new(x, Vec3::from(y)))
    }

    pub fn direction() -> impl Strategy<Value = Screw> {
        prop::array::uniform6(-1.0f64..1.0).prop_map(Screw::from_array)
    }
}
