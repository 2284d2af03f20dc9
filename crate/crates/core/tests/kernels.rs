use std::sync::OnceLock;

use proptest::prelude::*;
use se3_dexp::kernels::{base_coeffs, exact_series, Coefficient, TangentCoeffs, SERIES_RADIUS};
use se3_dexp::series::horner;
use se3_dexp::Variant;

const PHIS: [f64; 12] = [
    0.001, 0.01, 0.1, 0.5, 1.0, 1.7, 2.5, 3.0, 3.4, 3.6, 4.5, 6.0,
];
/// 80-digit values of the closed forms; bar and breve rows by numerical
/// differentiation in t at that precision.
const VALUES: [(Coefficient, [f64; 12]); 27] = [
    (
        Coefficient::Delta,
        [
            0.16666665833333352,
            0.16666583333531745,
            0.1665833531718477,
            0.16459569116637598,
            0.1585290151921035,
            0.14417569500255065,
            0.12169778277734679,
            0.10588444414593084,
            0.09300684668295418,
            0.08664524269750627,
            0.060110069878354974,
            0.029071368047217248,
        ],
    ),
    (
        Coefficient::A1,
        [
            0.4999999999999986,
            0.49999999998611117,
            0.499999861160706,
            0.49991396627281526,
            0.49865989585977233,
            0.4895411417669381,
            0.4566715281542275,
            0.4187005534567878,
            0.37785607773395635,
            0.35417080483017194,
            0.2281992278324952,
            0.02549738670266793,
        ],
    ),
    (
        Coefficient::A2,
        [
            0.16666666666666646,
            0.16666666666468255,
            0.16666664683090754,
            0.16665435169668544,
            0.1664736909143286,
            0.16513742188431355,
            0.16015296769961226,
            0.15415597166480235,
            0.14744799073076517,
            0.14343569870618283,
            0.12037898211734967,
            0.07212522965485377,
        ],
    ),
    (
        Coefficient::A3,
        [
            0.04166666388888896,
            0.041666388889632935,
            0.04163889632826289,
            0.04097685533722454,
            0.03896220172791203,
            0.034234432706855326,
            0.026958167946674896,
            0.021954475117415367,
            0.017968670050234926,
            0.016035184317515917,
            0.008316387292613317,
            0.0006775279382302559,
        ],
    ),
    (
        Coefficient::A4,
        [
            0.008333332936507945,
            0.008333293650876322,
            0.008329365905984456,
            0.008234642121237716,
            0.0079446757222251,
            0.00725319269265152,
            0.006152829587562476,
            0.005363503057652391,
            0.004709441526627249,
            0.004381979630299118,
            0.0029762425797034415,
            0.0011959406002121254,
        ],
    ),
    (
        Coefficient::B2,
        [
            0.0833333333333333,
            0.08333333333300265,
            0.08333333002480096,
            0.08333124045267466,
            0.08329854629815571,
            0.0830123917685944,
            0.08151727184689117,
            0.07886489675375043,
            0.07456070744877363,
            0.07112207332698452,
            0.026847183155862632,
            -5.34425892056622,
        ],
    ),
    (
        Coefficient::B4,
        [
            -0.0013888889550264575,
            -0.0013888955026703043,
            -0.001389550512649671,
            -0.0014055796055409077,
            -0.0014575928456183325,
            -0.0016029586474721519,
            -0.001924487152352498,
            -0.0022696748489168823,
            -0.0026861127086835967,
            -0.0029661797245292996,
            -0.005542743194294587,
            -0.16546225215639468,
        ],
    ),
    (
        Coefficient::So3Inv,
        [
            0.08333333472222225,
            0.08333347222255291,
            0.08334722552992746,
            0.0836826353540599,
            0.08475613914377404,
            0.08764494225978893,
            0.09354531654909429,
            0.09929197039400237,
            0.10561217036115601,
            0.10956376255688424,
            0.139087732840328,
            0.6123821570639889,
        ],
    ),
    (
        Coefficient::PitchRot,
        [
            -0.08333332777777792,
            -0.08333277777926587,
            -0.08327779265652578,
            -0.08195371067444908,
            -0.07792440345582406,
            -0.06846886541371065,
            -0.05391633589334979,
            -0.04390895023483073,
            -0.03593734010046985,
            -0.032070368635031835,
            -0.016632774585226634,
            -0.0013550558764605118,
        ],
    ),
    (
        Coefficient::PitchRotSq,
        [
            -0.01666666587301589,
            -0.016666587301752644,
            -0.016658731811968912,
            -0.016469284242475433,
            -0.0158893514444502,
            -0.01450638538530304,
            -0.012305659175124953,
            -0.010727006115304782,
            -0.009418883053254497,
            -0.008763959260598236,
            -0.005952485159406883,
            -0.0023918812004242508,
        ],
    ),
    (
        Coefficient::InvPitch,
        [
            0.002777777910052915,
            0.0027777910053406085,
            0.002779101025299342,
            0.0028111592110818154,
            0.002915185691236665,
            0.0032059172949443038,
            0.003848974304704996,
            0.0045393496978337645,
            0.005372225417367193,
            0.005932359449058599,
            0.011085486388589173,
            0.33092450431278936,
        ],
    ),
    (
        Coefficient::ABar1,
        [
            -5.555555257936514e-09,
            -5.555525793716932e-07,
            -5.552580026371526e-05,
            -0.0013703907128315954,
            -0.0052644674417697225,
            -0.013723762706633535,
            -0.024590073931618276,
            -0.03020498384260214,
            -0.03330897756579652,
            -0.034285950581233966,
            -0.03342439153109298,
            -0.016692605313340287,
        ],
    ),
    (
        Coefficient::ABar2,
        [
            -7.936507605820112e-10,
            -7.936474867784993e-08,
            -7.933201659387428e-06,
            -0.00019635526896403803,
            -0.0007611768832134643,
            -0.002031530756402276,
            -0.003805979991137488,
            -0.0048630401708465885,
            -0.005578537582901315,
            -0.005874713833979674,
            -0.006564825605903891,
            -0.005302175062830371,
        ],
    ),
    (
        Coefficient::ABar3,
        [
            -0.005555555257936514,
            -0.005555525793716931,
            -0.005552580026371526,
            -0.0054815628513263815,
            -0.0052644674417697225,
            -0.004748706818904338,
            -0.0039344118290589244,
            -0.003356109315844682,
            -0.0028813994434080032,
            -0.002645520878181633,
            -0.0016505872361033572,
            -0.0004636834809261191,
        ],
    ),
    (
        Coefficient::ABar4,
        [
            -0.0007936507605820112,
            -0.0007936474867784993,
            -0.0007933201659387428,
            -0.0007854210758561521,
            -0.0007611768832134643,
            -0.000702951818824317,
            -0.0006089567985819981,
            -0.000540337796760732,
            -0.0004825724552682798,
            -0.00045329582052312296,
            -0.0003241889188100687,
            -0.00014728264063417696,
        ],
    ),
    (
        Coefficient::BBar2,
        [
            -1.322751421957677e-10,
            -1.3227612434363478e-08,
            -1.3237438874970019e-06,
            -3.3696734891807785e-05,
            -0.00014271877854351745,
            -0.0004788819069935763,
            -0.001378624984776257,
            -0.002567009922387036,
            -0.004282191767107147,
            -0.0055969516651153475,
            -0.02285424863191849,
            -6.843182069458671,
        ],
    ),
    (
        Coefficient::BBar4,
        [
            -0.0001322751421957677,
            -0.00013227612434363477,
            -0.0001323743887497002,
            -0.00013478693956723114,
            -0.00014271877854351745,
            -0.0001657030820046977,
            -0.0002205799975642011,
            -0.00028522332470967064,
            -0.00037043181376359406,
            -0.0004318635544070484,
            -0.001128604870712024,
            -0.19008839081829643,
        ],
    ),
    (
        Coefficient::ABreve1,
        [
            -0.01111110992063496,
            -0.011110992063888889,
            -0.01109921031679233,
            -0.0108159618106813,
            -0.00995965623860804,
            -0.007986412738586454,
            -0.005067691042876722,
            -0.003166534796384247,
            -0.001733630749975666,
            -0.0010711211744902655,
            0.0012622042315035538,
            0.002373146585686346,
        ],
    ),
    (
        Coefficient::ABreve2,
        [
            -0.0015873014550264587,
            -0.0015872883598244349,
            -0.0015859791966778124,
            -0.0015544574720456209,
            -0.0014585830257024008,
            -0.001233947724782753,
            -0.0008896278361489337,
            -0.0006544203320410216,
            -0.00046853716706660425,
            -0.0003790417755660184,
            -2.9642642053013642e-05,
            0.00027272972224476577,
        ],
    ),
    (
        Coefficient::ABreve3,
        [
            0.0005952380687830693,
            0.0005952354497404601,
            0.0005949735950722562,
            0.0005886555678858502,
            0.0005692786449314043,
            0.0005228376813917718,
            0.00044818121843858024,
            0.0003939648705894574,
            0.0003485439564740779,
            0.0003256111560087192,
            0.00022535203475112435,
            9.168093187607178e-05,
        ],
    ),
    (
        Coefficient::ABreve4,
        [
            6.613756373256377e-05,
            6.613732563771106e-05,
            6.611351996731959e-05,
            6.553871866673258e-05,
            6.377074072452788e-05,
            5.950031587054709e-05,
            5.252572176241002e-05,
            4.7361695720049173e-05,
            4.295914735899268e-05,
            4.0706008138906446e-05,
            3.0554824472450556e-05,
            1.5758194542031102e-05,
        ],
    ),
    (
        Coefficient::BBreve2,
        [
            -0.00026455030423280725,
            -0.0002645542328342955,
            -0.000264947390741565,
            -0.000274661464081169,
            -0.00030741653650770694,
            -0.00040906063645098603,
            -0.0006878331822668463,
            -0.0010719854872155209,
            -0.0016554645246344862,
            -0.002123114719519389,
            -0.009370369750839849,
            -12.183849278735483,
        ],
    ),
    (
        Coefficient::BBreve4,
        [
            -1.9841271845438638e-05,
            -1.9841470259405135e-05,
            -1.9861324216460992e-05,
            -2.035033978682676e-05,
            -2.1978979420672056e-05,
            -2.6870059668370483e-05,
            -3.9467709942151054e-05,
            -5.572653753290884e-05,
            -7.911772466326107e-05,
            -9.717496996182812e-05,
            -0.000351267160958805,
            -0.3278797915860803,
        ],
    ),
    (
        Coefficient::So3InvBar,
        [
            0.002777777910052915,
            0.0027777910053406085,
            0.002779101025299342,
            0.0028111592110818154,
            0.002915185691236665,
            0.0032059172949443038,
            0.003848974304704996,
            0.0045393496978337645,
            0.005372225417367193,
            0.005932359449058599,
            0.011085486388589173,
            0.33092450431278936,
        ],
    ),
    (
        Coefficient::PitchRotBar,
        [
            0.011111110515873029,
            0.011111051587433862,
            0.011105160052743052,
            0.010963125702652763,
            0.010528934883539445,
            0.009497413637808675,
            0.007868823658117849,
            0.006712218631689364,
            0.0057627988868160064,
            0.005291041756363266,
            0.0033011744722067143,
            0.0009273669618522382,
        ],
    ),
    (
        Coefficient::PitchRotSqBar,
        [
            0.0015873015211640225,
            0.0015872949735569986,
            0.0015866403318774856,
            0.0015708421517123042,
            0.0015223537664269286,
            0.001405903637648634,
            0.0012179135971639961,
            0.001080675593521464,
            0.0009651449105365596,
            0.0009065916410462459,
            0.0006483778376201374,
            0.00029456528126835393,
        ],
    ),
    (
        Coefficient::InvPitchBar,
        [
            0.0002645502843915354,
            0.00026455224868726955,
            0.0002647487774994004,
            0.0002695738791344623,
            0.0002854375570870349,
            0.0003314061640093954,
            0.0004411599951284022,
            0.0005704466494193413,
            0.0007408636275271881,
            0.0008637271088140968,
            0.002257209741424048,
            0.38017678163659285,
        ],
    ),
];

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-3)
}

#[test]
fn matches_high_precision_values() {
    for (c, vals) in VALUES {
        for (phi, want) in PHIS.iter().zip(vals) {
            let got = c.eval(*phi);
            assert!(
                close(got, want, 2e-14),
                "{c:?}({phi}) = {got:e}, want {want:e}"
            );
        }
    }
}

#[test]
fn every_coefficient_has_a_fixture() {
    for c in Coefficient::ALL {
        assert!(VALUES.iter().any(|(v, _)| *v == c), "{c:?}");
    }
}

#[test]
fn base_values() {
    let b = base_coeffs(1.0).unwrap();
    assert!((b.alpha - 1f64.sin()).abs() < 1e-16);
    assert!((b.beta - 4.0 * 0.5f64.sin().powi(2)).abs() < 1e-15);
    let pi = base_coeffs(std::f64::consts::PI).unwrap();
    assert!(pi.alpha.abs() < 1e-16);
    assert!((pi.beta - 4.0 / std::f64::consts::PI.powi(2)).abs() < 1e-15);
}

#[test]
fn domain_is_checked() {
    assert!(base_coeffs(-0.1).is_err());
    assert!(base_coeffs(f64::NAN).is_err());
    assert!(base_coeffs(std::f64::consts::TAU).is_err());
    assert!(TangentCoeffs::at(7.0, Variant::Dexp).is_err());
}

#[test]
fn directional_derivative_multiplier_by_differences() {
    // ā₁(φ)·(xᵀu) is the derivative of a₁(‖x + s u‖) at s = 0.
    let x = [0.7f64 * 0.6, 0.7 * 0.8, 0.0];
    let u = [0.3, -0.2, 0.5];
    let a1 = |s: f64| {
        let v: Vec<f64> = x.iter().zip(&u).map(|(a, b)| a + s * b).collect();
        Coefficient::A1.eval(v.iter().map(|e| e * e).sum::<f64>().sqrt())
    };
    let h = 1e-4;
    let fd = (8.0 * (a1(h) - a1(-h)) - (a1(2.0 * h) - a1(-2.0 * h))) / (12.0 * h);
    let xu: f64 = x.iter().zip(&u).map(|(a, b)| a * b).sum();
    assert!((Coefficient::ABar1.eval(0.7) * xu - fd).abs() < 1e-8);
}

/// Degree-30 truncations in t of every coefficient's exact expansion.
fn truncations() -> &'static Vec<Vec<f64>> {
    static T: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    T.get_or_init(|| {
        let s = exact_series();
        Coefficient::ALL.iter().map(|c| s(*c).to_f64(31)).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn equals_degree_30_expansion(log_phi in (1e-8f64).ln()..3f64.ln()) {
        let phi = log_phi.exp();
        for (c, coeffs) in Coefficient::ALL.iter().zip(truncations()) {
            let want = horner(coeffs, phi * phi);
            prop_assert!(close(c.eval(phi), want, 1e-13), "{:?}({})", c, phi);
        }
    }

    #[test]
    fn both_representations_agree_around_the_switch(d in -0.4f64..0.4) {
        let phi = SERIES_RADIUS + d;
        for c in Coefficient::ALL {
            prop_assert!(close(c.eval_series(phi), c.eval_closed(phi), 1e-13), "{:?}({})", c, phi);
        }
    }

    #[test]
    fn inverse_weights_follow_from_forward_ones(phi in 1e-3f64..3.0) {
        // dexp·dexp⁻¹ = I restricted to the polynomial in ad: the P₂ and P₄
        // coefficients of the product vanish under P₅ = −2φ²P₃ − φ⁴P₁.
        let a = TangentCoeffs::at(phi, Variant::Dexp).unwrap().w;
        let b = TangentCoeffs::at(phi, Variant::DexpInv).unwrap().w;
        let mut prod = [0.0; 9];
        for i in 0..5 {
            for j in 0..5 {
                prod[i + j] += a[i] * b[j];
            }
        }
        let t = phi * phi;
        let reduce = |p: &mut [f64; 9], k: usize| {
            // P_k = −2t P_{k−2} − t² P_{k−4}
            let v = p[k];
            p[k] = 0.0;
            p[k - 2] -= 2.0 * t * v;
            p[k - 4] -= t * t * v;
        };
        for k in (5..9).rev() {
            reduce(&mut prod, k);
        }
        prop_assert!((prod[0] - 1.0).abs() < 1e-13);
        for (i, v) in prod.iter().enumerate().take(5).skip(1) {
            prop_assert!(v.abs() < 1e-12, "P{} coefficient {}", i, v);
        }
    }
}
