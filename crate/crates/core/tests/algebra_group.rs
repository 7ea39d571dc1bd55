use ck_core::algebra::{casimir_coeffs, jacobi_defect, structure_constants};
use ck_core::group::{exp_one_param, exp_series, expm_series, metric_form, rep};
use ck_core::{
    bracket, classify, coords_from_group, group_from_coords, AlgebraElement, Generator, GroupCoordinates, KappaPair,
};
use nalgebra::Matrix3;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn elem() -> impl Strategy<Value = AlgebraElement> {
    (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b, c)| AlgebraElement::new(a, b, c))
}

fn kappa() -> impl Strategy<Value = KappaPair> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| KappaPair::new(a, b))
}

#[test]
fn table_of_geometries() {
    let rows = [
        ((1.0, 1.0), "Spherical", "SO(3)", "SO(2)", "SO(2)", "SO(2)"),
        ((0.0, 1.0), "Euclidean", "ISO(2)", "SO(2)", "R", "R"),
        ((-1.0, 1.0), "Hyperbolic", "SO(2,1)", "SO(2)", "SO(1,1)", "SO(1,1)"),
        ((1.0, 0.0), "Co-Euclidean", "ISO(2)", "R", "SO(2)", "R"),
        ((0.0, 0.0), "Galilean", "IISO(1)", "R", "R", "R"),
        ((-1.0, 0.0), "Co-Minkowskian", "ISO(1,1)", "R", "SO(1,1)", "R"),
        ((1.0, -1.0), "Co-Hyperbolic", "SO(2,1)", "SO(1,1)", "SO(2)", "SO(1,1)"),
        ((0.0, -1.0), "Minkowskian", "ISO(1,1)", "SO(1,1)", "R", "R"),
        ((-1.0, -1.0), "Doubly Hyperbolic", "SO(2,1)", "SO(1,1)", "SO(1,1)", "SO(2)"),
    ];
    for ((k1, k2), name, group, h0, h01, h02) in rows {
        // classification depends only on the signs
        for scale in [1.0, 0.25, 3.0] {
            let l = classify(KappaPair::new(scale * k1, scale * k2));
            assert_eq!((l.name, l.group, l.h0, l.h01, l.h02), (name, group, h0, h01, h02));
        }
    }
    assert_eq!(classify(KappaPair::new(1.0, -1.0)).kinematical_name, Some("Anti-de Sitter"));
    assert_eq!(classify(KappaPair::new(-1.0, -1.0)).kinematical_name, Some("De Sitter"));
    assert_eq!(classify(KappaPair::new(1.0, 1.0)).kinematical_name, None);
}

#[test]
fn kinematical_parameters() {
    let kp = KappaPair::from_kinematics(0.5, 2.0).unwrap();
    assert_eq!((kp.k1, kp.k2), (-0.5, -0.25));
    assert_eq!(KappaPair::from_kinematics(0.0, f64::INFINITY).unwrap().k2, 0.0);
    assert!(KappaPair::from_kinematics(0.0, 0.0).is_err());
}

#[test]
fn casimir_commutes_with_the_representation() {
    for kp in KappaPair::normalized9() {
        let c = casimir_coeffs(kp);
        let mats: Vec<Matrix3<f64>> = Generator::ALL.iter().map(|&g| rep(kp, g.into())).collect();
        let cas: Matrix3<f64> = (0..3).map(|i| c[i] * mats[i] * mats[i]).sum();
        for m in &mats {
            assert!((cas * m - m * cas).amax() < 1e-12, "{kp}");
        }
        // also central in the abstract algebra: [C, X] expanded by Leibniz
        for g in Generator::ALL {
            let mut total = Matrix3::zeros();
            for i in 0..3 {
                let b = rep(kp, bracket(kp, Generator::from_index(i).into(), g.into()));
                total += c[i] * (b * mats[i] + mats[i] * b);
            }
            assert!(total.amax() < 1e-12);
        }
    }
}

#[test]
fn structure_constants_reproduce_brackets() {
    let kp = KappaPair::new(0.7, -1.3);
    let c = structure_constants(kp);
    assert_eq!(c[2][0], [0.0, 1.0, 0.0]);
    assert_eq!(c[2][1], [1.3, 0.0, 0.0]);
    assert_eq!(c[0][1], [0.0, 0.0, 0.7]);
}

#[test]
fn closed_exponentials_match_series_on_interval() {
    for kp in KappaPair::normalized9() {
        for i in 0..=40 {
            let t = -2.0 + 0.1 * i as f64;
            for g in Generator::ALL {
                let closed = exp_one_param(kp, g, t).m;
                let series = exp_series(kp, t * AlgebraElement::basis(g)).unwrap().m;
                assert!((closed - series).amax() < 1e-12, "{kp} {g} t={t}");
            }
        }
    }
}

#[test]
fn random_group_elements_preserve_the_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kp in KappaPair::normalized9() {
        let ik = metric_form(kp);
        for _ in 0..100 {
            let x = AlgebraElement::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
            let g = exp_series(kp, x).unwrap();
            assert!((g.m.transpose() * ik * g.m - ik).amax() < 1e-12, "{kp}");
            assert!((g.m.determinant() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn coordinate_roundtrip_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kp in KappaPair::normalized9() {
        for _ in 0..100 {
            let gc = GroupCoordinates::new(
                rng.random_range(-1.2..1.2),
                rng.random_range(-1.2..1.2),
                rng.random_range(-1.2..1.2),
            );
            let back = coords_from_group(kp, &group_from_coords(kp, gc)).unwrap();
            for (a, b) in back.to_array().iter().zip(gc.to_array()) {
                assert!((a - b).abs() < 1e-10, "{kp} {gc:?} -> {back:?}");
            }
        }
    }
}

#[test]
fn coordinates_fail_outside_the_chart() {
    let kp = KappaPair::new(1.0, 1.0);
    let g = group_from_coords(kp, GroupCoordinates::new(0.1, std::f64::consts::FRAC_PI_2, 0.2));
    assert!(coords_from_group(kp, &g).is_err());
}

proptest! {
    #[test]
    fn jacobi(kp in kappa(), x in elem(), y in elem(), z in elem()) {
        prop_assert!(jacobi_defect(kp, x, y, z) < 1e-13);
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(kp in kappa(), x in elem(), y in elem(), z in elem(), a in -2.0f64..2.0) {
        prop_assert_eq!(bracket(kp, x, y), -1.0 * bracket(kp, y, x));
        let lhs = bracket(kp, a * x + z, y);
        let rhs = a * bracket(kp, x, y) + bracket(kp, z, y);
        prop_assert!((lhs - rhs).max_abs() < 1e-13);
    }

    // the vector representation is a Lie algebra homomorphism
    #[test]
    fn representation_homomorphism(kp in kappa(), x in elem(), y in elem()) {
        let (a, b) = (rep(kp, x), rep(kp, y));
        let lhs = rep(kp, bracket(kp, x, y));
        prop_assert!((lhs - (a * b - b * a)).amax() < 1e-13);
    }

    #[test]
    fn exponentials_are_isometries(kp in kappa(), x in elem()) {
        let g = exp_series(kp, x).unwrap();
        let ik = metric_form(kp);
        let scale = 1.0 + g.m.amax().powi(2);
        prop_assert!((g.m.transpose() * ik * g.m - ik).amax() < 1e-12 * scale);
    }

    #[test]
    fn one_parameter_subgroups_compose(kp in kappa(), s in -1.5f64..1.5, t in -1.5f64..1.5, i in 0usize..3) {
        let g = Generator::from_index(i);
        let prod = (exp_one_param(kp, g, s) * exp_one_param(kp, g, t)).m;
        let sum = exp_one_param(kp, g, s + t).m;
        prop_assert!((prod - sum).amax() < 1e-12 * (1.0 + sum.amax()));
    }

    #[test]
    fn series_exponential_of_general_matrix(a in proptest::array::uniform9(-3.0f64..3.0)) {
        // det(exp A) = exp(tr A)
        let m = Matrix3::from_row_slice(&a);
        let e = expm_series(&m).unwrap();
        let expected = m.trace().exp();
        prop_assert!((e.determinant() - expected).abs() < 1e-9 * expected.max(1.0));
    }
}
