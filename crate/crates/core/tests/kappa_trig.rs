use ck_core::kappa_trig::{ck, half_period, kinv, sk, tk, vk};
use ck_core::Error;
use proptest::prelude::*;

const KAPPAS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

// Closed forms written independently of the library's branches.
fn cos_ref(k: f64, x: f64) -> f64 {
    match k.partial_cmp(&0.0).unwrap() {
        std::cmp::Ordering::Greater => (k.sqrt() * x).cos(),
        std::cmp::Ordering::Equal => 1.0,
        std::cmp::Ordering::Less => ((-k).sqrt() * x).cosh(),
    }
}

fn sin_ref(k: f64, x: f64) -> f64 {
    match k.partial_cmp(&0.0).unwrap() {
        std::cmp::Ordering::Greater => (k.sqrt() * x).sin() / k.sqrt(),
        std::cmp::Ordering::Equal => x,
        std::cmp::Ordering::Less => ((-k).sqrt() * x).sinh() / (-k).sqrt(),
    }
}

fn grid() -> impl Iterator<Item = f64> {
    (0..61).map(|i| -3.0 + 0.1 * i as f64)
}

#[test]
fn matches_circular_and_hyperbolic_functions() {
    for k in KAPPAS {
        for x in grid() {
            assert!((ck(k, x) - cos_ref(k, x)).abs() < 1e-14, "ck({k}, {x})");
            assert!((sk(k, x) - sin_ref(k, x)).abs() < 1e-14, "sk({k}, {x})");
        }
    }
}

#[test]
fn identities_on_the_grid() {
    for k in KAPPAS {
        for x in grid() {
            let (c, s) = (ck(k, x), sk(k, x));
            let scale = 1.0 + c * c + (k * s * s).abs();
            assert!((c * c + k * s * s - 1.0).abs() < 1e-12 * scale);
            assert!((sk(k, 2.0 * x) - 2.0 * s * c).abs() < 1e-12 * scale);
            assert!((ck(k, 2.0 * x) - (c * c - k * s * s)).abs() < 1e-12 * scale);
        }
    }
}

#[test]
fn derivatives_by_central_differences() {
    let h = 1e-5;
    for k in KAPPAS {
        for x in grid() {
            let dc = (ck(k, x + h) - ck(k, x - h)) / (2.0 * h);
            let ds = (sk(k, x + h) - sk(k, x - h)) / (2.0 * h);
            let scale = 1.0 + ck(k, x).abs();
            assert!((ds - ck(k, x)).abs() < 1e-8 * scale, "d sk at κ={k}, x={x}");
            assert!((dc + k * sk(k, x)).abs() < 1e-8 * scale, "d ck at κ={k}, x={x}");
        }
    }
}

#[test]
fn small_kappa_is_continuous_with_zero() {
    for x in grid() {
        for k in [1e-13, -1e-13, 1e-11, -1e-11] {
            assert!((ck(k, x) - 1.0).abs() < 1e-9);
            assert!((sk(k, x) - x).abs() < 1e-9);
        }
    }
}

#[test]
fn tangent_pole_is_reported() {
    let x = std::f64::consts::FRAC_PI_2;
    assert!(matches!(tk(1.0, x), Err(Error::Pole { .. })));
    assert!((tk(1.0, 0.3).unwrap() - 0.3f64.tan()).abs() < 1e-15);
    assert!((tk(-1.0, 0.3).unwrap() - 0.3f64.tanh()).abs() < 1e-15);
    assert_eq!(tk(0.0, 0.3).unwrap(), 0.3);
}

#[test]
fn versine_relation() {
    for k in KAPPAS {
        for x in grid() {
            assert!((k * vk(k, x) - (1.0 - ck(k, x))).abs() < 1e-13 * (1.0 + ck(k, x).abs()));
        }
    }
    assert!((vk(0.0, 0.4) - 0.08).abs() < 1e-16);
}

#[test]
fn kinv_rejects_points_off_the_circle() {
    assert!(matches!(kinv(1.0, 0.5, 0.5), Err(Error::OffCurve { .. })));
    // the lower branch of the hyperbola is not reached
    assert!(matches!(kinv(-1.0, 0.0, -1.0), Err(Error::OffCurve { .. })));
    assert!(matches!(kinv(0.0, 0.3, -1.0), Err(Error::OffCurve { .. })));
    assert!((kinv(1.0, 0.0, -1.0).unwrap() - std::f64::consts::PI).abs() < 1e-15);
}

proptest! {
    #[test]
    fn fundamental_identity(k in -2.0f64..2.0, x in -3.0f64..3.0) {
        let (c, s) = (ck(k, x), sk(k, x));
        let scale = 1.0 + c * c + (k * s * s).abs();
        prop_assert!((c * c + k * s * s - 1.0).abs() < 1e-12 * scale);
    }

    #[test]
    fn addition_law(k in -1.0f64..1.0, x in -1.5f64..1.5, y in -1.5f64..1.5) {
        let lhs_c = ck(k, x + y);
        let rhs_c = ck(k, x) * ck(k, y) - k * sk(k, x) * sk(k, y);
        let lhs_s = sk(k, x + y);
        let rhs_s = sk(k, x) * ck(k, y) + ck(k, x) * sk(k, y);
        prop_assert!((lhs_c - rhs_c).abs() < 1e-12 * (1.0 + lhs_c.abs()));
        prop_assert!((lhs_s - rhs_s).abs() < 1e-12 * (1.0 + lhs_s.abs()));
    }

    #[test]
    fn parity(k in -2.0f64..2.0, x in -3.0f64..3.0) {
        prop_assert_eq!(ck(k, -x), ck(k, x));
        prop_assert_eq!(sk(k, -x), -sk(k, x));
    }

    #[test]
    fn kinv_roundtrip(k in -2.0f64..2.0, u in -0.999f64..0.999) {
        let x = u * half_period(k).min(3.0);
        let back = kinv(k, sk(k, x), ck(k, x)).unwrap();
        prop_assert!((back - x).abs() < 1e-10, "κ={} x={} back={}", k, x, back);
    }
}
