use ck_core::export::{export_geodesics, FamilySpec};
use ck_core::group::{act, exp_one_param};
use ck_core::spaces::{
    convert, from_ambient, gaussian_curvature, induced_metric, killing_field_parallel_i, killing_fields,
    laplace_beltrami_apply, metric_main, metric_subsidiary, to_ambient, TangentVector,
};
use ck_core::tables::metric_row;
use ck_core::{classify, Chart, ChartPoint, Generator, KappaPair};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn normalized() -> impl Strategy<Value = KappaPair> {
    (0usize..9).prop_map(|i| KappaPair::normalized9()[i])
}

fn p1(a1: f64, a2: f64) -> ChartPoint {
    ChartPoint::ParallelI { a1, a2 }
}

#[test]
fn metric_and_field_rows_of_each_geometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for kp in KappaPair::normalized9() {
        let geom = classify(kp).geometry;
        for _ in 0..20 {
            let (a1, a2) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let row = metric_row(geom, a1, a2);
            let p = p1(a1, a2);
            let g = metric_main(kp, &p).unwrap();
            assert!((g.g11 - row.main.0).abs() < 1e-12 && (g.g22 - row.main.1).abs() < 1e-12 && g.g12 == 0.0);
            if let Some(sub) = row.subsidiary {
                let s = metric_subsidiary(kp, &p).unwrap();
                assert!((s.g11 - sub.0).abs() < 1e-12 && (s.g22 - sub.1).abs() < 1e-12);
            }
            let fields = killing_fields(kp, &p, Chart::ParallelI).unwrap();
            for (f, expected) in fields.iter().zip(row.fields) {
                let TangentVector::ParallelI(v) = f else { panic!("parallel I components") };
                assert!((v[0] - expected[0]).abs() < 1e-12 && (v[1] - expected[1]).abs() < 1e-12, "{kp}");
            }
        }
    }
}

#[test]
fn spot_values_of_the_rows() {
    // sphere: cos² a2 da1² + da2²
    let g = metric_main(KappaPair::new(1.0, 1.0), &p1(0.2, 0.5)).unwrap();
    assert!((g.g11 - 0.5f64.cos().powi(2)).abs() < 1e-15 && g.g22 == 1.0);
    // Minkowski: dx0² - dx1²
    let g = metric_main(KappaPair::new(0.0, -1.0), &p1(0.2, 0.5)).unwrap();
    assert_eq!((g.g11, g.g22), (1.0, -1.0));
    // Newtonian: absolute time, leaf metric da2²
    let kp = KappaPair::new(-1.0, 0.0);
    assert_eq!(metric_main(kp, &p1(0.2, 0.5)).unwrap().g22, 0.0);
    let s = metric_subsidiary(kp, &p1(0.2, 0.5)).unwrap();
    assert_eq!((s.g11, s.g22), (0.0, 1.0));
}

#[test]
fn ambient_fields_are_the_matrix_action() {
    let kp = KappaPair::new(-0.7, 1.4);
    let p = p1(0.3, -0.2);
    let s = to_ambient(kp, &p).unwrap();
    let fields = killing_fields(kp, &p, Chart::Ambient).unwrap();
    // -ρ(X) s: the fields generate the flow of exp(-tX)
    for (g, f) in Generator::ALL.iter().zip(fields) {
        let h = 1e-6;
        let fwd = act(kp, &exp_one_param(kp, *g, -h), s).unwrap().to_array();
        let bwd = act(kp, &exp_one_param(kp, *g, h), s).unwrap().to_array();
        for i in 0..3 {
            let d = (fwd[i] - bwd[i]) / (2.0 * h);
            assert!((d - f.components()[i]).abs() < 1e-8, "{g}");
        }
    }
}

#[test]
fn curvature_equals_k1() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pairs = [(1.0, 1.0), (0.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (0.0, -1.0), (-1.0, -1.0), (0.5, 2.0), (-0.3, -0.6)];
    for (k1, k2) in pairs {
        let kp = KappaPair::new(k1, k2);
        for _ in 0..10 {
            let p = p1(rng.random_range(-0.8..0.8), rng.random_range(-0.8..0.8));
            let k = gaussian_curvature(kp, &p).unwrap();
            assert!((k - k1).abs() < 1e-6, "{kp} {p:?}: {k}");
        }
    }
    assert!(gaussian_curvature(KappaPair::new(1.0, 0.0), &p1(0.1, 0.1)).is_err());
}

fn parallel_i_coords(kp: KappaPair, s: ck_core::Ambient) -> [f64; 2] {
    from_ambient(kp, s, Chart::ParallelI).unwrap().coords().unwrap()
}

#[test]
fn isometry_flows_preserve_the_metric() {
    let h = 1e-5;
    for kp in KappaPair::normalized9() {
        for gen in Generator::ALL {
            for t in [-0.4, 0.3, 0.7] {
                let flow = exp_one_param(kp, gen, t);
                let image = |a1: f64, a2: f64| parallel_i_coords(kp, act(kp, &flow, to_ambient(kp, &p1(a1, a2)).unwrap()).unwrap());
                let (a1, a2) = (0.2, -0.15);
                let mut jac = [[0.0; 2]; 2];
                for j in 0..2 {
                    let d = if j == 0 { (h, 0.0) } else { (0.0, h) };
                    let plus = image(a1 + d.0, a2 + d.1);
                    let minus = image(a1 - d.0, a2 - d.1);
                    for i in 0..2 {
                        jac[i][j] = (plus[i] - minus[i]) / (2.0 * h);
                    }
                }
                let q = image(a1, a2);
                let pulled = metric_main(kp, &p1(q[0], q[1])).unwrap().pullback(jac);
                let here = metric_main(kp, &p1(a1, a2)).unwrap();
                assert!(pulled.max_abs_diff(&here) < 1e-6, "{kp} {gen} t={t}");
            }
        }
    }
}

#[test]
fn laplacian_is_the_casimir_of_the_fields() {
    let f = |a1: f64, a2: f64| a1.sin() + a2 * a2 * a1.cos() + 0.3 * a1 * a2;
    let h = 1e-4;
    for kp in KappaPair::normalized9().into_iter().chain([KappaPair::new(0.4, -1.7)]) {
        let field = |g: Generator, a1: f64, a2: f64| killing_field_parallel_i(kp, g, a1, a2);
        // X f by central differences
        let xf = |g: Generator, a1: f64, a2: f64| {
            let v = field(g, a1, a2);
            v[0] * (f(a1 + h, a2) - f(a1 - h, a2)) / (2.0 * h) + v[1] * (f(a1, a2 + h) - f(a1, a2 - h)) / (2.0 * h)
        };
        let k = 1e-3;
        let xxf = |g: Generator, a1: f64, a2: f64| {
            let v = field(g, a1, a2);
            v[0] * (xf(g, a1 + k, a2) - xf(g, a1 - k, a2)) / (2.0 * k)
                + v[1] * (xf(g, a1, a2 + k) - xf(g, a1, a2 - k)) / (2.0 * k)
        };
        for (a1, a2) in [(0.1, 0.2), (-0.4, 0.5), (0.7, -0.3)] {
            let cas = kp.k2 * xxf(Generator::J01, a1, a2) + xxf(Generator::J02, a1, a2) + kp.k1 * xxf(Generator::J12, a1, a2);
            let lap = laplace_beltrami_apply(kp, &f, &p1(a1, a2)).unwrap();
            assert!((cas - lap).abs() < 1e-4, "{kp} ({a1}, {a2}): {cas} vs {lap}");
        }
    }
}

#[test]
fn polar_rays_are_straight_lines_through_the_origin() {
    let kp = KappaPair::new(1.0, 1.0);
    let rows = export_geodesics(kp, Chart::Polar, FamilySpec { lines: 6, extent: 1.2 }, 15).unwrap();
    for fam in 0..6 {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.family_id == fam)
            .map(|r| (r.beltrami1.unwrap(), r.beltrami2.unwrap()))
            .collect();
        assert_eq!(pts[0], (0.0, 0.0));
        let (x, y) = pts[pts.len() - 1];
        for &(u, v) in &pts {
            assert!((u * y - v * x).abs() < 1e-12);
        }
    }
}

#[test]
fn euclidean_parallel_grid_is_cartesian() {
    let kp = KappaPair::new(0.0, 1.0);
    let rows = export_geodesics(kp, Chart::ParallelI, FamilySpec { lines: 3, extent: 1.0 }, 5).unwrap();
    for r in &rows {
        assert_eq!(r.status, "ok");
    }
    // a1 lines are horizontal (constant s2/s0), a2 lines vertical
    for fam in 0..3 {
        let ys: Vec<f64> = rows.iter().filter(|r| r.family_id == fam).map(|r| r.beltrami2.unwrap()).collect();
        assert!(ys.iter().all(|y| (y - ys[0]).abs() < 1e-15));
        let xs: Vec<f64> = rows.iter().filter(|r| r.family_id == fam + 3).map(|r| r.beltrami1.unwrap()).collect();
        assert!(xs.iter().all(|x| (x - xs[0]).abs() < 1e-15));
    }
}

#[test]
fn out_of_chart_samples_are_flagged() {
    // parallel I on the sphere leaves the principal domain at |a2| = π/2
    let kp = KappaPair::new(1.0, 1.0);
    let rows = export_geodesics(kp, Chart::ParallelI, FamilySpec { lines: 2, extent: 2.0 }, 9).unwrap();
    assert!(rows.iter().any(|r| r.status != "ok" && r.beltrami1.is_none()));
}

proptest! {
    #[test]
    fn chart_roundtrip(kp in normalized(), a1 in -1.0f64..1.0, a2 in -1.0f64..1.0) {
        let p = p1(a1, a2);
        let s = to_ambient(kp, &p).unwrap();
        prop_assert!(s.constraint_defect(kp).abs() < 1e-12 * s.scale(kp));
        for target in [Chart::Ambient, Chart::ParallelI, Chart::ParallelII, Chart::Polar] {
            let Ok(q) = convert(kp, &p, target) else { continue };
            let back = to_ambient(kp, &q).unwrap().to_array();
            for (x, y) in back.iter().zip(s.to_array()) {
                prop_assert!((x - y).abs() < 1e-10, "{} {:?} via {:?}", kp, p, target);
            }
        }
    }

    #[test]
    fn parallel_charts_cover_the_same_neighbourhood(kp in normalized(), a1 in -0.5f64..0.5, a2 in -0.5f64..0.5) {
        let q = convert(kp, &p1(a1, a2), Chart::ParallelII).unwrap();
        let back = convert(kp, &q, Chart::ParallelI).unwrap().coords().unwrap();
        prop_assert!((back[0] - a1).abs() < 1e-10 && (back[1] - a2).abs() < 1e-10);
    }

    #[test]
    fn induced_metric_matches_closed_form(kp in normalized(), a1 in -1.0f64..1.0, a2 in -1.0f64..1.0) {
        let p = p1(a1, a2);
        let d = induced_metric(kp, &p).unwrap().max_abs_diff(&metric_main(kp, &p).unwrap());
        prop_assert!(d < 1e-6, "{}: {}", kp, d);
    }

    #[test]
    fn induced_metric_for_general_kappa(k1 in -2.0f64..2.0, k2 in -2.0f64..2.0, a1 in -0.6f64..0.6, a2 in -0.6f64..0.6) {
        let kp = KappaPair::new(k1, k2);
        let p = p1(a1, a2);
        let d = induced_metric(kp, &p).unwrap().max_abs_diff(&metric_main(kp, &p).unwrap());
        prop_assert!(d < 1e-6);
    }
}
