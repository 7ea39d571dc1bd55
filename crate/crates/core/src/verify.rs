//! Verification suites: each check evaluates a defect (a max-norm over
//! samples) against a named tolerance.
//!
//! The suites cover the trigonometry, the algebra, the group, the geometry of
//! the space of points, dualities, the Lie bialgebra, the Poisson-Lie group
//! and the quantum deformation. Random samples come from a seeded ChaCha8
//! generator, so reports are reproducible.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{bracket, casimir_coeffs, classify, jacobi_defect, AlgebraElement, Generator, KappaPair};
use crate::duality::{apply_duality, Duality};
use crate::error::Error;
use crate::group::{
    coords_from_group, exp_one_param, exp_series, group_from_coords, rep, GroupCoordinates, GroupElement,
};
use crate::kappa_trig::{ck, kinv, sk};
use crate::poisson::{
    bialgebra_check, cocommutator_map, coisotropy_check, mcybe_defect, phs_points_bracket, poisson_jacobi_defect,
    rmatrix, schouten_tensor, sklyanin_closed, sklyanin_matrix, Bivector, Coisotropy, Coord, DeformationKind,
    FieldMode,
};
use crate::quantum::{coassociativity_defect, deformed_relation_defect, first_order_delta};
use crate::spaces::{
    convert, gaussian_curvature, induced_metric, killing_fields, metric_main, metric_subsidiary, to_ambient, Chart,
    ChartPoint, MetricValue,
};
use crate::tables::{metric_row, sklyanin_row};

/// Default tolerances by check name. Exact checks use 0.
pub const DEFAULT_TOLERANCES: &[(&str, f64)] = &[
    ("trig-identity", 1e-12),
    ("trig-double-argument", 1e-12),
    ("trig-derivative", 1e-8),
    ("trig-kinv-roundtrip", 1e-10),
    ("algebra-jacobi", 1e-13),
    ("algebra-casimir", 1e-12),
    ("group-exp-closed-form", 1e-12),
    ("group-metric-invariance", 1e-12),
    ("group-coords-roundtrip", 1e-10),
    ("geometry-table3-metric", 1e-12),
    ("geometry-table3-fields", 1e-12),
    ("geometry-induced-metric", 1e-6),
    ("geometry-chart-roundtrip", 1e-10),
    ("geometry-curvature", 1e-6),
    ("geometry-killing-flow", 1e-6),
    ("duality-morphism", 0.0),
    ("duality-d0-involution", 0.0),
    ("duality-sphere-fixed", 0.0),
    ("duality-d2-swap", 0.0),
    ("duality-restrictions", 0.0),
    ("bialgebra-cocommutator", 0.0),
    ("bialgebra-cocycle", 1e-13),
    ("bialgebra-dual-jacobi", 1e-13),
    ("bialgebra-dual-brackets", 0.0),
    ("bialgebra-schouten-oracle", 1e-13),
    ("bialgebra-mcybe", 1e-13),
    ("bialgebra-coisotropy", 0.0),
    ("sklyanin-oracle", 1e-6),
    ("sklyanin-closed-fields", 1e-10),
    ("sklyanin-table4", 1e-12),
    ("sklyanin-newtonian", 1e-12),
    ("sklyanin-second-kind", 1e-12),
    ("sklyanin-jacobi", 1e-5),
    ("phs-first-order", 1e-8),
    ("quantum-deformed-relations", 1e-9),
    ("quantum-coassociativity", 1e-10),
    // error divided by z², against the bound 10 z²
    ("quantum-first-order", 10.0),
];

pub fn default_tolerance(name: &str) -> Option<f64> {
    DEFAULT_TOLERANCES.iter().find(|(n, _)| *n == name).map(|&(_, t)| t)
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub grid: Vec<KappaPair>,
    pub z_values: Vec<f64>,
    /// Overrides the per-check sample counts when set.
    pub samples: Option<usize>,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid: KappaPair::normalized9().to_vec(),
            z_values: vec![0.1, 0.3],
            samples: None,
            seed: 0,
            tolerances: BTreeMap::new(),
        }
    }
}

impl VerifyConfig {
    fn tol(&self, name: &str) -> f64 {
        self.tolerances
            .get(name)
            .copied()
            .or_else(|| default_tolerance(name))
            .unwrap_or_else(|| panic!("no tolerance registered for {name}"))
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub max_defect: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub passed: bool,
    /// Domain errors met at sampled points; any error fails the check.
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_defect: f64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let max_defect = checks.iter().map(|c| c.max_defect).fold(0.0, f64::max);
        let passed = checks.iter().all(|c| c.passed);
        Self { suite: suite.into(), max_defect, passed, checks }
    }
}

/// Accumulates the worst defect of one check.
struct Acc {
    name: &'static str,
    worst: f64,
    samples: usize,
    errors: Vec<String>,
}

impl Acc {
    fn new(name: &'static str) -> Self {
        Self { name, worst: 0.0, samples: 0, errors: Vec::new() }
    }

    fn push(&mut self, defect: f64) {
        self.samples += 1;
        // NaN counts as a failure
        self.worst = if defect.is_nan() { f64::INFINITY } else { self.worst.max(defect) };
    }

    fn push_result(&mut self, r: Result<f64, Error>, ctx: impl FnOnce() -> String) {
        match r {
            Ok(d) => self.push(d),
            Err(e) => {
                self.samples += 1;
                if self.errors.len() < 8 {
                    self.errors.push(format!("{}: {e}", ctx()));
                }
            }
        }
    }

    fn finish(self, cfg: &VerifyConfig) -> Check {
        let tolerance = cfg.tol(self.name);
        Check {
            name: self.name.into(),
            max_defect: self.worst,
            tolerance,
            samples: self.samples,
            passed: self.errors.is_empty() && self.worst <= tolerance,
            errors: self.errors,
        }
    }
}

fn uniform(rng: &mut ChaCha8Rng, half: f64) -> f64 {
    rng.random_range(-half..half)
}

fn is_normalized(kp: KappaPair) -> bool {
    kp.normalized() == kp
}

fn diff3(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
}

pub fn trig_suite(cfg: &VerifyConfig) -> SuiteReport {
    let kappas = [-1.0, -0.5, 0.0, 0.5, 1.0];
    let xs: Vec<f64> = (0..61).map(|i| -3.0 + 0.1 * i as f64).collect();
    let (mut ident, mut dbl, mut der, mut inv) = (
        Acc::new("trig-identity"),
        Acc::new("trig-double-argument"),
        Acc::new("trig-derivative"),
        Acc::new("trig-kinv-roundtrip"),
    );
    let h = 1e-5;
    for &k in &kappas {
        for &x in &xs {
            let (c, s) = (ck(k, x), sk(k, x));
            ident.push((c * c + k * s * s - 1.0).abs());
            dbl.push((ck(k, 2.0 * x) - (c * c - k * s * s)).abs().max((sk(k, 2.0 * x) - 2.0 * s * c).abs()));
            let dc = (ck(k, x + h) - ck(k, x - h)) / (2.0 * h);
            let ds = (sk(k, x + h) - sk(k, x - h)) / (2.0 * h);
            der.push((dc + k * s).abs().max((ds - c).abs()));
            if k <= 0.0 || x.abs() < std::f64::consts::PI / k.sqrt() {
                inv.push_result(kinv(k, s, c).map(|y| (y - x).abs()), || format!("κ={k} x={x}"));
            }
        }
    }
    SuiteReport::new("trig", vec![ident.finish(cfg), dbl.finish(cfg), der.finish(cfg), inv.finish(cfg)])
}

pub fn algebra_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(2);
    let (mut jac, mut cas) = (Acc::new("algebra-jacobi"), Acc::new("algebra-casimir"));
    for &kp in &cfg.grid {
        for x in Generator::ALL {
            for y in Generator::ALL {
                for z in Generator::ALL {
                    jac.push(jacobi_defect(kp, x.into(), y.into(), z.into()));
                }
            }
        }
        for _ in 0..cfg.count(20) {
            let mut e = || AlgebraElement::new(uniform(&mut rng, 1.0), uniform(&mut rng, 1.0), uniform(&mut rng, 1.0));
            jac.push(jacobi_defect(kp, e(), e(), e()));
        }
        let coeffs = casimir_coeffs(kp);
        let c: nalgebra::Matrix3<f64> = Generator::ALL
            .iter()
            .zip(coeffs)
            .map(|(&g, w)| {
                let m = rep(kp, g.into());
                m * m * w
            })
            .sum();
        for g in Generator::ALL {
            let m = rep(kp, g.into());
            cas.push((c * m - m * c).amax());
        }
    }
    SuiteReport::new("algebra", vec![jac.finish(cfg), cas.finish(cfg)])
}

fn random_coords(rng: &mut ChaCha8Rng) -> GroupCoordinates {
    GroupCoordinates::new(uniform(rng, 1.2), uniform(rng, 1.2), uniform(rng, 1.2))
}

pub fn group_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(3);
    let (mut cf, mut inv, mut rt) = (
        Acc::new("group-exp-closed-form"),
        Acc::new("group-metric-invariance"),
        Acc::new("group-coords-roundtrip"),
    );
    for &kp in &cfg.grid {
        for g in Generator::ALL {
            for i in 0..=40 {
                let t = -2.0 + 0.1 * i as f64;
                let closed = exp_one_param(kp, g, t);
                cf.push_result(
                    exp_series(kp, t * AlgebraElement::basis(g)).map(|s| (s.m - closed.m).amax()),
                    || format!("{kp} {g} t={t}"),
                );
            }
        }
        for _ in 0..cfg.count(100) {
            // products of random one-parameter subgroups in random order
            let mut m = GroupElement::identity(kp);
            for _ in 0..4 {
                let g = Generator::from_index(rng.random_range(0..3));
                m = m * exp_one_param(kp, g, uniform(&mut rng, 1.5));
            }
            let (metric, det) = m.invariant_defects();
            inv.push(metric.max(det));

            let gc = random_coords(&mut rng);
            let back = coords_from_group(kp, &group_from_coords(kp, gc));
            rt.push_result(back.map(|b| diff3(b.to_array(), gc.to_array())), || format!("{kp} {gc:?}"));
        }
    }
    SuiteReport::new("group", vec![cf.finish(cfg), inv.finish(cfg), rt.finish(cfg)])
}

fn random_point(rng: &mut ChaCha8Rng, chart: Chart) -> ChartPoint {
    let (u, v) = (uniform(rng, 1.2), uniform(rng, 1.2));
    match chart {
        Chart::ParallelI => ChartPoint::ParallelI { a1: u, a2: v },
        Chart::ParallelII => ChartPoint::ParallelII { b1: u, b2: v },
        // keep away from the origin, where polar coordinates degenerate
        _ => ChartPoint::Polar { r: 0.2 + 0.5 * (u + 1.2), phi: v },
    }
}

fn metric_diff(a: &MetricValue, b: &MetricValue) -> f64 {
    a.max_abs_diff(b)
}

/// Pullback of the main metric by the isometry `exp(t X)`, compared with the
/// metric at the source point, in parallel I coordinates.
fn killing_flow_defect(kp: KappaPair, g: Generator, t: f64, a1: f64, a2: f64) -> Result<f64, Error> {
    let e = exp_one_param(kp, g, t);
    let flow = |u: f64, v: f64| -> Result<[f64; 2], Error> {
        let s = to_ambient(kp, &ChartPoint::ParallelI { a1: u, a2: v })?;
        let q = crate::group::act(kp, &e, s)?;
        let p = crate::spaces::from_ambient(kp, q, Chart::ParallelI)?;
        Ok(p.coords().expect("parallel I"))
    };
    let h = 1e-5;
    let mut jac = [[0.0; 2]; 2];
    for k in 0..2 {
        let (mut p, mut m) = ([a1, a2], [a1, a2]);
        p[k] += h;
        m[k] -= h;
        let (fp, fm) = (flow(p[0], p[1])?, flow(m[0], m[1])?);
        for i in 0..2 {
            jac[i][k] = (fp[i] - fm[i]) / (2.0 * h);
        }
    }
    let [b1, b2] = flow(a1, a2)?;
    let target = metric_main(kp, &ChartPoint::ParallelI { a1: b1, a2: b2 })?;
    let source = metric_main(kp, &ChartPoint::ParallelI { a1, a2 })?;
    Ok(metric_diff(&target.pullback(jac), &source))
}

pub fn geometry_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(4);
    let (mut t3m, mut t3f, mut ind, mut rt, mut curv, mut kf) = (
        Acc::new("geometry-table3-metric"),
        Acc::new("geometry-table3-fields"),
        Acc::new("geometry-induced-metric"),
        Acc::new("geometry-chart-roundtrip"),
        Acc::new("geometry-curvature"),
        Acc::new("geometry-killing-flow"),
    );
    let charts = [Chart::ParallelI, Chart::ParallelII, Chart::Polar];
    for &kp in &cfg.grid {
        let geom = classify(kp).geometry;
        for _ in 0..cfg.count(20) {
            let (a1, a2) = (uniform(&mut rng, 1.2), uniform(&mut rng, 1.2));
            let p = ChartPoint::ParallelI { a1, a2 };
            if is_normalized(kp) {
                let row = metric_row(geom, a1, a2);
                t3m.push_result(
                    metric_main(kp, &p).and_then(|m| {
                        let mut d = metric_diff(&m, &MetricValue::diag(row.main.0, row.main.1));
                        if let Some((s1, s2)) = row.subsidiary {
                            d = d.max(metric_diff(&metric_subsidiary(kp, &p)?, &MetricValue::diag(s1, s2)));
                        }
                        Ok(d)
                    }),
                    || format!("{kp} a=({a1},{a2})"),
                );
                t3f.push_result(
                    killing_fields(kp, &p, Chart::ParallelI).map(|f| {
                        let mut d: f64 = 0.0;
                        for (v, expected) in f.iter().zip(row.fields) {
                            let c = v.components();
                            d = d.max((c[0] - expected[0]).abs()).max((c[1] - expected[1]).abs());
                        }
                        d
                    }),
                    || format!("{kp} a=({a1},{a2})"),
                );
            }
            for &chart in &charts {
                let q = random_point(&mut rng, chart);
                ind.push_result(
                    induced_metric(kp, &q).and_then(|m| Ok(metric_diff(&m, &metric_main(kp, &q)?))),
                    || format!("{kp} {q:?}"),
                );
                for &other in &charts {
                    // not every point is reachable in every chart; only
                    // points that made it out must make it back
                    let Ok(o) = convert(kp, &q, other) else { continue };
                    let back = convert(kp, &o, chart);
                    rt.push_result(
                        back.map(|b| {
                            let (x, y) = (b.coords().expect("2d"), q.coords().expect("2d"));
                            (x[0] - y[0]).abs().max((x[1] - y[1]).abs())
                        }),
                        || format!("{kp} {q:?} via {other:?}"),
                    );
                }
                if kp.k2 != 0.0 {
                    curv.push_result(gaussian_curvature(kp, &q).map(|k| (k - kp.k1).abs()), || {
                        format!("{kp} {q:?}")
                    });
                }
            }
            let (b1, b2) = (uniform(&mut rng, 0.8), uniform(&mut rng, 0.8));
            for g in Generator::ALL {
                kf.push_result(killing_flow_defect(kp, g, 0.3, b1, b2), || format!("{kp} {g} a=({b1},{b2})"));
            }
        }
    }
    SuiteReport::new(
        "geometry",
        vec![t3m.finish(cfg), t3f.finish(cfg), ind.finish(cfg), rt.finish(cfg), curv.finish(cfg), kf.finish(cfg)],
    )
}

pub fn duality_suite(cfg: &VerifyConfig) -> SuiteReport {
    let (mut morph, mut inv, mut fixed, mut swap, mut restr) = (
        Acc::new("duality-morphism"),
        Acc::new("duality-d0-involution"),
        Acc::new("duality-sphere-fixed"),
        Acc::new("duality-d2-swap"),
        Acc::new("duality-restrictions"),
    );
    for &kp in &cfg.grid {
        for d in Duality::ALL {
            let expected_defined = match d {
                Duality::D1 | Duality::D0D1 => kp.k1 != 0.0,
                Duality::D2 | Duality::D0D2 => kp.k2 != 0.0,
                Duality::D0 | Duality::Id => true,
            };
            let ok = apply_duality(d, kp, Generator::J01.into()).is_ok();
            restr.push(if ok == expected_defined { 0.0 } else { 1.0 });
            if !expected_defined {
                continue;
            }
            for x in Generator::ALL {
                for y in Generator::ALL {
                    // the image of a κ̃-bracket is the κ-bracket of the images
                    let r = (|| -> Result<f64, Error> {
                        let (fx, kt) = apply_duality(d, kp, x.into())?;
                        let (fy, _) = apply_duality(d, kp, y.into())?;
                        let (fxy, _) = apply_duality(d, kp, bracket(kt, x.into(), y.into()))?;
                        Ok((bracket(kp, fx, fy) - fxy).max_abs())
                    })();
                    morph.push_result(r, || format!("{d:?} {kp} {x} {y}"));
                }
            }
        }
        for x in Generator::ALL {
            let r = (|| -> Result<f64, Error> {
                let (y, kt) = apply_duality(Duality::D0, kp, x.into())?;
                let (w, kb) = apply_duality(Duality::D0, kt, y)?;
                Ok((w - x.into()).max_abs() + (kb.k1 - kp.k1).abs() + (kb.k2 - kp.k2).abs())
            })();
            inv.push_result(r, || format!("{kp} {x}"));
        }
    }
    let sphere = KappaPair::new(1.0, 1.0);
    for d in Duality::ALL {
        fixed.push_result(d.transform_kappa(sphere).map(|t| (t.k1 - 1.0).abs() + (t.k2 - 1.0).abs()), || {
            format!("{d:?}")
        });
    }
    let (ads, ds) = (KappaPair::new(1.0, -1.0), KappaPair::new(-1.0, -1.0));
    for (from, to) in [(ads, ds), (ds, ads)] {
        swap.push_result(
            Duality::D2.transform_kappa(from).map(|t| (t.k1 - to.k1).abs() + (t.k2 - to.k2).abs()),
            || format!("{from}"),
        );
    }
    SuiteReport::new(
        "duality",
        vec![morph.finish(cfg), inv.finish(cfg), fixed.finish(cfg), swap.finish(cfg), restr.finish(cfg)],
    )
}

/// `[[r, r]]` expanded term by term with [`bracket`], as an oracle for
/// [`schouten_tensor`].
pub fn schouten_brute_force(kp: KappaPair, r: &Bivector) -> [[[f64; 3]; 3]; 3] {
    let t = r.tensor();
    let e = |i: usize| AlgebraElement::basis(Generator::from_index(i));
    let mut s = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let w = t[i][j] * t[k][l];
                    let b1 = bracket(kp, e(i), e(k)).to_array();
                    let b2 = bracket(kp, e(j), e(k)).to_array();
                    let b3 = bracket(kp, e(j), e(l)).to_array();
                    for m in 0..3 {
                        s[m][j][l] += w * b1[m];
                        s[i][m][l] += w * b2[m];
                        s[i][k][m] += w * b3[m];
                    }
                }
            }
        }
    }
    s
}

/// Dual structure tensor of the first-kind bialgebra:
/// `[x̂01, x̂02] = zκ2 x̂02`, `[x̂02, x̂12] = 0`, `[x̂01, x̂12] = zκ2 x̂12`.
pub fn expected_dual_brackets(kp: KappaPair, z: f64) -> [[[f64; 3]; 3]; 3] {
    let mut f = [[[0.0; 3]; 3]; 3];
    let c = z * kp.k2;
    f[0][1][1] = c;
    f[1][0][1] = -c;
    f[0][2][2] = c;
    f[2][0][2] = -c;
    f
}

pub fn bialgebra_suite(cfg: &VerifyConfig) -> SuiteReport {
    let (mut coc, mut cyc, mut dj, mut db, mut sch, mut ybe, mut cois) = (
        Acc::new("bialgebra-cocommutator"),
        Acc::new("bialgebra-cocycle"),
        Acc::new("bialgebra-dual-jacobi"),
        Acc::new("bialgebra-dual-brackets"),
        Acc::new("bialgebra-schouten-oracle"),
        Acc::new("bialgebra-mcybe"),
        Acc::new("bialgebra-coisotropy"),
    );
    use Generator::*;
    for &kp in &cfg.grid {
        for &z in &cfg.z_values {
            let r = rmatrix(DeformationKind::FirstKind, z);
            let delta = cocommutator_map(kp, &r);
            let expected = crate::poisson::CocommutatorMap {
                images: [
                    Bivector::ZERO,
                    Bivector::wedge(z * kp.k2, J01, J02),
                    Bivector::wedge(z * kp.k2, J01, J12),
                ],
            };
            coc.push(delta.max_abs_diff(&expected));
            let rep = bialgebra_check(kp, &delta);
            cyc.push(rep.cocycle_defect);
            dj.push(rep.dual_jacobi_defect);
            let f = expected_dual_brackets(kp, z);
            let mut d: f64 = 0.0;
            for a in 0..3 {
                for b in 0..3 {
                    d = d.max(diff3(rep.dual_brackets[a][b], f[a][b]));
                }
            }
            db.push(d);

            for kind in [DeformationKind::FirstKind, DeformationKind::SecondKind] {
                let r = rmatrix(kind, z);
                let (a, b) = (schouten_tensor(kp, &r), schouten_brute_force(kp, &r));
                let mut d: f64 = 0.0;
                for i in 0..3 {
                    for j in 0..3 {
                        d = d.max(diff3(a[i][j], b[i][j]));
                    }
                }
                sch.push(d);
                ybe.push(mcybe_defect(kp, &r));
            }

            let expect = |h: Generator| {
                if kp.k2 == 0.0 || h == J01 {
                    Coisotropy::PoissonSubgroup
                } else {
                    Coisotropy::Coisotropic
                }
            };
            for h in [J12, J01, J02] {
                cois.push_result(
                    coisotropy_check(kp, &delta, &[h]).map(|v| if v == expect(h) { 0.0 } else { 1.0 }),
                    || format!("{kp} {h}"),
                );
            }
        }
    }
    SuiteReport::new(
        "bialgebra",
        vec![
            coc.finish(cfg),
            cyc.finish(cfg),
            dj.finish(cfg),
            db.finish(cfg),
            sch.finish(cfg),
            ybe.finish(cfg),
            cois.finish(cfg),
        ],
    )
}

fn closed_matrix(kp: KappaPair, z: f64, gc: GroupCoordinates) -> Result<[[f64; 3]; 3], Error> {
    let mut p = [[0.0; 3]; 3];
    for a in Coord::ALL {
        for b in Coord::ALL {
            p[a.index()][b.index()] = sklyanin_closed(kp, z, a, b, gc)?;
        }
    }
    Ok(p)
}

fn matrix_diff(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> f64 {
    (0..3).map(|i| diff3(a[i], b[i])).fold(0.0, f64::max)
}

pub fn sklyanin_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(7);
    let (mut orc, mut cl, mut t4, mut newt, mut sec, mut jac, mut fo) = (
        Acc::new("sklyanin-oracle"),
        Acc::new("sklyanin-closed-fields"),
        Acc::new("sklyanin-table4"),
        Acc::new("sklyanin-newtonian"),
        Acc::new("sklyanin-second-kind"),
        Acc::new("sklyanin-jacobi"),
        Acc::new("phs-first-order"),
    );
    for &kp in &cfg.grid {
        let geom = classify(kp).geometry;
        for &z in &cfg.z_values {
            let r = rmatrix(DeformationKind::FirstKind, z);
            let r2 = rmatrix(DeformationKind::SecondKind, z);
            for n in 0..cfg.count(50) {
                let gc = GroupCoordinates::new(uniform(&mut rng, 1.0), uniform(&mut rng, 1.0), uniform(&mut rng, 1.0));
                let closed = closed_matrix(kp, z, gc);
                let ctx = || format!("{kp} z={z} {gc:?}");
                orc.push_result(
                    closed.clone().and_then(|c| Ok(matrix_diff(&c, &sklyanin_matrix(kp, &r, gc, FieldMode::Numeric)?))),
                    ctx,
                );
                cl.push_result(
                    closed.clone().and_then(|c| Ok(matrix_diff(&c, &sklyanin_matrix(kp, &r, gc, FieldMode::Closed)?))),
                    ctx,
                );
                if is_normalized(kp) {
                    if let (Some(row), Ok(c)) = (sklyanin_row(geom, z, gc), &closed) {
                        let got = [c[2][0], c[2][1], c[0][1]];
                        t4.push(diff3(got, row));
                    }
                }
                if kp.k2 == 0.0 {
                    newt.push_result(
                        closed.clone().and_then(|c| {
                            let m = sklyanin_matrix(kp, &r, gc, FieldMode::Closed)?;
                            Ok(c.iter().chain(m.iter()).flatten().fold(0.0, |a: f64, v| a.max(v.abs())))
                        }),
                        ctx,
                    );
                }
                sec.push_result(
                    sklyanin_matrix(kp, &r2, gc, FieldMode::Closed).and_then(|m| {
                        let phs = phs_points_bracket(kp, z, DeformationKind::SecondKind, gc.a1, gc.a2)?;
                        Ok((m[0][1] - phs).abs().max((phs - z * sk(kp.k1, gc.a1)).abs()))
                    }),
                    ctx,
                );
                if n < cfg.count(10) {
                    jac.push_result(
                        poisson_jacobi_defect(
                            |x| closed_matrix(kp, z, GroupCoordinates::from_array(x)),
                            gc.to_array(),
                            1e-4,
                        ),
                        ctx,
                    );
                }
            }
            let h = 1e-6;
            fo.push_result(
                (|| -> Result<f64, Error> {
                    let p = phs_points_bracket(kp, z, DeformationKind::FirstKind, 0.0, h)?;
                    let m = phs_points_bracket(kp, z, DeformationKind::FirstKind, 0.0, -h)?;
                    Ok(((p - m) / (2.0 * h) - z * kp.k2).abs())
                })(),
                || format!("{kp} z={z}"),
            );
        }
    }
    SuiteReport::new(
        "sklyanin",
        vec![
            orc.finish(cfg),
            cl.finish(cfg),
            t4.finish(cfg),
            newt.finish(cfg),
            sec.finish(cfg),
            jac.finish(cfg),
            fo.finish(cfg),
        ],
    )
}

pub fn quantum_suite(cfg: &VerifyConfig) -> SuiteReport {
    let (mut rel, mut coa, mut fo) = (
        Acc::new("quantum-deformed-relations"),
        Acc::new("quantum-coassociativity"),
        Acc::new("quantum-first-order"),
    );
    for &kp in &cfg.grid {
        for &z in &cfg.z_values {
            rel.push_result(deformed_relation_defect(kp, z), || format!("{kp} z={z}"));
            coa.push_result(coassociativity_defect(kp, z), || format!("{kp} z={z}"));
        }
        for z in [1e-3, 1e-4] {
            let expected = cocommutator_map(kp, &rmatrix(DeformationKind::FirstKind, z));
            fo.push_result(
                first_order_delta(kp, z).map(|d| d.max_abs_diff(&expected) / (z * z)),
                || format!("{kp} z={z}"),
            );
        }
    }
    SuiteReport::new("quantum", vec![rel.finish(cfg), coa.finish(cfg), fo.finish(cfg)])
}

pub const SUITES: [&str; 8] = ["trig", "algebra", "group", "geometry", "duality", "bialgebra", "sklyanin", "quantum"];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    Some(match name {
        "trig" => trig_suite(cfg),
        "algebra" => algebra_suite(cfg),
        "group" => group_suite(cfg),
        "geometry" => geometry_suite(cfg),
        "duality" => duality_suite(cfg),
        "bialgebra" => bialgebra_suite(cfg),
        "sklyanin" => sklyanin_suite(cfg),
        "quantum" => quantum_suite(cfg),
        _ => return None,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES.iter().filter_map(|s| run_suite(s, cfg)).collect()
}
