//! The space of points S²_{[κ1],κ2} = SO_{κ1,κ2}(3) / SO_{κ2}(2).
//!
//! Points live on the κ-sphere `s0² + κ1 s1² + κ1κ2 s2² = 1` (the orbit of
//! the origin `O = (1, 0, 0)`), and are reached from `O` by ordered products of
//! one-parameter subgroups:
//!
//! ```text
//! parallel I  (a1, a2): exp(a1 J01) exp(a2 J02) O
//! parallel II (b1, b2): exp(b2 J02) exp(b1 J01) O
//! polar       (r,  φ) : exp(φ J12)  exp(r J01)  O
//! ```
//!
//! Ambient coordinates are the interchange format between charts.

use serde::Serialize;

use crate::algebra::{Generator, KappaPair};
use crate::error::{Error, Result};
use crate::group::CHART_TOL;
use crate::kappa_trig::{ck, half_period, kinv, sk, tk};

/// Finite-difference step for the induced metric.
pub const METRIC_FD_STEP: f64 = 1e-5;
/// Finite-difference step of the Brioschi curvature stencils.
pub const CURVATURE_FD_STEP: f64 = 1e-3;
/// Finite-difference step of the Laplace-Beltrami operator.
pub const LAPLACE_FD_STEP: f64 = 1e-4;

/// Ambient (Weierstrass) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ambient {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
}

impl Ambient {
    pub const ORIGIN: Ambient = Ambient::new(1.0, 0.0, 0.0);

    pub const fn new(s0: f64, s1: f64, s2: f64) -> Self {
        Self { s0, s1, s2 }
    }

    /// `s0² + κ1 s1² + κ1κ2 s2² - 1`.
    pub fn constraint_defect(&self, kp: KappaPair) -> f64 {
        self.s0 * self.s0 + kp.k1 * self.s1 * self.s1 + kp.k12() * self.s2 * self.s2 - 1.0
    }

    /// Magnitude of the terms in the constraint, for relative tolerances.
    pub fn scale(&self, kp: KappaPair) -> f64 {
        1.0 + self.s0 * self.s0 + (kp.k1 * self.s1 * self.s1).abs() + (kp.k12() * self.s2 * self.s2).abs()
    }

    /// Projective (Beltrami) coordinates `(s1/s0, s2/s0)`.
    pub fn beltrami(&self) -> Option<(f64, f64)> {
        (self.s0.abs() > 1e-12).then(|| (self.s1 / self.s0, self.s2 / self.s0))
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.s0, self.s1, self.s2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    Ambient,
    ParallelI,
    ParallelII,
    Polar,
}

/// A point in one of the coordinate systems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ChartPoint {
    Ambient(Ambient),
    ParallelI { a1: f64, a2: f64 },
    ParallelII { b1: f64, b2: f64 },
    Polar { r: f64, phi: f64 },
}

impl ChartPoint {
    pub fn chart(&self) -> Chart {
        match self {
            ChartPoint::Ambient(_) => Chart::Ambient,
            ChartPoint::ParallelI { .. } => Chart::ParallelI,
            ChartPoint::ParallelII { .. } => Chart::ParallelII,
            ChartPoint::Polar { .. } => Chart::Polar,
        }
    }

    /// Intrinsic coordinates of a two-dimensional chart.
    pub fn coords(&self) -> Option<[f64; 2]> {
        match *self {
            ChartPoint::Ambient(_) => None,
            ChartPoint::ParallelI { a1, a2 } => Some([a1, a2]),
            ChartPoint::ParallelII { b1, b2 } => Some([b1, b2]),
            ChartPoint::Polar { r, phi } => Some([r, phi]),
        }
    }

    /// Build a point of a two-dimensional chart from its coordinates.
    pub fn from_coords(chart: Chart, c: [f64; 2]) -> Result<Self> {
        Ok(match chart {
            Chart::ParallelI => ChartPoint::ParallelI { a1: c[0], a2: c[1] },
            Chart::ParallelII => ChartPoint::ParallelII { b1: c[0], b2: c[1] },
            Chart::Polar => ChartPoint::Polar { r: c[0], phi: c[1] },
            Chart::Ambient => {
                return Err(Error::InvalidParameter("ambient chart is three-dimensional".into()))
            }
        })
    }
}

fn domain_err(msg: String) -> Error {
    Error::ChartDomain(msg)
}

fn in_principal(kappa: f64, x: f64) -> bool {
    let hp = half_period(kappa);
    x.is_finite() && x > -hp && x <= hp
}

/// Check that a chart point lies in its principal domain.
pub fn check_domain(kp: KappaPair, p: &ChartPoint) -> Result<()> {
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    match *p {
        ChartPoint::Ambient(s) => {
            let d = s.constraint_defect(kp);
            if d.abs() > crate::group::SURFACE_TOL * s.scale(kp) {
                return Err(Error::OffSurface { defect: d });
            }
        }
        ChartPoint::ParallelI { a1, a2 } => {
            if !in_principal(k1, a1) {
                return Err(domain_err(format!("a1 = {a1} outside principal domain")));
            }
            if !in_principal(k12, a2) || ck(k12, a2) <= CHART_TOL {
                return Err(domain_err(format!("a2 = {a2} outside the parallel I chart")));
            }
        }
        ChartPoint::ParallelII { b1, b2 } => {
            if !in_principal(k1, b1) || ck(k1, b1) <= CHART_TOL {
                return Err(domain_err(format!("b1 = {b1} outside the parallel II chart")));
            }
            if !in_principal(k12, b2) {
                return Err(domain_err(format!("b2 = {b2} outside principal domain")));
            }
        }
        ChartPoint::Polar { r, phi } => {
            // r = 0 parametrizes the origin for every φ; the inverse map rejects it
            let interior = r > 0.0 && in_principal(k1, r) && sk(k1, r) > CHART_TOL;
            if !(r == 0.0 || interior) {
                return Err(domain_err(format!("r = {r} outside the polar chart")));
            }
            if !in_principal(k2, phi) {
                return Err(domain_err(format!("phi = {phi} outside principal domain")));
            }
        }
    }
    Ok(())
}

fn to_ambient_unchecked(kp: KappaPair, p: &ChartPoint) -> Ambient {
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    match *p {
        ChartPoint::Ambient(s) => s,
        ChartPoint::ParallelI { a1, a2 } => {
            let c2 = ck(k12, a2);
            Ambient::new(ck(k1, a1) * c2, sk(k1, a1) * c2, sk(k12, a2))
        }
        ChartPoint::ParallelII { b1, b2 } => {
            let c1 = ck(k1, b1);
            Ambient::new(c1 * ck(k12, b2), sk(k1, b1), c1 * sk(k12, b2))
        }
        ChartPoint::Polar { r, phi } => {
            let s = sk(k1, r);
            Ambient::new(ck(k1, r), s * ck(k2, phi), s * sk(k2, phi))
        }
    }
}

/// Ambient coordinates of a chart point.
pub fn to_ambient(kp: KappaPair, p: &ChartPoint) -> Result<Ambient> {
    check_domain(kp, p)?;
    Ok(to_ambient_unchecked(kp, p))
}

/// Express an ambient point in the target chart.
pub fn from_ambient(kp: KappaPair, s: Ambient, target: Chart) -> Result<ChartPoint> {
    check_domain(kp, &ChartPoint::Ambient(s))?;
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    let wrap = |what: &'static str| move |e: Error| domain_err(format!("{what}: {e}"));
    let p = match target {
        Chart::Ambient => return Ok(ChartPoint::Ambient(s)),
        Chart::ParallelI => {
            let c2 = positive_root(1.0 - k12 * s.s2 * s.s2, "Ck(a2)")?;
            let a2 = kinv(k12, s.s2, c2).map_err(wrap("a2"))?;
            let a1 = kinv(k1, s.s1 / c2, s.s0 / c2).map_err(wrap("a1"))?;
            ChartPoint::ParallelI { a1, a2 }
        }
        Chart::ParallelII => {
            let c1 = positive_root(1.0 - k1 * s.s1 * s.s1, "Ck(b1)")?;
            let b1 = kinv(k1, s.s1, c1).map_err(wrap("b1"))?;
            let b2 = kinv(k12, s.s2 / c1, s.s0 / c1).map_err(wrap("b2"))?;
            ChartPoint::ParallelII { b1, b2 }
        }
        Chart::Polar => {
            let sr = positive_root(s.s1 * s.s1 + k2 * s.s2 * s.s2, "Sk(r)")?;
            let r = kinv(k1, sr, s.s0).map_err(wrap("r"))?;
            let phi = kinv(k2, s.s2 / sr, s.s1 / sr).map_err(wrap("phi"))?;
            ChartPoint::Polar { r, phi }
        }
    };
    check_domain(kp, &p)?;
    Ok(p)
}

fn positive_root(sq: f64, what: &str) -> Result<f64> {
    if sq > CHART_TOL * CHART_TOL {
        Ok(sq.sqrt())
    } else {
        Err(domain_err(format!("{what} vanishes")))
    }
}

/// Convert between any two charts through ambient coordinates.
pub fn convert(kp: KappaPair, p: &ChartPoint, target: Chart) -> Result<ChartPoint> {
    from_ambient(kp, to_ambient(kp, p)?, target)
}

/// Components of a symmetric 2×2 tensor in a chart's coordinate order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricValue {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

impl MetricValue {
    pub const fn diag(g11: f64, g22: f64) -> Self {
        Self { g11, g12: 0.0, g22 }
    }

    pub fn max_abs_diff(&self, o: &MetricValue) -> f64 {
        (self.g11 - o.g11).abs().max((self.g12 - o.g12).abs()).max((self.g22 - o.g22).abs())
    }

    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    /// Pullback `Jᵀ g J` by a coordinate Jacobian `J[i][j] = ∂x^i/∂y^j`.
    pub fn pullback(&self, jac: [[f64; 2]; 2]) -> MetricValue {
        let g = [[self.g11, self.g12], [self.g12, self.g22]];
        let mut out = [[0.0; 2]; 2];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, o) in row.iter_mut().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        *o += jac[i][a] * g[i][j] * jac[j][b];
                    }
                }
            }
        }
        MetricValue { g11: out[0][0], g12: 0.5 * (out[0][1] + out[1][0]), g22: out[1][1] }
    }
}

/// Diagonal parts `(A, B)` with main metric `A dx1² + κ2 B dx2²`.
fn metric_parts(kp: KappaPair, chart: Chart, c: [f64; 2]) -> (f64, f64) {
    match chart {
        Chart::ParallelI => (ck(kp.k12(), c[1]).powi(2), 1.0),
        Chart::ParallelII => (1.0, ck(kp.k1, c[0]).powi(2)),
        Chart::Polar => (1.0, sk(kp.k1, c[0]).powi(2)),
        Chart::Ambient => unreachable!("ambient points are converted first"),
    }
}

/// Two-dimensional chart point; ambient points go to parallel I.
fn intrinsic(kp: KappaPair, p: &ChartPoint) -> Result<(Chart, [f64; 2])> {
    check_domain(kp, p)?;
    let q = match p {
        ChartPoint::Ambient(s) => from_ambient(kp, *s, Chart::ParallelI)?,
        other => *other,
    };
    Ok((q.chart(), q.coords().expect("intrinsic chart")))
}

/// The main metric (ambient flat metric over κ1, restricted to the κ-sphere).
///
/// Ambient points are answered in parallel I coordinates.
pub fn metric_main(kp: KappaPair, p: &ChartPoint) -> Result<MetricValue> {
    let (chart, c) = intrinsic(kp, p)?;
    let (a, b) = metric_parts(kp, chart, c);
    Ok(MetricValue::diag(a, kp.k2 * b))
}

/// The subsidiary metric: main metric over κ2, or for κ2 = 0 the metric
/// induced on the leaves `a1 = const` of the invariant foliation.
pub fn metric_subsidiary(kp: KappaPair, p: &ChartPoint) -> Result<MetricValue> {
    let (chart, c) = intrinsic(kp, p)?;
    let (a, b) = metric_parts(kp, chart, c);
    if kp.k2 == 0.0 {
        Ok(MetricValue::diag(0.0, b))
    } else {
        Ok(MetricValue::diag(a / kp.k2, b))
    }
}

/// Metric induced from the ambient form, by central differences of the chart
/// parametrization. Independent of the closed forms in [`metric_main`].
pub fn induced_metric(kp: KappaPair, p: &ChartPoint) -> Result<MetricValue> {
    let (chart, c) = intrinsic(kp, p)?;
    let h = METRIC_FD_STEP;
    let s = to_ambient_unchecked(kp, &ChartPoint::from_coords(chart, c)?);
    let mut d = [[0.0; 3]; 2];
    for (k, dk) in d.iter_mut().enumerate() {
        let mut plus = c;
        let mut minus = c;
        plus[k] += h;
        minus[k] -= h;
        let sp = to_ambient_unchecked(kp, &ChartPoint::from_coords(chart, plus)?).to_array();
        let sm = to_ambient_unchecked(kp, &ChartPoint::from_coords(chart, minus)?).to_array();
        for i in 0..3 {
            dk[i] = (sp[i] - sm[i]) / (2.0 * h);
        }
    }
    let (k1, k2) = (kp.k1, kp.k2);
    let form = |u: &[f64; 3], v: &[f64; 3]| {
        if k1.abs() >= 0.1 {
            (u[0] * v[0] + k1 * u[1] * v[1] + k1 * k2 * u[2] * v[2]) / k1
        } else {
            // ds0 = -κ1 (s1 ds1 + κ2 s2 ds2) / s0 on the κ-sphere
            let wu = s.s1 * u[1] + k2 * s.s2 * u[2];
            let wv = s.s1 * v[1] + k2 * s.s2 * v[2];
            k1 * wu * wv / (s.s0 * s.s0) + u[1] * v[1] + k2 * u[2] * v[2]
        }
    };
    Ok(MetricValue {
        g11: form(&d[0], &d[0]),
        g12: form(&d[0], &d[1]),
        g22: form(&d[1], &d[1]),
    })
}

/// An isometry generator evaluated at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum TangentVector {
    /// Components along `(∂s0, ∂s1, ∂s2)`.
    Ambient([f64; 3]),
    /// Components along `(∂a1, ∂a2)`.
    ParallelI([f64; 2]),
}

impl TangentVector {
    pub fn components(&self) -> &[f64] {
        match self {
            TangentVector::Ambient(v) => v,
            TangentVector::ParallelI(v) => v,
        }
    }
}

/// Vector fields of the generators `[J01, J02, J12]` at `p`, in ambient or
/// parallel I components.
pub fn killing_fields(kp: KappaPair, p: &ChartPoint, chart: Chart) -> Result<[TangentVector; 3]> {
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    match chart {
        Chart::Ambient => {
            let s = to_ambient(kp, p)?;
            Ok([
                TangentVector::Ambient([k1 * s.s1, -s.s0, 0.0]),
                TangentVector::Ambient([k12 * s.s2, 0.0, -s.s0]),
                TangentVector::Ambient([0.0, k2 * s.s2, -s.s1]),
            ])
        }
        Chart::ParallelI => {
            let [a1, a2] = convert(kp, p, Chart::ParallelI)?.coords().expect("parallel I");
            let t = tk(k12, a2).map_err(|e| domain_err(e.to_string()))?;
            let (c1, s1) = (ck(k1, a1), sk(k1, a1));
            Ok([
                TangentVector::ParallelI([-1.0, 0.0]),
                TangentVector::ParallelI([-k12 * s1 * t, -c1]),
                TangentVector::ParallelI([k2 * c1 * t, -s1]),
            ])
        }
        other => Err(Error::InvalidParameter(format!(
            "vector fields are provided in ambient or parallel I charts, not {other:?}"
        ))),
    }
}

/// Parallel I components of a single generator's vector field, without the
/// principal-domain check (used for stencils).
pub fn killing_field_parallel_i(kp: KappaPair, gen: Generator, a1: f64, a2: f64) -> [f64; 2] {
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    let t = sk(k12, a2) / ck(k12, a2);
    match gen {
        Generator::J01 => [-1.0, 0.0],
        Generator::J02 => [-k12 * sk(k1, a1) * t, -ck(k1, a1)],
        Generator::J12 => [k2 * ck(k1, a1) * t, -sk(k1, a1)],
    }
}

/// Gaussian curvature of the main metric by the Brioschi formula, with
/// central-difference stencils of step [`CURVATURE_FD_STEP`] and its half,
/// combined by Richardson extrapolation.
pub fn gaussian_curvature(kp: KappaPair, p: &ChartPoint) -> Result<f64> {
    if kp.k2 == 0.0 {
        return Err(Error::DegenerateMetric);
    }
    let (chart, c) = intrinsic(kp, p)?;
    let efg = |u: f64, v: f64| {
        let (a, b) = metric_parts(kp, chart, [u, v]);
        (a, 0.0, kp.k2 * b)
    };
    let h = CURVATURE_FD_STEP;
    let (coarse, fine) = (brioschi(efg, c[0], c[1], h), brioschi(efg, c[0], c[1], 0.5 * h));
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Brioschi formula for the curvature of `E du² + 2F du dv + G dv²`.
pub fn brioschi(efg: impl Fn(f64, f64) -> (f64, f64, f64), u: f64, v: f64, h: f64) -> f64 {
    let at = |du: f64, dv: f64| efg(u + du * h, v + dv * h);
    let (e, f, g) = at(0.0, 0.0);
    let (eup, fup, gup) = at(1.0, 0.0);
    let (eum, fum, gum) = at(-1.0, 0.0);
    let (evp, fvp, gvp) = at(0.0, 1.0);
    let (evm, fvm, gvm) = at(0.0, -1.0);
    let d1 = |p: f64, m: f64| (p - m) / (2.0 * h);
    let d2 = |p: f64, c: f64, m: f64| (p - 2.0 * c + m) / (h * h);
    let (e_u, e_v) = (d1(eup, eum), d1(evp, evm));
    let (f_u, f_v) = (d1(fup, fum), d1(fvp, fvm));
    let (g_u, g_v) = (d1(gup, gum), d1(gvp, gvm));
    let e_vv = d2(evp, e, evm);
    let g_uu = d2(gup, g, gum);
    let f_uv = (at(1.0, 1.0).1 - at(1.0, -1.0).1 - at(-1.0, 1.0).1 + at(-1.0, -1.0).1) / (4.0 * h * h);

    let det3 = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let m1 = [
        [-0.5 * e_vv + f_uv - 0.5 * g_uu, 0.5 * e_u, f_u - 0.5 * e_v],
        [f_v - 0.5 * g_u, e, f],
        [0.5 * g_v, f, g],
    ];
    let m2 = [[0.0, 0.5 * e_v, 0.5 * g_u], [0.5 * e_v, e, f], [0.5 * g_u, f, g]];
    let w = e * g - f * f;
    (det3(m1) - det3(m2)) / (w * w)
}

/// The Casimir as a second-order operator in parallel I coordinates,
/// applied to `f` at `p`:
///
/// `κ2 / Ck²_{κ1κ2}(a2) ∂²a1 + ∂²a2 - κ1κ2 Tk_{κ1κ2}(a2) ∂a2`.
pub fn laplace_beltrami_apply(kp: KappaPair, f: &dyn Fn(f64, f64) -> f64, p: &ChartPoint) -> Result<f64> {
    let [a1, a2] = convert(kp, p, Chart::ParallelI)?.coords().expect("parallel I");
    let k12 = kp.k12();
    let c = ck(k12, a2);
    let t = tk(k12, a2).map_err(|e| domain_err(e.to_string()))?;
    let h = LAPLACE_FD_STEP;
    let f0 = f(a1, a2);
    let f11 = (f(a1 + h, a2) - 2.0 * f0 + f(a1 - h, a2)) / (h * h);
    let f22 = (f(a1, a2 + h) - 2.0 * f0 + f(a1, a2 - h)) / (h * h);
    let f2 = (f(a1, a2 + h) - f(a1, a2 - h)) / (2.0 * h);
    Ok(kp.k2 / (c * c) * f11 + f22 - k12 * t * f2)
}
