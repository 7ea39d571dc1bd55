//! The Cayley-Klein groups SO_{κ1,κ2}(3) in their 3×3 vector representation.
//!
//! The generators act on ℝ³ as
//!
//! ```text
//! ρ(J01) = -κ1 e01 + e10,   ρ(J02) = -κ1κ2 e02 + e20,   ρ(J12) = -κ2 e12 + e21
//! ```
//!
//! and preserve the bilinear form `I_κ = diag(1, κ1, κ1κ2)`. Group elements
//! are parametrized as `exp(a1 J01) exp(a2 J02) exp(ξ J12)`.

use nalgebra::{Matrix3, SMatrix, Vector3};
use serde::Serialize;

use crate::algebra::{AlgebraElement, Generator, KappaPair};
use crate::error::{Error, Result};
use crate::kappa_trig::{ck, kinv, sk};
use crate::spaces::Ambient;

/// Maximum number of Taylor terms in [`expm_series`].
pub const SERIES_CAP: usize = 30;
/// Norm above which [`expm_series`] scales the argument before summing.
pub const SCALING_THRESHOLD: f64 = 0.5;
/// Smallest admissible `Ck` divisor when extracting chart coordinates.
pub const CHART_TOL: f64 = 1e-9;
/// Relative tolerance for the ambient constraint in [`act`].
pub const SURFACE_TOL: f64 = 1e-9;

/// `I_κ = diag(1, κ1, κ1κ2)`.
pub fn metric_form(kp: KappaPair) -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, kp.k1, kp.k12()))
}

/// Matrix of an algebra element in the vector representation.
pub fn rep(kp: KappaPair, x: AlgebraElement) -> Matrix3<f64> {
    let mut m = Matrix3::zeros();
    m[(0, 1)] = -kp.k1 * x.c01;
    m[(1, 0)] = x.c01;
    m[(0, 2)] = -kp.k12() * x.c02;
    m[(2, 0)] = x.c02;
    m[(1, 2)] = -kp.k2 * x.c12;
    m[(2, 1)] = x.c12;
    m
}

/// An element of SO_{κ1,κ2}(3), tagged with its contraction parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub m: Matrix3<f64>,
    pub kp: KappaPair,
}

impl GroupElement {
    pub fn identity(kp: KappaPair) -> Self {
        Self { m: Matrix3::identity(), kp }
    }

    pub fn new(kp: KappaPair, m: Matrix3<f64>) -> Self {
        Self { m, kp }
    }

    /// Max-entry defect of `mᵀ I_κ m = I_κ` and `|det m - 1|`.
    pub fn invariant_defects(&self) -> (f64, f64) {
        let ik = metric_form(self.kp);
        let metric = (self.m.transpose() * ik * self.m - ik).amax();
        (metric, (self.m.determinant() - 1.0).abs())
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement::new(self.kp, self.m * other.m)
    }

    /// Image of the origin `O = (1, 0, 0)`.
    pub fn origin_image(&self) -> Ambient {
        let c = self.m.column(0);
        Ambient::new(c[0], c[1], c[2])
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.compose(&rhs)
    }
}

/// Closed-form one-parameter subgroup `exp(t ρ(gen))`.
pub fn exp_one_param(kp: KappaPair, gen: Generator, t: f64) -> GroupElement {
    // κ-label and the coordinate plane the generator rotates
    let (kappa, i, j) = match gen {
        Generator::J01 => (kp.k1, 0, 1),
        Generator::J02 => (kp.k12(), 0, 2),
        Generator::J12 => (kp.k2, 1, 2),
    };
    let (c, s) = (ck(kappa, t), sk(kappa, t));
    let mut m = Matrix3::identity();
    m[(i, i)] = c;
    m[(j, j)] = c;
    m[(i, j)] = -kappa * s;
    m[(j, i)] = s;
    GroupElement::new(kp, m)
}

/// Matrix exponential by truncated Taylor series with scaling and squaring.
pub fn expm_series<const N: usize>(a: &SMatrix<f64, N, N>) -> Result<SMatrix<f64, N, N>> {
    let norm = inf_norm(a);
    let mut squarings = 0u32;
    if norm > SCALING_THRESHOLD {
        squarings = (norm / SCALING_THRESHOLD).log2().ceil() as u32;
    }
    let scaled = a / 2f64.powi(squarings as i32);
    let mut sum = SMatrix::<f64, N, N>::identity();
    let mut term = SMatrix::<f64, N, N>::identity();
    let mut residual = f64::INFINITY;
    for k in 1..=SERIES_CAP {
        term = term * scaled / k as f64;
        sum += term;
        residual = inf_norm(&term);
        if residual < 1e-18 {
            break;
        }
    }
    if residual > 1e-14 {
        return Err(Error::Convergence { residual });
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    Ok(sum)
}

fn inf_norm<const N: usize>(a: &SMatrix<f64, N, N>) -> f64 {
    a.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// `exp(ρ(X))` through the series; an oracle for the closed forms.
pub fn exp_series(kp: KappaPair, x: AlgebraElement) -> Result<GroupElement> {
    Ok(GroupElement::new(kp, expm_series(&rep(kp, x))?))
}

/// Local coordinates `(a1, a2, ξ)` of `exp(a1 J01) exp(a2 J02) exp(ξ J12)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct GroupCoordinates {
    pub a1: f64,
    pub a2: f64,
    pub xi: f64,
}

impl GroupCoordinates {
    pub const fn new(a1: f64, a2: f64, xi: f64) -> Self {
        Self { a1, a2, xi }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a1, self.a2, self.xi]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }
}

pub fn group_from_coords(kp: KappaPair, gc: GroupCoordinates) -> GroupElement {
    exp_one_param(kp, Generator::J01, gc.a1)
        * exp_one_param(kp, Generator::J02, gc.a2)
        * exp_one_param(kp, Generator::J12, gc.xi)
}

/// Inverse of [`group_from_coords`] on the chart `Ck_{κ1κ2}(a2) > 0`.
pub fn coords_from_group(kp: KappaPair, g: &GroupElement) -> Result<GroupCoordinates> {
    let k12 = kp.k12();
    let s = g.origin_image();
    let c2sq = 1.0 - k12 * s.s2 * s.s2;
    if c2sq < CHART_TOL * CHART_TOL {
        return Err(Error::ChartDomain(format!(
            "Ck_{k12}(a2) vanishes for s2 = {}",
            s.s2
        )));
    }
    let c2 = c2sq.sqrt();
    let a2 = kinv(k12, s.s2, c2).map_err(chart_err("a2"))?;
    let a1 = kinv(kp.k1, s.s1 / c2, s.s0 / c2).map_err(chart_err("a1"))?;
    let h = exp_one_param(kp, Generator::J02, -a2).m * exp_one_param(kp, Generator::J01, -a1).m * g.m;
    let xi = kinv(kp.k2, h[(2, 1)], h[(1, 1)]).map_err(chart_err("xi"))?;
    Ok(GroupCoordinates::new(a1, a2, xi))
}

fn chart_err(what: &'static str) -> impl Fn(Error) -> Error {
    move |e| Error::ChartDomain(format!("cannot recover {what}: {e}"))
}

/// Action of a group element on an ambient point of the κ-sphere.
pub fn act(kp: KappaPair, g: &GroupElement, p: Ambient) -> Result<Ambient> {
    let defect = p.constraint_defect(kp);
    if defect.abs() > SURFACE_TOL * p.scale(kp) {
        return Err(Error::OffSurface { defect });
    }
    let v = g.m * Vector3::new(p.s0, p.s1, p.s2);
    Ok(Ambient::new(v[0], v[1], v[2]))
}
