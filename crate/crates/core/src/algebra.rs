//! The Cayley-Klein Lie algebras so_{κ1,κ2}(3).
//!
//! Basis order is fixed as `(J01, J02, J12)` throughout the crate, with
//!
//! ```text
//! [J12, J01] = J02,   [J12, J02] = -κ2 J01,   [J01, J02] = κ1 J12.
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// The two graded contraction parameters: `k1` is the curvature of the space
/// of points, `k2` fixes the metric signature `diag(+, κ2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaPair {
    pub k1: f64,
    pub k2: f64,
}

impl KappaPair {
    pub const fn new(k1: f64, k2: f64) -> Self {
        Self { k1, k2 }
    }

    /// `κ1 κ2`, the label of the second-kind line subgroup `H02`.
    pub fn k12(&self) -> f64 {
        self.k1 * self.k2
    }

    /// The representative with both parameters in `{-1, 0, 1}`.
    pub fn normalized(&self) -> Self {
        Self::new(sign(self.k1), sign(self.k2))
    }

    /// The nine normalized pairs, ordered by `(κ2, κ1)` descending as the rows
    /// and columns of the usual 3×3 table.
    pub fn normalized9() -> [KappaPair; 9] {
        let mut out = [KappaPair::new(0.0, 0.0); 9];
        for (r, k2) in [1.0, 0.0, -1.0].into_iter().enumerate() {
            for (c, k1) in [1.0, 0.0, -1.0].into_iter().enumerate() {
                out[3 * r + c] = KappaPair::new(k1, k2);
            }
        }
        out
    }

    /// Geometry from a cosmological constant and a speed of light:
    /// `κ1 = -Λ`, `κ2 = -1/c²`. An infinite `c` gives the Newtonian `κ2 = 0`.
    pub fn from_kinematics(lambda: f64, c: f64) -> Result<Self> {
        if c == 0.0 || c.is_nan() {
            return Err(Error::BadSpeed);
        }
        if !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("Λ = {lambda}")));
        }
        let k2 = if c.is_infinite() { 0.0 } else { -1.0 / (c * c) };
        Ok(Self::new(-lambda + 0.0, k2))
    }
}

impl fmt::Display for KappaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k1, self.k2)
    }
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// A basis generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    J01,
    J02,
    J12,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::J01, Generator::J02, Generator::J12];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    /// Kinematical name: time translation, space translation, boost.
    pub fn kinematical_name(self) -> &'static str {
        match self {
            Generator::J01 => "P0",
            Generator::J02 => "P1",
            Generator::J12 => "K",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Element `c01 J01 + c02 J02 + c12 J12` of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct AlgebraElement {
    pub c01: f64,
    pub c02: f64,
    pub c12: f64,
}

impl AlgebraElement {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);

    pub const fn new(c01: f64, c02: f64, c12: f64) -> Self {
        Self { c01, c02, c12 }
    }

    pub fn basis(g: Generator) -> Self {
        let mut c = [0.0; 3];
        c[g.index()] = 1.0;
        Self::from_array(c)
    }

    pub const fn from_array(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.c01, self.c02, self.c12]
    }

    pub fn coeff(&self, g: Generator) -> f64 {
        self.to_array()[g.index()]
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl From<Generator> for AlgebraElement {
    fn from(g: Generator) -> Self {
        Self::basis(g)
    }
}

impl Add for AlgebraElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c01 + o.c01, self.c02 + o.c02, self.c12 + o.c12)
    }
}

impl Sub for AlgebraElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c01 - o.c01, self.c02 - o.c02, self.c12 - o.c12)
    }
}

impl Neg for AlgebraElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c01, -self.c02, -self.c12)
    }
}

impl Mul<AlgebraElement> for f64 {
    type Output = AlgebraElement;
    fn mul(self, x: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self * x.c01, self * x.c02, self * x.c12)
    }
}

/// Lie bracket of so_{κ1,κ2}(3).
pub fn bracket(kp: KappaPair, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement {
    let [x0, x1, x2] = x.to_array();
    let [y0, y1, y2] = y.to_array();
    AlgebraElement::new(
        kp.k2 * (x1 * y2 - x2 * y1),
        x2 * y0 - x0 * y2,
        kp.k1 * (x0 * y1 - x1 * y0),
    )
}

/// Structure constants `c[i][j][k]` with `[X_i, X_j] = c^k_{ij} X_k`.
pub fn structure_constants(kp: KappaPair) -> [[[f64; 3]; 3]; 3] {
    let mut c = [[[0.0; 3]; 3]; 3];
    for (i, gi) in Generator::ALL.into_iter().enumerate() {
        for (j, gj) in Generator::ALL.into_iter().enumerate() {
            c[i][j] = bracket(kp, gi.into(), gj.into()).to_array();
        }
    }
    c
}

/// Diagonal coefficients of the quadratic Casimir `κ2 J01² + J02² + κ1 J12²`.
pub fn casimir_coeffs(kp: KappaPair) -> [f64; 3] {
    [kp.k2, 1.0, kp.k1]
}

/// Maximum-norm Jacobi defect of three elements.
pub fn jacobi_defect(kp: KappaPair, x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> f64 {
    let b = |a, c| bracket(kp, a, c);
    (b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y)).max_abs()
}

/// The nine geometries, indexed by the signs of `(κ1, κ2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
    /// Also the oscillating Newton-Hooke spacetime.
    CoEuclidean,
    Galilean,
    /// Also the expanding Newton-Hooke spacetime.
    CoMinkowskian,
    /// Also anti-de Sitter spacetime.
    CoHyperbolic,
    Minkowskian,
    /// Also de Sitter spacetime.
    DoublyHyperbolic,
}

/// Classification record: motion group and the isotropy subgroups of a point
/// (`H0`), a first-kind line (`H01`) and a second-kind line (`H02`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometryLabel {
    pub geometry: Geometry,
    pub name: &'static str,
    pub kinematical_name: Option<&'static str>,
    pub group: &'static str,
    pub h0: &'static str,
    pub h01: &'static str,
    pub h02: &'static str,
}

/// Classify a κ-pair by the signs of its entries.
pub fn classify(kp: KappaPair) -> GeometryLabel {
    use Geometry::*;
    let n = kp.normalized();
    let lab = |geometry, name, kinematical_name, group, h0, h01, h02| GeometryLabel {
        geometry,
        name,
        kinematical_name,
        group,
        h0,
        h01,
        h02,
    };
    match (n.k1 as i8, n.k2 as i8) {
        (1, 1) => lab(Spherical, "Spherical", None, "SO(3)", "SO(2)", "SO(2)", "SO(2)"),
        (0, 1) => lab(Euclidean, "Euclidean", None, "ISO(2)", "SO(2)", "R", "R"),
        (-1, 1) => lab(Hyperbolic, "Hyperbolic", None, "SO(2,1)", "SO(2)", "SO(1,1)", "SO(1,1)"),
        (1, 0) => lab(CoEuclidean, "Co-Euclidean", Some("Oscillating Newton-Hooke"), "ISO(2)", "R", "SO(2)", "R"),
        (0, 0) => lab(Galilean, "Galilean", Some("Galilean"), "IISO(1)", "R", "R", "R"),
        (-1, 0) => lab(CoMinkowskian, "Co-Minkowskian", Some("Expanding Newton-Hooke"), "ISO(1,1)", "R", "SO(1,1)", "R"),
        (1, -1) => lab(CoHyperbolic, "Co-Hyperbolic", Some("Anti-de Sitter"), "SO(2,1)", "SO(1,1)", "SO(2)", "SO(1,1)"),
        (0, -1) => lab(Minkowskian, "Minkowskian", Some("Minkowskian"), "ISO(1,1)", "SO(1,1)", "R", "R"),
        _ => lab(DoublyHyperbolic, "Doubly Hyperbolic", Some("De Sitter"), "SO(2,1)", "SO(1,1)", "SO(1,1)", "SO(2)"),
    }
}
