//! Per-geometry closed forms in parallel I coordinates, written out with the
//! ordinary circular, flat and hyperbolic functions. They serve as
//! reference values for the κ-parametrized formulas.

use crate::algebra::Geometry;
use crate::group::GroupCoordinates;

/// Main metric `(g11, g22)`, the leaf metric `(0, g22)` when κ2 = 0, and the
/// `(∂a1, ∂a2)` components of the isometry fields of `J01, J02, J12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricRow {
    pub main: (f64, f64),
    pub subsidiary: Option<(f64, f64)>,
    pub fields: [[f64; 2]; 3],
}

pub fn metric_row(g: Geometry, a1: f64, a2: f64) -> MetricRow {
    use Geometry::*;
    let (main, subsidiary) = match g {
        Spherical => ((a2.cos().powi(2), 1.0), None),
        Euclidean => ((1.0, 1.0), None),
        Hyperbolic => ((a2.cosh().powi(2), 1.0), None),
        CoEuclidean | Galilean | CoMinkowskian => ((1.0, 0.0), Some((0.0, 1.0))),
        CoHyperbolic => ((a2.cosh().powi(2), -1.0), None),
        Minkowskian => ((1.0, -1.0), None),
        DoublyHyperbolic => ((a2.cos().powi(2), -1.0), None),
    };
    let j01 = [-1.0, 0.0];
    let (j02, j12) = match g {
        Spherical => ([-a1.sin() * a2.tan(), -a1.cos()], [a1.cos() * a2.tan(), -a1.sin()]),
        Euclidean => ([0.0, -1.0], [a2, -a1]),
        Hyperbolic => ([a1.sinh() * a2.tanh(), -a1.cosh()], [a1.cosh() * a2.tanh(), -a1.sinh()]),
        CoEuclidean => ([0.0, -a1.cos()], [0.0, -a1.sin()]),
        Galilean => ([0.0, -1.0], [0.0, -a1]),
        CoMinkowskian => ([0.0, -a1.cosh()], [0.0, -a1.sinh()]),
        CoHyperbolic => ([a1.sin() * a2.tanh(), -a1.cos()], [-a1.cos() * a2.tanh(), -a1.sin()]),
        Minkowskian => ([0.0, -1.0], [-a2, -a1]),
        DoublyHyperbolic => ([-a1.sinh() * a2.tan(), -a1.cosh()], [-a1.cosh() * a2.tan(), -a1.sinh()]),
    };
    MetricRow { main, subsidiary, fields: [j01, j02, j12] }
}

/// `[{ξ, a1}, {ξ, a2}, {a1, a2}]` of the first-kind Poisson-Lie group, for
/// the six geometries with κ2 ≠ 0. In the Lorentzian rows `(a1, a2)` are
/// the spacetime coordinates `(x0, x1)`.
pub fn sklyanin_row(g: Geometry, z: f64, gc: GroupCoordinates) -> Option<[f64; 3]> {
    use Geometry::*;
    let GroupCoordinates { a1: _, a2, xi } = gc;
    Some(match g {
        Spherical => [-z * xi.sin() / a2.cos(), z * (a2.cos() * xi.cos() - 1.0) / a2.cos(), z * a2.tan()],
        Euclidean => [-z * xi.sin(), z * (xi.cos() - 1.0), z * a2],
        Hyperbolic => [-z * xi.sin() / a2.cosh(), z * (a2.cosh() * xi.cos() - 1.0) / a2.cosh(), z * a2.tanh()],
        CoHyperbolic => [z * xi.sinh() / a2.cosh(), z * (a2.cosh() * xi.cosh() - 1.0) / a2.cosh(), -z * a2.tanh()],
        Minkowskian => [z * xi.sinh(), z * (xi.cosh() - 1.0), -z * a2],
        DoublyHyperbolic => [z * xi.sinh() / a2.cos(), z * (a2.cos() * xi.cosh() - 1.0) / a2.cos(), -z * a2.tan()],
        CoEuclidean | Galilean | CoMinkowskian => return None,
    })
}
