use thiserror::Error;

use crate::algebra::Generator;
use crate::duality::Duality;

/// Errors raised by the geometry, group and Poisson-Lie routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `x` sits at a singularity of the κ-tangent (`Ck_κ(x)` vanishes).
    #[error("κ-tangent pole: Ck_{kappa}({x}) = {ck:e}")]
    Pole { kappa: f64, x: f64, ck: f64 },

    /// The pair `(c, s)` is not on the κ-circle `c² + κ s² = 1` (or not on its identity branch).
    #[error("point (c={c}, s={s}) is off the κ-circle for κ={kappa}")]
    OffCurve { kappa: f64, s: f64, c: f64 },

    #[error("speed of light must be non-zero")]
    BadSpeed,

    #[error("duality {duality:?} is undefined: requires {required:?} != 0")]
    UndefinedDuality {
        duality: Duality,
        required: KappaIndex,
    },

    #[error("matrix exponential series did not converge (residual {residual:e})")]
    Convergence { residual: f64 },

    #[error("point outside chart domain: {0}")]
    ChartDomain(String),

    /// Ambient point violating `s0² + κ1 s1² + κ1κ2 s2² = 1`.
    #[error("ambient point off the κ-sphere (defect {defect:e})")]
    OffSurface { defect: f64 },

    #[error("metric is degenerate (κ2 = 0)")]
    DegenerateMetric,

    #[error("tensor-square element has residual {residual:e} off the bivector span")]
    Projection { residual: f64 },

    #[error("subset {0:?} is not a subalgebra")]
    NotSubalgebra(Vec<Generator>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Which contraction parameter a restriction refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaIndex {
    K1,
    K2,
}

pub type Result<T> = std::result::Result<T, Error>;
