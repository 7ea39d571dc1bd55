//! Curvature-dependent trigonometry.
//!
//! `ck`, `sk` and `tk` interpolate between the circular functions (κ > 0),
//! the parabolic ones (κ = 0, where `ck = 1` and `sk = tk = x`) and the
//! hyperbolic ones (κ < 0):
//!
//! ```text
//! ck(κ, x) = Σ (-κ)^l x^{2l}   / (2l)!
//! sk(κ, x) = Σ (-κ)^l x^{2l+1} / (2l+1)!
//! ```
//!
//! Closed forms are used away from κ = 0. Inside `|κ| < SMALL_KAPPA` a
//! truncated series in κ is evaluated instead, so the κ → 0 limit is smooth.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Below this magnitude κ is treated with a series in κ instead of `sqrt(κ)`.
pub const SMALL_KAPPA: f64 = 1e-12;

/// Default threshold for `|ck|` under which `tk` reports a pole.
pub const DEFAULT_POLE_TOL: f64 = 1e-12;

/// Default relative tolerance for the κ-circle membership test in [`kinv`].
pub const DEFAULT_CIRCLE_TOL: f64 = 1e-9;

/// κ-cosine.
pub fn ck(kappa: f64, x: f64) -> f64 {
    if kappa.abs() < SMALL_KAPPA {
        let x2 = x * x;
        let k = kappa * x2;
        1.0 - k / 2.0 + k * k / 24.0 - k * k * k / 720.0
    } else if kappa > 0.0 {
        (kappa.sqrt() * x).cos()
    } else {
        ((-kappa).sqrt() * x).cosh()
    }
}

/// κ-sine.
pub fn sk(kappa: f64, x: f64) -> f64 {
    if kappa.abs() < SMALL_KAPPA {
        let k = kappa * x * x;
        x * (1.0 - k / 6.0 + k * k / 120.0 - k * k * k / 5040.0)
    } else if kappa > 0.0 {
        let r = kappa.sqrt();
        (r * x).sin() / r
    } else {
        let r = (-kappa).sqrt();
        (r * x).sinh() / r
    }
}

/// κ-tangent `sk / ck`, with the default pole tolerance.
pub fn tk(kappa: f64, x: f64) -> Result<f64> {
    tk_with_tol(kappa, x, DEFAULT_POLE_TOL)
}

pub fn tk_with_tol(kappa: f64, x: f64, pole_tol: f64) -> Result<f64> {
    let c = ck(kappa, x);
    if c.abs() < pole_tol {
        return Err(Error::Pole { kappa, x, ck: c });
    }
    Ok(sk(kappa, x) / c)
}

/// κ-versine `(1 - ck(κ, x)) / κ`, regular at κ = 0 where it equals `x²/2`.
pub fn vk(kappa: f64, x: f64) -> f64 {
    let h = sk(kappa, 0.5 * x);
    2.0 * h * h
}

/// Half-width of the principal domain of the κ-circle: `π/√κ` for κ > 0,
/// infinite otherwise.
pub fn half_period(kappa: f64) -> f64 {
    if kappa >= SMALL_KAPPA {
        PI / kappa.sqrt()
    } else {
        f64::INFINITY
    }
}

/// Inverse of `x ↦ (ck(κ, x), sk(κ, x))`, a κ-generalised `atan2`.
///
/// Returns the unique `x` in `(-π/√κ, π/√κ]` (κ > 0) or in ℝ (κ ≤ 0) with
/// `ck(κ, x) = c` and `sk(κ, x) = s`. For κ ≤ 0 only the branch `c > 0` is
/// reachable.
pub fn kinv(kappa: f64, s: f64, c: f64) -> Result<f64> {
    kinv_with_tol(kappa, s, c, DEFAULT_CIRCLE_TOL)
}

pub fn kinv_with_tol(kappa: f64, s: f64, c: f64, tol: f64) -> Result<f64> {
    let off = Error::OffCurve { kappa, s, c };
    if !(s.is_finite() && c.is_finite()) {
        return Err(off);
    }
    let scale = 1.0 + c * c + (kappa * s * s).abs();
    if (c * c + kappa * s * s - 1.0).abs() > tol * scale {
        return Err(off);
    }
    if kappa.abs() < SMALL_KAPPA && c > 0.0 {
        // x = asin(√κ s)/√κ expanded in κ (same series for both signs)
        let k = kappa * s * s;
        return Ok(s * (1.0 + k / 6.0 + 3.0 * k * k / 40.0));
    }
    if kappa > 0.0 {
        let r = kappa.sqrt();
        let mut theta = (r * s).atan2(c);
        if theta <= -PI {
            theta += 2.0 * PI;
        }
        Ok(theta / r)
    } else if c > 0.0 {
        let r = (-kappa).sqrt();
        Ok((r * s).asinh() / r)
    } else {
        Err(off)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const KAPPAS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

    fn grid() -> impl Iterator<Item = f64> {
        (0..61).map(|i| -3.0 + 0.1 * i as f64)
    }

    #[test]
    fn closed_form_branches() {
        assert_abs_diff_eq!(ck(1.0, PI / 2.0), 0.0, epsilon = 1e-15);
        assert_eq!(ck(0.0, 17.3), 1.0);
        assert_abs_diff_eq!(ck(-1.0, 1.0), 1.0_f64.cosh(), epsilon = 1e-15);
        assert_abs_diff_eq!(ck(-1.0, 1.0), 1.5430806, epsilon = 1e-7);
        assert_abs_diff_eq!(sk(1.0, PI / 2.0), 1.0, epsilon = 1e-15);
        assert_eq!(sk(0.0, 2.5), 2.5);
        assert_abs_diff_eq!(sk(-1.0, 1.0), 1.1752012, epsilon = 1e-7);
    }

    #[test]
    fn tangent_and_pole() {
        for x in grid() {
            assert_eq!(tk(0.0, x).unwrap(), x);
        }
        assert_abs_diff_eq!(tk(1.0, PI / 4.0).unwrap(), 1.0, epsilon = 1e-15);
        assert!(matches!(tk(1.0, PI / 2.0), Err(Error::Pole { .. })));
        // a looser tolerance widens the excluded band
        assert!(tk_with_tol(1.0, PI / 2.0 - 1e-6, 1e-5).is_err());
        assert!(tk_with_tol(1.0, PI / 2.0 - 1e-6, 1e-7).is_ok());
    }

    #[test]
    fn fundamental_and_double_argument() {
        for &k in &KAPPAS {
            for x in grid() {
                let (c, s) = (ck(k, x), sk(k, x));
                assert_abs_diff_eq!(c * c + k * s * s, 1.0, epsilon = 1e-12);
                assert_abs_diff_eq!(ck(k, 2.0 * x), c * c - k * s * s, epsilon = 1e-12);
                assert_abs_diff_eq!(sk(k, 2.0 * x), 2.0 * s * c, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn small_kappa_series_joins_closed_form() {
        for x in grid() {
            for &k in &[1e-13, -1e-13] {
                assert_abs_diff_eq!(ck(k, x), 1.0 - k * x * x / 2.0, epsilon = 1e-15);
                assert_abs_diff_eq!(sk(k, x), x - k * x * x * x / 6.0, epsilon = 1e-15);
            }
            let eps = 1e-8;
            assert!((ck(eps, x) - ck(0.0, x)).abs() <= 5.0 * eps);
            assert!((sk(eps, x) - sk(0.0, x)).abs() <= 5.0 * eps);
            assert!((ck(-eps, x) - ck(0.0, x)).abs() <= 5.0 * eps);
        }
    }

    #[test]
    fn versine() {
        for &k in &KAPPAS {
            for x in grid() {
                let v = if k == 0.0 { x * x / 2.0 } else { (1.0 - ck(k, x)) / k };
                assert_abs_diff_eq!(vk(k, x), v, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn kinv_examples() {
        for &k in &KAPPAS {
            assert_eq!(kinv(k, 0.0, 1.0).unwrap(), 0.0);
        }
        assert_abs_diff_eq!(kinv(1.0, 0.7f64.sin(), 0.7f64.cos()).unwrap(), 0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(
            kinv(-1.0, (-2.0f64).sinh(), (-2.0f64).cosh()).unwrap(),
            -2.0,
            epsilon = 1e-14
        );
        // tie at c = -1 resolves to +π/√κ, including a signed zero sine
        assert_abs_diff_eq!(kinv(1.0, 0.0, -1.0).unwrap(), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(kinv(1.0, -0.0, -1.0).unwrap(), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(kinv(4.0, -0.0, -1.0).unwrap(), PI / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn kinv_rejects_off_curve() {
        assert!(matches!(kinv(1.0, 0.5, 0.5), Err(Error::OffCurve { .. })));
        assert!(matches!(kinv(0.0, 3.0, -1.0), Err(Error::OffCurve { .. })));
        assert!(matches!(kinv(-1.0, 0.0, -1.0), Err(Error::OffCurve { .. })));
        assert!(kinv(1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn kinv_round_trip() {
        for &k in &[-1.0, -0.5, -1e-13, 0.0, 1e-13, 0.5, 1.0, 4.0] {
            let hp = half_period(k).min(3.0);
            for i in 0..=60 {
                let x = -hp + 2.0 * hp * i as f64 / 60.0;
                if k > 0.0 && x <= -hp {
                    continue;
                }
                let back = kinv(k, sk(k, x), ck(k, x)).unwrap();
                assert_abs_diff_eq!(back, x, epsilon = 1e-10);
            }
        }
    }
}
