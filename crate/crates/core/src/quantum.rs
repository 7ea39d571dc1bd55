//! The quantum algebra U_z(so_{κ1,κ2}(3)) of the first-kind deformation.
//!
//! ```text
//! Δ(J01) = J01 ⊗ 1 + 1 ⊗ J01
//! Δ(J02) = J02 ⊗ e^{-(z/2)κ2 J01} + e^{(z/2)κ2 J01} ⊗ J02
//! Δ(J12) = J12 ⊗ e^{-(z/2)κ2 J01} + e^{(z/2)κ2 J01} ⊗ J12
//! ```
//!
//! with deformed relations `[J12, J01] = J02`, `[J12, J02] = -sinh(zκ2 J01)/z`,
//! `[J01, J02] = κ1 J12`. Everything is evaluated in tensor powers of three
//! dimensional representations.
//!
//! The vector representation obeys the classical relations, so it is not a
//! representation of the deformed algebra once κ1κ2 ≠ 0. Since
//! `sinh(c ρ(J01)) = Sk_κ1(c) ρ(J01)`, rescaling `J02` and `J12` by
//! `sqrt(Sk_κ1(zκ2) / (zκ2))` gives one that is; the homomorphism property of
//! `Δ` is checked there.

use nalgebra::{Matrix3, SMatrix};

use crate::algebra::{Generator, KappaPair};
use crate::error::{Error, Result};
use crate::group::{expm_series, rep};
use crate::kappa_trig::{sk, vk};
use crate::poisson::{Bivector, CocommutatorMap, PAIRS};

pub type TensorSquareElement = SMatrix<f64, 9, 9>;
pub type TensorCubeElement = SMatrix<f64, 27, 27>;

/// Relative residual allowed off the bivector span in [`first_order_delta`].
pub const PROJECTION_TOL: f64 = 1e-6;

/// Three-dimensional representation used for the tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorRep {
    /// The vector representation (classical relations).
    Vector,
    /// The rescaled representation of the deformed algebra.
    Deformed,
}

/// Scale of `J02` and `J12` in the deformed representation.
pub fn deformed_scale(kp: KappaPair, z: f64) -> Result<f64> {
    let c = z * kp.k2;
    if c == 0.0 {
        return Ok(1.0);
    }
    let q = sk(kp.k1, c) / c;
    if !(q > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "no real deformed representation for κ1 = {}, zκ2 = {c}",
            kp.k1
        )));
    }
    Ok(q.sqrt())
}

/// Generator matrices in the chosen representation.
pub fn generator_rep(kp: KappaPair, z: f64, g: Generator, r: FactorRep) -> Result<Matrix3<f64>> {
    let m = rep(kp, g.into());
    Ok(match (r, g) {
        (FactorRep::Vector, _) | (_, Generator::J01) => m,
        (FactorRep::Deformed, _) => m * deformed_scale(kp, z)?,
    })
}

/// A factor of a coproduct term, as an element of the enveloping algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    Identity,
    Gen(Generator),
    /// `exp(t J01)`.
    Exp(f64),
}

/// `Δ(X)` as a sum of elementary tensors.
pub fn coproduct_terms(kp: KappaPair, z: f64, x: Generator) -> Vec<(Factor, Factor)> {
    let h = 0.5 * z * kp.k2;
    match x {
        Generator::J01 => vec![(Factor::Gen(x), Factor::Identity), (Factor::Identity, Factor::Gen(x))],
        _ => vec![(Factor::Gen(x), Factor::Exp(-h)), (Factor::Exp(h), Factor::Gen(x))],
    }
}

/// `exp(t ρ(J01)) = 1 + Sk_κ1(t) A + Vk_κ1(t) A²`, from `A³ = -κ1 A`.
pub fn exp_j01(kp: KappaPair, t: f64) -> Matrix3<f64> {
    let a = rep(kp, Generator::J01.into());
    Matrix3::identity() + a * sk(kp.k1, t) + a * a * vk(kp.k1, t)
}

pub fn factor_rep(kp: KappaPair, f: Factor) -> Matrix3<f64> {
    match f {
        Factor::Identity => Matrix3::identity(),
        Factor::Gen(g) => rep(kp, g.into()),
        Factor::Exp(t) => exp_j01(kp, t),
    }
}

fn factor_rep_in(kp: KappaPair, z: f64, f: Factor, r: FactorRep) -> Result<Matrix3<f64>> {
    match f {
        Factor::Gen(g) => generator_rep(kp, z, g, r),
        _ => Ok(factor_rep(kp, f)),
    }
}

pub fn kron33(a: &Matrix3<f64>, b: &Matrix3<f64>) -> TensorSquareElement {
    let mut m = TensorSquareElement::zeros();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    m[(3 * i + k, 3 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    m
}

pub fn kron93(a: &TensorSquareElement, b: &Matrix3<f64>) -> TensorCubeElement {
    let mut m = TensorCubeElement::zeros();
    for i in 0..9 {
        for j in 0..9 {
            for k in 0..3 {
                for l in 0..3 {
                    m[(3 * i + k, 3 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    m
}

pub fn kron39(a: &Matrix3<f64>, b: &TensorSquareElement) -> TensorCubeElement {
    let mut m = TensorCubeElement::zeros();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..9 {
                for l in 0..9 {
                    m[(9 * i + k, 9 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    m
}

/// `Δ_z(X)` in the tensor square of the vector representation.
pub fn coproduct_rep(kp: KappaPair, z: f64, x: Generator) -> TensorSquareElement {
    coproduct_terms(kp, z, x)
        .into_iter()
        .map(|(a, b)| kron33(&factor_rep(kp, a), &factor_rep(kp, b)))
        .sum()
}

/// `Δ_z(X)` with tensor factors in the chosen representation.
pub fn coproduct_rep_in(kp: KappaPair, z: f64, x: Generator, r: FactorRep) -> Result<TensorSquareElement> {
    let mut m = TensorSquareElement::zeros();
    for (a, b) in coproduct_terms(kp, z, x) {
        m += kron33(&factor_rep_in(kp, z, a, r)?, &factor_rep_in(kp, z, b, r)?);
    }
    Ok(m)
}

/// The undeformed coproduct `X ⊗ 1 + 1 ⊗ X`.
pub fn primitive_rep(kp: KappaPair, x: Generator) -> TensorSquareElement {
    let m = rep(kp, x.into());
    let id = Matrix3::identity();
    kron33(&m, &id) + kron33(&id, &m)
}

fn commutator<const N: usize>(a: &SMatrix<f64, N, N>, b: &SMatrix<f64, N, N>) -> SMatrix<f64, N, N> {
    a * b - b * a
}

/// Per-relation defects of the deformed commutation rules for the images of
/// `Δ` in the tensor square: `[J12, J01] = J02`, `[J12, J02] = -sinh(zκ2 J01)/z`,
/// `[J01, J02] = κ1 J12`.
pub fn deformed_relation_defects_in(kp: KappaPair, z: f64, r: FactorRep) -> Result<[f64; 3]> {
    if z == 0.0 {
        return Err(Error::InvalidParameter("deformed relations need z != 0".into()));
    }
    let d01 = &coproduct_rep_in(kp, z, Generator::J01, r)?;
    let d02 = &coproduct_rep_in(kp, z, Generator::J02, r)?;
    let d12 = &coproduct_rep_in(kp, z, Generator::J12, r)?;
    let s = z * kp.k2;
    // exp(s Δ(J01)) factorizes because Δ(J01) is primitive
    let ep = kron33(&exp_j01(kp, s), &exp_j01(kp, s));
    let em = kron33(&exp_j01(kp, -s), &exp_j01(kp, -s));
    let sinh = (ep - em) * 0.5;
    Ok([
        (commutator(d12, d01) - d02).amax(),
        (commutator(d12, d02) + sinh / z).amax(),
        (commutator(d01, d02) - d12 * kp.k1).amax(),
    ])
}

/// Per-relation defects with factors in the deformed representation.
pub fn deformed_relation_defects(kp: KappaPair, z: f64) -> Result<[f64; 3]> {
    deformed_relation_defects_in(kp, z, FactorRep::Deformed)
}

/// Max-norm over the three deformed relations, factors in the deformed
/// representation.
pub fn deformed_relation_defect(kp: KappaPair, z: f64) -> Result<f64> {
    Ok(deformed_relation_defects(kp, z)?.into_iter().fold(0.0, f64::max))
}

/// `‖[ρJ12, ρJ02] + sinh(zκ2 ρJ01)/z‖` in a single copy of the representation.
/// This representation obeys the classical relations, so the value is a
/// diagnostic of how far they sit from the deformed ones.
pub fn single_copy_defect(kp: KappaPair, z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::InvalidParameter("deformed relations need z != 0".into()));
    }
    let s = z * kp.k2;
    let sinh = (exp_j01(kp, s) - exp_j01(kp, -s)) * 0.5;
    let (r12, r02) = (rep(kp, Generator::J12.into()), rep(kp, Generator::J02.into()));
    Ok((commutator(&r12, &r02) + sinh / z).amax())
}

/// Flip `σ(a ⊗ b) = b ⊗ a` acting on the tensor square.
pub fn flip(m: &TensorSquareElement) -> TensorSquareElement {
    let mut s = TensorSquareElement::zeros();
    for i in 0..3 {
        for k in 0..3 {
            s[(3 * i + k, 3 * k + i)] = 1.0;
        }
    }
    s * m * s
}

/// `ρ ⊗ ρ (x_i ∧ x_j)` for the stored pairs.
fn bivector_basis(kp: KappaPair) -> [TensorSquareElement; 3] {
    PAIRS.map(|(i, j)| {
        let (a, b) = (
            rep(kp, Generator::from_index(i).into()),
            rep(kp, Generator::from_index(j).into()),
        );
        kron33(&a, &b) - kron33(&b, &a)
    })
}

pub fn bivector_rep(kp: KappaPair, b: &Bivector) -> TensorSquareElement {
    let basis = bivector_basis(kp);
    (0..3).map(|n| basis[n] * b.b[n]).sum()
}

/// Least-squares coordinates of `m` on the bivector span, with the relative
/// residual.
pub fn project_bivector(kp: KappaPair, m: &TensorSquareElement) -> (Bivector, f64) {
    let basis = bivector_basis(kp);
    let mut gram = Matrix3::zeros();
    let mut rhs = nalgebra::Vector3::zeros();
    for p in 0..3 {
        for q in 0..3 {
            gram[(p, q)] = basis[p].dot(&basis[q]);
        }
        rhs[p] = basis[p].dot(m);
    }
    let x = gram
        .cholesky()
        .expect("the vector representation is faithful")
        .solve(&rhs);
    let b = Bivector::new(x[0], x[1], x[2]);
    let residual = (m - bivector_rep(kp, &b)).amax();
    (b, residual / m.amax().max(1.0))
}

/// First-order cocommutator `δ = z(Δ1 - σ∘Δ1)` with `Δ1 ≈ (Δ_z - Δ_0)/z`.
pub fn first_order_delta(kp: KappaPair, z: f64) -> Result<CocommutatorMap> {
    if z == 0.0 {
        return Err(Error::InvalidParameter("first-order extraction needs z != 0".into()));
    }
    let mut images = [Bivector::ZERO; 3];
    for g in Generator::ALL {
        let d1 = (coproduct_rep(kp, z, g) - primitive_rep(kp, g)) / z;
        let anti = (d1 - flip(&d1)) * z;
        let (b, residual) = project_bivector(kp, &anti);
        if residual > PROJECTION_TOL {
            return Err(Error::Projection { residual });
        }
        images[g.index()] = b;
    }
    Ok(CocommutatorMap { images })
}

/// `Δ` of a single factor. The exponential is summed as a series in
/// `t Δ(J01)`, independently of the factorized closed form.
fn factor_coproduct(kp: KappaPair, z: f64, f: Factor) -> Result<TensorSquareElement> {
    Ok(match f {
        Factor::Identity => TensorSquareElement::identity(),
        Factor::Gen(g) => coproduct_rep(kp, z, g),
        Factor::Exp(t) => expm_series(&(primitive_rep(kp, Generator::J01) * t))?,
    })
}

/// `‖(Δ⊗id)Δ(X) - (id⊗Δ)Δ(X)‖` over the basis, in the triple tensor power.
pub fn coassociativity_defect(kp: KappaPair, z: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for g in Generator::ALL {
        let mut left = TensorCubeElement::zeros();
        let mut right = TensorCubeElement::zeros();
        for (a, b) in coproduct_terms(kp, z, g) {
            left += kron93(&factor_coproduct(kp, z, a)?, &factor_rep(kp, b));
            right += kron39(&factor_rep(kp, a), &factor_coproduct(kp, z, b)?);
        }
        worst = worst.max((left - right).amax());
    }
    Ok(worst)
}
