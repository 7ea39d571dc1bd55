//! Lie bialgebra structures on so_{κ1,κ2}(3) and the Poisson-Lie groups they
//! integrate to.
//!
//! Tensors are indexed in the basis order `(J01, J02, J12)` and the wedge is
//! `a∧b = a⊗b - b⊗a`. A coboundary bialgebra is generated by a classical
//! r-matrix through
//!
//! ```text
//! δ(X) = [X⊗1 + 1⊗X, r]
//! ```
//!
//! and the Sklyanin bracket on the group is
//! `{f, g} = r^{ij} (∇ᴸᵢ f ∇ᴸⱼ g - ∇ᴿᵢ f ∇ᴿⱼ g)` in the coordinates `(a1, a2, ξ)`.

use serde::Serialize;

use crate::algebra::{structure_constants, AlgebraElement, Generator, KappaPair};
use crate::error::{Error, Result};
use crate::group::{coords_from_group, exp_one_param, group_from_coords, GroupCoordinates, CHART_TOL};
use crate::kappa_trig::{ck, sk, tk};

/// Index pairs `i < j` of the stored bivector components.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Default step of the group-translation oracle for invariant vector fields.
pub const FIELD_FD_STEP: f64 = 1e-6;

/// Threshold under which a bivector component counts as zero in
/// [`coisotropy_check`].
pub const COISOTROPY_TOL: f64 = 1e-12;

type Tensor2 = [[f64; 3]; 3];
type Tensor3 = [[[f64; 3]; 3]; 3];

/// `Σ_{i<j} b^{ij} X_i ∧ X_j`, stored as `[b01, b02, b12]` over [`PAIRS`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Bivector {
    pub b: [f64; 3],
}

impl Bivector {
    pub const ZERO: Bivector = Bivector { b: [0.0; 3] };

    pub const fn new(b01: f64, b02: f64, b12: f64) -> Self {
        Self { b: [b01, b02, b12] }
    }

    /// `c · x ∧ y` for two basis generators.
    pub fn wedge(c: f64, x: Generator, y: Generator) -> Self {
        let mut t = [[0.0; 3]; 3];
        t[x.index()][y.index()] += c;
        t[y.index()][x.index()] -= c;
        Self::from_tensor(&t)
    }

    /// Antisymmetric part of a 2-tensor.
    pub fn from_tensor(t: &Tensor2) -> Self {
        let mut b = [0.0; 3];
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            b[n] = 0.5 * (t[i][j] - t[j][i]);
        }
        Self { b }
    }

    /// Full antisymmetric tensor `T^{ij}` with `T^{ij} = -T^{ji}`.
    pub fn tensor(&self) -> Tensor2 {
        let mut t = [[0.0; 3]; 3];
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            t[i][j] = self.b[n];
            t[j][i] = -self.b[n];
        }
        t
    }

    /// Coefficient `T^{xy}` of the generator pair `(x, y)`.
    pub fn component(&self, x: Generator, y: Generator) -> f64 {
        self.tensor()[x.index()][y.index()]
    }

    pub fn max_abs(&self) -> f64 {
        self.b.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { b: self.b.map(|v| c * v) }
    }

    pub fn add(&self, o: &Bivector) -> Self {
        Self { b: [self.b[0] + o.b[0], self.b[1] + o.b[1], self.b[2] + o.b[2]] }
    }

    pub fn sub(&self, o: &Bivector) -> Self {
        self.add(&o.scale(-1.0))
    }
}

/// Coefficient of `J01 ∧ J02 ∧ J12` (the wedge of three being the signed sum
/// over the six orderings).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Trivector {
    pub t: f64,
}

/// A linear map `g → g∧g`, given by the images of the basis.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CocommutatorMap {
    pub images: [Bivector; 3],
}

impl CocommutatorMap {
    pub fn image(&self, g: Generator) -> Bivector {
        self.images[g.index()]
    }

    pub fn apply(&self, x: AlgebraElement) -> Bivector {
        x.to_array()
            .iter()
            .zip(&self.images)
            .fold(Bivector::ZERO, |acc, (&c, b)| acc.add(&b.scale(c)))
    }

    pub fn max_abs_diff(&self, o: &CocommutatorMap) -> f64 {
        (0..3).map(|i| self.images[i].sub(&o.images[i]).max_abs()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DeformationKind {
    /// `r = z J12 ∧ J02`, time-like.
    FirstKind,
    /// `r = z J12 ∧ J01`, space-like.
    SecondKind,
}

pub fn rmatrix(kind: DeformationKind, z: f64) -> Bivector {
    match kind {
        DeformationKind::FirstKind => Bivector::wedge(z, Generator::J12, Generator::J02),
        DeformationKind::SecondKind => Bivector::wedge(z, Generator::J12, Generator::J01),
    }
}

/// Matrix of `ad_X` in the basis: `ad[a][i]` is the `X_a` coefficient of `[X, X_i]`.
fn ad_matrix(c: &Tensor3, x: AlgebraElement) -> Tensor2 {
    let xs = x.to_array();
    let mut ad = [[0.0; 3]; 3];
    for (a, row) in ad.iter_mut().enumerate() {
        for (i, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|k| xs[k] * c[k][i][a]).sum();
        }
    }
    ad
}

/// `(ad_X ⊗ 1 + 1 ⊗ ad_X) T`.
fn ad_on_2tensor(ad: &Tensor2, t: &Tensor2) -> Tensor2 {
    let mut out = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            out[a][b] = (0..3).map(|i| ad[a][i] * t[i][b] + ad[b][i] * t[a][i]).sum();
        }
    }
    out
}

fn ad_on_3tensor(ad: &Tensor2, s: &Tensor3) -> Tensor3 {
    let mut out = [[[0.0; 3]; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                out[a][b][c] = (0..3)
                    .map(|i| ad[a][i] * s[i][b][c] + ad[b][i] * s[a][i][c] + ad[c][i] * s[a][b][i])
                    .sum();
            }
        }
    }
    out
}

/// Coboundary cocommutator `δ(X) = [X⊗1 + 1⊗X, r]`.
pub fn cocommutator(kp: KappaPair, r: &Bivector, x: AlgebraElement) -> Bivector {
    let c = structure_constants(kp);
    Bivector::from_tensor(&ad_on_2tensor(&ad_matrix(&c, x), &r.tensor()))
}

/// The full map `δ` generated by `r`.
pub fn cocommutator_map(kp: KappaPair, r: &Bivector) -> CocommutatorMap {
    CocommutatorMap {
        images: Generator::ALL.map(|g| cocommutator(kp, r, g.into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BialgebraReport {
    pub cocycle_defect: f64,
    pub dual_jacobi_defect: f64,
    /// `f[j][k][i]`: `[ξ̂ʲ, ξ̂ᵏ] = f^{jk}_i ξ̂ⁱ`.
    pub dual_brackets: Tensor3,
}

/// Structure tensor of the dual Lie algebra read off from `δ`.
pub fn dual_brackets(delta: &CocommutatorMap) -> Tensor3 {
    let mut f = [[[0.0; 3]; 3]; 3];
    for (i, img) in delta.images.iter().enumerate() {
        let t = img.tensor();
        for j in 0..3 {
            for k in 0..3 {
                f[j][k][i] = t[j][k];
            }
        }
    }
    f
}

/// Check that `δ` is a 1-cocycle and that its transpose is a Lie bracket.
pub fn bialgebra_check(kp: KappaPair, delta: &CocommutatorMap) -> BialgebraReport {
    let c = structure_constants(kp);
    let mut cocycle: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let xi = AlgebraElement::basis(Generator::from_index(i));
            let xj = AlgebraElement::basis(Generator::from_index(j));
            let lhs = delta.apply(AlgebraElement::from_array(c[i][j])).tensor();
            let a = ad_on_2tensor(&ad_matrix(&c, xi), &delta.images[j].tensor());
            let b = ad_on_2tensor(&ad_matrix(&c, xj), &delta.images[i].tensor());
            for p in 0..3 {
                for q in 0..3 {
                    cocycle = cocycle.max((lhs[p][q] - a[p][q] + b[p][q]).abs());
                }
            }
        }
    }

    let f = dual_brackets(delta);
    let mut jacobi: f64 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            for cc in 0..3 {
                for m in 0..3 {
                    let cyc: f64 = (0..3)
                        .map(|i| f[a][b][i] * f[i][cc][m] + f[b][cc][i] * f[i][a][m] + f[cc][a][i] * f[i][b][m])
                        .sum();
                    jacobi = jacobi.max(cyc.abs());
                }
            }
        }
    }
    BialgebraReport {
        cocycle_defect: cocycle,
        dual_jacobi_defect: jacobi,
        dual_brackets: f,
    }
}

/// The 3-tensor `[r12, r13] + [r12, r23] + [r13, r23]`.
pub fn schouten_tensor(kp: KappaPair, r: &Bivector) -> Tensor3 {
    let c = structure_constants(kp);
    let t = r.tensor();
    let mut s = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let w = t[i][j] * t[k][l];
                    if w == 0.0 {
                        continue;
                    }
                    for m in 0..3 {
                        s[m][j][l] += w * c[i][k][m];
                        s[i][m][l] += w * c[j][k][m];
                        s[i][k][m] += w * c[j][l][m];
                    }
                }
            }
        }
    }
    s
}

/// Antisymmetrized Schouten bracket `[[r, r]]`.
pub fn schouten(kp: KappaPair, r: &Bivector) -> Trivector {
    let s = schouten_tensor(kp, r);
    let t = (s[0][1][2] + s[1][2][0] + s[2][0][1] - s[1][0][2] - s[0][2][1] - s[2][1][0]) / 6.0;
    Trivector { t }
}

/// Max-norm of `[X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X, [[r, r]]]` over the basis.
pub fn mcybe_defect(kp: KappaPair, r: &Bivector) -> f64 {
    let c = structure_constants(kp);
    let s = schouten_tensor(kp, r);
    Generator::ALL
        .iter()
        .map(|&g| {
            let out = ad_on_3tensor(&ad_matrix(&c, g.into()), &s);
            out.iter().flatten().flatten().fold(0.0, |m: f64, v| m.max(v.abs()))
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Coisotropy {
    /// `δ(h) ⊂ h ∧ h`.
    PoissonSubgroup,
    /// `δ(h) ⊂ h ∧ g`.
    Coisotropic,
    Fails,
}

/// Coisotropy of the subalgebra spanned by `h`.
pub fn coisotropy_check(kp: KappaPair, delta: &CocommutatorMap, h: &[Generator]) -> Result<Coisotropy> {
    let inside = |i: usize| h.iter().any(|g| g.index() == i);
    for &x in h {
        for &y in h {
            let br = crate::algebra::bracket(kp, x.into(), y.into()).to_array();
            if (0..3).any(|k| !inside(k) && br[k] != 0.0) {
                return Err(Error::NotSubalgebra(h.to_vec()));
            }
        }
    }
    let mut subgroup = true;
    for &x in h {
        let img = delta.image(x);
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            if img.b[n].abs() <= COISOTROPY_TOL {
                continue;
            }
            if !inside(i) && !inside(j) {
                return Ok(Coisotropy::Fails);
            }
            if !(inside(i) && inside(j)) {
                subgroup = false;
            }
        }
    }
    Ok(if subgroup {
        Coisotropy::PoissonSubgroup
    } else {
        Coisotropy::Coisotropic
    })
}

/// Left- and right-invariant vector fields; `left[i]` holds the
/// `(∂a1, ∂a2, ∂ξ)` components of `∇ᴸ` for generator `i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvariantFields {
    pub left: Tensor2,
    pub right: Tensor2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FieldMode {
    Closed,
    /// Central differences of group translations, step [`FIELD_FD_STEP`].
    Numeric,
}

fn chart_check(kp: KappaPair, gc: GroupCoordinates) -> Result<f64> {
    let c = ck(kp.k12(), gc.a2);
    if c <= CHART_TOL {
        return Err(Error::ChartDomain(format!(
            "Ck_{}(a2) = {c:e} at a2 = {}",
            kp.k12(),
            gc.a2
        )));
    }
    Ok(c)
}

/// Closed-form invariant vector fields at `(a1, a2, ξ)`.
pub fn invariant_vector_fields(kp: KappaPair, gc: GroupCoordinates) -> Result<InvariantFields> {
    let (k1, k2, k12) = (kp.k1, kp.k2, kp.k12());
    let c12 = chart_check(kp, gc)?;
    let t12 = sk(k12, gc.a2) / c12;
    let (cx, sx) = (ck(k2, gc.xi), sk(k2, gc.xi));
    let (c1, s1) = (ck(k1, gc.a1), sk(k1, gc.a1));
    Ok(InvariantFields {
        left: [
            [cx / c12, sx, -k1 * t12 * cx],
            [-k2 * sx / c12, cx, k12 * t12 * sx],
            [0.0, 0.0, 1.0],
        ],
        right: [
            [1.0, 0.0, 0.0],
            [k12 * s1 * t12, c1, -k1 * s1 / c12],
            [-k2 * c1 * t12, s1, c1 / c12],
        ],
    })
}

/// Invariant vector fields rebuilt from `d/dt coords(g exp(tX))` (left) and
/// `d/dt coords(exp(tX) g)` (right).
pub fn invariant_vector_fields_numeric(kp: KappaPair, gc: GroupCoordinates, h: f64) -> Result<InvariantFields> {
    chart_check(kp, gc)?;
    let g = group_from_coords(kp, gc);
    let mut left = [[0.0; 3]; 3];
    let mut right = [[0.0; 3]; 3];
    for gen in Generator::ALL {
        let (p, m) = (exp_one_param(kp, gen, h), exp_one_param(kp, gen, -h));
        let lp = coords_from_group(kp, &(g * p))?.to_array();
        let lm = coords_from_group(kp, &(g * m))?.to_array();
        let rp = coords_from_group(kp, &(p * g))?.to_array();
        let rm = coords_from_group(kp, &(m * g))?.to_array();
        for a in 0..3 {
            left[gen.index()][a] = (lp[a] - lm[a]) / (2.0 * h);
            right[gen.index()][a] = (rp[a] - rm[a]) / (2.0 * h);
        }
    }
    Ok(InvariantFields { left, right })
}

/// Group coordinate functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Coord {
    A1,
    A2,
    Xi,
}

impl Coord {
    pub const ALL: [Coord; 3] = [Coord::A1, Coord::A2, Coord::Xi];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Poisson bivector `P^{ab} = {x_a, x_b}` of the Sklyanin bracket.
pub fn sklyanin_matrix(kp: KappaPair, r: &Bivector, gc: GroupCoordinates, mode: FieldMode) -> Result<Tensor2> {
    let fields = match mode {
        FieldMode::Closed => invariant_vector_fields(kp, gc)?,
        FieldMode::Numeric => invariant_vector_fields_numeric(kp, gc, FIELD_FD_STEP)?,
    };
    let (l, rr) = (fields.left, fields.right);
    let t = r.tensor();
    let mut p = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let mut v = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    v += t[i][j] * (l[i][a] * l[j][b] - rr[i][a] * rr[j][b]);
                }
            }
            p[a][b] = v;
        }
    }
    Ok(p)
}

/// Sklyanin bracket `{f, g}` of two coordinate functions.
pub fn sklyanin_numeric(
    kp: KappaPair,
    r: &Bivector,
    f: Coord,
    g: Coord,
    gc: GroupCoordinates,
    mode: FieldMode,
) -> Result<f64> {
    Ok(sklyanin_matrix(kp, r, gc, mode)?[f.index()][g.index()])
}

/// Closed-form brackets of the first-kind Poisson-Lie group:
///
/// ```text
/// {ξ, a1} = -zκ2 Sk_κ2(ξ) / Ck_κ1κ2(a2)
/// {ξ, a2} = z (Ck_κ1κ2(a2) Ck_κ2(ξ) - 1) / Ck_κ1κ2(a2)
/// {a1, a2} = zκ2 Tk_κ1κ2(a2)
/// ```
pub fn sklyanin_closed(kp: KappaPair, z: f64, f: Coord, g: Coord, gc: GroupCoordinates) -> Result<f64> {
    let c12 = chart_check(kp, gc)?;
    let (k2, k12) = (kp.k2, kp.k12());
    let xi_a1 = -z * k2 * sk(k2, gc.xi) / c12;
    let xi_a2 = z * (c12 * ck(k2, gc.xi) - 1.0) / c12;
    let a1_a2 = z * k2 * sk(k12, gc.a2) / c12;
    Ok(match (f, g) {
        (Coord::Xi, Coord::A1) => xi_a1,
        (Coord::A1, Coord::Xi) => -xi_a1,
        (Coord::Xi, Coord::A2) => xi_a2,
        (Coord::A2, Coord::Xi) => -xi_a2,
        (Coord::A1, Coord::A2) => a1_a2,
        (Coord::A2, Coord::A1) => -a1_a2,
        _ => 0.0,
    })
}

/// Bracket `{a1, a2}` of the Poisson homogeneous space of points.
pub fn phs_points_bracket(kp: KappaPair, z: f64, kind: DeformationKind, a1: f64, a2: f64) -> Result<f64> {
    match kind {
        DeformationKind::FirstKind => {
            let t = tk(kp.k12(), a2).map_err(|e| Error::ChartDomain(e.to_string()))?;
            Ok(z * kp.k2 * t)
        }
        DeformationKind::SecondKind => Ok(z * sk(kp.k1, a1)),
    }
}

/// Max over `(a, b, c)` of `Σ_cyc Σ_d P^{ad} ∂_d P^{bc}`, with derivatives by
/// central differences of step `h`.
pub fn poisson_jacobi_defect(p: impl Fn([f64; 3]) -> Result<Tensor2>, x: [f64; 3], h: f64) -> Result<f64> {
    let p0 = p(x)?;
    // dp[d][a][b] = ∂_d P^{ab}
    let mut dp = [[[0.0; 3]; 3]; 3];
    for d in 0..3 {
        let (mut xp, mut xm) = (x, x);
        xp[d] += h;
        xm[d] -= h;
        let (pp, pm) = (p(xp)?, p(xm)?);
        for a in 0..3 {
            for b in 0..3 {
                dp[d][a][b] = (pp[a][b] - pm[a][b]) / (2.0 * h);
            }
        }
    }
    let term = |a: usize, b: usize, c: usize| (0..3).map(|d| p0[a][d] * dp[d][b][c]).sum::<f64>();
    let mut worst: f64 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                worst = worst.max((term(a, b, c) + term(b, c, a) + term(c, a, b)).abs());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator::*;

    #[test]
    fn rmatrix_slots() {
        let r = rmatrix(DeformationKind::FirstKind, 0.7);
        assert_eq!(r.component(J12, J02), 0.7);
        assert_eq!(r.component(J02, J12), -0.7);
        assert_eq!(r.component(J01, J12), 0.0);
        let r2 = rmatrix(DeformationKind::SecondKind, 0.7);
        assert_eq!(r2.component(J12, J01), 0.7);
        assert_eq!(rmatrix(DeformationKind::FirstKind, 0.0), Bivector::ZERO);
    }

    #[test]
    fn first_kind_cocommutator() {
        let z = 0.3;
        for kp in KappaPair::normalized9() {
            let r = rmatrix(DeformationKind::FirstKind, z);
            assert_eq!(cocommutator(kp, &r, J01.into()), Bivector::ZERO);
            assert_eq!(cocommutator(kp, &r, J02.into()), Bivector::wedge(z * kp.k2, J01, J02));
            assert_eq!(cocommutator(kp, &r, J12.into()), Bivector::wedge(z * kp.k2, J01, J12));
        }
    }

    #[test]
    fn zero_map_is_trivial() {
        let rep = bialgebra_check(KappaPair::new(1.0, -1.0), &CocommutatorMap::default());
        assert_eq!(rep.cocycle_defect, 0.0);
        assert_eq!(rep.dual_jacobi_defect, 0.0);
        assert!(rep.dual_brackets.iter().flatten().flatten().all(|&v| v == 0.0));
    }

    #[test]
    fn closed_fields_constant_entries() {
        let kp = KappaPair::new(-1.0, 0.5);
        let f = invariant_vector_fields(kp, GroupCoordinates::new(0.4, -0.3, 1.1)).unwrap();
        assert_eq!(f.right[0], [1.0, 0.0, 0.0]);
        assert_eq!(f.left[2], [0.0, 0.0, 1.0]);
    }

    #[test]
    fn phs_examples() {
        let z = 0.2;
        let m = KappaPair::new(0.0, -1.0);
        assert!((phs_points_bracket(m, z, DeformationKind::FirstKind, 0.3, 0.5).unwrap() + z * 0.5).abs() < 1e-15);
        assert_eq!(phs_points_bracket(m, z, DeformationKind::SecondKind, 0.3, 0.5).unwrap(), z * 0.3);
        for kind in [DeformationKind::FirstKind, DeformationKind::SecondKind] {
            assert_eq!(phs_points_bracket(KappaPair::new(1.0, 1.0), z, kind, 0.0, 0.0).unwrap(), 0.0);
        }
        let pole = phs_points_bracket(KappaPair::new(1.0, 1.0), z, DeformationKind::FirstKind, 0.0, std::f64::consts::FRAC_PI_2);
        assert!(matches!(pole, Err(Error::ChartDomain(_))));
    }
}
