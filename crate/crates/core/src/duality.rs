//! Generalized dualities between Cayley-Klein algebras.
//!
//! Each duality is a permutation of the indices `{0, 1, 2}` of the generators
//! `J_ij`, possibly weighted by a contraction parameter. A duality `d` maps the
//! basis of so_{κ̃}(3) onto elements `J̃_ij` of so_κ(3) obeying the κ̃ brackets:
//!
//! ```text
//!         J̃01     J̃02      J̃12     κ̃1     κ̃2
//! D0     -J12    -J02     -J01     κ2     κ1
//! D1     -J01    κ1 J12    J02     κ1     κ1κ2
//! D2      J02    κ2 J01   -J12     κ1κ2   κ2
//! D0D1   -J02   -κ1 J12    J01     κ1κ2   κ1
//! D0D2    J12   -κ2 J01   -J02     κ2     κ1κ2
//! Id      J01     J02      J12     κ1     κ2
//! ```
//!
//! Weighted dualities are undefined when their weight vanishes.

use serde::Serialize;

use crate::algebra::{AlgebraElement, KappaPair};
use crate::error::{Error, KappaIndex, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Duality {
    D0,
    D1,
    D2,
    D0D1,
    D0D2,
    Id,
}

impl Duality {
    pub const ALL: [Duality; 6] = [
        Duality::D0,
        Duality::D1,
        Duality::D2,
        Duality::D0D1,
        Duality::D0D2,
        Duality::Id,
    ];

    /// Cycle notation of the underlying index permutation.
    pub fn permutation(self) -> &'static str {
        match self {
            Duality::D0 => "(0 2)",
            Duality::D1 => "(0 1)",
            Duality::D2 => "(1 2)",
            Duality::D0D1 => "(0 2 1)",
            Duality::D0D2 => "(0 1 2)",
            Duality::Id => "()",
        }
    }

    /// The contraction parameter that must be non-zero, if any.
    pub fn restriction(self) -> Option<KappaIndex> {
        match self {
            Duality::D1 | Duality::D0D1 => Some(KappaIndex::K1),
            Duality::D2 | Duality::D0D2 => Some(KappaIndex::K2),
            Duality::D0 | Duality::Id => None,
        }
    }

    pub fn is_defined(self, kp: KappaPair) -> bool {
        match self.restriction() {
            Some(KappaIndex::K1) => kp.k1 != 0.0,
            Some(KappaIndex::K2) => kp.k2 != 0.0,
            None => true,
        }
    }

    fn check(self, kp: KappaPair) -> Result<()> {
        if self.is_defined(kp) {
            Ok(())
        } else {
            Err(Error::UndefinedDuality {
                duality: self,
                required: self.restriction().expect("unrestricted dualities are always defined"),
            })
        }
    }

    /// Transformed contraction parameters `(κ̃1, κ̃2)`.
    pub fn transform_kappa(self, kp: KappaPair) -> Result<KappaPair> {
        self.check(kp)?;
        let KappaPair { k1, k2 } = kp;
        let k12 = k1 * k2;
        Ok(match self {
            Duality::D0 => KappaPair::new(k2, k1),
            Duality::D1 => KappaPair::new(k1, k12),
            Duality::D2 => KappaPair::new(k12, k2),
            Duality::D0D1 => KappaPair::new(k12, k1),
            Duality::D0D2 => KappaPair::new(k2, k12),
            Duality::Id => kp,
        })
    }

    /// Images `[J̃01, J̃02, J̃12]` of the basis, as elements of so_κ(3).
    pub fn images(self, kp: KappaPair) -> Result<[AlgebraElement; 3]> {
        self.check(kp)?;
        let KappaPair { k1, k2 } = kp;
        let v = AlgebraElement::new;
        Ok(match self {
            Duality::D0 => [v(0.0, 0.0, -1.0), v(0.0, -1.0, 0.0), v(-1.0, 0.0, 0.0)],
            Duality::D1 => [v(-1.0, 0.0, 0.0), v(0.0, 0.0, k1), v(0.0, 1.0, 0.0)],
            Duality::D2 => [v(0.0, 1.0, 0.0), v(k2, 0.0, 0.0), v(0.0, 0.0, -1.0)],
            Duality::D0D1 => [v(0.0, -1.0, 0.0), v(0.0, 0.0, -k1), v(1.0, 0.0, 0.0)],
            Duality::D0D2 => [v(0.0, 0.0, 1.0), v(-k2, 0.0, 0.0), v(0.0, -1.0, 0.0)],
            Duality::Id => [v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)],
        })
    }
}

/// Apply a duality to an element: `X = Σ x_i J_i ↦ Σ x_i J̃_i`, together with
/// the transformed pair.
pub fn apply_duality(d: Duality, kp: KappaPair, x: AlgebraElement) -> Result<(AlgebraElement, KappaPair)> {
    let imgs = d.images(kp)?;
    let y = x
        .to_array()
        .into_iter()
        .zip(imgs)
        .fold(AlgebraElement::ZERO, |acc, (c, img)| acc + c * img);
    Ok((y, d.transform_kappa(kp)?))
}
