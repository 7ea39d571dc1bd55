//! Nine two-dimensional Cayley-Klein geometries labelled by a pair of
//! contraction parameters `(κ1, κ2)`: their Lie algebras and groups, spaces of
//! points, Poisson-Lie structures and quantum deformation.

pub mod algebra;
pub mod duality;
pub mod error;
pub mod export;
pub mod group;
pub mod kappa_trig;
pub mod poisson;
pub mod quantum;
pub mod spaces;
pub mod tables;
pub mod verify;

pub use algebra::{bracket, classify, AlgebraElement, Generator, Geometry, GeometryLabel, KappaPair};
pub use duality::{apply_duality, Duality};
pub use error::{Error, KappaIndex, Result};
pub use group::{coords_from_group, group_from_coords, GroupCoordinates, GroupElement};
pub use spaces::{Ambient, Chart, ChartPoint};
