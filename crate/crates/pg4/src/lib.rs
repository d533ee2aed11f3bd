//! Finite subgroups of O(4) in exact quaternion-pair arithmetic.

pub mod algebra;
pub mod catalog;
pub mod counting;
pub mod classify;
pub mod group;
pub mod hopf;
pub mod orbits;
pub mod toroidal;
pub mod transform;

pub use algebra::{q, FieldElem, Quat, Rational};
pub use group::{Fingerprint, PointGroup};
pub use transform::{ElementCode, Transform4};
