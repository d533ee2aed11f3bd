//! Exact scalars and unit quaternions.

pub mod field;
pub mod quat;
pub mod rational;

pub use field::FieldElem;
pub use quat::{consts, cos_pi, Quat};
pub use rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed representations cannot be multiplied: {0}")]
    NotPromotable(String),
    #[error("value not representable exactly: {0}")]
    NotRepresentable(String),
    #[error("real part {0} is not in the angle table")]
    AngleLookup(String),
}

/// Floating-point Hamilton product, used as a numeric cross-check.
pub fn float_mul(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

pub fn float_conj(a: &[f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}
