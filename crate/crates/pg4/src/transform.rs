//! O(4) elements as quaternion pairs.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::{float_conj, float_mul, q, AlgebraError, Quat, Rational};

/// `[l, r]: x ↦ l̄xr` or, when `rev` is set, `*[l, r]: x ↦ l̄x̄r`.
///
/// The pair and its negation describe the same map; the smaller of the two
/// under the `Quat` order is stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transform4 {
    pub rev: bool,
    pub l: Quat,
    pub r: Quat,
}

pub type Mat4 = [[f64; 4]; 4];

impl Transform4 {
    pub fn new(rev: bool, l: Quat, r: Quat) -> Transform4 {
        let (nl, nr) = (l.neg(), r.neg());
        if (&nl, &nr) < (&l, &r) {
            Transform4 { rev, l: nl, r: nr }
        } else {
            Transform4 { rev, l, r }
        }
    }

    pub fn rot(l: Quat, r: Quat) -> Transform4 {
        Transform4::new(false, l, r)
    }

    pub fn star(l: Quat, r: Quat) -> Transform4 {
        Transform4::new(true, l, r)
    }

    pub fn identity() -> Transform4 {
        Transform4::rot(Quat::one(), Quat::one())
    }

    pub fn neg_id() -> Transform4 {
        Transform4::rot(Quat::one(), Quat::minus_one())
    }

    /// Apply `self`, then `o`.
    pub fn compose(&self, o: &Transform4) -> Result<Transform4, AlgebraError> {
        let (l1, r1, l2, r2) = (&self.l, &self.r, &o.l, &o.r);
        Ok(match (self.rev, o.rev) {
            (false, false) => Transform4::new(false, l1.mul(l2)?, r1.mul(r2)?),
            (false, true) => Transform4::new(true, r1.mul(l2)?, l1.mul(r2)?),
            (true, false) => Transform4::new(true, l1.mul(l2)?, r1.mul(r2)?),
            (true, true) => Transform4::new(false, r1.mul(l2)?, l1.mul(r2)?),
        })
    }

    pub fn inverse(&self) -> Transform4 {
        if self.rev {
            Transform4::new(true, self.r.conj(), self.l.conj())
        } else {
            Transform4::new(false, self.l.conj(), self.r.conj())
        }
    }

    /// `h⁻¹·self·h`, evaluated with three-factor products so that
    /// intermediate values need not be representable.
    pub fn conjugate_by(&self, h: &Transform4) -> Result<Transform4, AlgebraError> {
        let (a, b) = (&h.l, &h.r);
        let (ac, bc) = (a.conj(), b.conj());
        let (l, r) = (&self.l, &self.r);
        Ok(match (h.rev, self.rev) {
            (false, false) => Transform4::new(false, Quat::mul3(&ac, l, a)?, Quat::mul3(&bc, r, b)?),
            (false, true) => Transform4::new(true, Quat::mul3(&bc, l, a)?, Quat::mul3(&ac, r, b)?),
            (true, false) => Transform4::new(false, Quat::mul3(&ac, r, a)?, Quat::mul3(&bc, l, b)?),
            (true, true) => Transform4::new(true, Quat::mul3(&bc, r, a)?, Quat::mul3(&ac, l, b)?),
        })
    }

    pub fn apply(&self, x: &[f64; 4]) -> [f64; 4] {
        let l = self.l.to_f64();
        let r = self.r.to_f64();
        let xx = if self.rev { float_conj(x) } else { *x };
        float_mul(&float_mul(&float_conj(&l), &xx), &r)
    }

    /// Columns are the images of the unit vectors.
    pub fn to_matrix(&self) -> Mat4 {
        let mut m = [[0.0; 4]; 4];
        for c in 0..4 {
            let mut e = [0.0; 4];
            e[c] = 1.0;
            let y = self.apply(&e);
            for (r, v) in y.iter().enumerate() {
                m[r][c] = *v;
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == Transform4::identity()
    }

    pub fn element_code(&self) -> Result<ElementCode, AlgebraError> {
        if self.rev {
            let u = self.r.mul(&self.l)?.angle_of()?;
            let v = &Rational::one() - &u;
            Ok(ElementCode::Rev { c: if u < v { u } else { v } })
        } else {
            let a = self.l.angle_of()?;
            let b = self.r.angle_of()?;
            let one = Rational::one();
            let (a2, b2) = (&one - &a, &one - &b);
            let keep = a < b || (a == b && a <= q(1, 2));
            Ok(if keep { ElementCode::Rot { a, b } } else { ElementCode::Rot { a: a2, b: b2 } })
        }
    }
}

impl fmt::Display for Transform4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}, {}]", if self.rev { "*" } else { "" }, self.l, self.r)
    }
}

impl fmt::Debug for Transform4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TransformJson {
    star: bool,
    l: Quat,
    r: Quat,
}

impl Serialize for Transform4 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TransformJson { star: self.rev, l: self.l.clone(), r: self.r.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Transform4 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t = TransformJson::deserialize(d)?;
        Ok(Transform4::new(t.star, t.l, t.r))
    }
}

/// Conjugacy-invariant label of a single transformation.
///
/// Rotations carry the pair of left and right rotation fractions; reversing
/// elements carry `c ∈ [0, 1/2]` and print as `*{1−c}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ElementCode {
    Rot { a: Rational, b: Rational },
    Rev { c: Rational },
}

impl ElementCode {
    fn sort_key(&self) -> (bool, Rational, Rational) {
        match self {
            ElementCode::Rot { a, b } => (false, a.clone(), b.clone()),
            ElementCode::Rev { c } => (true, &Rational::one() - c, Rational::zero()),
        }
    }

    /// The code of the mirror image.
    pub fn mirrored(&self) -> ElementCode {
        match self {
            ElementCode::Rot { a, b } => {
                let one = Rational::one();
                let (a2, b2) = (&one - b, &one - a);
                let keep = b < a || (a == b && b <= &q(1, 2));
                if keep {
                    ElementCode::Rot { a: b.clone(), b: a.clone() }
                } else {
                    ElementCode::Rot { a: a2, b: b2 }
                }
            }
            rev => rev.clone(),
        }
    }
}

impl Ord for ElementCode {
    fn cmp(&self, o: &ElementCode) -> Ordering {
        self.sort_key().cmp(&o.sort_key())
    }
}

impl PartialOrd for ElementCode {
    fn partial_cmp(&self, o: &ElementCode) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn den_i64(r: &Rational) -> i64 {
    r.denom().to_i64().expect("small denominator")
}

fn num_i64(r: &Rational) -> i64 {
    r.numer().to_i64().expect("small numerator")
}

impl fmt::Display for ElementCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementCode::Rot { a, b } => {
                let d = den_i64(a).lcm(&den_i64(b));
                let na = num_i64(a) * (d / den_i64(a));
                let nb = num_i64(b) * (d / den_i64(b));
                if d == 1 {
                    write!(f, "{}|{}", na, nb)
                } else {
                    write!(f, "{}|{}/{}", na, nb, d)
                }
            }
            ElementCode::Rev { c } => write!(f, "*{}", &Rational::one() - c),
        }
    }
}

/// Determinant of a 4×4 matrix by cofactor expansion.
pub fn det4(m: &Mat4) -> f64 {
    let mut det = 0.0;
    for c in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for r in 1..4 {
            let mut k = 0;
            for cc in 0..4 {
                if cc != c {
                    minor[r - 1][k] = m[r][cc];
                    k += 1;
                }
            }
        }
        let d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
            - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
            + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m[0][c] * d3;
    }
    det
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut m = [[0.0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::consts::*;

    #[test]
    fn basic_maps() {
        let x = [0.3, -0.2, 0.5, 0.7];
        assert_eq!(Transform4::identity().apply(&x), x);
        let y = Transform4::neg_id().apply(&x);
        for k in 0..4 {
            assert!((y[k] + x[k]).abs() < 1e-15);
        }
        let s = Transform4::star(Quat::one(), Quat::one()).apply(&x);
        assert_eq!(s, [x[0], -x[1], -x[2], -x[3]]);
    }

    #[test]
    fn star_square_gives_left_right_pair() {
        let c = omega();
        let e = Transform4::star(Quat::one(), c.clone());
        assert_eq!(e.compose(&e).unwrap(), Transform4::rot(c.clone(), c));
    }

    #[test]
    fn canonical_sign_is_idempotent() {
        let t = Transform4::rot(Quat::i(), Quat::j());
        let u = Transform4::new(t.rev, t.l.clone(), t.r.clone());
        assert_eq!(t, u);
        assert_eq!(Transform4::rot(Quat::i().neg(), Quat::j().neg()), t);
    }

    #[test]
    fn printed_codes() {
        assert_eq!(Transform4::identity().element_code().unwrap().to_string(), "0|0");
        let g = Transform4::rot(Quat::exp_pi(q(1, 4)), Quat::exp_pi(q(3, 4)));
        assert_eq!(g.element_code().unwrap().to_string(), "1|3/4");
        assert_eq!(Transform4::neg_id().element_code().unwrap().to_string(), "0|1");
    }

    #[test]
    fn conjugation_matches_composition() {
        let g = Transform4::rot(omega(), i_i());
        let h = Transform4::star(i_o(), Quat::j());
        let direct = h.inverse().compose(&g).unwrap().compose(&h).unwrap();
        assert_eq!(g.conjugate_by(&h).unwrap(), direct);
        let g2 = Transform4::star(Quat::k(), omega());
        let h2 = Transform4::rot(i_i(), Quat::i());
        let direct2 = h2.inverse().compose(&g2).unwrap().compose(&h2).unwrap();
        assert_eq!(g2.conjugate_by(&h2).unwrap(), direct2);
    }
}
