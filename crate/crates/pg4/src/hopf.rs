//! Great circles of S³, Hopf maps and bundles, Clifford tori.
//!
//! Floating point throughout. A great circle `K_p^q` is the set of unit
//! quaternions `x` with `x·q·x̄ = p`, equivalently `[p, q]x = x`.

use crate::algebra::{float_conj, float_mul};
use crate::transform::Transform4;

pub const TOL: f64 = 1e-9;

pub type V3 = [f64; 3];
pub type V4 = [f64; 4];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HopfError {
    #[error("vector {0:?} has zero length")]
    ZeroVector(Vec<f64>),
    #[error("circles are not in a common bundle")]
    NoCommonBundle,
    #[error("the slice map is undefined at (-1, 0, 0)")]
    SouthPole,
}

pub fn dot3(a: &V3, b: &V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn dot4(a: &V4, b: &V4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

pub fn norm4(a: &V4) -> f64 {
    dot4(a, a).sqrt()
}

pub fn normalize4(a: &V4) -> Result<V4, HopfError> {
    let n = norm4(a);
    if n < 1e-300 {
        return Err(HopfError::ZeroVector(a.to_vec()));
    }
    Ok([a[0] / n, a[1] / n, a[2] / n, a[3] / n])
}

fn neg3(a: &V3) -> V3 {
    [-a[0], -a[1], -a[2]]
}

fn pure(v: &V3) -> V4 {
    [0.0, v[0], v[1], v[2]]
}

fn vec_part(x: &V4) -> V3 {
    [x[1], x[2], x[3]]
}

/// Unit vector on S², identified with a pure unit quaternion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint(pub V3);

impl SpherePoint {
    pub fn new(v: V3) -> Result<SpherePoint, HopfError> {
        let n = dot3(&v, &v).sqrt();
        if n < 1e-300 {
            return Err(HopfError::ZeroVector(v.to_vec()));
        }
        Ok(SpherePoint([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn neg(&self) -> SpherePoint {
        SpherePoint(neg3(&self.0))
    }

    pub fn quat(&self) -> V4 {
        pure(&self.0)
    }

    /// `[l]p = l̄·p·l` for a unit quaternion `l`.
    pub fn rotated(&self, l: &V4) -> SpherePoint {
        SpherePoint(vec_part(&float_mul(&float_mul(&float_conj(l), &self.quat()), l)))
    }

    pub fn angle_to(&self, o: &SpherePoint) -> f64 {
        dot3(&self.0, &o.0).clamp(-1.0, 1.0).acos()
    }

    pub fn close_to(&self, o: &SpherePoint, tol: f64) -> bool {
        (0..3).all(|k| (self.0[k] - o.0[k]).abs() < tol)
    }
}

/// `K_p^q`. Unoriented circles identify `(p, q)` with `(−p, −q)`; the
/// representative has the lexicographically larger `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreatCircle {
    pub p: SpherePoint,
    pub q: SpherePoint,
    pub oriented: bool,
}

fn lex_negative(v: &V3) -> bool {
    for c in v {
        if c.abs() > TOL {
            return *c < 0.0;
        }
    }
    false
}

impl GreatCircle {
    pub fn new(p: SpherePoint, q: SpherePoint, oriented: bool) -> GreatCircle {
        if !oriented && lex_negative(&p.0) {
            GreatCircle { p: p.neg(), q: q.neg(), oriented }
        } else {
            GreatCircle { p, q, oriented }
        }
    }

    /// Starting point on the circle: the half-turn about `p + q`, or about
    /// a fixed axis perpendicular to `p` when `p = −q`.
    pub fn base_point(&self) -> V4 {
        let (p, q) = (&self.p.0, &self.q.0);
        let s = [p[0] + q[0], p[1] + q[1], p[2] + q[2]];
        if dot3(&s, &s).sqrt() > 1e-6 {
            return pure(&SpherePoint::new(s).expect("nonzero").0);
        }
        // Project the first coordinate axis that is not (nearly) parallel to p.
        for k in 0..3 {
            let mut e = [0.0; 3];
            e[k] = 1.0;
            let d = dot3(&e, p);
            let u = [e[0] - d * p[0], e[1] - d * p[1], e[2] - d * p[2]];
            if dot3(&u, &u) > 1e-6 {
                return pure(&SpherePoint::new(u).expect("nonzero").0);
            }
        }
        unreachable!("some axis is not parallel to a unit vector")
    }

    /// `x₀·exp(qθ)`.
    pub fn sample(&self, theta: f64) -> V4 {
        let e = [theta.cos(), self.q.0[0] * theta.sin(), self.q.0[1] * theta.sin(), self.q.0[2] * theta.sin()];
        float_mul(&self.base_point(), &e)
    }

    /// Whether `[p, q]x = x`.
    pub fn contains(&self, x: &V4, tol: f64) -> bool {
        let y = float_mul(&float_mul(&float_conj(&self.p.quat()), x), &self.q.quat());
        (0..4).all(|k| (y[k] - x[k]).abs() < tol)
    }

    /// Same point set (and orientation, when both are oriented).
    pub fn same_as(&self, o: &GreatCircle, tol: f64) -> bool {
        let direct = self.p.close_to(&o.p, tol) && self.q.close_to(&o.q, tol);
        let flipped = self.p.close_to(&o.p.neg(), tol) && self.q.close_to(&o.q.neg(), tol);
        direct || (!(self.oriented && o.oriented) && flipped)
    }
}

pub fn circle_sample(k: &GreatCircle, theta: f64) -> V4 {
    k.sample(theta)
}

/// `h^{q0}(x) = x·q0·x̄`.
pub fn hopf_map(x: &V4, q0: &SpherePoint) -> SpherePoint {
    SpherePoint(vec_part(&float_mul(&float_mul(x, &q0.quat()), &float_conj(x))))
}

/// `[l, r]K_p^q = K_{[l]p}^{[r]q}`, and `*K_p^q = K_{−q}^{−p}`.
pub fn transform_circle(g: &Transform4, k: &GreatCircle) -> GreatCircle {
    let (l, r) = (g.l.to_f64(), g.r.to_f64());
    let (p, q) = if g.rev { (k.q.neg(), k.p.neg()) } else { (k.p, k.q) };
    GreatCircle::new(p.rotated(&l), q.rotated(&r), k.oriented)
}

/// Distance between two circles of one left or right bundle:
/// half the angle between the other parameters.
pub fn circle_distance(a: &GreatCircle, b: &GreatCircle) -> Result<f64, HopfError> {
    for b2 in [*b, GreatCircle { p: b.p.neg(), q: b.q.neg(), oriented: b.oriented }] {
        if a.q.close_to(&b2.q, 1e-9) {
            return Ok(a.p.angle_to(&b2.p) / 2.0);
        }
        if a.p.close_to(&b2.p, 1e-9) {
            return Ok(a.q.angle_to(&b2.q) / 2.0);
        }
    }
    Err(HopfError::NoCommonBundle)
}

/// Spherical distance from `x` to the circle `K_p^q`.
pub fn distance_to_circle(x: &V4, k: &GreatCircle) -> f64 {
    hopf_map(x, &k.q).angle_to(&k.p) / 2.0
}

/// Clifford torus `T_p^q`: points at distance π/4 from `K_p^q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CliffordTorus {
    pub p: SpherePoint,
    pub q: SpherePoint,
}

impl CliffordTorus {
    pub fn axis_circle(&self) -> GreatCircle {
        GreatCircle::new(self.p, self.q, false)
    }
}

/// `|dist(x, K_p^q) − π/4|`.
pub fn torus_distance(x: &V4, t: &CliffordTorus) -> f64 {
    (distance_to_circle(x, &t.axis_circle()) - std::f64::consts::FRAC_PI_4).abs()
}

/// `[exp pφ, exp qθ]` rotates `K_p^q` in itself by `θ − φ`.
pub fn stabilizer_rotation_angle(phi: f64, theta: f64) -> f64 {
    theta - phi
}

/// `(x, y, z) ↦ (y/(1+x), z/(1+x))`, the tangent-plane coordinates of the
/// slice map at `(1, 0, 0)`.
pub fn tangential_slice_map(v: &V3) -> Result<[f64; 2], HopfError> {
    let d = 1.0 + v[0];
    if d.abs() < 1e-12 {
        return Err(HopfError::SouthPole);
    }
    Ok([v[1] / d, v[2] / d])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quat;

    fn sp(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new([x, y, z]).unwrap()
    }

    #[test]
    fn basic_values() {
        let i = sp(1.0, 0.0, 0.0);
        assert!(hopf_map(&[1.0, 0.0, 0.0, 0.0], &i).close_to(&i, 1e-12));
        assert!(hopf_map(&[0.0, 0.0, 1.0, 0.0], &i).close_to(&i.neg(), 1e-12));
        let k = GreatCircle::new(i, i, false);
        let x = k.sample(0.0);
        assert!(k.contains(&x, 1e-12));
        assert_eq!(tangential_slice_map(&[1.0, 0.0, 0.0]).unwrap(), [0.0, 0.0]);
        assert!(tangential_slice_map(&[-1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn antipodal_parameters_use_fallback_axis() {
        let p = sp(0.3, -0.4, 0.5);
        let k = GreatCircle::new(p, p.neg(), true);
        for t in 0..12 {
            assert!(k.contains(&k.sample(t as f64 * 0.5), 1e-9));
        }
    }

    #[test]
    fn star_reverses_oriented_circle() {
        let k = GreatCircle::new(sp(0.2, 0.5, -0.1), sp(-0.7, 0.1, 0.3), true);
        let img = transform_circle(&Transform4::star(Quat::one(), Quat::one()), &k);
        assert!(img.p.close_to(&k.q.neg(), 1e-12) && img.q.close_to(&k.p.neg(), 1e-12));
    }
}
