use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rational::{q, Rational};
use super::AlgebraError;

/// An element `a + b√2 + c√5 + d√10` of Q(√2, √5).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FieldElem {
    pub c: [Rational; 4],
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

impl FieldElem {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> FieldElem {
        FieldElem { c: [a, b, c, d] }
    }

    pub fn rational(r: Rational) -> FieldElem {
        FieldElem::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn int(n: i64) -> FieldElem {
        FieldElem::rational(Rational::from_int(n))
    }

    pub fn zero() -> FieldElem {
        FieldElem::int(0)
    }

    pub fn one() -> FieldElem {
        FieldElem::int(1)
    }

    pub fn sqrt2() -> FieldElem {
        FieldElem::new(q(0, 1), q(1, 1), q(0, 1), q(0, 1))
    }

    pub fn sqrt5() -> FieldElem {
        FieldElem::new(q(0, 1), q(0, 1), q(1, 1), q(0, 1))
    }

    pub fn sqrt10() -> FieldElem {
        FieldElem::new(q(0, 1), q(0, 1), q(0, 1), q(1, 1))
    }

    /// Build from small integer coefficients over a common denominator.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, den: i64) -> FieldElem {
        FieldElem::new(q(a, den), q(b, den), q(c, den), q(d, den))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> FieldElem {
        FieldElem { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    /// Automorphism √2 ↦ −√2.
    pub fn conj2(&self) -> FieldElem {
        FieldElem::new(self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3])
    }

    /// Automorphism √5 ↦ −√5.
    pub fn conj5(&self) -> FieldElem {
        FieldElem::new(self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3])
    }

    pub fn inverse(&self) -> Result<FieldElem, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let c2 = self.conj2();
        let n1 = self * &c2;
        let c5 = n1.conj5();
        let n2 = &n1 * &c5;
        let r = n2.as_rational().expect("field norm is rational").clone();
        Ok((&c2 * &c5).scale(&r.recip()))
    }

    pub fn checked_div(&self, o: &FieldElem) -> Result<FieldElem, AlgebraError> {
        Ok(self * &o.inverse()?)
    }

    pub fn to_f64(&self) -> f64 {
        let s5 = 5f64.sqrt();
        self.c[0].to_f64() + self.c[1].to_f64() * SQRT2 + self.c[2].to_f64() * s5 + self.c[3].to_f64() * SQRT2 * s5
    }

    /// Exact sign, decided by nested conjugate norms when the float is ambiguous.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let f = self.to_f64();
        if f.abs() > 1e-9 {
            return if f > 0.0 { 1 } else { -1 };
        }
        // Write x = u + v√2 with u, v in Q(√5) and compare u² against 2v².
        let u = FieldElem::new(self.c[0].clone(), q(0, 1), self.c[2].clone(), q(0, 1));
        let v = FieldElem::new(self.c[1].clone(), q(0, 1), self.c[3].clone(), q(0, 1));
        let su = sign_q5(&u);
        let sv = sign_q5(&v);
        if sv == 0 {
            return su;
        }
        if su == 0 {
            return sv;
        }
        if su == sv {
            return su;
        }
        let diff = &(&u * &u) - &(&(&v * &v) * &FieldElem::int(2));
        su * sign_q5(&diff)
    }

    pub fn cmp_exact(&self, o: &FieldElem) -> std::cmp::Ordering {
        match (self - o).signum() {
            -1 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    pub fn square(&self) -> FieldElem {
        self * self
    }
}

/// Sign of `a + c√5` (coefficients 1 and 2 only).
fn sign_q5(x: &FieldElem) -> i32 {
    let a = &x.c[0];
    let c = &x.c[2];
    let sa = a.signum();
    let sc = c.signum();
    if sc == 0 {
        return sa;
    }
    if sa == 0 || sa == sc {
        return if sa == 0 { sc } else { sa };
    }
    let lhs = a * a;
    let rhs = &(c * c) * &Rational::from_int(5);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sc,
        std::cmp::Ordering::Equal => 0,
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        if self.is_rational() {
            return o.scale(a0);
        }
        if o.is_rational() {
            return self.scale(b0);
        }
        let two = Rational::from_int(2);
        let five = Rational::from_int(5);
        let ten = Rational::from_int(10);
        let c0 = &(&(a0 * b0) + &(&(a1 * b1) * &two)) + &(&(&(a2 * b2) * &five) + &(&(a3 * b3) * &ten));
        let c1 = &(&(a0 * b1) + &(a1 * b0)) + &(&(&(a2 * b3) + &(a3 * b2)) * &five);
        let c2 = &(&(a0 * b2) + &(a2 * b0)) + &(&(&(a1 * b3) + &(a3 * b1)) * &two);
        let c3 = &(&(a0 * b3) + &(a3 * b0)) + &(&(a1 * b2) + &(a2 * b1));
        FieldElem { c: [c0, c1, c2, c3] }
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::checked_div`] otherwise.
    fn div(self, o: &FieldElem) -> FieldElem {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $f(self, o: FieldElem) -> FieldElem {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $f(self, o: &'a FieldElem) -> FieldElem {
                (&self).$f(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "√2", "√5", "√10"];
        let mut first = true;
        for (k, coef) in self.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.signum() < 0;
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", mag)?;
            } else if mag == Rational::one() {
                write!(f, "{}", names[k])?;
            } else {
                write!(f, "{}{}", mag, names[k])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_products() {
        assert_eq!(FieldElem::sqrt2().square(), FieldElem::int(2));
        assert_eq!(&FieldElem::sqrt2() * &FieldElem::sqrt5(), FieldElem::sqrt10());
        assert_eq!(FieldElem::sqrt10().square(), FieldElem::int(10));
        let a = FieldElem::from_ints(1, 0, 1, 0, 4);
        let b = FieldElem::from_ints(-1, 0, 1, 0, 4);
        assert_eq!(&a * &b, FieldElem::rational(q(1, 4)));
    }

    #[test]
    fn inverse_round_trip() {
        let x = FieldElem::from_ints(3, -2, 7, 1, 5);
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, FieldElem::one());
        assert!(FieldElem::zero().inverse().is_err());
    }

    #[test]
    fn exact_sign_near_zero() {
        let x = FieldElem::from_ints(99, -70, 0, 0, 1);
        assert_eq!(x.signum(), 1);
        assert_eq!((-&x).signum(), -1);
        let y = FieldElem::from_ints(-1, 0, 1, 0, 4);
        assert_eq!(y.signum(), 1);
    }
}
