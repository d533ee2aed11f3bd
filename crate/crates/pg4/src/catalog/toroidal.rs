//! Generators of the toroidal families.
//!
//! Angles are in units of π. A torus translation `R(α1, α2)` moves the torus
//! coordinates `(φ1, φ2)` by `(α1, α2)` and is the pair
//! `[exp(−(α1+α2)/2·i), exp((α1−α2)/2·i)]`.

use crate::algebra::{q, Quat, Rational};
use crate::transform::Transform4;

use super::spec::{TorKind, ToroidalSpec};

fn e(t: Rational) -> Quat {
    Quat::exp_pi(t)
}

fn pair(a: Rational, b: Rational) -> Transform4 {
    Transform4::rot(e(a), e(b))
}

/// `a·b` as a product of pairs (apply `a`, then `b`).
fn prod(a: &Transform4, b: &Transform4) -> Transform4 {
    a.compose(b).expect("cyclic pairs always multiply")
}

fn rot(l: Quat, rr: Quat) -> Transform4 {
    Transform4::rot(l, rr)
}

fn star(l: Quat, rr: Quat) -> Transform4 {
    Transform4::star(l, rr)
}

/// Torus translation by `(α1, α2)`.
pub fn translation(a1: &Rational, a2: &Rational) -> Transform4 {
    let two = Rational::from_int(2);
    let l = -&(&(a1 + a2) / &two);
    let rr = &(a1 - a2) / &two;
    pair(l, rr)
}

pub fn generators(spec: &ToroidalSpec) -> Vec<Transform4> {
    use TorKind::*;
    let (m, n, s) = (spec.m, spec.n, spec.s);
    let zero = Rational::zero();
    let i = Quat::i;
    let j = Quat::j;
    let k = Quat::k;
    let mk = || Quat::k().neg();
    let mj = || Quat::j().neg();
    // Shared translation sets.
    let upright = || vec![pair(q(1, m), q(1, m)), pair(q(1, n), q(-1, n))];
    let diag = || vec![pair(q(1, m), zero.clone()), pair(zero.clone(), q(1, n))];
    let diag_c = |first: Transform4| vec![pair(q(2, m), zero.clone()), pair(zero.clone(), q(2, n)), first];
    let swap = || rot(i(), k());
    let bswap = || rot(mk(), i());
    let refl = || star(i(), i());
    let hrefl = || star(k(), k());
    let mut g = match spec.kind {
        Trans | Flip => vec![
            pair(q(-2, m), zero.clone()),
            pair(q(-(m + 2 * s), m * n), q(1, n)),
        ],
        ReflPm => [upright(), vec![refl()]].concat(),
        ReflPg => [upright(), vec![prod(&refl(), &pair(q(1, 2 * m), q(1, 2 * m)))]].concat(),
        ReflCm => [upright(), vec![pair(&q(1, 2 * m) + &q(1, 2 * n), &q(1, 2 * m) - &q(1, 2 * n)), refl()]].concat(),
        BswapPm => [diag(), vec![bswap()]].concat(),
        BswapPg => [diag(), vec![prod(&pair(zero.clone(), q(1, 2 * n)), &bswap())]].concat(),
        BswapCm => [diag_c(pair(q(1, m), q(1, n))), vec![bswap()]].concat(),
        SwapPm => [diag(), vec![swap()]].concat(),
        SwapPg => [diag(), vec![prod(&pair(q(1, 2 * m), zero.clone()), &swap())]].concat(),
        SwapCm => [diag_c(pair(q(1, m), q(1, n))), vec![swap()]].concat(),
        XP2mm | XP2mg | XP2gm | XP2gg => {
            let shift = match spec.kind {
                XP2mm => pair(zero.clone(), zero.clone()),
                XP2mg => pair(zero.clone(), q(1, 2 * n)),
                XP2gm => pair(q(1, 2 * m), zero.clone()),
                _ => pair(q(1, 2 * m), q(1, 2 * n)),
            };
            [diag(), vec![prod(&shift, &swap()), prod(&shift, &bswap())]].concat()
        }
        XC2mm => [diag_c(pair(q(1, m), q(1, n))), vec![swap(), bswap()]].concat(),
        PlusP2mm => [upright(), vec![refl(), hrefl()]].concat(),
        PlusP2mg | PlusP2gg => {
            let p = if spec.kind == PlusP2mg {
                pair(q(1, 2 * n), q(-1, 2 * n))
            } else {
                pair(&q(1, 2 * m) + &q(1, 2 * n), &q(1, 2 * m) - &q(1, 2 * n))
            };
            [upright(), vec![prod(&refl(), &p), prod(&hrefl(), &p)]].concat()
        }
        PlusC2mm => [
            upright(),
            vec![pair(&q(1, 2 * m) + &q(1, 2 * n), &q(1, 2 * m) - &q(1, 2 * n)), refl(), hrefl()],
        ]
        .concat(),
        SwapTurn => {
            let (a, b) = (m, n);
            let c2 = a * a + b * b;
            vec![
                pair(q(-(a + b), c2), q(a - b, c2)),
                pair(q(a - b, c2), q(a + b, c2)),
                star(mj(), Quat::one()),
            ]
        }
        StarP4mmU | StarP4gmU => {
            let t = vec![pair(q(1, n), q(1, n)), pair(q(1, n), q(-1, n))];
            if spec.kind == StarP4mmU {
                [t, vec![swap(), refl()]].concat()
            } else {
                let sh = pair(q(1, n), zero.clone());
                [t, vec![prod(&swap(), &sh), prod(&refl(), &sh)]].concat()
            }
        }
        StarP4mmS | StarP4gmS => {
            let t = vec![pair(q(1, n), zero.clone()), pair(zero.clone(), q(1, n))];
            if spec.kind == StarP4mmS {
                [t, vec![swap(), refl()]].concat()
            } else {
                let sh = pair(q(1, 2 * n), q(1, 2 * n));
                [t, vec![prod(&swap(), &sh), prod(&refl(), &sh)]].concat()
            }
        }
    };
    if spec.kind == Flip {
        g.push(rot(j(), j()));
    }
    g
}
