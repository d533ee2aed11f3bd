//! Generators of the tubical families.

use crate::algebra::consts::{e, i_i, i_o, omega};
use crate::algebra::Quat;
use crate::transform::Transform4;

use super::spec::{Side, TubicalFamily};

fn p(l: Quat, r: Quat) -> Transform4 {
    Transform4::rot(l, r)
}

/// Generators of the left form; the right form swaps every pair.
pub fn generators(family: TubicalFamily, side: Side, n: u64) -> Vec<Transform4> {
    use TubicalFamily::*;
    let n = n as i64;
    let one = Quat::one;
    let left_i = || vec![p(i_i(), one()), p(omega(), one())];
    let left_o = || vec![p(i_o(), one()), p(omega(), one())];
    let left_t = || vec![p(Quat::i(), one()), p(omega(), one())];
    let en = || p(one(), e(n));
    let j = || p(one(), Quat::j());
    let gens = match family {
        IxC => [left_i(), vec![en()]].concat(),
        OxC => [left_o(), vec![en()]].concat(),
        OxC2 => [left_t(), vec![en(), p(i_o(), e(2 * n))]].concat(),
        TxC => [left_t(), vec![en()]].concat(),
        TxC3 => vec![p(Quat::i(), one()), en(), p(omega(), e(3 * n))],
        IxD => [left_i(), vec![en(), j()]].concat(),
        OxD => [left_o(), vec![en(), j()]].concat(),
        OxDbar4 => [left_t(), vec![en(), j(), p(i_o(), e(2 * n))]].concat(),
        OxDhalf => [left_t(), vec![en(), p(i_o(), Quat::j())]].concat(),
        OxD6 => vec![p(Quat::i(), one()), en(), p(i_o(), Quat::j()), p(omega(), e(3 * n))],
        TxD => [left_t(), vec![en(), j()]].concat(),
    };
    match side {
        Side::Left => gens,
        Side::Right => gens.into_iter().map(|g| Transform4::rot(g.r, g.l)).collect(),
    }
}
