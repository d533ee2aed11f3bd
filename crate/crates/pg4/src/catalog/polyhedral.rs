//! Generators of the polyhedral and axial groups.

use std::sync::OnceLock;

use crate::algebra::consts::{i_i, i_i_prime, i_o, omega};
use crate::algebra::{FieldElem, Quat};
use crate::group::{quat_closure, PointGroup};
use crate::transform::Transform4;

use super::spec::{AxialSpec, Group3, PolyhedralId};

fn p(l: Quat, r: Quat) -> Transform4 {
    Transform4::rot(l, r)
}

fn s(l: Quat, r: Quat) -> Transform4 {
    Transform4::star(l, r)
}

fn one() -> Quat {
    Quat::one()
}

fn both(l: &[Quat], r: &[Quat]) -> Vec<Transform4> {
    let mut g: Vec<Transform4> = l.iter().map(|x| p(x.clone(), one())).collect();
    g.extend(r.iter().map(|x| p(one(), x.clone())));
    g
}

fn gen_i() -> Vec<Quat> {
    vec![i_i(), omega()]
}

fn gen_o() -> Vec<Quat> {
    vec![i_o(), omega()]
}

fn gen_t() -> Vec<Quat> {
    vec![Quat::i(), omega()]
}

fn q8() -> Vec<Quat> {
    vec![Quat::i(), Quat::j()]
}

/// (j − k)/√2.
fn jk_minus() -> Quat {
    let h = FieldElem::from_ints(0, 1, 0, 0, 2);
    Quat::from_fields(FieldElem::zero(), FieldElem::zero(), h.clone(), -h)
}

fn simplex_rot() -> Vec<Transform4> {
    vec![p(omega(), omega()), p(i_i(), i_i_prime())]
}

/// Reversing elements extending the simplex rotation group: one whose
/// extension contains a reflection, and one whose extension has none.
fn simplex_extensions() -> &'static (Transform4, Transform4) {
    static CELL: OnceLock<(Transform4, Transform4)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = PointGroup::generate(&simplex_rot()).expect("simplex group closes");
        let two_i = quat_closure(&gen_i()).expect("2I closes");
        let mut with_refl = None;
        let mut without = None;
        let pairs = two_i.iter().flat_map(|a| two_i.iter().map(move |b| (a, b)));
        for (a, b) in pairs {
            let e = s(a.clone(), b.clone());
            let Ok(ext) = g.extend_achiral(&e) else { continue };
            let refl = ext.elements().any(is_reflection);
            if refl && with_refl.is_none() {
                with_refl = Some(e);
            } else if !refl && without.is_none() {
                without = Some(e);
            }
            if with_refl.is_some() && without.is_some() {
                break;
            }
        }
        (with_refl.expect("reflecting extension"), without.expect("reflection-free extension"))
    })
}

/// Reversing element whose fixed space is a hyperplane.
pub fn is_reflection(g: &Transform4) -> bool {
    if !g.rev {
        return false;
    }
    let m = g.to_matrix();
    let tr: f64 = (0..4).map(|k| m[k][k]).sum();
    (tr - 2.0).abs() < 1e-9
}

pub fn polyhedral_generators(id: PolyhedralId) -> Vec<Transform4> {
    use PolyhedralId::*;
    let x = s(one(), one());
    let diag = |q: Quat| p(q.clone(), q);
    match id {
        IxI => both(&gen_i(), &gen_i()),
        IxO => both(&gen_i(), &gen_o()),
        OxI => both(&gen_o(), &gen_i()),
        IxT => both(&gen_i(), &gen_t()),
        TxI => both(&gen_t(), &gen_i()),
        OxO => both(&gen_o(), &gen_o()),
        OxOhalf => [both(&gen_t(), &gen_t()), vec![diag(i_o())]].concat(),
        OxOsixth => [both(&q8(), &q8()), vec![diag(omega()), diag(i_o())]].concat(),
        OxT => both(&gen_o(), &gen_t()),
        TxO => both(&gen_t(), &gen_o()),
        TxT => both(&gen_t(), &gen_t()),
        TxTthird => [both(&q8(), &q8()), vec![diag(omega())]].concat(),
        IxIbarPm => [simplex_rot(), vec![Transform4::neg_id()]].concat(),
        IxIbarPlus => simplex_rot(),
        IxI2 => [both(&gen_i(), &gen_i()), vec![x]].concat(),
        IxIbarPm2 => [simplex_rot(), vec![Transform4::neg_id(), simplex_extensions().0.clone()]].concat(),
        IxIbarPlus21 => [simplex_rot(), vec![simplex_extensions().0.clone()]].concat(),
        IxIbarPlus23 => [simplex_rot(), vec![simplex_extensions().1.clone()]].concat(),
        OxO2 => [both(&gen_o(), &gen_o()), vec![x]].concat(),
        OxOhalf2 => [polyhedral_generators(OxOhalf), vec![x]].concat(),
        OxOhalf2bar => [polyhedral_generators(OxOhalf), vec![s(one(), i_o())]].concat(),
        OxOsixth2 => [polyhedral_generators(OxOsixth), vec![x]].concat(),
        TxT2 => [both(&gen_t(), &gen_t()), vec![x]].concat(),
        TxTthird2 => [polyhedral_generators(TxTthird), vec![x]].concat(),
        TxTthird2bar => [polyhedral_generators(TxTthird), vec![s(jk_minus(), jk_minus())]].concat(),
    }
}

/// Generators of a 3D group, with `[l] ↦ [l, l]` and `−[l] ↦ *[l, l]`.
fn group3(g: Group3) -> Vec<Transform4> {
    let rot = |qs: Vec<Quat>| -> Vec<Transform4> { qs.into_iter().map(|q| p(q.clone(), q)).collect() };
    let inv = s(one(), one());
    match g {
        Group3::PlusI => rot(gen_i()),
        Group3::PmI => [rot(gen_i()), vec![inv]].concat(),
        Group3::PlusO => rot(gen_o()),
        Group3::PmO => [rot(gen_o()), vec![inv]].concat(),
        Group3::TO => [rot(gen_t()), vec![s(i_o(), i_o())]].concat(),
        Group3::PlusT => rot(gen_t()),
        Group3::PmT => [rot(gen_t()), vec![inv]].concat(),
    }
}

/// An element of `G3 \ H` for each hybrid pair.
fn outside(h: Group3, g: Group3) -> Transform4 {
    match (h, g) {
        (Group3::PmT, Group3::PmO) | (Group3::PlusT, Group3::PlusO) => p(i_o(), i_o()),
        (Group3::PlusT, Group3::TO) => s(i_o(), i_o()),
        _ => s(one(), one()),
    }
}

pub fn axial_generators(spec: AxialSpec) -> Vec<Transform4> {
    // −x4 is x ↦ −x̄.
    let flip4 = s(one(), Quat::minus_one());
    match spec {
        AxialSpec::Pyramidal(g) => group3(g),
        AxialSpec::Prismatic(g) => [group3(g), vec![flip4]].concat(),
        AxialSpec::Hybrid(h, g) => {
            let e = outside(h, g).compose(&flip4).expect("exact product");
            [group3(h), vec![e]].concat()
        }
    }
}
