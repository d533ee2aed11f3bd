//! Toroidal groups on the Clifford torus: torus coordinates, parameter
//! recovery, and resolution of duplicate parameter choices.
//!
//! The standard torus is `{(cos φ1, sin φ1, cos φ2, sin φ2)/√2}`. Every
//! element that preserves it acts on `(φ1, φ2)` (in units of π) as
//! `φ ↦ A·φ + t`, with `A` one of the eight symmetries of the square.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{q, AlgebraError, FieldElem, Quat, Rational};
use crate::catalog::{self, CatalogError, TorKind, ToroidalSpec};
use crate::group::{GroupError, PointGroup};
use crate::transform::Transform4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToroidalError {
    #[error("not toroidal in standard coordinates: {0}")]
    NotStandard(String),
    #[error("unrecognized torus symmetry pattern: {0}")]
    Unrecognized(String),
    #[error("no catalog representative found for {0}")]
    NoCatalogForm(String),
    #[error("several catalog representatives for one group: {0}")]
    Ambiguous(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Direction part of a torus symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusTag {
    /// identity
    Id,
    /// `(−φ1, −φ2)`
    Flip,
    /// `(φ2, φ1)`
    Swap,
    /// `(−φ2, −φ1)`
    Bswap,
    /// `(−φ1, φ2)`
    Refl,
    /// `(φ1, −φ2)`
    HRefl,
    /// `(−φ2, φ1)`
    TurnL,
    /// `(φ2, −φ1)`
    TurnR,
}

impl TorusTag {
    pub const ALL: [TorusTag; 8] = [
        TorusTag::Id,
        TorusTag::Flip,
        TorusTag::Swap,
        TorusTag::Bswap,
        TorusTag::Refl,
        TorusTag::HRefl,
        TorusTag::TurnL,
        TorusTag::TurnR,
    ];

    /// From the reversal flag and the j-parts of the two quaternions.
    pub fn from_bits(rev: bool, jl: bool, jr: bool) -> TorusTag {
        match (rev, jl, jr) {
            (false, false, false) => TorusTag::Id,
            (false, true, true) => TorusTag::Flip,
            (false, false, true) => TorusTag::Swap,
            (false, true, false) => TorusTag::Bswap,
            (true, false, false) => TorusTag::Refl,
            (true, true, true) => TorusTag::HRefl,
            (true, true, false) => TorusTag::TurnL,
            (true, false, true) => TorusTag::TurnR,
        }
    }

    /// The element with this direction part and zero translation.
    pub fn representative(self) -> Transform4 {
        let (i, j, k, one) = (Quat::i(), Quat::j(), Quat::k(), Quat::one());
        match self {
            TorusTag::Id => Transform4::identity(),
            TorusTag::Flip => Transform4::rot(j.clone(), j),
            TorusTag::Swap => Transform4::rot(i, k),
            TorusTag::Bswap => Transform4::rot(k.neg(), i),
            TorusTag::Refl => Transform4::star(i.clone(), i),
            TorusTag::HRefl => Transform4::star(k.clone(), k),
            TorusTag::TurnL => Transform4::star(j.neg(), one),
            TorusTag::TurnR => Transform4::star(one, j),
        }
    }

    /// Linear part as an integer matrix acting on `(φ1, φ2)`.
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            TorusTag::Id => [[1, 0], [0, 1]],
            TorusTag::Flip => [[-1, 0], [0, -1]],
            TorusTag::Swap => [[0, 1], [1, 0]],
            TorusTag::Bswap => [[0, -1], [-1, 0]],
            TorusTag::Refl => [[-1, 0], [0, 1]],
            TorusTag::HRefl => [[1, 0], [0, -1]],
            TorusTag::TurnL => [[0, -1], [1, 0]],
            TorusTag::TurnR => [[0, 1], [-1, 0]],
        }
    }

    pub fn symbol(self) -> char {
        match self {
            TorusTag::Id => '1',
            TorusTag::Flip => '.',
            TorusTag::Swap => '/',
            TorusTag::Bswap => '\\',
            TorusTag::Refl => '|',
            TorusTag::HRefl => '-',
            TorusTag::TurnL => 'L',
            TorusTag::TurnR => 'R',
        }
    }

    /// Tag after conjugating by the coordinate swap.
    fn swapped(self) -> TorusTag {
        match self {
            TorusTag::Refl => TorusTag::HRefl,
            TorusTag::HRefl => TorusTag::Refl,
            TorusTag::TurnL => TorusTag::TurnR,
            TorusTag::TurnR => TorusTag::TurnL,
            t => t,
        }
    }
}

pub type Vec2 = (Rational, Rational);

fn m2(x: &Rational) -> Rational {
    x.rem_euclid(2)
}

fn v2(a: Rational, b: Rational) -> Vec2 {
    (m2(&a), m2(&b))
}

/// A torus translation `R(α1, α2)` as a quaternion pair.
pub fn translation(a1: &Rational, a2: &Rational) -> Transform4 {
    catalog::toroidal::translation(a1, a2)
}

/// Group elements as `(tag, translation)`, translations reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusRep {
    pub cosets: BTreeMap<TorusTag, BTreeSet<Vec2>>,
}

impl TorusRep {
    pub fn lattice(&self) -> &BTreeSet<Vec2> {
        self.cosets.get(&TorusTag::Id).expect("identity is always present")
    }

    pub fn tags(&self) -> BTreeSet<TorusTag> {
        self.cosets.keys().copied().collect()
    }

    /// Conjugate by the coordinate swap `(φ1, φ2) ↦ (φ2, φ1)`.
    fn swapped(&self) -> TorusRep {
        let cosets = self
            .cosets
            .iter()
            .map(|(t, vs)| (t.swapped(), vs.iter().map(|(a, b)| (b.clone(), a.clone())).collect()))
            .collect();
        TorusRep { cosets }
    }

    /// Whether some element with this tag has a fixed point on the torus.
    pub fn has_mirror(&self, tag: TorusTag) -> bool {
        let Some(vs) = self.cosets.get(&tag) else { return false };
        vs.iter().any(|(t1, t2)| match tag {
            TorusTag::Refl => t2.is_zero(),
            TorusTag::HRefl => t1.is_zero(),
            TorusTag::Swap => m2(&(t1 + t2)).is_zero(),
            TorusTag::Bswap => m2(&(t1 - t2)).is_zero(),
            _ => false,
        })
    }
}

impl fmt::Display for TorusRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: String = self.cosets.keys().map(|t| t.symbol()).collect();
        write!(f, "tags {{{}}}, {} translations", tags, self.lattice().len())
    }
}

/// Split each element into direction and translation. Fails if some element
/// does not preserve the standard torus.
pub fn to_torus_rep(g: &PointGroup) -> Result<TorusRep, ToroidalError> {
    let mut cosets: BTreeMap<TorusTag, BTreeSet<Vec2>> = BTreeMap::new();
    for e in g.elements() {
        let (Some(jl), Some(jr)) = (e.l.jbit(), e.r.jbit()) else {
            return Err(ToroidalError::NotStandard(e.to_string()));
        };
        let tag = TorusTag::from_bits(e.rev, jl, jr);
        let rest = tag.representative().inverse().compose(e)?;
        let (Quat::Cyc { t: tl, j: false }, Quat::Cyc { t: tr, j: false }) = (&rest.l, &rest.r) else {
            return Err(ToroidalError::NotStandard(e.to_string()));
        };
        cosets.entry(tag).or_default().insert(v2(tr - tl, -&(tl + tr)));
    }
    Ok(TorusRep { cosets })
}

fn count(l: &BTreeSet<Vec2>, pred: impl Fn(&Rational, &Rational) -> bool) -> i64 {
    l.iter().filter(|(a, b)| pred(a, b)).count() as i64
}

fn on_diag(l: &BTreeSet<Vec2>) -> i64 {
    count(l, |a, b| a == b)
}

fn on_anti(l: &BTreeSet<Vec2>) -> i64 {
    count(l, |a, b| m2(&(a + b)).is_zero())
}

fn on_vert(l: &BTreeSet<Vec2>) -> i64 {
    count(l, |a, _| a.is_zero())
}

fn on_horiz(l: &BTreeSet<Vec2>) -> i64 {
    count(l, |_, b| b.is_zero())
}

/// `x mod step` into `[0, step)`.
fn rmod(x: &Rational, step: &Rational) -> Rational {
    let k = Rational::from_big(num_rational::BigRational::from_integer((x / step).floor()));
    x - &(&k * step)
}

/// `(m, n, s)` of a translation lattice, with `s` normalized into range.
pub fn lattice_params(l: &BTreeSet<Vec2>) -> Result<(i64, i64, i64), ToroidalError> {
    let m = on_diag(l);
    let diffs: BTreeSet<Rational> = l.iter().map(|(a, b)| m2(&(a - b))).collect();
    let n = diffs.len() as i64;
    if m * n != l.len() as i64 {
        return Err(ToroidalError::Unrecognized(format!("lattice of size {} with m={}, n={}", l.len(), m, n)));
    }
    let target = m2(&q(2, n));
    let (a1, _) = l
        .iter()
        .find(|(a, b)| m2(&(a - b)) == target)
        .ok_or_else(|| ToroidalError::Unrecognized("no generator along the anti-diagonal".into()))?;
    // Lift so that α1 − α2 = 2/n exactly, then x = α1 − 1/n mod 2/m.
    let x = rmod(&(a1 - &q(1, n)), &q(2, m));
    let s = &(&x - &q(1, n)) * &q(m * n, 2);
    if !s.is_integer() {
        return Err(ToroidalError::Unrecognized(format!("non-integral s = {}", s)));
    }
    Ok((m, n, normalize_s(m, n, s.floor_i64())))
}

/// Representative of `s` modulo `s ~ s + n` and `s ~ −m − s` inside
/// `−m/2 ≤ s ≤ (n − m)/2`.
pub fn normalize_s(m: i64, n: i64, s: i64) -> i64 {
    let lo = (-m).div_euclid(2) + if m % 2 == 0 { 0 } else { 1 };
    let wrap = |v: i64| lo + (v - lo).rem_euclid(n);
    let a = wrap(s);
    if 2 * a <= n - m {
        a
    } else {
        wrap(-m - s)
    }
}

/// Shortest nonzero lattice vector, lifted to the plane.
fn shortest(l: &BTreeSet<Vec2>) -> Option<Vec2> {
    let two = Rational::from_int(2);
    let mut best: Option<(Rational, Vec2)> = None;
    for (a, b) in l {
        for da in [0, -1] {
            for db in [0, -1] {
                let x = a + &(&two * &Rational::from_int(da));
                let y = b + &(&two * &Rational::from_int(db));
                let nn = &(&x * &x) + &(&y * &y);
                if nn.is_zero() {
                    continue;
                }
                if best.as_ref().map_or(true, |(bn, _)| nn < *bn) {
                    best = Some((nn, (x, y)));
                }
            }
        }
    }
    best.map(|(_, v)| v)
}

/// Recover natural parameters from a group in standard position. The result
/// may lie outside the catalog range.
pub fn classify_standard(rep: &TorusRep) -> Result<ToroidalSpec, ToroidalError> {
    use TorusTag::*;
    let tags = rep.tags();
    let has = |t: TorusTag| tags.contains(&t);
    if has(HRefl) && !has(Refl) {
        return classify_standard(&rep.swapped());
    }
    let l = rep.lattice();
    let size = l.len() as i64;
    let unknown = || ToroidalError::Unrecognized(rep.to_string());
    let set: Vec<TorusTag> = tags.iter().copied().collect();
    let spec = match set.as_slice() {
        [Id] | [Id, Flip] => {
            let (m, n, s) = lattice_params(l)?;
            let kind = if has(Flip) { TorKind::Flip } else { TorKind::Trans };
            ToroidalSpec::new(kind, m, n, s)
        }
        [Id, Refl] => {
            let (m, n) = (on_vert(l), on_horiz(l));
            if size == m * n {
                let kind = if rep.has_mirror(Refl) { TorKind::ReflPm } else { TorKind::ReflPg };
                ToroidalSpec::mn(kind, m, n)
            } else if size == 2 * m * n {
                ToroidalSpec::mn(TorKind::ReflCm, m, n)
            } else {
                return Err(unknown());
            }
        }
        [Id, Swap] | [Id, Bswap] | [Id, Flip, Swap, Bswap] => {
            let (m, n) = (on_diag(l), on_anti(l));
            let rect = 2 * size == m * n;
            if !rect && size != m * n {
                return Err(unknown());
            }
            let (mm, nn) = if rect { (m / 2, n / 2) } else { (m, n) };
            let kind = match (set.len(), has(Swap), rect) {
                (2, true, true) => {
                    if rep.has_mirror(Swap) {
                        TorKind::SwapPm
                    } else {
                        TorKind::SwapPg
                    }
                }
                (2, true, false) => TorKind::SwapCm,
                (2, false, true) => {
                    if rep.has_mirror(Bswap) {
                        TorKind::BswapPm
                    } else {
                        TorKind::BswapPg
                    }
                }
                (2, false, false) => TorKind::BswapCm,
                (_, _, false) => TorKind::XC2mm,
                _ => match (rep.has_mirror(Swap), rep.has_mirror(Bswap)) {
                    (true, true) => TorKind::XP2mm,
                    (true, false) => TorKind::XP2mg,
                    (false, true) => TorKind::XP2gm,
                    (false, false) => TorKind::XP2gg,
                },
            };
            ToroidalSpec::mn(kind, mm, nn)
        }
        [Id, Flip, Refl, HRefl] => {
            let (m, n) = (on_vert(l), on_horiz(l));
            if size == 2 * m * n {
                let (m, n) = (m.max(n), m.min(n));
                ToroidalSpec::mn(TorKind::PlusC2mm, m, n)
            } else if size == m * n {
                match (rep.has_mirror(Refl), rep.has_mirror(HRefl)) {
                    (true, true) => ToroidalSpec::mn(TorKind::PlusP2mm, m.max(n), m.min(n)),
                    (false, false) => ToroidalSpec::mn(TorKind::PlusP2gg, m.max(n), m.min(n)),
                    (true, false) => ToroidalSpec::mn(TorKind::PlusP2mg, m, n),
                    (false, true) => ToroidalSpec::mn(TorKind::PlusP2mg, n, m),
                }
            } else {
                return Err(unknown());
            }
        }
        [Id, Flip, TurnL, TurnR] => {
            let (x, y) = shortest(l).ok_or_else(unknown)?;
            let half = q(size, 2);
            let (a, b) = ((&x * &half).abs(), (&y * &half).abs());
            if !a.is_integer() || !b.is_integer() {
                return Err(unknown());
            }
            let (a, b) = (a.floor_i64(), b.floor_i64());
            ToroidalSpec::mn(TorKind::SwapTurn, a.max(b), a.min(b))
        }
        _ if set.len() == 8 => {
            let n = on_horiz(l);
            let mm = [Refl, HRefl, Swap, Bswap].iter().all(|t| rep.has_mirror(*t));
            let kind = if size == n * n {
                if mm {
                    TorKind::StarP4mmU
                } else {
                    TorKind::StarP4gmU
                }
            } else if size == 2 * n * n {
                if mm {
                    TorKind::StarP4mmS
                } else {
                    TorKind::StarP4gmS
                }
            } else {
                return Err(unknown());
            };
            ToroidalSpec::new(kind, 0, n, 0)
        }
        _ => return Err(unknown()),
    };
    Ok(spec)
}

/// Axis of a half-turn or rotation, as a pure quaternion up to sign:
/// either `i` or `exp(θπi)·j` with `θ ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Axis {
    I,
    J(Rational),
}

impl Axis {
    fn quat(&self) -> Quat {
        match self {
            Axis::I => Quat::i(),
            Axis::J(t) => Quat::exp_pi_j(t.clone()),
        }
    }

    fn from_quat(x: &Quat) -> Option<Axis> {
        match x {
            Quat::Cyc { t, j: false } if *t == q(1, 2) || *t == q(3, 2) => Some(Axis::I),
            Quat::Cyc { t, j: true } => Some(Axis::J(t.rem_euclid(1))),
            _ => None,
        }
    }

    /// `[l]p = l̄·p·l`.
    fn moved_by(&self, l: &Quat) -> Option<Axis> {
        let y = l.conj().mul(&self.quat()).ok()?.mul(l).ok()?;
        Axis::from_quat(&y)
    }
}

/// Conjugator moving axes `(p, q)` to `(i, i)`, as a sequence of pair
/// conjugations applied left to right.
fn frame(p: &Axis, qa: &Axis) -> Vec<Transform4> {
    let half = |a: &Axis| match a {
        Axis::I => Quat::one(),
        Axis::J(t) => Quat::exp_pi(t / &Rational::from_int(2)),
    };
    // (1 + k)/√2 maps j to i under v ↦ āva.
    let turn = |a: &Axis| match a {
        Axis::I => Quat::one(),
        Axis::J(_) => {
            let h = FieldElem::from_ints(0, 1, 0, 0, 2);
            Quat::from_fields(h.clone(), FieldElem::zero(), FieldElem::zero(), h)
        }
    };
    let mut out = Vec::new();
    let first = Transform4::rot(half(p), half(qa));
    if !first.is_identity() {
        out.push(first);
    }
    let second = Transform4::rot(turn(p), turn(qa));
    if !second.is_identity() {
        out.push(second);
    }
    out
}

/// Conjugate generators through a sequence and regenerate.
pub fn conjugate_seq(g: &PointGroup, seq: &[Transform4]) -> Result<PointGroup, ToroidalError> {
    let mut gens: Vec<Transform4> = g.generators.clone();
    if gens.is_empty() {
        gens = g.elements().cloned().collect();
    }
    for h in seq {
        gens = gens.iter().map(|x| x.conjugate_by(h)).collect::<Result<_, _>>()?;
    }
    Ok(PointGroup::generate(&gens)?)
}

/// Candidate axes: `i`, plus `j`-type axes at angles closed under the
/// reflections induced by the group's quaternions.
fn candidate_axes(g: &PointGroup) -> Vec<Axis> {
    let mut angles: BTreeSet<Rational> = BTreeSet::new();
    let mut mirrors: BTreeSet<Rational> = BTreeSet::new();
    for e in g.elements() {
        for x in [&e.l, &e.r] {
            if let Quat::Cyc { t, j } = x {
                if *j {
                    angles.insert(t.rem_euclid(1));
                    angles.insert((t + &q(1, 2)).rem_euclid(1));
                }
                mirrors.insert(t.rem_euclid(1));
            }
        }
    }
    angles.insert(Rational::zero());
    angles.insert(q(1, 2));
    let mut frontier: Vec<Rational> = angles.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for f in &mirrors {
            for b in [(&(f * &Rational::from_int(2)) - &a).rem_euclid(1), (&a - &(f * &Rational::from_int(2))).rem_euclid(1)] {
                if angles.insert(b.clone()) {
                    frontier.push(b);
                }
            }
        }
        if angles.len() > 512 {
            break;
        }
    }
    let mut v = vec![Axis::I];
    v.extend(angles.into_iter().map(Axis::J));
    v
}

/// Invariant tori `T_p^q` of a group whose elements are all cyclic.
fn invariant_tori(g: &PointGroup) -> Vec<(Axis, Axis)> {
    let axes = candidate_axes(g);
    let fixes = |a: &Axis, x: &Quat| a.moved_by(x).as_ref() == Some(a);
    let rots: Vec<&Transform4> = g.elements().filter(|e| !e.rev).collect();
    let revs: Vec<&Transform4> = g.elements().filter(|e| e.rev).collect();
    let left: Vec<&Axis> = axes.iter().filter(|p| rots.iter().all(|e| fixes(p, &e.l))).collect();
    let right: Vec<&Axis> = axes.iter().filter(|p| rots.iter().all(|e| fixes(p, &e.r))).collect();
    let mut out = Vec::new();
    for p in &left {
        for qa in &right {
            let ok = revs.iter().all(|e| {
                qa.moved_by(&e.l).as_ref() == Some(*p) && p.moved_by(&e.r).as_ref() == Some(*qa)
            });
            if ok {
                out.push(((*p).clone(), (*qa).clone()));
            }
        }
    }
    out
}

fn tag_of_matrix(a: [[i64; 2]; 2]) -> TorusTag {
    *TorusTag::ALL.iter().find(|t| t.matrix() == a).expect("square symmetry")
}

fn mat_mul2(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut m = [[0; 2]; 2];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

fn apply2(a: [[i64; 2]; 2], (x, y): &Vec2) -> (Rational, Rational) {
    let f = |r: i64| Rational::from_int(r);
    (&(&f(a[0][0]) * x) + &(&f(a[0][1]) * y), &(&f(a[1][0]) * x) + &(&f(a[1][1]) * y))
}

/// Conjugate a torus description by a direction `d` (zero translation).
pub fn rep_conj_dir(rep: &TorusRep, d: TorusTag) -> TorusRep {
    let ad = d.matrix();
    // Square symmetries are orthogonal, so the inverse is the transpose.
    let adi = [[ad[0][0], ad[1][0]], [ad[0][1], ad[1][1]]];
    let cosets = rep
        .cosets
        .iter()
        .map(|(t, vs)| {
            let nt = tag_of_matrix(mat_mul2(mat_mul2(ad, t.matrix()), adi));
            let nv = vs.iter().map(|v| {
                let (a, b) = apply2(ad, v);
                v2(a, b)
            });
            (nt, nv.collect())
        })
        .collect();
    TorusRep { cosets }
}

fn lcm_den(reps: &[&TorusRep]) -> i64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let mut l = 1i64;
    for r in reps {
        for vs in r.cosets.values() {
            for (a, b) in vs {
                for x in [a, b] {
                    l = l.lcm(&x.denom().to_i64().expect("small denominator"));
                }
            }
        }
    }
    l
}

/// Find a direction `d` and translation `c` such that conjugating `from` by
/// `d` and then by `R(c)` gives exactly `to`.
pub fn align(from: &TorusRep, to: &TorusRep) -> Option<(TorusTag, Vec2)> {
    if from.lattice().len() != to.lattice().len() {
        return None;
    }
    let grid = 2 * lcm_den(&[from, to]);
    for d in TorusTag::ALL {
        let moved = rep_conj_dir(from, d);
        if moved.lattice() != to.lattice() || moved.tags() != to.tags() {
            continue;
        }
        let probes: Vec<(TorusTag, &Vec2)> = moved
            .cosets
            .iter()
            .filter(|(t, _)| **t != TorusTag::Id)
            .map(|(t, vs)| (*t, vs.iter().next().expect("nonempty coset")))
            .collect();
        for u in 0..2 * grid {
            for w in 0..2 * grid {
                let c = (q(u, grid), q(w, grid));
                let ok = probes.iter().all(|(t, v)| {
                    let a = t.matrix();
                    let (ac1, ac2) = apply2(a, &c);
                    let shifted = v2(&(&v.0 + &c.0) - &ac1, &(&v.1 + &c.1) - &ac2);
                    to.cosets[t].contains(&shifted)
                });
                if ok {
                    return Some((d, c));
                }
            }
        }
    }
    None
}

/// A catalog spec for `g` together with the conjugation sequence that
/// carries `g` onto the built catalog group.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub spec: ToroidalSpec,
    pub conjugators: Vec<Transform4>,
}

/// Find the catalog entry of a group given in standard position, searching
/// over all invariant tori when the direct reading is a duplicate.
pub fn resolve(g: &PointGroup) -> Result<Resolution, ToroidalError> {
    let mut r = resolve_spec(g)?;
    let moved = conjugate_seq(g, &r.conjugators)?;
    let target = to_torus_rep(&catalog::build_toroidal(&r.spec)?)?;
    let (d, c) = align(&to_torus_rep(&moved)?, &target)
        .ok_or_else(|| ToroidalError::NoCatalogForm(format!("cannot align with {}", r.spec)))?;
    if d != TorusTag::Id {
        r.conjugators.push(d.representative());
    }
    if !(c.0.is_zero() && c.1.is_zero()) {
        r.conjugators.push(translation(&c.0, &c.1));
    }
    Ok(r)
}

fn resolve_spec(g: &PointGroup) -> Result<Resolution, ToroidalError> {
    let direct = classify_standard(&to_torus_rep(g)?)?;
    if direct.in_catalog() {
        return Ok(Resolution { spec: direct, conjugators: Vec::new() });
    }
    let mut found: Vec<Resolution> = Vec::new();
    for (p, qa) in invariant_tori(g) {
        let seq = frame(&p, &qa);
        let Ok(h) = conjugate_seq(g, &seq) else { continue };
        let Ok(rep) = to_torus_rep(&h) else { continue };
        let Ok(spec) = classify_standard(&rep) else { continue };
        if spec.in_catalog() && !found.iter().any(|r| r.spec == spec) {
            found.push(Resolution { spec, conjugators: seq });
        }
    }
    match found.len() {
        0 => Err(ToroidalError::NoCatalogForm(direct.to_string())),
        1 => Ok(found.pop().expect("one element")),
        _ => Err(ToroidalError::Ambiguous(
            found.iter().map(|r| r.spec.to_string()).collect::<Vec<_>>().join(", "),
        )),
    }
}

/// Classify a group in standard position to its catalog spec.
pub fn classify_toroidal(g: &PointGroup) -> Result<ToroidalSpec, ToroidalError> {
    Ok(resolve_spec(g)?.spec)
}

/// Catalog spec of a possibly excluded parameter choice.
pub fn canonicalize_duplicates(spec: &ToroidalSpec) -> Result<ToroidalSpec, ToroidalError> {
    classify_toroidal(&catalog::build_toroidal(spec)?)
}

/// Apply the parameter symmetries that do not change the group type:
/// `s` modulo its range, and the order of symmetric parameter pairs.
pub fn trivially_normalized(spec: &ToroidalSpec) -> ToroidalSpec {
    use TorKind::*;
    let (m, n) = (spec.m, spec.n);
    match spec.kind {
        Trans | Flip => ToroidalSpec::new(spec.kind, m, n, normalize_s(m, n, spec.s)),
        PlusP2mm | PlusP2gg | PlusC2mm | SwapTurn => ToroidalSpec::mn(spec.kind, m.max(n), m.min(n)),
        _ => *spec,
    }
}

/// An excluded parameter choice and the catalog group it duplicates.
#[derive(Clone, Debug)]
pub struct DuplicationRow {
    pub from: ToroidalSpec,
    pub to: ToroidalSpec,
    /// Conjugations, applied in order, that carry `from` onto `to`.
    pub conjugators: Vec<Transform4>,
}

/// Every natural parameter choice with all parameters at most `max_param`
/// that the catalog excludes for duplicating another entry.
pub fn duplication_rows(max_param: i64) -> Result<Vec<DuplicationRow>, ToroidalError> {
    let mut rows = Vec::new();
    for kind in TorKind::ALL {
        let mut cands = Vec::new();
        match kind.params() {
            catalog::ParamShape::Mns => {
                for m in 1..=max_param {
                    for n in 1..=max_param {
                        let lo = (-m).div_euclid(2);
                        cands.extend((lo..lo + n).map(|s| ToroidalSpec::new(kind, m, n, s)));
                    }
                }
            }
            catalog::ParamShape::Mn => {
                for m in 1..=max_param {
                    for n in 1..=max_param {
                        cands.push(ToroidalSpec::mn(kind, m, n));
                    }
                }
            }
            catalog::ParamShape::Ab => {
                for a in 0..=max_param {
                    for b in 0..=a {
                        cands.push(ToroidalSpec::mn(kind, a, b));
                    }
                }
            }
            catalog::ParamShape::N => {
                cands.extend((1..=max_param).map(|n| ToroidalSpec::new(kind, 0, n, 0)));
            }
        }
        for t in cands {
            if t.check_natural().is_err() || trivially_normalized(&t).in_catalog() {
                continue;
            }
            let r = resolve(&catalog::build_toroidal(&t)?)?;
            rows.push(DuplicationRow { from: t, to: r.spec, conjugators: r.conjugators });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> ToroidalSpec {
        s.parse().unwrap()
    }

    #[test]
    fn tag_actions_match_matrices() {
        let phi = (0.37f64, 1.21f64);
        let pt = |a: f64, b: f64| {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            [h * a.cos(), h * a.sin(), h * b.cos(), h * b.sin()]
        };
        for tag in TorusTag::ALL {
            let y = tag.representative().apply(&pt(phi.0, phi.1));
            let mtx = tag.matrix();
            let e1 = mtx[0][0] as f64 * phi.0 + mtx[0][1] as f64 * phi.1;
            let e2 = mtx[1][0] as f64 * phi.0 + mtx[1][1] as f64 * phi.1;
            let want = pt(e1, e2);
            for k in 0..4 {
                assert!((y[k] - want[k]).abs() < 1e-12, "{:?}", tag);
            }
        }
    }

    #[test]
    fn translation_moves_coordinates() {
        let t = translation(&q(1, 3), &q(-1, 5));
        let rep = to_torus_rep(&PointGroup::generate(&[t]).unwrap()).unwrap();
        assert!(rep.lattice().contains(&(q(1, 3), q(9, 5))));
    }

    #[test]
    fn s_normalization() {
        assert_eq!(normalize_s(2, 5, 1), 1);
        assert_eq!(normalize_s(2, 5, 2), 1);
        assert_eq!(normalize_s(4, 2, -2), -2);
        for m in 1..8 {
            for n in 1..8 {
                for s in -20..20 {
                    assert!(catalog::s_in_range(m, n, normalize_s(m, n, s)), "{} {} {}", m, n, s);
                }
            }
        }
    }

    #[test]
    fn round_trip_small() {
        for s in ["tor:1:m=2,n=5,s=1", "tor:|/pg:m=2,n=4", "tor:X/c2mm:m=5,n=5", "tor:L:a=4,b=3", "tor:+/p2mg:m=1,n=3"] {
            let t = spec(s);
            let g = catalog::build_toroidal(&t).unwrap();
            assert_eq!(classify_toroidal(&g).unwrap(), t, "{}", s);
        }
    }

    #[test]
    fn round_trip_catalog() {
        for t in catalog::list_catalog(120).into_iter().filter_map(|g| match g {
            catalog::GroupSpec::Toroidal(t) => Some(t),
            _ => None,
        }) {
            let g = catalog::build_toroidal(&t).unwrap();
            assert_eq!(classify_toroidal(&g).unwrap(), t);
        }
    }

    #[test]
    fn every_natural_spec_resolves_exactly() {
        for order in 1..=64 {
            for t in catalog::natural_toroidal_specs_of_order(order) {
                let g = catalog::build_toroidal(&t).unwrap();
                let r = resolve(&g).unwrap_or_else(|e| panic!("{}: {}", t, e));
                assert_eq!(r.spec.order(), order);
                let moved = conjugate_seq(&g, &r.conjugators).unwrap();
                assert!(moved.equals(&catalog::build_toroidal(&r.spec).unwrap()), "{} -> {}", t, r.spec);
            }
        }
    }

    #[test]
    fn duplication_rows_are_exact() {
        let rows = duplication_rows(20).unwrap();
        for r in &rows {
            let g = catalog::build_toroidal(&r.from).unwrap();
            let moved = conjugate_seq(&g, &r.conjugators).unwrap();
            assert!(moved.equals(&catalog::build_toroidal(&r.to).unwrap()), "{} -> {}", r.from, r.to);
        }
        assert!(rows.iter().any(|r| r.from == spec("tor:X/c2mm:m=1,n=5") && r.to == spec("tor:.:m=1,n=10,s=2")));
    }

    #[test]
    fn worked_conjugator() {
        let h = FieldElem::from_ints(0, 1, 0, 0, 2);
        let a = Quat::from_fields(h.clone(), FieldElem::zero(), -h, FieldElem::zero());
        let x = Transform4::rot(a, Quat::one());
        let g1 = catalog::build_toroidal(&spec("tor:X/c2mm:m=1,n=5")).unwrap();
        let g2 = catalog::build_toroidal(&spec("tor:.:m=1,n=10,s=2")).unwrap();
        let via = |g: &PointGroup, h: &Transform4| conjugate_seq(g, std::slice::from_ref(h)).unwrap();
        assert!(via(&g1, &x).equals(&g2));
        assert!(via(&g2, &x.inverse()).equals(&g1));
    }

    #[test]
    fn duplicate_chains() {
        let chains: [(&[&str], &str); 7] = [
            (&["tor://cm:m=1,n=1", "tor:\\/cm:m=1,n=1", "tor:.:m=1,n=1,s=0"], "tor:1:m=1,n=2,s=0"),
            (&["tor://pm:m=1,n=1", "tor:\\/pm:m=1,n=1", "tor:.:m=2,n=1,s=-1"], "tor:1:m=2,n=2,s=0"),
            (&["tor:X/p2gg:m=1,n=1", "tor://pm:m=2,n=1", "tor:\\/pm:m=1,n=2"], "tor:1:m=4,n=2,s=-2"),
            (&["tor:X/p2gm:m=1,n=1", "tor://cm:m=2,n=2", "tor://pm:m=1,n=2"], "tor:.:m=2,n=2,s=-1"),
            (&["tor:X/p2mg:m=1,n=1", "tor:\\/cm:m=2,n=2", "tor:\\/pm:m=2,n=1"], "tor:.:m=4,n=1,s=-2"),
            (&["tor:*/p4gmU:n=1", "tor:+/p2gg:m=1,n=2"], "tor:+/p2gg:m=2,n=1"),
            (&["tor:X/c2mm:m=2,n=2", "tor:X/p2mm:m=2,n=1", "tor:X/p2mm:m=1,n=2"], "tor:.:m=4,n=2,s=-2"),
        ];
        for (members, target) in chains {
            for m in members {
                assert_eq!(canonicalize_duplicates(&spec(m)).unwrap(), spec(target), "{}", m);
            }
        }
    }
}
