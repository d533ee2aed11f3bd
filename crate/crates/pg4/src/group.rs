//! Finite groups of transformations: closure, fingerprints, conjugation and
//! the Goursat and achiral constructions.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexSet;

use crate::algebra::{AlgebraError, Quat, Rational};
use crate::transform::{ElementCode, Transform4};

pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("not closed within cap {0}")]
    CapExceeded(usize),
    #[error("extending element must be orientation-reversing")]
    NotReversing,
    #[error("extending element does not normalize the group")]
    NotNormalizing,
    #[error("square of the extending element is not in the group")]
    SquareNotInGroup,
    #[error("goursat pairing is not a homomorphism")]
    BadPairing,
    #[error("quaternion set of order {order} with maximal element order {max} is not a known group")]
    Unclassifiable { order: usize, max: u64 },
}

/// A finite point group as an explicit set of canonical transformations.
#[derive(Clone)]
pub struct PointGroup {
    elements: IndexSet<Transform4>,
    pub generators: Vec<Transform4>,
}

impl PointGroup {
    pub fn generate(gens: &[Transform4]) -> Result<PointGroup, GroupError> {
        PointGroup::generate_capped(gens, DEFAULT_CAP)
    }

    pub fn generate_capped(gens: &[Transform4], cap: usize) -> Result<PointGroup, GroupError> {
        let gens: Vec<Transform4> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut elements = IndexSet::new();
        elements.insert(Transform4::identity());
        let mut next = 0;
        while next < elements.len() {
            let e = elements[next].clone();
            next += 1;
            for g in &gens {
                let p = e.compose(g)?;
                if elements.insert(p) && elements.len() > cap {
                    return Err(GroupError::CapExceeded(cap));
                }
            }
        }
        Ok(PointGroup { elements, generators: gens })
    }

    /// Wrap a set that the caller knows to be closed.
    pub fn from_closed_set(elements: IndexSet<Transform4>, generators: Vec<Transform4>) -> PointGroup {
        PointGroup { elements, generators }
    }

    pub fn trivial() -> PointGroup {
        PointGroup::generate(&[]).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Transform4) -> bool {
        self.elements.contains(g)
    }

    pub fn is_chiral(&self) -> bool {
        self.elements.iter().all(|g| !g.rev)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Transform4> {
        self.elements.iter()
    }

    pub fn element_set(&self) -> &IndexSet<Transform4> {
        &self.elements
    }

    pub fn contains_neg_id(&self) -> bool {
        self.contains(&Transform4::neg_id())
    }

    /// Orientation-preserving subgroup.
    pub fn chiral_part(&self) -> PointGroup {
        let els: IndexSet<Transform4> = self.elements.iter().filter(|g| !g.rev).cloned().collect();
        PointGroup { elements: els, generators: Vec::new() }
    }

    /// Exact set equality.
    pub fn equals(&self, o: &PointGroup) -> bool {
        self.order() == o.order() && self.elements.iter().all(|g| o.contains(g))
    }

    pub fn is_subgroup_of(&self, o: &PointGroup) -> bool {
        self.elements.iter().all(|g| o.contains(g))
    }

    pub fn conjugate(&self, h: &Transform4) -> Result<PointGroup, GroupError> {
        let mut els = IndexSet::with_capacity(self.order());
        for g in &self.elements {
            els.insert(g.conjugate_by(h)?);
        }
        let gens = self.generators.iter().map(|g| g.conjugate_by(h)).collect::<Result<Vec<_>, _>>()?;
        Ok(PointGroup { elements: els, generators: gens })
    }

    /// `G ∪ G·e` for a reversing `e` that normalizes `G` with `e² ∈ G`.
    pub fn extend_achiral(&self, e: &Transform4) -> Result<PointGroup, GroupError> {
        if !e.rev {
            return Err(GroupError::NotReversing);
        }
        if !self.contains(&e.compose(e)?) {
            return Err(GroupError::SquareNotInGroup);
        }
        let gens: Vec<Transform4> =
            if self.generators.is_empty() { self.elements.iter().cloned().collect() } else { self.generators.clone() };
        for g in &gens {
            if !self.contains(&g.conjugate_by(e)?) {
                return Err(GroupError::NotNormalizing);
            }
        }
        let mut els = self.elements.clone();
        for g in &self.elements {
            els.insert(g.compose(e)?);
        }
        let mut all_gens = gens;
        all_gens.push(e.clone());
        Ok(PointGroup { elements: els, generators: all_gens })
    }

    pub fn fingerprint(&self) -> Result<Fingerprint, AlgebraError> {
        let mut counts = BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.element_code()?).or_insert(0usize) += 2;
        }
        Ok(Fingerprint { counts })
    }

    /// Left and right quaternion groups of the orientation-preserving part.
    pub fn left_right_groups(&self) -> (IndexSet<Quat>, IndexSet<Quat>) {
        let mut ls = IndexSet::new();
        let mut rs = IndexSet::new();
        for g in self.elements.iter().filter(|g| !g.rev) {
            ls.insert(g.l.clone());
            ls.insert(g.l.neg());
            rs.insert(g.r.clone());
            rs.insert(g.r.neg());
        }
        (ls, rs)
    }

    /// Goursat construction `{[l, r] : Φ(l·L0) = r·R0}`.
    pub fn goursat(data: &GoursatData) -> Result<PointGroup, GroupError> {
        let l0 = quat_closure(&data.l0)?;
        let r0 = quat_closure(&data.r0)?;
        let mut els = IndexSet::new();
        for (lc, rc) in &data.pairing {
            for a in &l0 {
                let l = lc.mul(a)?;
                for b in &r0 {
                    els.insert(Transform4::rot(l.clone(), rc.mul(b)?));
                }
            }
        }
        let mut gens: Vec<Transform4> = data.pairing.iter().map(|(l, r)| Transform4::rot(l.clone(), r.clone())).collect();
        gens.extend(data.l0.iter().map(|l| Transform4::rot(l.clone(), Quat::one())));
        gens.extend(data.r0.iter().map(|r| Transform4::rot(Quat::one(), r.clone())));
        gens.push(Transform4::neg_id());
        let check = PointGroup::generate_capped(&gens, els.len() + 1).map_err(|_| GroupError::BadPairing)?;
        if !check.equals(&PointGroup { elements: els.clone(), generators: Vec::new() }) {
            return Err(GroupError::BadPairing);
        }
        Ok(PointGroup { elements: els, generators: gens })
    }
}

impl fmt::Debug for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointGroup(order {})", self.order())
    }
}

/// Goursat data: generators for `L0 ⊴ L` and `R0 ⊴ R`, plus one
/// `(l, r)` pair per coset of `L/L0`, listing `Φ(l·L0) = r·R0`.
#[derive(Clone, Debug)]
pub struct GoursatData {
    pub l0: Vec<Quat>,
    pub r0: Vec<Quat>,
    pub pairing: Vec<(Quat, Quat)>,
}

/// Closure of a set of unit quaternions under multiplication.
pub fn quat_closure(gens: &[Quat]) -> Result<IndexSet<Quat>, AlgebraError> {
    let mut els = IndexSet::new();
    els.insert(Quat::one());
    let mut next = 0;
    while next < els.len() {
        let e = els[next].clone();
        next += 1;
        for g in gens {
            els.insert(e.mul(g)?);
        }
    }
    Ok(els)
}

/// Multiplicative order of a unit quaternion whose angle is known.
pub fn quat_order(x: &Quat) -> Result<u64, AlgebraError> {
    // x = cos(aπ) + u·sin(aπ), so x^n = 1 iff n·a/2 is an integer.
    let a = x.angle_of()?;
    let half = &a / &Rational::from_int(2);
    Ok(half.denom().try_into().unwrap_or(u64::MAX))
}

/// The five kinds of finite quaternion groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum QuatGroupType {
    /// `2C_n`, of order `2n` (or the odd cyclic group of order `n` when `-1` is absent).
    Cyclic(usize),
    /// `2D_2n`, of order `4n`.
    Dihedral(usize),
    T,
    O,
    I,
}

impl QuatGroupType {
    pub fn is_polyhedral(&self) -> bool {
        matches!(self, QuatGroupType::T | QuatGroupType::O | QuatGroupType::I)
    }

    pub fn order(&self) -> usize {
        match self {
            QuatGroupType::Cyclic(n) | QuatGroupType::Dihedral(n) => *n,
            QuatGroupType::T => 24,
            QuatGroupType::O => 48,
            QuatGroupType::I => 120,
        }
    }
}

pub fn classify_quat_group(set: &IndexSet<Quat>) -> Result<QuatGroupType, GroupError> {
    let n = set.len();
    let mut max = 1;
    for x in set {
        max = max.max(quat_order(x)?);
    }
    let m = max as usize;
    Ok(match (n, m) {
        _ if m == n => QuatGroupType::Cyclic(n),
        (24, 6) => QuatGroupType::T,
        (48, 8) => QuatGroupType::O,
        (120, 10) => QuatGroupType::I,
        _ if 2 * m == n && n >= 8 => QuatGroupType::Dihedral(n),
        // Q8 and 2D_4 coincide; its maximal order is 4 = n/2 with n = 8.
        _ => return Err(GroupError::Unclassifiable { order: n, max }),
    })
}

/// Multiset of element codes, each transformation counted twice.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fingerprint {
    pub counts: BTreeMap<ElementCode, usize>,
}

impl Fingerprint {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Fingerprint of the mirror image group.
    pub fn mirrored(&self) -> Fingerprint {
        let mut counts = BTreeMap::new();
        for (c, m) in &self.counts {
            *counts.entry(c.mirrored()).or_insert(0) += m;
        }
        Fingerprint { counts }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(c, m)| format!("{}:{}", c, m)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::consts::*;
    use crate::algebra::q;

    #[test]
    fn cyclic_and_binary_polyhedral_orders() {
        assert_eq!(quat_closure(&[e(5)]).unwrap().len(), 10);
        assert_eq!(quat_closure(&[i_i(), omega()]).unwrap().len(), 120);
        assert_eq!(quat_closure(&[i_o(), omega()]).unwrap().len(), 48);
        assert_eq!(quat_closure(&[Quat::i(), omega()]).unwrap().len(), 24);
    }

    #[test]
    fn quaternion_group_types() {
        let t = |g: &[Quat]| classify_quat_group(&quat_closure(g).unwrap()).unwrap();
        assert_eq!(t(&[i_i(), omega()]), QuatGroupType::I);
        assert_eq!(t(&[i_o(), omega()]), QuatGroupType::O);
        assert_eq!(t(&[Quat::i(), omega()]), QuatGroupType::T);
        assert_eq!(t(&[e(3), Quat::j()]), QuatGroupType::Dihedral(12));
        assert_eq!(t(&[e(2), Quat::j()]), QuatGroupType::Dihedral(8));
        assert_eq!(t(&[e(6)]), QuatGroupType::Cyclic(12));
        assert_eq!(t(&[Quat::exp_pi(q(2, 3))]), QuatGroupType::Cyclic(3));
    }

    #[test]
    fn small_groups() {
        let g = PointGroup::generate(&[Transform4::neg_id()]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.fingerprint().unwrap().to_string(), "0|0:2 0|1:2");
        assert_eq!(PointGroup::trivial().fingerprint().unwrap().to_string(), "0|0:2");
        let s = PointGroup::trivial().extend_achiral(&Transform4::star(Quat::one(), Quat::one())).unwrap();
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn tubical_by_closure() {
        let g = PointGroup::generate(&[
            Transform4::rot(Quat::i(), Quat::one()),
            Transform4::rot(omega(), Quat::one()),
            Transform4::rot(Quat::one(), e(2)),
        ])
        .unwrap();
        assert_eq!(g.order(), 48);
    }

    #[test]
    fn extension_must_normalize() {
        let g = PointGroup::generate(&[Transform4::rot(omega(), Quat::one())]).unwrap();
        let e = Transform4::star(Quat::one(), Quat::i());
        assert!(g.extend_achiral(&e).is_err());
    }
}
