//! Identify a finite group of O(4) with its catalog entry.

use indexmap::IndexSet;

use crate::algebra::Quat;
use crate::catalog::{self, AxialSpec, CatalogError, GroupSpec, PolyhedralId, Side, TubicalFamily};
use crate::group::{classify_quat_group, quat_closure, GroupError, PointGroup, QuatGroupType};
use crate::toroidal::{self, ToroidalError};
use crate::transform::Transform4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("group of order {0} matches no catalog entry")]
    NoMatch(usize),
    #[error("group of order {order} matches several catalog entries: {names}")]
    Ambiguous { order: usize, names: String },
    #[error(transparent)]
    Toroidal(#[from] ToroidalError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Broad family of a group, read off its left and right quaternion groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Toroidal,
    Tubical { side: Side, poly: QuatGroupType, other: QuatGroupType },
    /// Both factors polyhedral: polyhedral or axial.
    Polyhedral,
}

pub fn shape(g: &PointGroup) -> Result<Shape, ClassifyError> {
    let (ls, rs) = g.left_right_groups();
    let (l, r) = (classify_quat_group(&ls)?, classify_quat_group(&rs)?);
    Ok(match (l.is_polyhedral(), r.is_polyhedral()) {
        (true, true) => Shape::Polyhedral,
        (false, false) => Shape::Toroidal,
        (true, false) => Shape::Tubical { side: Side::Left, poly: l, other: r },
        (false, true) => Shape::Tubical { side: Side::Right, poly: r, other: l },
    })
}

fn letter(t: QuatGroupType) -> &'static str {
    match t {
        QuatGroupType::I => "I",
        QuatGroupType::O => "O",
        _ => "T",
    }
}

/// Right (or left) quaternion group of a spec, from its generators.
fn factor_type(spec: &GroupSpec, side: Side) -> Result<QuatGroupType, ClassifyError> {
    let mut gens: Vec<Quat> = catalog::generators(spec)
        .iter()
        .map(|g| if side == Side::Left { g.r.clone() } else { g.l.clone() })
        .collect();
    gens.push(Quat::minus_one());
    let set: IndexSet<Quat> = quat_closure(&gens).map_err(GroupError::from)?;
    Ok(classify_quat_group(&set)?)
}

/// Choose among candidates of equal shape: exact equality first, then a
/// unique fingerprint match.
fn pick(g: &PointGroup, cands: Vec<GroupSpec>) -> Result<GroupSpec, ClassifyError> {
    if cands.len() == 1 {
        return Ok(cands[0]);
    }
    let mut built = Vec::new();
    for c in cands {
        let h = catalog::build(&c)?;
        if h.equals(g) {
            return Ok(c);
        }
        built.push((c, h));
    }
    let fp = g.fingerprint().map_err(GroupError::from)?;
    let mut same = Vec::new();
    for (c, h) in built {
        if h.fingerprint().map_err(GroupError::from)? == fp {
            same.push(c);
        }
    }
    match same.len() {
        0 => Err(ClassifyError::NoMatch(g.order())),
        1 => Ok(same[0]),
        _ => Err(ClassifyError::Ambiguous {
            order: g.order(),
            names: same.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        }),
    }
}

fn classify_tubical(g: &PointGroup, side: Side, poly: QuatGroupType, other: QuatGroupType) -> Result<GroupSpec, ClassifyError> {
    let order = g.order() as u64;
    let mut cands = Vec::new();
    for family in TubicalFamily::ALL {
        if family.polyhedral_letter() != letter(poly) || order % family.order_factor() != 0 {
            continue;
        }
        let n = order / family.order_factor();
        if n < family.min_n() {
            continue;
        }
        let spec = GroupSpec::Tubical { family, side, n };
        if factor_type(&spec, side)? == other {
            cands.push(spec);
        }
    }
    if cands.is_empty() {
        return Err(ClassifyError::NoMatch(g.order()));
    }
    pick(g, cands)
}

fn classify_polyhedral(g: &PointGroup) -> Result<GroupSpec, ClassifyError> {
    let order = g.order() as u64;
    let chiral = g.is_chiral();
    let cands: Vec<GroupSpec> = PolyhedralId::ALL
        .iter()
        .map(|p| GroupSpec::Polyhedral(*p))
        .chain(AxialSpec::all().into_iter().map(GroupSpec::Axial))
        .filter(|c| c.order() == order && c.is_chiral() == chiral)
        .collect();
    if cands.is_empty() {
        return Err(ClassifyError::NoMatch(g.order()));
    }
    let only_one = cands.len() == 1;
    let spec = pick(g, cands)?;
    if only_one && catalog::build(&spec)?.fingerprint().map_err(GroupError::from)? != g.fingerprint().map_err(GroupError::from)? {
        return Err(ClassifyError::NoMatch(g.order()));
    }
    Ok(spec)
}

/// Catalog entry of a finite group.
pub fn classify(g: &PointGroup) -> Result<GroupSpec, ClassifyError> {
    match shape(g)? {
        Shape::Toroidal => Ok(GroupSpec::Toroidal(toroidal::classify_toroidal(g)?)),
        Shape::Tubical { side, poly, other } => classify_tubical(g, side, poly, other),
        Shape::Polyhedral => classify_polyhedral(g),
    }
}

pub fn classify_generators(gens: &[Transform4]) -> Result<GroupSpec, ClassifyError> {
    classify(&PointGroup::generate(gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog_round_trip() {
        for spec in catalog::list_catalog(100) {
            if matches!(spec, GroupSpec::Polyhedral(_)) {
                continue;
            }
            let g = catalog::build(&spec).unwrap();
            assert_eq!(classify(&g).unwrap(), spec, "{}", spec);
        }
    }

    #[test]
    fn polyhedral_and_axial_round_trip() {
        let specs = PolyhedralId::ALL.iter().map(|p| GroupSpec::Polyhedral(*p)).chain(AxialSpec::all().into_iter().map(GroupSpec::Axial));
        for spec in specs {
            let g = catalog::build(&spec).unwrap();
            assert_eq!(classify(&g).unwrap(), spec, "{}", spec);
        }
    }
}
