//! Named families of finite subgroups of O(4) and their generators.

pub mod polyhedral;
pub mod spec;
pub mod toroidal;
pub mod tubical;

pub use spec::{s_in_range, AxialSpec, Group3, GroupSpec, ParamShape, PolyhedralId, Side, TorKind, ToroidalSpec, TubicalFamily};

use crate::group::{GroupError, PointGroup};
use crate::transform::Transform4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub fn generators(spec: &GroupSpec) -> Vec<Transform4> {
    match spec {
        GroupSpec::Tubical { family, side, n } => tubical::generators(*family, *side, *n),
        GroupSpec::Toroidal(t) => toroidal::generators(t),
        GroupSpec::Polyhedral(p) => polyhedral::polyhedral_generators(*p),
        GroupSpec::Axial(a) => polyhedral::axial_generators(*a),
    }
}

/// Generate the group of a spec. Natural parameters outside the catalog
/// range are accepted, so that duplicates can be built and compared.
pub fn build(spec: &GroupSpec) -> Result<PointGroup, CatalogError> {
    spec.check_natural()?;
    Ok(PointGroup::generate(&generators(spec))?)
}

pub fn build_toroidal(spec: &ToroidalSpec) -> Result<PointGroup, CatalogError> {
    build(&GroupSpec::Toroidal(*spec))
}

/// Mirror image of a tubical spec.
pub fn right_variant(spec: &GroupSpec) -> GroupSpec {
    match *spec {
        GroupSpec::Tubical { family, side, n } => GroupSpec::Tubical {
            family,
            side: if side == Side::Left { Side::Right } else { Side::Left },
            n,
        },
        other => other,
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (1..).take_while(|d| d * d <= n).filter(|d| n % d == 0).flat_map(|d| [d, n / d]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Catalog toroidal specs of exactly order `order`, in a fixed order.
pub fn toroidal_specs_of_order(order: u64) -> Vec<ToroidalSpec> {
    enumerate_toroidal(order, ToroidalSpec::in_catalog)
}

/// Every natural parameter choice of exactly order `order`, duplicates
/// included: all residues of `s` and both orders of `(a, b)`.
pub fn natural_toroidal_specs_of_order(order: u64) -> Vec<ToroidalSpec> {
    enumerate_toroidal(order, |t| t.check_natural().is_ok())
}

fn enumerate_toroidal(order: u64, keep: impl Fn(&ToroidalSpec) -> bool) -> Vec<ToroidalSpec> {
    let mut out = Vec::new();
    for kind in TorKind::ALL {
        match kind.params() {
            ParamShape::Mns | ParamShape::Mn => {
                let f = ToroidalSpec::mn(kind, 1, 1).order();
                if order % f != 0 {
                    continue;
                }
                let mn = order / f;
                for m in divisors(mn) {
                    let n = (mn / m) as i64;
                    let m = m as i64;
                    if kind.params() == ParamShape::Mns {
                        let lo = (-m).div_euclid(2);
                        for s in lo..lo + n.max((n - m).div_euclid(2) - lo + 1) {
                            let t = ToroidalSpec::new(kind, m, n, s);
                            if keep(&t) {
                                out.push(t);
                            }
                        }
                    } else {
                        let t = ToroidalSpec::mn(kind, m, n);
                        if keep(&t) {
                            out.push(t);
                        }
                    }
                }
            }
            ParamShape::Ab => {
                if order % 4 != 0 {
                    continue;
                }
                let c2 = (order / 4) as i64;
                let mut a = 0;
                while a * a <= c2 {
                    let b2 = c2 - a * a;
                    let b = (b2 as f64).sqrt().round() as i64;
                    if b * b == b2 {
                        let t = ToroidalSpec::mn(kind, a, b);
                        if keep(&t) {
                            out.push(t);
                        }
                    }
                    a += 1;
                }
            }
            ParamShape::N => {
                let f = ToroidalSpec::new(kind, 0, 1, 0).order();
                if order % f != 0 {
                    continue;
                }
                let sq = order / f;
                let n = (sq as f64).sqrt().round() as i64;
                if (n * n) as u64 == sq {
                    let t = ToroidalSpec::new(kind, 0, n, 0);
                    if keep(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Every catalog spec of order at most `max_order`: toroidal, tubical (both
/// sides), polyhedral and axial.
pub fn list_catalog(max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.extend(toroidal_specs_of_order(order).into_iter().map(GroupSpec::Toroidal));
    }
    for family in TubicalFamily::ALL {
        for side in [Side::Left, Side::Right] {
            let mut n = family.min_n();
            while family.order_factor() * n <= max_order {
                out.push(GroupSpec::Tubical { family, side, n });
                n += 1;
            }
        }
    }
    out.extend(PolyhedralId::ALL.into_iter().filter(|p| p.order() <= max_order).map(GroupSpec::Polyhedral));
    out.extend(AxialSpec::all().into_iter().filter(|a| a.order() <= max_order).map(GroupSpec::Axial));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(s: &str) -> usize {
        build(&s.parse().unwrap()).unwrap().order()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_of("tor:1:m=2,n=5,s=1"), 10);
        assert_eq!(order_of("tub:+-[IxC]:n=2"), 240);
        assert_eq!(order_of("tor:L:a=4,b=3"), 100);
        assert_eq!(order_of("tor:|/pg:m=2,n=4"), 16);
        assert_eq!(order_of("tor:X/c2mm:m=5,n=5"), 100);
    }

    #[test]
    fn fingerprint_example() {
        let g = build(&"tor:|/pg:m=2,n=4".parse().unwrap()).unwrap();
        assert_eq!(g.fingerprint().unwrap().to_string(), "0|0:2 0|1:2 1|1/4:4 1|3/4:4 1|1/2:4 *1/2:16");
    }

    #[test]
    fn every_family_matches_its_order_formula() {
        for spec in list_catalog(200) {
            let g = build(&spec).unwrap();
            assert_eq!(g.order() as u64, spec.order(), "{}", spec);
            assert_eq!(g.is_chiral(), spec.is_chiral(), "{}", spec);
        }
    }

    #[test]
    fn large_fixed_groups() {
        for p in PolyhedralId::ALL {
            let spec = GroupSpec::Polyhedral(p);
            let g = build(&spec).unwrap();
            assert_eq!(g.order() as u64, p.order(), "{}", spec);
            assert_eq!(g.is_chiral(), p.is_chiral(), "{}", spec);
        }
    }

    #[test]
    fn specs_of_order_10() {
        let v: Vec<String> = toroidal_specs_of_order(10).iter().map(|s| s.to_string()).collect();
        assert!(v.contains(&"tor:1:m=2,n=5,s=1".to_string()));
    }
}
