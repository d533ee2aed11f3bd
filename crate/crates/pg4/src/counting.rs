//! How many groups of a given order there are.
//!
//! `count_order` works from divisor sums alone. `brute_force_census` builds
//! every natural parameter choice, resolves duplicates by exact conjugation,
//! and counts distinct catalog entries; the two must agree.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{q, Rational};
use crate::catalog::{self, AxialSpec, CatalogError, GroupSpec, PolyhedralId, Side, TorKind, ToroidalSpec, TubicalFamily};
use crate::classify::{self, ClassifyError};
use crate::toroidal::{self, ToroidalError, TorusTag, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountingError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("{from} resolved to {to}, but the conjugated group differs")]
    Unverified { from: String, to: String },
    #[error(transparent)]
    Toroidal(#[from] ToroidalError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Number of groups of one order, split by family. Enantiomorphic pairs
/// count as two groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderCensus {
    pub order: u64,
    /// Toroidal counts keyed by family symbol, e.g. `"1"`, `"."`, `"X"`.
    pub toroidal: BTreeMap<String, u64>,
    pub chiral_toroidal: u64,
    pub achiral_toroidal: u64,
    pub tubical: u64,
    pub polyhedral_chiral: u64,
    pub polyhedral_achiral: u64,
    pub axial_chiral: u64,
    pub axial_achiral: u64,
    pub chiral: u64,
    pub achiral: u64,
    pub total: u64,
}

impl OrderCensus {
    fn empty(order: u64) -> OrderCensus {
        OrderCensus { order, ..Default::default() }
    }

    fn add(&mut self, spec: &GroupSpec, k: u64) {
        if k == 0 {
            return;
        }
        let chiral = spec.is_chiral();
        match spec {
            GroupSpec::Toroidal(t) => {
                *self.toroidal.entry(t.kind.symbol().to_string()).or_insert(0) += k;
                if chiral {
                    self.chiral_toroidal += k;
                } else {
                    self.achiral_toroidal += k;
                }
            }
            GroupSpec::Tubical { .. } => self.tubical += k,
            GroupSpec::Polyhedral(_) if chiral => self.polyhedral_chiral += k,
            GroupSpec::Polyhedral(_) => self.polyhedral_achiral += k,
            GroupSpec::Axial(_) if chiral => self.axial_chiral += k,
            GroupSpec::Axial(_) => self.axial_achiral += k,
        }
        if chiral {
            self.chiral += k;
        } else {
            self.achiral += k;
        }
        self.total += k;
    }

    pub fn family(&self, symbol: &str) -> u64 {
        self.toroidal.get(symbol).copied().unwrap_or(0)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut v = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            v.push(d);
            if d * d != n {
                v.push(n / d);
            }
        }
        d += 1;
    }
    v.sort_unstable();
    v
}

/// Number of `σ0`-style factorizations `k = m·n` with `pred(m, n)`; zero
/// when `k` is not an integer.
fn pairs(num: u64, den: u64, pred: impl Fn(i64, i64) -> bool) -> u64 {
    if num % den != 0 {
        return 0;
    }
    let k = num / den;
    divisors(k).into_iter().filter(|&m| pred(m as i64, (k / m) as i64)).count() as u64
}

/// Integers `s` with `−m ≤ 2s ≤ n − m`.
fn s_choices(m: i64, n: i64) -> u64 {
    ((n - m).div_euclid(2) + m / 2 + 1) as u64
}

fn sum_s(num: u64, den: u64, skip: &[(i64, i64)]) -> u64 {
    if num % den != 0 {
        return 0;
    }
    let k = num / den;
    divisors(k)
        .into_iter()
        .map(|m| (m as i64, (k / m) as i64))
        .filter(|mn| !skip.contains(mn))
        .map(|(m, n)| s_choices(m, n))
        .sum()
}

fn isqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|c| c * c == x)
}

/// Closed-form count of the toroidal groups of one kind.
pub fn toroidal_kind_count(kind: TorKind, n: u64) -> u64 {
    use TorKind::*;
    let any = |_: i64, _: i64| true;
    let both2 = |m: i64, n: i64| m >= 2 && n >= 2;
    let parity = |m: i64, n: i64| (m - n) % 2 == 0;
    let not11 = |m: i64, n: i64| (m, n) != (1, 1);
    match kind {
        Trans => sum_s(n, 1, &[]),
        Flip => sum_s(n, 2, &[(1, 1), (2, 1)]),
        ReflPm | ReflPg => pairs(n, 2, any),
        ReflCm => pairs(n, 4, any),
        SwapPm | BswapPm => pairs(n, 4, both2),
        SwapPg => pairs(n, 4, |_, b| b >= 2),
        BswapPg => pairs(n, 4, |a, _| a >= 2),
        SwapCm => pairs(n, 2, |a, b| a >= 2 && b >= 3 && parity(a, b)),
        BswapCm => pairs(n, 2, |a, b| a >= 3 && b >= 2 && parity(a, b)),
        XP2mm | XP2mg | XP2gm | XP2gg => pairs(n, 8, both2),
        XC2mm => pairs(n, 4, |a, b| a >= 3 && b >= 3 && parity(a, b)),
        PlusP2mm | PlusP2gg => pairs(n, 4, |a, b| a >= b && not11(a, b)),
        PlusP2mg => pairs(n, 4, not11),
        PlusC2mm => pairs(n, 8, |a, b| a >= b && not11(a, b)),
        SwapTurn => {
            if n % 4 != 0 {
                return 0;
            }
            let c = n / 4;
            (0..)
                .take_while(|b| 2 * b * b <= c)
                .filter_map(|b| isqrt(c - b * b).map(|a| (a, b)))
                .filter(|&(a, b)| a >= 2 && (a, b) != (2, 0))
                .count() as u64
        }
        StarP4mmU | StarP4gmU => u64::from(n % 8 == 0 && isqrt(n / 8).is_some_and(|k| k >= 3)),
        StarP4mmS | StarP4gmS => u64::from(n % 16 == 0 && isqrt(n / 16).is_some_and(|k| k >= 2)),
    }
}

/// Count the groups of order `n` from closed forms.
pub fn count_order(n: u64) -> Result<OrderCensus, CountingError> {
    if n == 0 {
        return Err(CountingError::ZeroOrder);
    }
    let mut c = OrderCensus::empty(n);
    for kind in TorKind::ALL {
        c.add(&GroupSpec::Toroidal(ToroidalSpec::new(kind, 1, 1, 0)), toroidal_kind_count(kind, n));
    }
    for family in TubicalFamily::ALL {
        let f = family.order_factor();
        if n % f == 0 && n / f >= family.min_n() {
            for side in [Side::Left, Side::Right] {
                c.add(&GroupSpec::Tubical { family, side, n: n / f }, 1);
            }
        }
    }
    for p in PolyhedralId::ALL {
        if p.order() == n {
            c.add(&GroupSpec::Polyhedral(p), 1);
        }
    }
    for a in AxialSpec::all() {
        if a.order() == n {
            c.add(&GroupSpec::Axial(a), 1);
        }
    }
    Ok(c)
}

/// Count by listing catalog specs one by one.
pub fn count_by_listing(n: u64) -> OrderCensus {
    let mut c = OrderCensus::empty(n);
    for t in catalog::toroidal_specs_of_order(n) {
        c.add(&GroupSpec::Toroidal(t), 1);
    }
    for s in non_toroidal_specs_of_order(n) {
        c.add(&s, 1);
    }
    c
}

fn non_toroidal_specs_of_order(n: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for family in TubicalFamily::ALL {
        let f = family.order_factor();
        if n % f == 0 && n / f >= family.min_n() {
            out.push(GroupSpec::Tubical { family, side: Side::Left, n: n / f });
            out.push(GroupSpec::Tubical { family, side: Side::Right, n: n / f });
        }
    }
    out.extend(PolyhedralId::ALL.into_iter().filter(|p| p.order() == n).map(GroupSpec::Polyhedral));
    out.extend(AxialSpec::all().into_iter().filter(|a| a.order() == n).map(GroupSpec::Axial));
    out
}

/// Build every natural parameter choice of order `n`, carry each onto its
/// catalog entry by an explicit conjugation checked for exact equality, and
/// count the distinct entries reached.
pub fn brute_force_census(n: u64) -> Result<OrderCensus, CountingError> {
    if n == 0 {
        return Err(CountingError::ZeroOrder);
    }
    let mut reached: BTreeSet<GroupSpec> = BTreeSet::new();
    for t in catalog::natural_toroidal_specs_of_order(n) {
        let g = catalog::build_toroidal(&t)?;
        let r = toroidal::resolve(&g)?;
        let moved = toroidal::conjugate_seq(&g, &r.conjugators)?;
        if moved.order() as u64 != n || !moved.equals(&catalog::build_toroidal(&r.spec)?) {
            return Err(CountingError::Unverified { from: t.to_string(), to: r.spec.to_string() });
        }
        reached.insert(GroupSpec::Toroidal(r.spec));
    }
    for s in non_toroidal_specs_of_order(n) {
        let g = catalog::build(&s)?;
        if g.order() as u64 != n {
            return Err(CountingError::Unverified { from: s.to_string(), to: format!("order {}", g.order()) });
        }
        reached.insert(classify::classify(&g)?);
    }
    let mut c = OrderCensus::empty(n);
    for s in &reached {
        c.add(s, 1);
    }
    Ok(c)
}

/// Translation lattice of `⊙1` or `⊙.` straight from its parameters.
fn trans_lattice(m: i64, n: i64, s: i64) -> BTreeSet<Vec2> {
    let u = q(m + 2 * s, m * n);
    let gens = [(q(2, m), q(2, m)), (&q(1, n) + &u, &u - &q(1, n))];
    let mut set = BTreeSet::new();
    set.insert((Rational::zero(), Rational::zero()));
    let mut frontier: Vec<Vec2> = set.iter().cloned().collect();
    while let Some((a, b)) = frontier.pop() {
        for (x, y) in &gens {
            let p = ((&a + x).rem_euclid(2), (&b + y).rem_euclid(2));
            if set.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    set
}

/// Whether a chiral toroidal group is conjugate to its mirror image. The
/// mirror is taken with the torus reflection `(φ1, φ2) ↦ (−φ1, φ2)`.
pub fn is_self_mirror(spec: &ToroidalSpec) -> Result<bool, CountingError> {
    let (m, n, s) = (spec.m, spec.n, spec.s);
    match spec.kind {
        TorKind::Trans | TorKind::Flip => {
            let mirrored: BTreeSet<Vec2> =
                trans_lattice(m, n, s).into_iter().map(|(a, b)| ((-a).rem_euclid(2), b)).collect();
            Ok(toroidal::lattice_params(&mirrored)? == (m, n, toroidal::normalize_s(m, n, s)))
        }
        _ => {
            let rep = toroidal::to_torus_rep(&catalog::build_toroidal(spec)?)?;
            let mirrored = toroidal::rep_conj_dir(&rep, TorusTag::Refl);
            Ok(toroidal::classify_standard(&mirrored)? == *spec)
        }
    }
}

/// Number of chiral toroidal groups of order `n` equal to their own mirror
/// image.
pub fn count_self_mirror(n: u64) -> Result<u64, CountingError> {
    let mut k = 0;
    for t in catalog::toroidal_specs_of_order(n) {
        if t.kind.is_chiral() && is_self_mirror(&t)? {
            k += 1;
        }
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_100() {
        let c = count_order(100).unwrap();
        assert_eq!(c.total, 192);
        let fam: Vec<u64> = ["1", ".", "\\", "/", "X", "|", "+", "L"].iter().map(|s| c.family(s)).collect();
        assert_eq!(fam, vec![113, 48, 3, 3, 1, 15, 7, 2]);
    }

    #[test]
    fn order_7200_and_primes() {
        let c = count_order(7200).unwrap();
        assert_eq!((c.chiral, c.achiral, c.tubical, c.polyhedral_chiral), (19_342, 216, 22, 1));
        for p in [3u64, 5, 7, 11, 13, 97] {
            assert_eq!(count_order(p).unwrap().total, (p + 3) / 2);
        }
    }

    #[test]
    fn closed_forms_match_listing() {
        for n in 1..=400 {
            assert_eq!(count_order(n).unwrap(), count_by_listing(n), "order {}", n);
        }
    }

    #[test]
    fn self_mirror_100() {
        assert_eq!(count_self_mirror(100).unwrap(), 16);
        assert_eq!(count_self_mirror(1).unwrap(), 1);
    }

    #[test]
    fn census_small() {
        for n in 1..=32 {
            assert_eq!(brute_force_census(n).unwrap(), count_order(n).unwrap(), "order {}", n);
        }
    }
}
