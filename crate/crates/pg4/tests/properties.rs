//! Invariants checked against independent routes: float matrices for exact
//! composition, direct listing for closed-form counts, sampling for Hopf
//! distances.

use proptest::prelude::*;

use pg4::algebra::Rational;
use pg4::catalog::{self, GroupSpec, Side, TubicalFamily};
use pg4::classify::classify;
use pg4::counting::{count_by_listing, count_order};
use pg4::group::PointGroup;
use pg4::hopf::{self, hopf_map, GreatCircle, SpherePoint};
use pg4::orbits;
use pg4::transform::{mat_mul, Transform4};

fn group(s: &str) -> PointGroup {
    catalog::build(&s.parse::<GroupSpec>().unwrap()).unwrap()
}

fn elements(s: &str) -> Vec<Transform4> {
    group(s).elements().cloned().collect()
}

fn close(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4], tol: f64) -> bool {
    (0..4).all(|r| (0..4).all(|c| (a[r][c] - b[r][c]).abs() <= tol))
}

fn unit3() -> impl Strategy<Value = SpherePoint> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_filter("not tiny", |(x, y, z)| x * x + y * y + z * z > 1e-2)
        .prop_map(|(x, y, z)| SpherePoint::new([x, y, z]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ops_match_floats(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let (fx, fy) = (a as f64 / b as f64, c as f64 / d as f64);
        prop_assert!(((&x + &y).to_f64() - (fx + fy)).abs() < 1e-12);
        prop_assert!(((&x * &y).to_f64() - fx * fy).abs() < 1e-9);
    }

    #[test]
    fn composition_matches_matrices(i in 0usize..1440, j in 0usize..1440, k in 0usize..1440) {
        let els = elements("tub:+-[OxD]:n=3");
        let (a, b, c) = (&els[i % els.len()], &els[j % els.len()], &els[k % els.len()]);
        let ab = a.compose(b).unwrap();
        prop_assert!(close(&ab.to_matrix(), &mat_mul(&b.to_matrix(), &a.to_matrix()), 1e-9));
        // Associativity and inverses, exactly.
        prop_assert_eq!(ab.compose(c).unwrap(), a.compose(&b.compose(c).unwrap()).unwrap());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let conj = c.conjugate_by(a).unwrap();
        prop_assert_eq!(conj.conjugate_by(&a.inverse()).unwrap(), c.clone());
    }

    #[test]
    fn achiral_composition_matches_matrices(i in 0usize..10000, j in 0usize..10000) {
        let els = elements("tor:*/p4mmS:n=4");
        let (a, b) = (&els[i % els.len()], &els[j % els.len()]);
        let ab = a.compose(b).unwrap();
        prop_assert!(close(&ab.to_matrix(), &mat_mul(&b.to_matrix(), &a.to_matrix()), 1e-9));
    }

    #[test]
    fn closed_form_counts_match_listing(n in 1u64..600) {
        prop_assert_eq!(count_order(n).unwrap(), count_by_listing(n));
    }

    #[test]
    fn toroidal_round_trip(order in 1u64..400, pick in 0usize..10000) {
        let specs = catalog::toroidal_specs_of_order(order);
        prop_assume!(!specs.is_empty());
        let s = GroupSpec::Toroidal(specs[pick % specs.len()].clone());
        prop_assert_eq!(classify(&catalog::build(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn fingerprint_is_a_class_invariant(pick in 0usize..1000, h in 0usize..1000) {
        let specs = catalog::toroidal_specs_of_order(48);
        let g = catalog::build(&GroupSpec::Toroidal(specs[pick % specs.len()].clone())).unwrap();
        let conj_by = elements("tor:*/p4gmS:n=5");
        let h = &conj_by[h % conj_by.len()];
        let c = g.conjugate(h).unwrap();
        // Rotations preserve the fingerprint; reflections mirror it.
        let want = if h.rev { g.fingerprint().unwrap().mirrored() } else { g.fingerprint().unwrap() };
        prop_assert_eq!(want, c.fingerprint().unwrap());
        let fp = g.fingerprint().unwrap();
        prop_assert_eq!(fp.mirrored().mirrored(), fp.clone());
        prop_assert_eq!(fp.total(), 2 * g.order());
    }

    #[test]
    fn hopf_fibers_and_distances(p in unit3(), q in unit3(), t in 0.0..6.3f64, x in unit3(), w in -1.0..1.0f64) {
        let k = GreatCircle::new(p, q, true);
        prop_assert!(hopf_map(&k.sample(t), &q).close_to(&p, 1e-9));
        prop_assert!(k.contains(&k.sample(t), 1e-9));
        let r = (1.0 - w * w).sqrt();
        let y = [w, r * x.0[0], r * x.0[1], r * x.0[2]];
        let sampled = (0..2048)
            .map(|s| hopf::dot4(&y, &k.sample(s as f64 * std::f64::consts::TAU / 2048.0)).clamp(-1.0, 1.0).acos())
            .fold(f64::INFINITY, f64::min);
        prop_assert!((hopf::distance_to_circle(&y, &k) - sampled).abs() < 3e-3);
    }

    #[test]
    fn orbit_sizes_divide_order(n in 1u64..6, fam in 0usize..11, a in unit3(), w in -1.0..1.0f64) {
        let family = TubicalFamily::ALL[fam];
        let n = n.max(family.min_n());
        let g = catalog::build(&GroupSpec::Tubical { family, side: Side::Left, n }).unwrap();
        let r = (1.0 - w * w).sqrt();
        let v = [w, r * a.0[0], r * a.0[1], r * a.0[2]];
        let o = orbits::orbit(&g, &v);
        prop_assert_eq!(g.order() % o.points.len(), 0);
        let classes = orbits::color_orbits(&g, &o.points).unwrap();
        prop_assert_eq!(classes.len(), 1);
    }
}

#[test]
fn polar_cell_off_round_trip() {
    let g = group("tub:+-[TxC]:n=1");
    let o = orbits::orbit(&g, &orbits::default_point());
    let cell = orbits::polar_cell(&o.points, &o.points[0]).unwrap();
    assert_eq!(cell.mesh.euler(), 2);
    let text = orbits::export_mesh(&cell.mesh, orbits::MeshFormat::Off);
    let back = orbits::parse_off(&text).unwrap();
    assert_eq!(back.faces, cell.mesh.faces);
    for (a, b) in back.vertices.iter().zip(&cell.mesh.vertices) {
        assert!((0..3).all(|k| (a[k] - b[k]).abs() < 1e-9));
    }
}

#[test]
fn degenerate_orbit_is_rejected() {
    let g = group("tor:1:m=3,n=3,s=0");
    let o = orbits::orbit(&g, &[1.0, 0.0, 0.0, 0.0]);
    assert!(matches!(orbits::polar_cell(&o.points, &o.points[0]), Err(orbits::OrbitError::Degenerate)));
}
