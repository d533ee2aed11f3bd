//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! straight to stderr so the lines survive output capture.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pg4::algebra::consts::{e, i_i, i_o, omega};
use pg4::algebra::{float_conj, float_mul, Quat};
use pg4::catalog::{self, GroupSpec, Side, TubicalFamily};
use pg4::classify::classify;
use pg4::counting::{brute_force_census, count_order, count_self_mirror};
use pg4::group::{quat_closure, PointGroup};
use pg4::hopf::{self, distance_to_circle, hopf_map, transform_circle, GreatCircle, SpherePoint};
use pg4::orbits::{self, CenterKind};
use pg4::toroidal::duplication_rows;
use pg4::transform::{mat_mul, Transform4};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("took {:.2?}, limit {:?}", t, limit))
}

fn spec(s: &str) -> GroupSpec {
    s.parse().expect("valid spec")
}

fn left(family: TubicalFamily, n: u64) -> PointGroup {
    catalog::build(&GroupSpec::Tubical { family, side: Side::Left, n }).expect("builds")
}

fn quaternion_group_orders() -> Check {
    let t = Instant::now();
    let ord = |g: Vec<Quat>| quat_closure(&g).map(|s| s.len()).map_err(|e| e.to_string());
    ensure(ord(vec![i_i(), omega()])? == 120, "|2I| != 120")?;
    ensure(ord(vec![i_o(), omega()])? == 48, "|2O| != 48")?;
    ensure(ord(vec![Quat::i(), omega()])? == 24, "|2T| != 24")?;
    for n in 1..=12i64 {
        ensure(ord(vec![e(n)])? == 2 * n as usize, format!("|2C_{}|", n))?;
        if n >= 2 {
            ensure(ord(vec![e(n), Quat::j()])? == 4 * n as usize, format!("|2D_{}|", 2 * n))?;
        }
    }
    within(t, Duration::from_secs(1))?;
    Ok("2I, 2O, 2T, 2D_2n, 2C_n".into())
}

fn tubical_orders() -> Check {
    let t = Instant::now();
    let factors = [120, 48, 48, 24, 24, 240, 96, 96, 48, 48, 48];
    for (family, f) in TubicalFamily::ALL.into_iter().zip(factors) {
        for n in 2..=6u64 {
            let g = left(family, n);
            ensure(g.order() as u64 == f * n, format!("{} n={}: {}", family.label(Side::Left), n, g.order()))?;
        }
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!("55 groups in {:.2?}", t.elapsed()))
}

fn fingerprint_example() -> Check {
    let g = catalog::build(&spec("tor:|/pg:m=2,n=4")).map_err(|e| e.to_string())?;
    let fp = g.fingerprint().map_err(|e| e.to_string())?.to_string();
    let got: BTreeSet<&str> = fp.split(' ').collect();
    let want: BTreeSet<&str> = ["0|0:2", "0|1:2", "1|1/4:4", "1|3/4:4", "1|1/2:4", "*1/2:16"].into_iter().collect();
    ensure(got == want, format!("got {}", fp))?;
    Ok(fp)
}

fn counting() -> Check {
    let timed = |n: u64| {
        let t = Instant::now();
        let c = count_order(n).map_err(|e| e.to_string())?;
        within(t, Duration::from_secs(1))?;
        Ok::<_, String>(c)
    };
    ensure(timed(100)?.total == 192, "count_order(100)")?;
    let c = timed(7200)?;
    ensure((c.chiral, c.achiral) == (19342, 216), format!("7200: {} + {}", c.chiral, c.achiral))?;
    for p in [3u64, 5, 7, 11, 13, 101, 997, 7919] {
        ensure(timed(p)?.total == (p + 3) / 2, format!("prime {}", p))?;
    }
    let t = Instant::now();
    ensure(count_self_mirror(100).map_err(|e| e.to_string())? == 16, "self-mirror 100")?;
    within(t, Duration::from_secs(1))?;
    Ok("192; 19342 + 216; (p+3)/2; 16 self-mirror".into())
}

fn duplications() -> Check {
    let rows = duplication_rows(20).map_err(|e| e.to_string())?;
    for r in &rows {
        let from = catalog::build_toroidal(&r.from).map_err(|e| e.to_string())?;
        let to = catalog::build_toroidal(&r.to).map_err(|e| e.to_string())?;
        let mut g = from;
        for h in &r.conjugators {
            g = g.conjugate(h).map_err(|e| e.to_string())?;
        }
        ensure(g.equals(&to), format!("{} -> {} not exact", r.from, r.to))?;
    }
    let x_row = rows.iter().find(|r| r.from.to_string() == "tor:X/c2mm:m=1,n=5").ok_or("X/c2mm 1,5 missing")?;
    ensure(x_row.to.to_string() == "tor:.:m=1,n=10,s=2", format!("X/c2mm 1,5 -> {}", x_row.to))?;
    // The explicit conjugator [(1 - j)/√2, 1].
    let w = Quat::normalized(Quat::add_coeffs(&Quat::one().coeffs().unwrap(), &Quat::j().neg().coeffs().unwrap()))
        .map_err(|e| e.to_string())?;
    let x = Transform4::rot(w, Quat::one());
    let g1 = catalog::build(&spec("tor:X/c2mm:m=1,n=5")).map_err(|e| e.to_string())?;
    let g2 = catalog::build(&spec("tor:.:m=1,n=10,s=2")).map_err(|e| e.to_string())?;
    ensure(g1.conjugate(&x).map_err(|e| e.to_string())?.equals(&g2), "[1-j,1] conjugacy")?;
    Ok(format!("{} rows exact", rows.len()))
}

fn classify_round_trip() -> Check {
    let t = Instant::now();
    let mut specs: Vec<GroupSpec> = (1..=200).flat_map(catalog::toroidal_specs_of_order).map(GroupSpec::Toroidal).collect();
    for family in TubicalFamily::ALL {
        for side in [Side::Left, Side::Right] {
            for n in family.min_n()..=8 {
                specs.push(GroupSpec::Tubical { family, side, n });
            }
        }
    }
    for s in &specs {
        let g = catalog::build(s).map_err(|e| e.to_string())?;
        let c = classify(&g).map_err(|e| format!("{}: {}", s, e))?;
        ensure(&c == s, format!("{} classified as {}", s, c))?;
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{} specs in {:.2?}", specs.len(), t.elapsed()))
}

fn random_point(rng: &mut ChaCha8Rng) -> SpherePoint {
    loop {
        let v = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let n: f64 = v.iter().map(|x| x * x).sum();
        if n > 1e-3 && n <= 1.0 {
            return SpherePoint::new(v).unwrap();
        }
    }
}

fn random_quat(rng: &mut ChaCha8Rng) -> [f64; 4] {
    loop {
        let v = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        if let Ok(u) = hopf::normalize4(&v) {
            if hopf::norm4(&v) > 1e-3 {
                return u;
            }
        }
    }
}

fn hopf_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let two_i = left(TubicalFamily::IxC, 1);
    let elems: Vec<&Transform4> = two_i.elements().collect();
    let mut worst_min = 0.0f64;
    for _ in 0..1000 {
        let (p, q) = (random_point(&mut rng), random_point(&mut rng));
        let k = GreatCircle::new(p, q, true);
        // Fiber constancy.
        for _ in 0..4 {
            let x = k.sample(rng.gen_range(0.0..std::f64::consts::TAU));
            ensure(hopf_map(&x, &q).close_to(&p, 1e-9), "fiber not constant")?;
        }
        // Distance is half the base angle; oracle: sampled minimum.
        let x = random_quat(&mut rng);
        let d = distance_to_circle(&x, &k);
        let sampled = (0..4096)
            .map(|s| {
                let y = k.sample(s as f64 * std::f64::consts::TAU / 4096.0);
                hopf::dot4(&x, &y).clamp(-1.0, 1.0).acos()
            })
            .fold(f64::INFINITY, f64::min);
        worst_min = worst_min.max((d - sampled).abs());
        ensure((d - sampled).abs() < 1e-3, format!("distance {} vs sampled {}", d, sampled))?;
        // Left rotations keep right-bundle fibers in the bundle.
        let l = random_quat(&mut rng);
        let img = GreatCircle::new(p.rotated(&l), q, true);
        let y = float_mul(&float_conj(&l), &k.sample(rng.gen_range(0.0..std::f64::consts::TAU)));
        ensure(img.contains(&y, 1e-9), "left rotation left the bundle")?;
        // Same through exact group elements.
        let h = &elems[rng.gen_range(0..elems.len())];
        let img = transform_circle(h, &k);
        ensure(img.q.close_to(&q, 1e-9), "image not in the right bundle")?;
        ensure(img.contains(&h.apply(&k.sample(0.3)), 1e-9), "image point off the image circle")?;
    }
    Ok(format!("3000 trials, worst sampled-min gap {:.1e}", worst_min))
}

fn orbit_polygons() -> Check {
    let t = Instant::now();
    let cases = [
        (TubicalFamily::IxC, CenterKind::Fold5),
        (TubicalFamily::OxC2, CenterKind::Fold4),
        (TubicalFamily::TxC3, CenterKind::Fold3I),
        (TubicalFamily::TxC3, CenterKind::Fold3II),
    ];
    for (family, kind) in cases {
        for n in 1..=24u64 {
            let g = left(family, n);
            let p = orbits::center(&g, kind).map_err(|e| e.to_string())?;
            let got = orbits::orbit_circle_polygon(&g, &p) as u64;
            let want = orbits::polygon_closed_form(family, kind, n).unwrap();
            ensure(got == want, format!("{} n={} {:?}: {} vs {}", family.label(Side::Left), n, kind, got, want))?;
        }
    }
    Ok(format!("96 cases in {:.2?}", t.elapsed()))
}

fn screw_angles() -> Check {
    let g = left(TubicalFamily::IxC, 12);
    let p = orbits::center(&g, CenterKind::Fold5).map_err(|e| e.to_string())?;
    let a = orbits::screw_angles(&g, &p, 5);
    ensure(a.len() == 1 && a[0].to_string() == "49/120", format!("I x C12: {:?}", a))?;
    let g = left(TubicalFamily::OxC2, 3);
    let p = orbits::center(&g, CenterKind::Fold4).map_err(|e| e.to_string())?;
    let b = orbits::screw_angles(&g, &p, 4);
    ensure(b.iter().any(|x| x.to_string() == "19/24"), format!("O x C6: {:?}", b))?;
    Ok(format!("{} and {}", a[0], b[0]))
}

fn polar_cells() -> Check {
    let one = [1.0, 0.0, 0.0, 0.0];
    let mut out = Vec::new();
    for (family, want_v, want_faces) in [
        (TubicalFamily::IxC, 20, vec![(5, 12)]),
        (TubicalFamily::OxC, 24, vec![(3, 8), (8, 6)]),
        (TubicalFamily::TxC, 6, vec![(3, 8)]),
    ] {
        let t = Instant::now();
        let g = left(family, 1);
        let o = orbits::orbit(&g, &one);
        let cell = orbits::polar_cell(&o.points, &one).map_err(|e| e.to_string())?;
        let m = &cell.mesh;
        let sizes: Vec<(usize, usize)> = m.face_sizes().into_iter().collect();
        ensure(m.vertices.len() == want_v && sizes == want_faces, format!("{}: {} vertices, faces {:?}", family.label(Side::Left), m.vertices.len(), sizes))?;
        for v in &cell.vertices4 {
            let inner = o.points.iter().map(|u| hopf::dot4(u, v)).fold(f64::MIN, f64::max);
            ensure((inner - 1.0).abs() < 1e-6, "cell vertex not on its supporting planes")?;
        }
        within(t, Duration::from_secs(10))?;
        out.push(format!("{}V/{}F/{}E", m.vertices.len(), m.faces.len(), m.edge_count()));
    }
    Ok(out.join(", "))
}

fn colorings() -> Check {
    let one = [1.0, 0.0, 0.0, 0.0];
    let mut out = Vec::new();
    for (family, verts, classes) in [(TubicalFamily::IxC, 600, 5), (TubicalFamily::OxC, 288, 6)] {
        let g = left(family, 1);
        let o = orbits::orbit(&g, &one);
        let vs = orbits::polar_vertices(&o.points).map_err(|e| e.to_string())?;
        ensure(vs.len() == verts, format!("{} vertices, expected {}", vs.len(), verts))?;
        let cls = orbits::color_orbits(&g, &vs).map_err(|e| e.to_string())?;
        let sizes: BTreeSet<usize> = cls.iter().map(Vec::len).collect();
        ensure(cls.len() == classes && sizes == BTreeSet::from([g.order()]), format!("{} classes of sizes {:?}", cls.len(), sizes))?;
        out.push(format!("{} = {}x{}", verts, classes, g.order()));
    }
    Ok(out.join(", "))
}

fn composition_and_census() -> Check {
    let pools: Vec<PointGroup> = ["poly:+-[IxO]", "tub:+-1/6[OxD6]:n=5", "tor:*/p4gmS:n=3", "tor:L:a=4,b=3"]
        .iter()
        .map(|s| catalog::build(&spec(s)).expect("builds"))
        .collect();
    let elems: Vec<Vec<Transform4>> = pools.iter().map(|g| g.elements().cloned().collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        // Both factors from one group: the exact field of one family need
        // not contain the coefficients of another.
        let pool = &elems[rng.gen_range(0..elems.len())];
        let (a, b) = (&pool[rng.gen_range(0..pool.len())], &pool[rng.gen_range(0..pool.len())]);
        let exact = a.compose(b).map_err(|e| e.to_string())?.to_matrix();
        let float = mat_mul(&b.to_matrix(), &a.to_matrix());
        for r in 0..4 {
            for c in 0..4 {
                worst = worst.max((exact[r][c] - float[r][c]).abs());
            }
        }
    }
    ensure(worst <= 1e-9, format!("matrix mismatch {:.1e}", worst))?;
    for n in 1..=32 {
        let brute = brute_force_census(n).map_err(|e| e.to_string())?;
        let closed = count_order(n).map_err(|e| e.to_string())?;
        ensure(brute == closed, format!("census differs at order {}", n))?;
    }
    Ok(format!("1000 products (max err {:.1e}); census n <= 32", worst))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("quaternion group orders", quaternion_group_orders),
        ("tubical family orders", tubical_orders),
        ("fingerprint example", fingerprint_example),
        ("counting", counting),
        ("duplication conjugacies", duplications),
        ("classify round trip", classify_round_trip),
        ("hopf properties", hopf_properties),
        ("orbit polygons", orbit_polygons),
        ("screw angles", screw_angles),
        ("polar cells", polar_cells),
        ("colorings", colorings),
        ("composition and census", composition_and_census),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let line = match run() {
            Ok(detail) => format!("criterion {:2} PASS {} ({}; {:.2?})", k + 1, name, detail, t.elapsed()),
            Err(why) => {
                failed.push(k + 1);
                format!("criterion {:2} FAIL {}: {}", k + 1, name, why)
            }
        };
        let _ = writeln!(err, "{}", line);
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
