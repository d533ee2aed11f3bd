//! Orbits of points, the induced group on S², orbit circles of tubical
//! groups, polar cells and mesh export.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_integer::Integer;

use crate::algebra::{Quat, Rational};
use crate::catalog::{Side, TubicalFamily};
use crate::classify::{self, ClassifyError, Shape};
use crate::group::PointGroup;
use crate::hopf::{dot3, dot4, hopf_map, normalize4, GreatCircle, HopfError, SpherePoint, V3, V4};
use crate::transform::{Mat4, Transform4};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OrbitError {
    #[error("degenerate orbit: the points do not span R^4")]
    Degenerate,
    #[error("the cell is unbounded or not a closed polytope")]
    Unbounded,
    #[error("not a left tubical group in standard position")]
    NotTubical,
    #[error("the induced group has no {0} rotation center")]
    BadCenter(String),
    #[error("point set is not closed under the group")]
    NotClosed,
    #[error("mesh parse error: {0}")]
    MeshParse(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Default starting point for orbits.
pub fn default_point() -> V4 {
    normalize4(&[0.9, 0.31, 0.23, 0.17]).expect("nonzero")
}

fn mat_vec(m: &Mat4, x: &V4) -> V4 {
    let mut y = [0.0; 4];
    for (r, v) in y.iter_mut().enumerate() {
        *v = (0..4).map(|c| m[r][c] * x[c]).sum();
    }
    y
}

/// Points keyed by a coarse grid so that near-duplicates are found quickly.
pub struct PointSet {
    cell: f64,
    tol: f64,
    grid: HashMap<[i64; 4], Vec<usize>>,
    pub points: Vec<V4>,
}

impl PointSet {
    pub fn new() -> PointSet {
        PointSet { cell: 1e-7, tol: 1e-8, grid: HashMap::new(), points: Vec::new() }
    }

    fn key(&self, x: &V4) -> [i64; 4] {
        [0, 1, 2, 3].map(|k| (x[k] / self.cell).floor() as i64)
    }

    pub fn find(&self, x: &V4) -> Option<usize> {
        let k = self.key(x);
        for d in 0..81 {
            let off = [d % 3, (d / 3) % 3, (d / 9) % 3, d / 27].map(|o| o as i64 - 1);
            let kk = [k[0] + off[0], k[1] + off[1], k[2] + off[2], k[3] + off[3]];
            if let Some(ids) = self.grid.get(&kk) {
                for &i in ids {
                    let p = &self.points[i];
                    if (0..4).all(|c| (p[c] - x[c]).abs() < self.tol) {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    /// Index of the point, inserting it if new.
    pub fn insert(&mut self, x: V4) -> (usize, bool) {
        if let Some(i) = self.find(&x) {
            return (i, false);
        }
        let i = self.points.len();
        self.grid.entry(self.key(&x)).or_default().push(i);
        self.points.push(x);
        (i, true)
    }
}

impl Default for PointSet {
    fn default() -> Self {
        PointSet::new()
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub base: V4,
    pub points: Vec<V4>,
}

pub fn orbit(g: &PointGroup, v: &V4) -> Orbit {
    let mut set = PointSet::new();
    for e in g.elements() {
        set.insert(mat_vec(&e.to_matrix(), v));
    }
    Orbit { base: *v, points: set.points }
}

/// One element of the induced group on S²: `±[l]`.
#[derive(Clone, Debug)]
pub struct Induced3 {
    pub matrix: [[f64; 3]; 3],
    pub improper: bool,
}

fn rot3(l: &V4) -> [[f64; 3]; 3] {
    let mut m = [[0.0; 3]; 3];
    for c in 0..3 {
        let mut e = [0.0; 3];
        e[c] = 1.0;
        let y = SpherePoint(e).rotated(l).0;
        for r in 0..3 {
            m[r][c] = y[r];
        }
    }
    m
}

/// The group on S² induced through `h(x) = x·i·x̄`: `[l, r] ↦ [l]` when `r`
/// fixes `i`, and `−[l]` when it reverses it.
pub fn induced_group(g: &PointGroup) -> Result<Vec<Induced3>, OrbitError> {
    match classify::shape(g)? {
        Shape::Tubical { side: Side::Left, .. } => {}
        _ => return Err(OrbitError::NotTubical),
    }
    let mut out: Vec<Induced3> = Vec::new();
    for e in g.elements() {
        let Some(jr) = e.r.jbit() else { return Err(OrbitError::NotTubical) };
        let mut m = rot3(&e.l.to_f64());
        if jr {
            for row in m.iter_mut() {
                for v in row.iter_mut() {
                    *v = -*v;
                }
            }
        }
        let same = |a: &Induced3| (0..3).all(|r| (0..3).all(|c| (a.matrix[r][c] - m[r][c]).abs() < 1e-9));
        if !out.iter().any(same) {
            out.push(Induced3 { matrix: m, improper: jr });
        }
    }
    Ok(out)
}

/// Conventional name of an induced group: `+T`, `±O`, `TO`, ...
pub fn induced_name(h: &[Induced3]) -> String {
    let proper = h.iter().all(|e| !e.improper);
    let has_neg = h.iter().any(|e| (0..3).all(|r| (0..3).all(|c| (e.matrix[r][c] + if r == c { 1.0 } else { 0.0 }).abs() < 1e-9)));
    let letter = |order: usize| match order {
        12 => "T",
        24 => "O",
        60 => "I",
        _ => "?",
    };
    if proper {
        format!("+{}", letter(h.len()))
    } else if has_neg {
        format!("±{}", letter(h.len() / 2))
    } else {
        "TO".to_string()
    }
}

/// Kinds of rotation centers of the induced group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterKind {
    Fold5,
    Fold4,
    /// 3-fold centers in the orbit of `(−1, −1, −1)`.
    Fold3I,
    /// 3-fold centers in the orbit of `(1, 1, 1)`.
    Fold3II,
    Fold2,
}

impl CenterKind {
    pub fn parse(s: &str) -> Option<CenterKind> {
        Some(match s {
            "5" | "5-fold" => CenterKind::Fold5,
            "4" | "4-fold" => CenterKind::Fold4,
            "3" | "3I" | "3-fold" => CenterKind::Fold3I,
            "3II" => CenterKind::Fold3II,
            "2" | "2-fold" => CenterKind::Fold2,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            CenterKind::Fold5 => "5-fold",
            CenterKind::Fold4 => "4-fold",
            CenterKind::Fold3I => "3-fold (type I)",
            CenterKind::Fold3II => "3-fold (type II)",
            CenterKind::Fold2 => "2-fold",
        }
    }

    pub fn fold(self) -> u64 {
        match self {
            CenterKind::Fold5 => 5,
            CenterKind::Fold4 => 4,
            CenterKind::Fold3I | CenterKind::Fold3II => 3,
            CenterKind::Fold2 => 2,
        }
    }

    fn preferred(self) -> V3 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        match self {
            CenterKind::Fold5 => [0.0, 1.0, phi],
            CenterKind::Fold4 => [0.0, 1.0, 0.0],
            CenterKind::Fold3I => [-1.0, -1.0, -1.0],
            CenterKind::Fold3II => [1.0, 1.0, 1.0],
            CenterKind::Fold2 => [1.0, 0.0, 0.0],
        }
    }
}

/// Rotation axes of the left quaternions of `g` with the given fold.
fn axes_of_fold(g: &PointGroup, fold: u64) -> Vec<SpherePoint> {
    let target = (std::f64::consts::PI / fold as f64).cos();
    let mut out: Vec<SpherePoint> = Vec::new();
    for e in g.elements().filter(|e| !e.rev) {
        let l = e.l.to_f64();
        for s in [1.0, -1.0] {
            if (s * l[0] - target).abs() < 1e-9 {
                let p = SpherePoint::new([s * l[1], s * l[2], s * l[3]]).expect("nonzero axis");
                if !out.iter().any(|a| a.close_to(&p, 1e-9)) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// A representative rotation center of the requested kind.
pub fn center(g: &PointGroup, kind: CenterKind) -> Result<SpherePoint, OrbitError> {
    let axes = axes_of_fold(g, kind.fold());
    let want = SpherePoint::new(kind.preferred())?;
    if let Some(p) = axes.iter().find(|a| a.close_to(&want, 1e-9)) {
        return Ok(*p);
    }
    if matches!(kind, CenterKind::Fold3I | CenterKind::Fold3II) {
        return Err(OrbitError::BadCenter(kind.label().to_string()));
    }
    let mut axes = axes;
    axes.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
    axes.first().copied().ok_or_else(|| OrbitError::BadCenter(kind.label().to_string()))
}

fn i_axis() -> SpherePoint {
    SpherePoint([1.0, 0.0, 0.0])
}

/// The orbit circle `K_p^i` over a point `p` of S².
pub fn orbit_circle(p: &SpherePoint) -> GreatCircle {
    GreatCircle::new(*p, i_axis(), true)
}

/// Number of orbit points on `K_p^i`, counted from the orbit of a point on
/// that circle.
pub fn orbit_circle_polygon(g: &PointGroup, p: &SpherePoint) -> usize {
    let v = orbit_circle(p).sample(0.1234);
    orbit(g, &v).points.iter().filter(|x| hopf_map(x, &i_axis()).close_to(p, 1e-7)).count()
}

fn gcd(a: i64, b: i64) -> i64 {
    a.abs().gcd(&b.abs())
}

/// Closed-form polygon counts for the cases with a known formula.
pub fn polygon_closed_form(family: TubicalFamily, kind: CenterKind, n: u64) -> Option<u64> {
    let n = n as i64;
    let v = match (family, kind) {
        (TubicalFamily::IxC, CenterKind::Fold5) => (2 * n).lcm(&10),
        (TubicalFamily::OxC2, CenterKind::Fold4) => 8 * n / gcd(n - 2, 4),
        (TubicalFamily::TxC3, CenterKind::Fold3I) => 6 * n / gcd(n - 1, 3),
        (TubicalFamily::TxC3, CenterKind::Fold3II) => 6 * n / gcd(n - 2, 3),
        _ => return None,
    };
    Some(v as u64)
}

/// Screw angles, as fractions of a full turn, of the elements that advance
/// an orbit point to the next one along `K_p^i`: for `[exp pα, exp iβ]`
/// with `β − α = 2π/N`, the angle is `(α + β)/2π`.
pub fn screw_angles(g: &PointGroup, p: &SpherePoint, fold: u64) -> Vec<Rational> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let big_n = orbit_circle_polygon(g, p) as i64;
    let den = big_n.lcm(&(fold as i64)).lcm(&60);
    let mut out: Vec<Rational> = Vec::new();
    for e in g.elements().filter(|e| !e.rev) {
        let Quat::Cyc { t, j: false } = &e.r else { continue };
        let l = e.l.to_f64();
        if !SpherePoint::new_unchecked_axis(&l).is_some_and(|a| a.close_to(p, 1e-9) || a.close_to(&p.neg(), 1e-9))
            && (l[1].abs() + l[2].abs() + l[3].abs()) > 1e-9
        {
            continue;
        }
        let alpha = (l[1] * p.0[0] + l[2] * p.0[1] + l[3] * p.0[2]).atan2(l[0]);
        let beta = t.to_f64() * std::f64::consts::PI;
        let step = ((beta - alpha) / two_pi).rem_euclid(1.0);
        if (step - 1.0 / big_n as f64).abs() > 1e-9 {
            continue;
        }
        let f = ((alpha + beta) / two_pi).rem_euclid(1.0);
        let num = (f * den as f64).round() as i64 % den;
        let r = Rational::new(num, den);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort();
    out
}

impl SpherePoint {
    /// Direction of the vector part of a quaternion, if nonzero.
    pub fn new_unchecked_axis(l: &V4) -> Option<SpherePoint> {
        SpherePoint::new([l[1], l[2], l[3]]).ok().filter(|_| l[1].abs() + l[2].abs() + l[3].abs() > 1e-9)
    }
}

/// A convex polyhedron with cyclically ordered faces.
#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<V3>,
    pub faces: Vec<Vec<usize>>,
}

impl Mesh {
    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(|f| f.len()).sum::<usize>() / 2
    }

    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Face sizes with multiplicities, e.g. `{3: 8, 8: 6}`.
    pub fn face_sizes(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut m = std::collections::BTreeMap::new();
        for f in &self.faces {
            *m.entry(f.len()).or_insert(0) += 1;
        }
        m
    }
}

/// Polar cell at an orbit point, with its vertices also given in R⁴.
#[derive(Clone, Debug)]
pub struct Cell {
    pub mesh: Mesh,
    pub vertices4: Vec<V4>,
}

fn rank4(points: &[V4]) -> usize {
    let mut basis: Vec<V4> = Vec::new();
    for p in points {
        let mut v = *p;
        for b in &basis {
            let d = dot4(&v, b);
            for k in 0..4 {
                v[k] -= d * b[k];
            }
        }
        let n = dot4(&v, &v).sqrt();
        if n > 1e-6 {
            basis.push([v[0] / n, v[1] / n, v[2] / n, v[3] / n]);
            if basis.len() == 4 {
                break;
            }
        }
    }
    basis.len()
}

/// Orthonormal basis of the hyperplane orthogonal to `at`.
fn tangent_basis(at: &V4) -> [V4; 3] {
    let mut basis: Vec<V4> = vec![*at];
    for k in 0..4 {
        let mut v = [0.0; 4];
        v[k] = 1.0;
        for b in &basis {
            let d = dot4(&v, b);
            for c in 0..4 {
                v[c] -= d * b[c];
            }
        }
        let n = dot4(&v, &v).sqrt();
        if n > 1e-6 {
            basis.push([v[0] / n, v[1] / n, v[2] / n, v[3] / n]);
        }
        if basis.len() == 4 {
            break;
        }
    }
    [basis[1], basis[2], basis[3]]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn solve3(rows: [&V3; 3]) -> Option<V3> {
    // Solve rows · y = (1, 1, 1) by Cramer's rule.
    let det = dot3(rows[0], &cross(rows[1], rows[2]));
    if det.abs() < 1e-12 {
        return None;
    }
    let c12 = cross(rows[1], rows[2]);
    let c20 = cross(rows[2], rows[0]);
    let c01 = cross(rows[0], rows[1]);
    Some([0, 1, 2].map(|k| (c12[k] + c20[k] + c01[k]) / det))
}

/// Vertices of `{y : n·y ≤ 1 for all n}`, by intersecting triples of planes.
fn halfspace_vertices(normals: &[V3]) -> Vec<V3> {
    let mut verts: Vec<V3> = Vec::new();
    let m = normals.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let Some(y) = solve3([&normals[a], &normals[b], &normals[c]]) else { continue };
                if normals.iter().all(|n| dot3(n, &y) <= 1.0 + 1e-9)
                    && !verts.iter().any(|v| (0..3).all(|k| (v[k] - y[k]).abs() < 1e-7))
                {
                    verts.push(y);
                }
            }
        }
    }
    verts
}

/// The polar cell `{x : ⟨x, at⟩ = 1, ⟨x, u⟩ ≤ 1 for all u in the orbit}`,
/// in coordinates of the tangent hyperplane at `at`.
pub fn polar_cell(points: &[V4], at: &V4) -> Result<Cell, OrbitError> {
    if rank4(points) < 4 {
        return Err(OrbitError::Degenerate);
    }
    let basis = tangent_basis(at);
    let mut cons: Vec<(f64, V3)> = Vec::new();
    for u in points {
        let c = 1.0 - dot4(at, u);
        let w = [dot4(u, &basis[0]), dot4(u, &basis[1]), dot4(u, &basis[2])];
        if c < 1e-9 || dot3(&w, &w) < 1e-18 {
            continue;
        }
        cons.push((c, [w[0] / c, w[1] / c, w[2] / c]));
    }
    cons.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
    let all: Vec<V3> = cons.into_iter().map(|(_, n)| n).collect();
    let mut active: Vec<V3> = all.iter().take(24).copied().collect();
    let verts = loop {
        let verts = halfspace_vertices(&active);
        let violated: Vec<V3> =
            all.iter().filter(|n| verts.iter().any(|y| dot3(n, y) > 1.0 + 1e-9)).copied().collect();
        if violated.is_empty() {
            break verts;
        }
        active.extend(violated);
    };
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for n in &active {
        let mut on: Vec<usize> = (0..verts.len()).filter(|&i| (dot3(n, &verts[i]) - 1.0).abs() < 1e-6).collect();
        if on.len() < 3 {
            continue;
        }
        let mut key = on.clone();
        key.sort_unstable();
        if faces.iter().any(|f| {
            let mut g = f.clone();
            g.sort_unstable();
            g == key
        }) {
            continue;
        }
        let k = on.len() as f64;
        let cen = [0, 1, 2].map(|c| on.iter().map(|&i| verts[i][c]).sum::<f64>() / k);
        let rel = |i: usize| [verts[i][0] - cen[0], verts[i][1] - cen[1], verts[i][2] - cen[2]];
        let a = rel(on[0]);
        let b = cross(n, &a);
        on.sort_by(|&x, &y| {
            let (rx, ry) = (rel(x), rel(y));
            let ax = dot3(&b, &rx).atan2(dot3(&a, &rx));
            let ay = dot3(&b, &ry).atan2(dot3(&a, &ry));
            ax.partial_cmp(&ay).expect("finite")
        });
        faces.push(on);
    }
    let mesh = Mesh { vertices: verts, faces };
    if mesh.vertices.len() < 4 || mesh.euler() != 2 || !edges_closed(&mesh) {
        return Err(OrbitError::Unbounded);
    }
    let vertices4 = mesh
        .vertices
        .iter()
        .map(|y| [0, 1, 2, 3].map(|c| at[c] + y[0] * basis[0][c] + y[1] * basis[1][c] + y[2] * basis[2][c]))
        .collect();
    Ok(Cell { mesh, vertices4 })
}

fn edges_closed(m: &Mesh) -> bool {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &m.faces {
        for k in 0..f.len() {
            let (a, b) = (f[k], f[(k + 1) % f.len()]);
            *count.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }
    count.values().all(|&c| c == 2)
}

/// Vertices of the polar polytope of an orbit, projected to S³.
pub fn polar_vertices(points: &[V4]) -> Result<Vec<V4>, OrbitError> {
    let mut set = PointSet::new();
    for at in points {
        for v in polar_cell(points, at)?.vertices4 {
            set.insert(normalize4(&v)?);
        }
    }
    Ok(set.points)
}

/// Partition a point set into orbits of `g`.
pub fn color_orbits(g: &PointGroup, points: &[V4]) -> Result<Vec<Vec<usize>>, OrbitError> {
    let mut set = PointSet::new();
    for p in points {
        set.insert(*p);
    }
    let mats: Vec<Mat4> = g.elements().map(Transform4::to_matrix).collect();
    let mut color = vec![usize::MAX; points.len()];
    let mut classes = Vec::new();
    for start in 0..points.len() {
        if color[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = Vec::new();
        for m in &mats {
            let y = mat_vec(m, &points[start]);
            let k = set.find(&y).ok_or(OrbitError::NotClosed)?;
            if color[k] == usize::MAX {
                color[k] = id;
                class.push(k);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

pub fn export_mesh(m: &Mesh, format: MeshFormat) -> String {
    let mut s = String::new();
    match format {
        MeshFormat::Off => {
            let _ = writeln!(s, "OFF\n{} {} {}", m.vertices.len(), m.faces.len(), m.edge_count());
            for v in &m.vertices {
                let _ = writeln!(s, "{:.12} {:.12} {:.12}", v[0], v[1], v[2]);
            }
            for f in &m.faces {
                let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(s, "{} {}", f.len(), idx.join(" "));
            }
        }
        MeshFormat::Obj => {
            for v in &m.vertices {
                let _ = writeln!(s, "v {:.12} {:.12} {:.12}", v[0], v[1], v[2]);
            }
            for f in &m.faces {
                let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(s, "f {}", idx.join(" "));
            }
        }
    }
    s
}

/// Read back an OFF file written by `export_mesh`.
pub fn parse_off(text: &str) -> Result<Mesh, OrbitError> {
    let bad = |w: &str| OrbitError::MeshParse(w.to_string());
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    if lines.next() != Some("OFF") {
        return Err(bad("missing OFF header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| bad("missing counts"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(t)))
        .collect::<Result<_, _>>()?;
    if counts.len() < 2 {
        return Err(bad("short count line"));
    }
    let mut vertices = Vec::with_capacity(counts[0]);
    for _ in 0..counts[0] {
        let xs: Vec<f64> = lines
            .next()
            .ok_or_else(|| bad("missing vertex"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(t)))
            .collect::<Result<_, _>>()?;
        if xs.len() != 3 {
            return Err(bad("vertex needs three coordinates"));
        }
        vertices.push([xs[0], xs[1], xs[2]]);
    }
    let mut faces = Vec::with_capacity(counts[1]);
    for _ in 0..counts[1] {
        let xs: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("missing face"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(t)))
            .collect::<Result<_, _>>()?;
        if xs.is_empty() || xs[0] + 1 != xs.len() || xs[1..].iter().any(|&i| i >= vertices.len()) {
            return Err(bad("malformed face"));
        }
        faces.push(xs[1..].to_vec());
    }
    Ok(Mesh { vertices, faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupSpec};

    fn tub(family: TubicalFamily, n: u64) -> PointGroup {
        catalog::build(&GroupSpec::Tubical { family, side: Side::Left, n }).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        let g = tub(TubicalFamily::TxC, 1);
        assert_eq!(orbit(&g, &[1.0, 0.0, 0.0, 0.0]).points.len(), 24);
        assert_eq!(orbit(&tub(TubicalFamily::OxC2, 2), &default_point()).points.len(), 96);
        assert_eq!(orbit(&PointGroup::trivial(), &default_point()).points.len(), 1);
    }

    #[test]
    fn induced_names() {
        let h = induced_group(&tub(TubicalFamily::IxC, 5)).unwrap();
        assert_eq!((h.len(), induced_name(&h).as_str()), (60, "+I"));
        assert_eq!(induced_name(&induced_group(&tub(TubicalFamily::TxD, 4)).unwrap()), "±T");
        assert_eq!(induced_name(&induced_group(&tub(TubicalFamily::OxC2, 2)).unwrap()), "+O");
    }

    #[test]
    fn polygons_and_screws() {
        let g = tub(TubicalFamily::IxC, 7);
        let p = center(&g, CenterKind::Fold5).unwrap();
        assert_eq!(orbit_circle_polygon(&g, &p), 70);
        let g = tub(TubicalFamily::IxC, 12);
        let p = center(&g, CenterKind::Fold5).unwrap();
        assert_eq!(screw_angles(&g, &p, 5), vec![Rational::new(49, 120)]);
        let g = tub(TubicalFamily::OxC2, 3);
        let p = center(&g, CenterKind::Fold4).unwrap();
        assert_eq!(screw_angles(&g, &p, 4), vec![Rational::new(19, 24)]);
    }

    #[test]
    fn tetrahedron_off() {
        let m = Mesh {
            vertices: vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]],
            faces: vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]],
        };
        let off = export_mesh(&m, MeshFormat::Off);
        assert!(off.starts_with("OFF\n4 4 6"));
        assert_eq!(parse_off(&off).unwrap(), m);
    }
}
