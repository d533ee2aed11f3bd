//! `pg4`: build, fingerprint, classify and count finite subgroups of O(4),
//! and compute orbits and polar cells.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use pg4::algebra::consts::by_name;
use pg4::algebra::{Quat, Rational};
use pg4::catalog::{self, CatalogError, GroupSpec};
use pg4::classify::classify_generators;
use pg4::counting;
use pg4::orbits::{self, CenterKind, MeshFormat};
use pg4::{Fingerprint, PointGroup, Transform4};

const SCHEMA: &str = "pg4/1";

#[derive(Parser)]
#[command(name = "pg4", version, about = "Finite subgroups of O(4)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a group and report its order, chirality and fingerprint.
    Build { spec: String },
    /// Print the fingerprint of a group.
    Fingerprint { spec: String },
    /// Identify the group generated by transformations read from a file.
    Classify {
        /// JSON lines of the form {"star": false, "l": "iI", "r": "e5"}.
        #[arg(long)]
        generators: PathBuf,
    },
    /// Count the groups of a given order.
    Count {
        order: u64,
        #[arg(long)]
        breakdown: bool,
        #[arg(long)]
        self_mirror: bool,
    },
    /// Orbit of a point, or of a point on the orbit circle over a rotation center.
    Orbit {
        spec: String,
        #[arg(long, conflicts_with = "center")]
        point: Option<String>,
        /// 5, 4, 3I, 3II or 2.
        #[arg(long)]
        center: Option<String>,
    },
    /// Polar cell of an orbit point as a mesh.
    Cell {
        spec: String,
        #[arg(long, value_enum, default_value = "off")]
        format: Format,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List catalog groups up to an order.
    Catalog {
        #[arg(long)]
        max_order: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Off,
    Obj,
}

/// Parse problems exit with 1, everything else with 2.
enum Failure {
    Parse(String),
    Domain(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Failure {
        Failure::Domain(e.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Failure {
        match e {
            CatalogError::Parse(_) => Failure::Parse(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn parse_spec(s: &str) -> Result<GroupSpec, Failure> {
    Ok(s.parse::<GroupSpec>()?)
}

fn build(spec: &GroupSpec) -> Result<PointGroup, Failure> {
    Ok(catalog::build(spec)?)
}

/// Round away float noise so that output is stable across platforms.
fn num(x: f64) -> Value {
    let r = (x * 1e12).round() / 1e12;
    json!(if r == 0.0 { 0.0 } else { r })
}

fn vec_json(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|x| num(*x)).collect())
}

fn fingerprint_json(fp: &Fingerprint) -> Value {
    let mut m = Map::new();
    for (code, count) in &fp.counts {
        m.insert(code.to_string(), json!(count));
    }
    Value::Object(m)
}

fn envelope(mut body: Map<String, Value>) -> String {
    body.insert("schema".into(), json!(SCHEMA));
    serde_json::to_string_pretty(&Value::Object(body)).expect("serializable")
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("object literal"),
    }
}

fn parse_point(s: &str) -> Result<[f64; 4], Failure> {
    let xs: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Failure::Parse(format!("bad coordinate {:?}", t))))
        .collect::<Result<_, _>>()?;
    let v: [f64; 4] = xs.try_into().map_err(|_| Failure::Parse("a point needs four coordinates".into()))?;
    pg4::hopf::normalize4(&v).map_err(Failure::domain)
}

fn parse_quat(s: &str) -> Result<Quat, Failure> {
    let bad = || Failure::Parse(format!("unknown quaternion {:?}", s));
    if let Some(t) = s.strip_prefix("exp:") {
        return Ok(Quat::exp_pi(t.parse::<Rational>().map_err(|_| bad())?));
    }
    if let Some(t) = s.strip_prefix("expj:") {
        return Ok(Quat::exp_pi_j(t.parse::<Rational>().map_err(|_| bad())?));
    }
    by_name(s).ok_or_else(bad)
}

fn cmd_build(spec: &str) -> Out {
    let s = parse_spec(spec)?;
    let g = build(&s)?;
    let fp = g.fingerprint().map_err(Failure::domain)?;
    Ok(envelope(obj(json!({
        "spec": s.to_string(),
        "name": s.pretty(),
        "in_catalog": s.in_catalog(),
        "order": g.order(),
        "chiral": g.is_chiral(),
        "fingerprint": fingerprint_json(&fp),
    }))))
}

fn cmd_fingerprint(spec: &str) -> Out {
    let s = parse_spec(spec)?;
    let fp = build(&s)?.fingerprint().map_err(Failure::domain)?;
    Ok(envelope(obj(json!({
        "spec": s.to_string(),
        "fingerprint": fingerprint_json(&fp),
        "text": fp.to_string(),
    }))))
}

fn cmd_classify(path: &PathBuf) -> Out {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {}", path.display(), e)))?;
    let mut gens = Vec::new();
    for (k, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let v: Value = serde_json::from_str(line).map_err(|e| Failure::Parse(format!("line {}: {}", k + 1, e)))?;
        let field = |name: &str| {
            v.get(name).and_then(Value::as_str).ok_or_else(|| Failure::Parse(format!("line {}: missing string {:?}", k + 1, name)))
        };
        let star = v.get("star").and_then(Value::as_bool).unwrap_or(false);
        gens.push(Transform4::new(star, parse_quat(field("l")?)?, parse_quat(field("r")?)?));
    }
    if gens.is_empty() {
        return Err(Failure::Parse("no generators".into()));
    }
    let s = classify_generators(&gens).map_err(Failure::domain)?;
    let g = build(&s)?;
    Ok(envelope(obj(json!({
        "spec": s.to_string(),
        "name": s.pretty(),
        "order": g.order(),
        "chiral": g.is_chiral(),
    }))))
}

fn cmd_count(order: u64, breakdown: bool, self_mirror: bool) -> Out {
    let c = counting::count_order(order).map_err(Failure::domain)?;
    let mut body = obj(json!({
        "order": order,
        "total": c.total,
        "chiral": c.chiral,
        "achiral": c.achiral,
    }));
    if breakdown {
        body.insert("breakdown".into(), serde_json::to_value(&c).expect("serializable"));
    }
    if self_mirror {
        body.insert("self_mirror".into(), json!(counting::count_self_mirror(order).map_err(Failure::domain)?));
    }
    Ok(envelope(body))
}

fn cmd_orbit(spec: &str, point: Option<&str>, center: Option<&str>) -> Out {
    let s = parse_spec(spec)?;
    let g = build(&s)?;
    let mut body = obj(json!({ "spec": s.to_string() }));
    let v = match (point, center) {
        (Some(p), _) => parse_point(p)?,
        (None, Some(c)) => {
            let kind = CenterKind::parse(c).ok_or_else(|| Failure::Parse(format!("unknown center kind {:?}", c)))?;
            let induced = orbits::induced_group(&g).map_err(Failure::domain)?;
            let p = orbits::center(&g, kind).map_err(Failure::domain)?;
            let polygon = orbits::orbit_circle_polygon(&g, &p);
            let screws: Vec<String> = orbits::screw_angles(&g, &p, kind.fold()).iter().map(|r| r.to_string()).collect();
            body.insert("center".into(), vec_json(&p.0));
            body.insert("induced".into(), json!(orbits::induced_name(&induced)));
            body.insert("polygon".into(), json!(polygon));
            body.insert("screw".into(), json!(screws));
            orbits::orbit_circle(&p).sample(0.1234)
        }
        (None, None) => orbits::default_point(),
    };
    let o = orbits::orbit(&g, &v);
    body.insert("point".into(), vec_json(&v));
    body.insert("size".into(), json!(o.points.len()));
    body.insert("points".into(), Value::Array(o.points.iter().map(|p| vec_json(p)).collect()));
    Ok(envelope(body))
}

fn cmd_cell(spec: &str, format: Format, point: Option<&str>, out: Option<&PathBuf>) -> Out {
    let s = parse_spec(spec)?;
    let g = build(&s)?;
    let v = match point {
        Some(p) => parse_point(p)?,
        None => orbits::default_point(),
    };
    let o = orbits::orbit(&g, &v);
    let cell = orbits::polar_cell(&o.points, &v).map_err(Failure::domain)?;
    let fmt = match format {
        Format::Off => MeshFormat::Off,
        Format::Obj => MeshFormat::Obj,
    };
    let text = orbits::export_mesh(&cell.mesh, fmt);
    match out {
        None => Ok(text.trim_end().to_string()),
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::Domain(format!("{}: {}", path.display(), e)))?;
            let faces: Map<String, Value> = cell.mesh.face_sizes().iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            Ok(envelope(obj(json!({
                "spec": s.to_string(),
                "out": path.display().to_string(),
                "vertices": cell.mesh.vertices.len(),
                "edges": cell.mesh.edge_count(),
                "faces": cell.mesh.faces.len(),
                "face_sizes": faces,
            }))))
        }
    }
}

fn cmd_catalog(max_order: u64) -> Out {
    let groups: Vec<Value> = catalog::list_catalog(max_order)
        .iter()
        .map(|s| {
            let class = match s {
                GroupSpec::Toroidal(_) => "toroidal",
                GroupSpec::Tubical { .. } => "tubical",
                GroupSpec::Polyhedral(_) => "polyhedral",
                GroupSpec::Axial(_) => "axial",
            };
            json!({ "spec": s.to_string(), "name": s.pretty(), "class": class, "order": s.order(), "chiral": s.is_chiral() })
        })
        .collect();
    Ok(envelope(obj(json!({ "max_order": max_order, "count": groups.len(), "groups": groups }))))
}

fn run(cli: Cli) -> Out {
    match cli.cmd {
        Cmd::Build { spec } => cmd_build(&spec),
        Cmd::Fingerprint { spec } => cmd_fingerprint(&spec),
        Cmd::Classify { generators } => cmd_classify(&generators),
        Cmd::Count { order, breakdown, self_mirror } => cmd_count(order, breakdown, self_mirror),
        Cmd::Orbit { spec, point, center } => cmd_orbit(&spec, point.as_deref(), center.as_deref()),
        Cmd::Cell { spec, format, point, out } => cmd_cell(&spec, format, point.as_deref(), out.as_ref()),
        Cmd::Catalog { max_order } => cmd_catalog(max_order),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("error: {}", first);
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(text) => {
            // A closed pipe downstream is not an error worth reporting.
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", text);
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {}", m.replace('\n', " "));
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {}", m.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
