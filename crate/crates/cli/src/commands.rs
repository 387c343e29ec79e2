use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ccgraph::curves::{canonical_arc_system, dual_curves_of, CurveWord};
use ccgraph::cutgraph::{connect, double_arc_system, validate_path, CCEdge, CCPath, ContactCutSystem};
use ccgraph::invariants::{
    count_n0, exhaustive_l, family1, family1_lower, family2, family2_lower, homology_report, sample_l0_path, Family,
};
use ccgraph::lefschetz::{
    hurwitz_move, in_set, lf_to_diagram, lf_to_path, normalize_l0, path_to_lf, stabilize, stabilize_path,
    LefschetzFibration,
};
use ccgraph::surface::{double, PolygonPresentation};

use crate::dsl::{self, side_name, sigma_word, slides_text, Decl, DocError, Document, Model, StepDef, SystemDef};
use crate::svg;

pub const SCHEMA: u64 = 1;

/// How a command failed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input text or bad flags (exit 2).
    Usage(String),
    /// Well-formed input that fails validation or a computation (exit 1).
    Invalid(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(format!("{e:#}"))
    }
}

impl From<ccgraph::Error> for Failure {
    fn from(e: ccgraph::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

pub type Outcome = Result<Output, Failure>;

/// What a command prints. A report with `ok: false` exits with 1.
pub enum Output {
    Json(Value),
    Text(String),
}

fn report(command: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("reports are objects");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    body
}

pub fn load(file: &Path) -> Result<(Document, Model), Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let doc = dsl::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let model = Model::build(&doc).map_err(|e| match e {
        DocError::Syntax(_) => Failure::Usage(format!("{}: {e}", file.display())),
        DocError::Semantic(_) => Failure::Invalid(format!("{}: {e}", file.display())),
    })?;
    Ok((doc, model))
}

/// Resolves an optional name: the given one, else the only object of that kind.
fn pick<'a, T>(m: &'a Model, map: &'a std::collections::HashMap<String, T>, kind: &str, name: Option<&str>) -> Result<(&'a str, &'a T), Failure> {
    let name = match name {
        Some(n) => n.to_string(),
        None => {
            let all: Vec<&String> = m.order.iter().filter(|(_, k)| *k == kind).map(|(n, _)| n).collect();
            match all.as_slice() {
                [one] => (*one).clone(),
                [] => return Err(Failure::Usage(format!("the document declares no {kind}"))),
                _ => return Err(Failure::Usage(format!("several {kind}s declared; pick one with --{kind}"))),
            }
        }
    };
    map.get_key_value(&name).map(|(k, v)| (k.as_str(), v)).ok_or_else(|| Failure::Usage(format!("no {kind} named `{name}`")))
}

fn edge_text(e: &CCEdge) -> String {
    match e {
        CCEdge::Type0 { slides } => {
            let s: Vec<_> = slides.iter().map(|m| m.slide).collect();
            format!("slide {}", slides_text(&s))
        }
        CCEdge::Type1 { side, twist, sign } => {
            format!("twist {} {twist} {}", side_name(*side), if *sign > 0 { "+1" } else { "-1" })
        }
    }
}

fn system_json(v: &ContactCutSystem) -> Value {
    json!(v.curves.iter().map(sigma_word).collect::<Vec<_>>())
}

fn path_json(p: &CCPath) -> Value {
    json!({
        "start": system_json(&p.vertices[0]),
        "edges": p.edges.iter().map(edge_text).collect::<Vec<_>>(),
        "length": p.edges.len(),
        "n0": count_n0(p),
        "type1": p.edges.len() - count_n0(p),
    })
}

fn cycles_json(l: &LefschetzFibration) -> Value {
    json!(l
        .cycles
        .iter()
        .enumerate()
        .map(|(i, (c, s))| {
            let mut v = json!({"curve": c.to_string(), "sign": s});
            if let Some(vis) = &l.visible {
                v["visible"] = json!(vis[i]);
            }
            v
        })
        .collect::<Vec<_>>())
}

fn fiber_json(f: &PolygonPresentation) -> Value {
    let s = f.spec();
    json!({"genus": s.genus, "boundaries": s.boundary_count, "arcs": f.arc_count()})
}

/// A document declaring a fiber and, optionally, a fibration and a path.
pub fn emit(f: &PolygonPresentation, lf: Option<&LefschetzFibration>, path: Option<&CCPath>) -> Document {
    let mut decls = Vec::new();
    let spec = f.spec();
    decls.push(Decl::Surface { name: "F".into(), genus: spec.genus, boundaries: spec.boundary_count });
    let mut pool: Vec<CurveWord> = Vec::new();
    let mut name_of = |c: &CurveWord, decls: &mut Vec<Decl>| -> String {
        let k = match pool.iter().position(|x| x == c) {
            Some(k) => k,
            None => {
                pool.push(c.clone());
                decls.push(Decl::Curve { name: format!("C{}", pool.len()), surface: "F".into(), word: c.clone() });
                pool.len() - 1
            }
        };
        format!("C{}", k + 1)
    };
    if let Some(l) = lf {
        let factors = l.cycles.iter().map(|(c, s)| (*s, name_of(c, &mut decls))).collect();
        decls.push(Decl::Fibration { name: "L".into(), surface: "F".into(), factors });
    }
    if let Some(p) = path {
        let start = &p.vertices[0];
        let canonical = double_arc_system(&canonical_arc_system(f));
        let def = if start.key(f) == canonical.key(f) { SystemDef::Canonical } else { SystemDef::Curves(start.curves.clone()) };
        decls.push(Decl::System { name: "S".into(), surface: "F".into(), def });
        let mut steps = Vec::new();
        for e in &p.edges {
            let step = match e {
                CCEdge::Type0 { slides } => StepDef::Slides(slides.iter().map(|m| m.slide).collect()),
                CCEdge::Type1 { side, twist, sign } => StepDef::Twist { side: *side, curve: name_of(twist, &mut decls), sign: *sign },
            };
            steps.push(Decl::Step { path: "P".into(), step });
        }
        decls.push(Decl::Path { name: "P".into(), start: "S".into() });
        decls.extend(steps);
    }
    Document { decls: decls.into_iter().map(|d| (0, d)).collect() }
}

pub fn validate(file: &Path, budget: usize) -> Outcome {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let doc = dsl::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let m = match Model::build(&doc) {
        Ok(m) => m,
        Err(DocError::Semantic(d)) => {
            return Ok(Output::Json(report(
                "validate",
                json!({"ok": false, "error": {"line": d.line, "message": d.message}}),
            )))
        }
        Err(e) => return Err(Failure::Usage(e.to_string())),
    };
    let mut ok = true;
    let mut objects = Vec::new();
    for (name, kind) in &m.order {
        let mut v = json!({"name": name, "kind": kind});
        match *kind {
            "surface" => v["fiber"] = fiber_json(&m.surfaces[name]),
            "fibration" => v["cycles"] = json!(m.fibrations[name].1.len()),
            "diagram" => {
                let d = &m.diagrams[name].1;
                let check = d.check();
                ok &= check.is_ok();
                v["systems"] = json!(d.systems.len());
                v["valid"] = json!(check.is_ok());
            }
            "path" => {
                let (surface, p) = &m.paths[name];
                let r = validate_path(&m.sigma(surface), p, budget);
                ok &= r.valid;
                v["valid"] = json!(r.valid);
                v["n0"] = json!(r.n0);
                v["type1"] = json!(r.type1);
                v["is_loop"] = json!(r.is_loop);
                if let Some((i, why)) = r.failure {
                    v["failure"] = json!({"edge": i + 1, "reason": why});
                }
            }
            _ => {}
        }
        objects.push(v);
    }
    Ok(Output::Json(report("validate", json!({"ok": ok, "objects": objects}))))
}

pub struct Names<'a> {
    pub from: Option<&'a str>,
    pub to: Option<&'a str>,
    pub fibration: Option<&'a str>,
    pub path: Option<&'a str>,
    pub diagram: Option<&'a str>,
    pub system: Option<&'a str>,
    pub arc: Option<&'a str>,
    pub surface: Option<&'a str>,
}

pub fn connect_cmd(file: &Path, names: &Names, budget: usize) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (s1, v)) = pick(&m, &m.systems, "system", names.from)?;
    let (_, (s2, w)) = pick(&m, &m.systems, "system", names.to)?;
    let (_, (s3, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
    if s1 != s2 || s1 != s3 {
        return Err(Failure::Invalid("systems and fibration live on different surfaces".into()));
    }
    let p = connect(&m.sigma(s1), v, w, &l.cycles, budget)?;
    let doc = emit(&m.surfaces[s1], None, Some(&p));
    Ok(Output::Json(report("connect", json!({"path": path_json(&p), "document": dsl::print(&doc)}))))
}

pub fn path_to_lf_cmd(file: &Path, names: &Names) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (s, p)) = pick(&m, &m.paths, "path", names.path)?;
    let l = path_to_lf(&m.sigma(s), p)?;
    Ok(Output::Json(report("path-to-lf", json!({"cycles": cycles_json(&l)}))))
}

pub fn lf_to_path_cmd(file: &Path, names: &Names, budget: usize) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (_, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
    let (_, p) = lf_to_path(l, budget)?;
    let doc = emit(&l.fiber, Some(l), Some(&p));
    Ok(Output::Json(report("lf-to-path", json!({"path": path_json(&p), "document": dsl::print(&doc)}))))
}

pub fn lf_to_diagram_cmd(file: &Path, names: &Names, sides: &str) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (_, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
    let sides = dsl::parse_sides(sides).ok_or_else(|| Failure::Usage("--sides takes a string of 0s and 1s".into()))?;
    let d = lf_to_diagram(l, &sides)?;
    let twists: Vec<Value> = d
        .twists
        .iter()
        .map(|(side, c, s)| json!({"side": side_name(*side), "curve": c.to_string(), "sign": s}))
        .collect();
    Ok(Output::Json(report(
        "lf-to-diagram",
        json!({"systems": d.systems.iter().map(system_json).collect::<Vec<_>>(), "twists": twists}),
    )))
}

pub fn hurwitz_cmd(file: &Path, names: &Names, index: usize, inverse: bool) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (_, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
    if index == 0 {
        return Err(Failure::Usage("--index is 1-based".into()));
    }
    let x = hurwitz_move(l, index - 1, !inverse)?;
    let same = x.monodromy().same_map(&l.fiber, &l.monodromy())?;
    Ok(Output::Json(report("hurwitz", json!({"cycles": cycles_json(&x), "monodromy_preserved": same, "ok": same}))))
}

pub fn stabilize_cmd(file: &Path, names: &Names, sign: i32, budget: usize) -> Outcome {
    let (_, m) = load(file)?;
    if sign.abs() != 1 {
        return Err(Failure::Usage("--sign must be 1 or -1".into()));
    }
    let (_, (sa, a)) = pick(&m, &m.arcs, "arc", names.arc)?;
    if names.fibration.is_some() {
        let (_, (s, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
        if s != sa {
            return Err(Failure::Invalid("arc and fibration live on different surfaces".into()));
        }
        let (x, st) = stabilize(l, a, sign)?;
        return Ok(Output::Json(report(
            "stabilize",
            json!({"fiber": fiber_json(&x.fiber), "cycle": st.cycle.to_string(), "cycles": cycles_json(&x)}),
        )));
    }
    let (_, (s, p)) = pick(&m, &m.paths, "path", names.path)?;
    if s != sa {
        return Err(Failure::Invalid("arc and path live on different surfaces".into()));
    }
    let (sigma2, p2, st) = stabilize_path(&m.sigma(s), p, a, sign, budget)?;
    let added = count_n0(&p2) - count_n0(p);
    Ok(Output::Json(report(
        "stabilize",
        json!({
            "fiber": fiber_json(&sigma2.half),
            "cycle": st.cycle.to_string(),
            "added_type0": added,
            "path": path_json(&p2),
            "document": dsl::print(&emit(&sigma2.half, None, Some(&p2))),
        }),
    )))
}

pub fn normalize_cmd(file: &Path, names: &Names, len: Option<usize>, seed: u64) -> Outcome {
    let (_, m) = load(file)?;
    let (sigma, p) = match len {
        Some(n) => {
            let (_, f) = pick(&m, &m.surfaces, "surface", names.surface)?;
            let sigma = double(f);
            let start = double_arc_system(&canonical_arc_system(f));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = sample_l0_path(&sigma, &start, n, &mut rng)?;
            (sigma, p)
        }
        None => {
            let (_, (s, p)) = pick(&m, &m.paths, "path", names.path)?;
            (m.sigma(s), p.clone())
        }
    };
    if count_n0(&p) != 0 {
        return Err(Failure::Invalid(format!("the path has {} type-0 edges; normalization needs none", count_n0(&p))));
    }
    let f = &sigma.half;
    let l = path_to_lf(&sigma, &p)?;
    let b = dual_curves_of(f, &p.vertices[0].side(ccgraph::cutgraph::Side::Plus).arcs);
    let out = normalize_l0(&l, &b, l.visible.as_deref().unwrap_or(&[]))?;
    let all_in_b = out.cycles.iter().all(|(c, _)| in_set(c, &b));
    let same = out.monodromy().same_map(f, &l.monodromy())?;
    Ok(Output::Json(report(
        "normalize-l0",
        json!({
            "input": cycles_json(&l),
            "normalized": cycles_json(&out),
            "all_in_b": all_in_b,
            "monodromy_preserved": same,
            "ok": all_in_b && same,
        }),
    )))
}

pub fn l_bound_cmd(file: &Path, names: &Names, family: Option<&str>, n: Option<usize>, budget: usize) -> Outcome {
    let (_, m) = load(file)?;
    if names.diagram.is_some() || (names.path.is_none() && family.is_none() && !m.diagrams.is_empty()) {
        let (_, (_, d)) = pick(&m, &m.diagrams, "diagram", names.diagram)?;
        let r = exhaustive_l(d, budget)?;
        return Ok(Output::Json(report(
            "l-bound",
            json!({"lower": r.value, "upper": r.value, "exact": true, "explored": r.explored, "certificate": path_json(&r.certificate)}),
        )));
    }
    let (_, (s, p)) = pick(&m, &m.paths, "path", names.path)?;
    let upper = count_n0(p);
    let mut body = json!({"upper": upper, "lower": 0, "exact": upper == 0});
    if let Some(fam) = family {
        let n = n.ok_or_else(|| Failure::Usage("--family needs --n".into()))?;
        let sigma = m.sigma(s);
        let lf = path_to_lf(&sigma, p)?;
        let fam_data = Family { n, sigma, lf, path: p.clone() };
        let lower = match fam {
            "family1" => family1_lower(&fam_data, n)?,
            "family2" => family2_lower(&fam_data, n)?,
            other => return Err(Failure::Usage(format!("unknown family `{other}`"))),
        };
        body = json!({"upper": upper, "lower": lower, "exact": lower == upper, "family": fam});
    }
    Ok(Output::Json(report("l-bound", body)))
}

pub fn invariants_cmd(file: &Path, names: &Names) -> Outcome {
    let (_, m) = load(file)?;
    let (_, (_, l)) = pick(&m, &m.fibrations, "fibration", names.fibration)?;
    let r = homology_report(l)?;
    let v = serde_json::to_value(&r).map_err(|e| anyhow!(e))?;
    Ok(Output::Json(report("invariants", v)))
}

pub fn example_cmd(family: &str, n: usize) -> Outcome {
    let fam = match family {
        "family1" => family1(n)?,
        "family2" => family2(n)?,
        other => return Err(Failure::Usage(format!("unknown family `{other}`; expected family1 or family2"))),
    };
    let doc = emit(&fam.sigma.half, Some(&fam.lf), Some(&fam.path));
    Ok(Output::Text(format!("# {family}, n = {n}\n{}", dsl::print(&doc))))
}

pub fn render_cmd(file: &Path, names: &Names, out: &Path) -> Outcome {
    let (_, m) = load(file)?;
    let first = |kind: &str| m.order.iter().find(|(_, k)| *k == kind).map(|(n, _)| n.as_str());
    let (label, surface, systems): (String, &str, Vec<ContactCutSystem>) = if let Some(d) = names.diagram {
        let (n, (s, d)) = pick(&m, &m.diagrams, "diagram", Some(d))?;
        (n.to_string(), s, d.systems.clone())
    } else if let Some(p) = names.path {
        let (n, (s, p)) = pick(&m, &m.paths, "path", Some(p))?;
        (n.to_string(), s, p.vertices.clone())
    } else if let Some(v) = names.system {
        let (n, (s, v)) = pick(&m, &m.systems, "system", Some(v))?;
        (n.to_string(), s, vec![v.clone()])
    } else if let Some(d) = first("diagram") {
        let (s, d) = &m.diagrams[d];
        (first("diagram").unwrap().to_string(), s, d.systems.clone())
    } else if let Some(p) = first("path") {
        let (s, p) = &m.paths[p];
        (first("path").unwrap().to_string(), s, p.vertices.clone())
    } else if let Some(v) = first("system") {
        let (s, v) = &m.systems[v];
        (first("system").unwrap().to_string(), s, vec![v.clone()])
    } else {
        return Err(Failure::Usage("nothing to render: declare a diagram, path or system".into()));
    };
    let f = &m.surfaces[surface];
    let stem = out.with_extension("");
    let stem_name = stem.file_name().and_then(|s| s.to_str()).context("--svg needs a file name")?.to_string();
    let mut files = Vec::new();
    for (i, v) in systems.iter().enumerate() {
        let target: PathBuf = stem.with_file_name(format!("{stem_name}-{i}.svg"));
        let body = svg::render_system(f, v, &format!("{label} system {i}"));
        std::fs::write(&target, body).with_context(|| format!("writing {}", target.display()))?;
        files.push(target.file_name().unwrap().to_string_lossy().into_owned());
    }
    if files.is_empty() {
        return Err(Failure::Invalid("no systems to render".into()));
    }
    Ok(Output::Json(report("render", json!({"files": files}))))
}
