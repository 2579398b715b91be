use deltaflip::deltamatroid::{
    distance_triple, divisibility, is_delta_matroid, is_even, is_two_plus_one, is_vf_closed,
};
use deltaflip::graph::graph_poly_with;
use deltaflip::interlace::{multivariate_q_with, partitions, poly_direct_with, specialize, Limits};
use deltaflip::matroid::q1_modular_evaluation;
use deltaflip::orbit::{vf_orbit, OrbitGenerators, DEFAULT_ORBIT_CAP};
use deltaflip::recursion::{q1_recursive, q2_q3_recursive, Q1_recursive};
use deltaflip::{
    BiPoly, Error, Graph, Matroid, PolyKind, RecursionOptions, RecursionTrace, SetSystem, UniPoly,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::doc::{self, as_system, Document};
use crate::error::{CliError, CliResult};
use crate::word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Direct,
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Generators {
    /// `+V` and `*V` alternately
    Full,
    /// `*u` and `+u` for every element
    Single,
}

/// What a command prints and the exit status it asks for.
pub struct Report {
    pub body: String,
    pub status: u8,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, status: 0 }
    }
}

pub struct Ctx {
    pub format: Format,
    pub force: bool,
}

impl Ctx {
    fn limits(&self) -> Limits {
        if self.force {
            Limits::forced()
        } else {
            Limits::default()
        }
    }

    fn cap(&self) -> usize {
        if self.force {
            usize::MAX
        } else {
            DEFAULT_ORBIT_CAP
        }
    }

    fn emit(&self, json: impl FnOnce() -> String, text: impl FnOnce() -> String) -> Report {
        Report::ok(match self.format {
            Format::Json => json(),
            Format::Text => text(),
        })
    }
}

fn int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => Value::from(i),
        Err(_) => Value::from(v.to_string()),
    }
}

/// Ascending coefficients, `[5,3]` for `5 + 3y`.
pub fn poly_json(p: &UniPoly) -> String {
    let cs: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
    format!("[{}]", cs.join(","))
}

fn poly_value(p: &UniPoly) -> Value {
    Value::from(p.coeffs().iter().map(int).collect::<Vec<_>>())
}

fn parse_kind(which: &str) -> CliResult<PolyKind> {
    which
        .parse()
        .map_err(|e: Error| CliError::Input(e.to_string()))
}

fn system_doc(m: &SetSystem) -> Document {
    Document::System(m.clone())
}

fn show(ctx: &Ctx, d: &Document) -> Report {
    ctx.emit(|| doc::emit(d), || doc::describe(d))
}

fn matroid_of(d: &Document) -> CliResult<(Matroid, Option<&deltaflip::BinaryMatroid>)> {
    match d {
        Document::Matroid(m, rep) => Ok((m.clone(), rep.as_ref())),
        Document::System(m) => Ok((Matroid::new(m.clone())?, None)),
        _ => Err(CliError::Input(
            "expected a matroid or set-system document".into(),
        )),
    }
}

fn binary_of(d: &Document) -> CliResult<&deltaflip::BinaryMatroid> {
    match d {
        Document::Matroid(_, Some(b)) => Ok(b),
        _ => Err(CliError::Input(
            "expected a matroid document with `rows`".into(),
        )),
    }
}

pub fn validate(ctx: &Ctx, d: &Document) -> CliResult<Report> {
    let m = as_system(d, ctx.force)?;
    let kind = match d {
        Document::System(_) => "setsystem",
        Document::Graph(_) => "graph",
        Document::Matrix(_) => "matrix",
        Document::Matroid(..) => "matroid",
    };
    let c = m.classify();
    let v = json!({
        "type": kind,
        "n": m.n(),
        "members": m.len(),
        "proper": c.proper,
        "normal": c.normal,
        "equicardinal": c.equicardinal,
    });
    Ok(ctx.emit(
        || v.to_string(),
        || {
            format!(
                "{kind} on {} elements, {} members; proper {}, normal {}, equicardinal {}",
                m.n(),
                m.len(),
                c.proper,
                c.normal,
                c.equicardinal
            )
        },
    ))
}

pub fn apply(ctx: &Ctx, d: &Document, w: &str) -> CliResult<Report> {
    let ops = word::parse_word(w)?;
    let out = match d {
        Document::Graph(g) => Document::Graph(word::apply_to_graph(g, &ops)?),
        other => system_doc(&word::apply_to_system(&as_system(other, ctx.force)?, &ops)?),
    };
    Ok(show(ctx, &out))
}

fn poly_of(ctx: &Ctx, d: &Document, kind: PolyKind, method: Method) -> CliResult<UniPoly> {
    match (method, d) {
        (Method::Direct, Document::Graph(g)) => Ok(graph_poly_with(g, kind, ctx.limits())?),
        (Method::Direct, _) => Ok(poly_direct_with(
            &as_system(d, ctx.force)?,
            kind,
            ctx.limits(),
        )?),
        (Method::Recursive, _) => Ok(tree_of(ctx, d, kind)?.0),
    }
}

pub fn poly(ctx: &Ctx, d: &Document, which: &str, method: Method) -> CliResult<Report> {
    if which == "Q" {
        let m = as_system(d, ctx.force)?;
        let q = multivariate_q_with(&m, ctx.limits())?;
        let g = m.ground();
        let terms: Vec<Value> = partitions(&q)
            .map(|(a, b, c, e)| json!({"A": g.labels_of(a), "B": g.labels_of(b), "C": g.labels_of(c), "d": e}))
            .collect();
        return Ok(ctx.emit(
            || Value::from(terms.clone()).to_string(),
            || {
                partitions(&q)
                    .map(|(a, b, c, e)| {
                        format!(
                            "a{} b{} c{} y^{e}",
                            g.format_subset(a),
                            g.format_subset(b),
                            g.format_subset(c)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            },
        ));
    }
    let p = poly_of(ctx, d, parse_kind(which)?, method)?;
    Ok(ctx.emit(|| poly_json(&p), || p.to_string()))
}

pub fn eval(
    ctx: &Ctx,
    d: &Document,
    which: &str,
    at: Option<i64>,
    modular: Option<i64>,
) -> CliResult<Report> {
    let kind = parse_kind(which)?;
    match (at, modular) {
        (Some(y), None) => {
            let v = poly_of(ctx, d, kind, Method::Direct)?.evaluate(y);
            Ok(Report::ok(v.to_string()))
        }
        (None, Some(p)) => {
            if kind != PolyKind::q1 {
                return Err(CliError::Input("--modular applies to q1 only".into()));
            }
            let e = q1_modular_evaluation(&as_system(d, ctx.force)?, p)?;
            let v = json!({
                "p": e.p,
                "value": int(&e.value),
                "d": e.d,
                "k": e.k.as_ref().map(int),
                "k_odd": e.k_odd,
                "congruent": e.congruent,
                "holds": e.holds(),
            });
            Ok(ctx.emit(
                || v.to_string(),
                || {
                    let k = e.k.as_ref().map_or("none".to_string(), |k| k.to_string());
                    format!(
                        "q1({}) = {} = k(-2)^{} with k = {k}; k odd {}, k ≡ (-1)^n mod {p} {}",
                        p - 2,
                        e.value,
                        e.d,
                        e.k_odd,
                        e.congruent
                    )
                },
            ))
        }
        _ => Err(CliError::Input(
            "give exactly one of --at or --modular".into(),
        )),
    }
}

pub fn check(ctx: &Ctx, d: &Document) -> CliResult<Report> {
    let m = as_system(d, ctx.force)?;
    let c = m.classify();
    let mut v = json!({
        "n": m.n(),
        "members": m.len(),
        "proper": c.proper,
        "normal": c.normal,
        "equicardinal": c.equicardinal,
    });
    if c.proper {
        let delta = is_delta_matroid(&m);
        let vf = if doc::known_vf_closed(d) {
            Value::from(true)
        } else if !delta {
            Value::from(false)
        } else {
            match is_vf_closed(&m, ctx.cap()) {
                Ok(b) => Value::from(b),
                Err(Error::CapExceeded { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            }
        };
        let mut elements = Vec::new();
        for u in 0..m.n() {
            let s = divisibility(&m, u)?;
            let t = distance_triple(&m, u)?;
            elements.push(json!({
                "element": m.ground().label(u),
                "divisible": s.divisible,
                "strongly_divisible": s.strongly_divisible,
                "distance_triple": [t.0, t.1, t.2],
                "two_plus_one": is_two_plus_one(t),
            }));
        }
        let o = v.as_object_mut().expect("object literal");
        o.insert("delta_matroid".into(), delta.into());
        o.insert("even".into(), is_even(&m)?.into());
        o.insert("vf_closed".into(), vf);
        o.insert("distance".into(), m.min_size()?.into());
        o.insert("elements".into(), elements.into());
    }
    Ok(ctx.emit(|| v.to_string(), || text_object(&v)))
}

fn text_object(v: &Value) -> String {
    let mut out = Vec::new();
    for (k, val) in v.as_object().into_iter().flatten() {
        match val {
            Value::Array(items) if items.iter().all(Value::is_object) => {
                out.push(format!("{k}:"));
                for it in items {
                    let parts: Vec<String> = it
                        .as_object()
                        .into_iter()
                        .flatten()
                        .map(|(a, b)| format!("{a}={}", b.to_string().trim_matches('"')))
                        .collect();
                    out.push(format!("  {}", parts.join(" ")));
                }
            }
            Value::Null => out.push(format!("{k}: unknown (orbit cap reached)")),
            other => out.push(format!("{k}: {other}")),
        }
    }
    out.join("\n")
}

pub fn orbit(ctx: &Ctx, d: &Document, gens: Generators) -> CliResult<Report> {
    let m = as_system(d, ctx.force)?;
    let g = match gens {
        Generators::Full => OrbitGenerators::FullVAlternation,
        Generators::Single => OrbitGenerators::SingleElementFlips,
    };
    let members = vf_orbit(&m, g, ctx.cap())?;
    Ok(ctx.emit(
        || {
            let lines: Vec<String> = members
                .iter()
                .map(|o| format!("  {}", doc::system_value(o)))
                .collect();
            format!("[\n{}\n]", lines.join(",\n"))
        },
        || {
            members
                .iter()
                .map(SetSystem::to_string)
                .collect::<Vec<_>>()
                .join("\n")
        },
    ))
}

fn tree_of(ctx: &Ctx, d: &Document, kind: PolyKind) -> CliResult<(UniPoly, RecursionTrace)> {
    let m = as_system(d, ctx.force)?;
    let opts = RecursionOptions {
        vf_cap: ctx.cap(),
        ..Default::default()
    };
    Ok(match kind {
        PolyKind::q1 => q1_recursive(&m, &opts)?,
        PolyKind::q2 | PolyKind::q3 => q2_q3_recursive(&m, kind, &opts)?,
        PolyKind::Q1 => Q1_recursive(&m, &opts)?,
    })
}

fn trace_value(t: &RecursionTrace) -> Value {
    json!({
        "branch": t.branch,
        "system": doc::system_value(&t.system),
        "element": t.element,
        "value": poly_value(&t.value),
        "children": t.children.iter().map(trace_value).collect::<Vec<_>>(),
    })
}

pub fn tree(ctx: &Ctx, d: &Document, which: &str) -> CliResult<Report> {
    let (_, t) = tree_of(ctx, d, parse_kind(which)?)?;
    Ok(ctx.emit(
        || trace_value(&t).to_string(),
        || t.render().trim_end().to_string(),
    ))
}

pub fn from_graph(ctx: &Ctx, d: &Document) -> CliResult<Report> {
    match d {
        Document::Graph(_) => Ok(show(ctx, &system_doc(&as_system(d, ctx.force)?))),
        _ => Err(CliError::Input("expected a graph document".into())),
    }
}

pub fn from_matrix(ctx: &Ctx, d: &Document) -> CliResult<Report> {
    match d {
        Document::Matrix(_) => Ok(show(ctx, &system_doc(&as_system(d, ctx.force)?))),
        _ => Err(CliError::Input("expected a matrix document".into())),
    }
}

pub fn ppt(ctx: &Ctx, d: &Document, set: &str) -> CliResult<Report> {
    let Document::Matrix(a) = d else {
        return Err(CliError::Input("expected a matrix document".into()));
    };
    let x = word::mask(a.ground(), &word::parse_set(set)?)?;
    Ok(show(ctx, &Document::Matrix(a.ppt(x)?)))
}

fn tutte_grid(t: &BiPoly) -> String {
    let (mut dx, mut dy) = (0, 0);
    for (a, b, _) in t.terms() {
        dx = dx.max(a);
        dy = dy.max(b);
    }
    let rows: Vec<String> = (0..=dx)
        .map(|a| {
            let cs: Vec<String> = (0..=dy).map(|b| t.coeff(a, b).to_string()).collect();
            format!("[{}]", cs.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn tutte(ctx: &Ctx, d: &Document, at: Option<(i64, i64)>) -> CliResult<Report> {
    let (m, _) = matroid_of(d)?;
    let t = m.tutte()?;
    if let Some((x, y)) = at {
        return Ok(Report::ok(t.evaluate(x, y).to_string()));
    }
    Ok(ctx.emit(|| tutte_grid(&t), || t.to_string()))
}

pub fn bicycle_dim(d: &Document) -> CliResult<Report> {
    Ok(Report::ok(binary_of(d)?.bicycle_dimension().to_string()))
}

pub fn fundamental_graph(ctx: &Ctx, d: &Document, basis: &str) -> CliResult<Report> {
    let b = binary_of(d)?;
    let x = word::mask(b.matroid().ground(), &word::parse_set(basis)?)?;
    Ok(show(ctx, &Document::Graph(b.fundamental_graph(x)?)))
}

enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

fn compare(a: &UniPoly, b: &UniPoly) -> Verdict {
    if a == b {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("{a} vs {b}"))
    }
}

/// Cross-checks independent computations of the same quantity.
pub fn verify(ctx: &Ctx, d: &Document) -> CliResult<Report> {
    let m = as_system(d, ctx.force)?;
    let limits = ctx.limits();
    let opts = RecursionOptions {
        vf_cap: ctx.cap(),
        ..Default::default()
    };
    let direct = |k| poly_direct_with(&m, k, limits);
    let mut results: Vec<(String, Verdict)> = Vec::new();
    if !m.is_proper() {
        return Err(Error::Improper("verify").into());
    }
    let full = m.ground().full();
    let delta = is_delta_matroid(&m);
    let vf = if doc::known_vf_closed(d) {
        Some(true)
    } else if !delta {
        Some(false)
    } else {
        match is_vf_closed(&m, ctx.cap()) {
            Ok(b) => Some(b),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };

    results.push((
        "recursive q1 = direct q1".into(),
        if delta {
            compare(&q1_recursive(&m, &opts)?.0, &direct(PolyKind::q1)?)
        } else {
            Verdict::Skip("not a delta-matroid".into())
        },
    ));
    for (kind, t, what) in [
        (PolyKind::q2, m.dual_pivot(full), "M~*V"),
        (PolyKind::q3, m.loop_complement(full), "M+V"),
    ] {
        let v = if is_delta_matroid(&t) {
            compare(&q2_q3_recursive(&m, kind, &opts)?.0, &direct(kind)?)
        } else {
            Verdict::Skip(format!("{what} is not a delta-matroid"))
        };
        results.push((format!("recursive {kind} = direct {kind}"), v));
    }
    results.push((
        "recursive Q1 = direct Q1".into(),
        match vf {
            Some(true) => compare(&Q1_recursive(&m, &opts)?.0, &direct(PolyKind::Q1)?),
            Some(false) => Verdict::Skip("not vf-closed".into()),
            None => Verdict::Skip("vf-closure undecided within the orbit cap".into()),
        },
    ));
    results.push(("specializations of Q".into(), {
        match multivariate_q_with(&m, limits) {
            Ok(q) => PolyKind::ALL
                .into_iter()
                .map(|k| Ok((k, compare(&specialize(&q, k), &direct(k)?))))
                .collect::<CliResult<Vec<_>>>()?
                .into_iter()
                .find_map(|(k, v)| match v {
                    Verdict::Fail(s) => Some(Verdict::Fail(format!("{k}: {s}"))),
                    _ => None,
                })
                .unwrap_or(Verdict::Pass),
            Err(e @ Error::SizeLimit { .. }) => Verdict::Skip(e.to_string()),
            Err(e) => return Err(e.into()),
        }
    }));

    let graph = match d {
        Document::Graph(g) => Some(g.clone()),
        _ => Graph::from_system(&m).ok(),
    };
    match &graph {
        Some(g) => {
            let sys = g.to_system_with(doc::support_limit(ctx.force))?;
            let v = if sys == m && Graph::from_system(&sys).ok().as_ref() == Some(g) {
                Verdict::Pass
            } else {
                Verdict::Fail("graph and set system disagree".into())
            };
            results.push(("graph round trip".into(), v));
            let mut v = Verdict::Pass;
            for k in PolyKind::ALL {
                if let Verdict::Fail(s) = compare(&graph_poly_with(g, k, limits)?, &direct(k)?) {
                    v = Verdict::Fail(format!("{k}: {s}"));
                    break;
                }
            }
            results.push(("graph polynomials = set-system polynomials".into(), v));
        }
        None => results.push((
            "graph polynomials = set-system polynomials".into(),
            Verdict::Skip("not a graph system".into()),
        )),
    }

    let matroid = if m.classify().equicardinal && delta {
        Matroid::new(m.clone()).ok()
    } else {
        None
    };
    match &matroid {
        Some(mt) => {
            let c = mt.tutte_diagonal_check()?;
            results.push(("t(y,y) = q1(y-1)".into(), compare(&c.via_tutte, &c.via_q1)));
            results.push(("rank sum = deletion-contraction".into(), {
                let (a, b) = (mt.tutte()?, mt.tutte_dc()?);
                if a == b {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!("{a} vs {b}"))
                }
            }));
        }
        None => results.push((
            "t(y,y) = q1(y-1)".into(),
            Verdict::Skip("not a matroid".into()),
        )),
    }
    if let Document::Matroid(mt, Some(b)) = d {
        let (bd, dd) = (b.bicycle_dimension() as u32, mt.dual_distance()?);
        results.push((
            "bicycle dimension = d(M~*V)".into(),
            if bd == dd {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("{bd} vs {dd}"))
            },
        ));
    }

    if vf == Some(true) && m.n() > 0 {
        let sign = if m.n() % 2 == 0 { 1 } else { -1 };
        let pw = |e: u32| BigInt::from(sign) * neg_two_pow(e);
        let checks = [
            (PolyKind::Q1, BigInt::from(0)),
            (PolyKind::q1, pw(m.dual_pivot(full).min_size()?)),
            (PolyKind::q2, pw(m.min_size()?)),
            (PolyKind::q3, pw(m.pivot(full).min_size()?)),
        ];
        for (k, want) in checks {
            let got = direct(k)?.evaluate(-2);
            let v = if got == want {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("{got} vs {want}"))
            };
            results.push((format!("{k}(-2)"), v));
        }
    }

    let failed = results
        .iter()
        .filter(|(_, v)| matches!(v, Verdict::Fail(_)))
        .count();
    let status = u8::from(failed > 0);
    let body = match ctx.format {
        Format::Json => {
            let items: Vec<Value> = results
                .iter()
                .map(|(name, v)| match v {
                    Verdict::Pass => json!({"check": name, "result": "pass"}),
                    Verdict::Fail(s) => json!({"check": name, "result": "fail", "detail": s}),
                    Verdict::Skip(s) => json!({"check": name, "result": "skip", "detail": s}),
                })
                .collect();
            json!({"passed": failed == 0, "checks": items}).to_string()
        }
        Format::Text => results
            .iter()
            .map(|(name, v)| match v {
                Verdict::Pass => format!("pass  {name}"),
                Verdict::Fail(s) => format!("FAIL  {name}: {s}"),
                Verdict::Skip(s) => format!("skip  {name} ({s})"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Report { body, status })
}

fn neg_two_pow(e: u32) -> BigInt {
    (0..e).fold(BigInt::from(1), |acc, _| acc * -2)
}
