//! Interchange documents: one JSON object with a `type` field.
//!
//! ```json
//! {"type": "setsystem", "ground": ["p","q","r"], "sets": [[], ["p"], ["p","q"]]}
//! {"type": "graph", "vertices": ["p","q"], "edges": [["p","q"]], "loops": ["p"]}
//! {"type": "matrix", "labels": ["p","q"], "rows": ["11", "10"]}
//! {"type": "matroid", "ground": ["a","b","c"], "bases": [["a","b"], ["a","c"]]}
//! {"type": "matroid", "ground": ["a","b","c"], "rows": ["110", "011"]}
//! ```
//!
//! Emission is canonical: members in the library's order, one field per line.

use std::collections::HashSet;

use deltaflip::gf2::SUPPORT_LIMIT;
use deltaflip::interlace::Limits;
use deltaflip::{BinaryMatroid, BitMatrix, Gf2Matrix, Graph, GroundSet, Matroid, SetSystem};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Raw {
    Setsystem {
        ground: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Graph {
        vertices: Vec<String>,
        #[serde(default)]
        edges: Vec<(String, String)>,
        #[serde(default)]
        loops: Vec<String>,
    },
    Matrix {
        labels: Vec<String>,
        rows: Vec<String>,
    },
    Matroid {
        ground: Vec<String>,
        bases: Option<Vec<Vec<String>>>,
        rows: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone)]
pub enum Document {
    System(SetSystem),
    Graph(Graph),
    Matrix(Gf2Matrix),
    /// Bases, plus a representation when the document gave one.
    Matroid(Matroid, Option<BinaryMatroid>),
}

fn doc_err(e: deltaflip::Error) -> CliError {
    CliError::Document(e)
}

fn digits(row: &str, i: usize) -> CliResult<Vec<u8>> {
    row.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(CliError::Input(format!(
                "row {i}: unexpected character `{other}`, expected 0 or 1"
            ))),
        })
        .collect()
}

fn family(ground: &GroundSet, sets: &[Vec<String>], what: &str) -> CliResult<Vec<u64>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        let x = ground.mask_of(s).map_err(doc_err)?;
        if s.len() != x.count_ones() as usize {
            return Err(CliError::Input(format!("{what} {i} repeats an element")));
        }
        if !seen.insert(x) {
            return Err(CliError::Input(format!(
                "{what} {i} duplicates an earlier one: {}",
                ground.format_subset(x)
            )));
        }
        out.push(x);
    }
    Ok(out)
}

pub fn parse(text: &str) -> CliResult<Document> {
    let raw: Raw = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("malformed document: {e}")))?;
    match raw {
        Raw::Setsystem { ground, sets } => {
            let ground = GroundSet::new(ground).map_err(doc_err)?;
            let fam = family(&ground, &sets, "set")?;
            Ok(Document::System(
                SetSystem::new(ground, fam).map_err(doc_err)?,
            ))
        }
        Raw::Graph {
            vertices,
            edges,
            loops,
        } => Ok(Document::Graph(
            Graph::from_edges(vertices, edges, loops).map_err(doc_err)?,
        )),
        Raw::Matrix { labels, rows } => {
            let ground = GroundSet::new(labels).map_err(doc_err)?;
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, r)| digits(r, i))
                .collect::<CliResult<Vec<_>>>()?;
            Ok(Document::Matrix(
                Gf2Matrix::from_01(ground, &rows).map_err(doc_err)?,
            ))
        }
        Raw::Matroid {
            ground,
            bases,
            rows,
        } => {
            let ground = GroundSet::new(ground).map_err(doc_err)?;
            match (bases, rows) {
                (Some(bases), None) => {
                    let fam = family(&ground, &bases, "basis")?;
                    let m = Matroid::new(SetSystem::new(ground, fam).map_err(doc_err)?)
                        .map_err(doc_err)?;
                    Ok(Document::Matroid(m, None))
                }
                (None, Some(rows)) => {
                    let rows = rows
                        .iter()
                        .enumerate()
                        .map(|(i, r)| digits(r, i))
                        .collect::<CliResult<Vec<_>>>()?;
                    let rep = BitMatrix::from_01(&rows, ground.len()).map_err(doc_err)?;
                    let b = BinaryMatroid::from_matrix(ground, rep).map_err(doc_err)?;
                    Ok(Document::Matroid(b.matroid().clone(), Some(b)))
                }
                _ => Err(CliError::Input(
                    "a matroid document needs exactly one of `bases` or `rows`".into(),
                )),
            }
        }
    }
}

fn labels(ground: &GroundSet, x: u64) -> Value {
    Value::from(ground.labels_of(x))
}

fn bit_row(row: u64, cols: usize) -> String {
    (0..cols)
        .map(|j| if row >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Fields of a document in emission order.
fn fields(doc: &Document) -> Vec<(&'static str, Value)> {
    match doc {
        Document::System(m) => system_fields(m),
        Document::Graph(g) => {
            let gr = g.ground();
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .map(|&(u, v)| Value::from(vec![gr.label(u), gr.label(v)]))
                .collect();
            vec![
                ("type", "graph".into()),
                ("vertices", Value::from(gr.labels())),
                ("edges", Value::from(edges)),
                ("loops", labels(gr, g.loops())),
            ]
        }
        Document::Matrix(a) => {
            let rows: Vec<String> = a.rows().iter().map(|&r| bit_row(r, a.n())).collect();
            vec![
                ("type", "matrix".into()),
                ("labels", Value::from(a.ground().labels())),
                ("rows", Value::from(rows)),
            ]
        }
        Document::Matroid(m, rep) => {
            let mut out = vec![
                ("type", "matroid".into()),
                ("ground", Value::from(m.ground().labels())),
            ];
            match rep {
                Some(b) => {
                    let r = b.representation();
                    let rows: Vec<String> =
                        r.rows().iter().map(|&x| bit_row(x, r.n_cols())).collect();
                    out.push(("rows", Value::from(rows)));
                }
                None => {
                    let bases: Vec<Value> = m
                        .bases()
                        .family()
                        .iter()
                        .map(|&x| labels(m.ground(), x))
                        .collect();
                    out.push(("bases", Value::from(bases)));
                }
            }
            out
        }
    }
}

fn system_fields(m: &SetSystem) -> Vec<(&'static str, Value)> {
    let sets: Vec<Value> = m.family().iter().map(|&x| labels(m.ground(), x)).collect();
    vec![
        ("type", "setsystem".into()),
        ("ground", Value::from(m.ground().labels())),
        ("sets", Value::from(sets)),
    ]
}

fn render(fields: Vec<(&'static str, Value)>) -> String {
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| format!("  \"{k}\": {v}"))
        .collect();
    format!("{{\n{}\n}}", body.join(",\n"))
}

/// Canonical JSON text of a document.
pub fn emit(doc: &Document) -> String {
    render(fields(doc))
}

/// Compact one-line JSON of a set system, for lists.
pub fn system_value(m: &SetSystem) -> Value {
    let mut obj = serde_json::Map::new();
    for (k, v) in system_fields(m) {
        obj.insert(k.into(), v);
    }
    Value::Object(obj)
}

/// Plain-text rendering.
pub fn describe(doc: &Document) -> String {
    match doc {
        Document::System(m) => m.to_string(),
        Document::Graph(g) => {
            let gr = g.ground();
            let edges: Vec<String> = g
                .edges()
                .iter()
                .map(|&(u, v)| format!("{}-{}", gr.label(u), gr.label(v)))
                .collect();
            format!(
                "graph on {}\nedges: {}\nloops: {}",
                gr.format_subset(gr.full()),
                edges.join(" "),
                gr.format_subset(g.loops())
            )
        }
        Document::Matrix(a) => a.to_string().trim_end().to_string(),
        Document::Matroid(m, _) => format!("matroid of rank {}: {}", m.rank(), m.bases()),
    }
}

/// Entry limit for support systems of graphs and matrices.
pub fn support_limit(force: bool) -> usize {
    if force {
        Limits::forced().direct
    } else {
        SUPPORT_LIMIT
    }
}

/// The set system a document stands for: itself, `M_G`, `M_A`, or the bases.
pub fn as_system(doc: &Document, force: bool) -> CliResult<SetSystem> {
    Ok(match doc {
        Document::System(m) => m.clone(),
        Document::Graph(g) => g.to_system_with(support_limit(force))?,
        Document::Matrix(a) => a.support_set_system_with(support_limit(force))?,
        Document::Matroid(m, _) => m.bases().clone(),
    })
}

/// Whether the document is vf-closed by construction (graph, matrix, binary matroid).
pub fn known_vf_closed(doc: &Document) -> bool {
    match doc {
        Document::Graph(_) => true,
        Document::Matrix(a) => a.is_symmetric(),
        Document::Matroid(_, rep) => rep.is_some(),
        Document::System(_) => false,
    }
}
