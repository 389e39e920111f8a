//! JSON documents read and written by the command-line tool.
//!
//! Every document is an object with a mandatory `format_version` (currently 1).
//! Cell ids are decimal strings. Output is canonical: object keys sorted,
//! two-space indentation, cells in id order, one trailing newline.
//!
//! Wherever a document refers to a cell of a complex it accepts either an id
//! string or an array of vertex labels naming a unique cell.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error as ThisError;

use crate::builders::{DivisorId, StrataDescriptor, Stratum, StratumId};
use crate::collapse::{Automorphism, CollapseSequence, FreePair, GroupAction, MmpInstruction, DEFAULT_MAX_ORDER};
use crate::complex::{CellId, Complex, ComplexError, VertexLabel};
use crate::homology::HomologyResult;
use crate::isomorphism::VertexBijection;
use crate::subdivision::{AttachmentRecord, VertexMap};
use crate::Error;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u64),
    #[error("`{0}` does not name a cell")]
    UnknownCellRef(String),
    #[error("`{0}` names more than one cell")]
    AmbiguousCellRef(String),
    #[error("cell {cell}: no unique facet spanned by {vertices:?}")]
    UnresolvedFacet { cell: String, vertices: Vec<String> },
}

impl DocumentError {
    pub fn name(&self) -> &'static str {
        match self {
            DocumentError::Malformed(_) => "MalformedDocument",
            DocumentError::UnsupportedVersion(_) => "UnsupportedVersion",
            DocumentError::UnknownCellRef(_) => "UnknownCell",
            DocumentError::AmbiguousCellRef(_) => "AmbiguousCellRef",
            DocumentError::UnresolvedFacet { .. } => "UnresolvedFacet",
        }
    }
}

fn malformed(msg: impl ToString) -> Error {
    DocumentError::Malformed(msg.to_string()).into()
}

/// Sorted keys, two-space indentation, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(malformed)
}

fn check_version(v: &Value) -> Result<(), Error> {
    match v.get("format_version").and_then(Value::as_u64) {
        Some(FORMAT_VERSION) => Ok(()),
        Some(other) => Err(DocumentError::UnsupportedVersion(other).into()),
        None => Err(malformed("missing or non-integer format_version")),
    }
}

/// Checks the version, then deserializes with all unknown keys rejected.
fn typed<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T, Error> {
    check_version(v)?;
    serde_json::from_value(v.clone()).map_err(malformed)
}

fn labels(v: &[VertexLabel]) -> Vec<&str> {
    v.iter().map(VertexLabel::as_str).collect()
}

fn parse_id(s: &str) -> Result<CellId, Error> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed(format!("cell id `{s}` is not a decimal integer")));
    }
    s.parse().map_err(malformed)
}

// ---- complexes ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    #[allow(dead_code)]
    format_version: u64,
    #[serde(default)]
    vertices: Vec<String>,
    cells: Option<Vec<RawCell>>,
    maximal_simplices: Option<Vec<Vec<String>>>,
    /// Annotation written by `collapse`; ignored on input.
    #[allow(dead_code)]
    collapse: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCell {
    id: String,
    vertices: Vec<String>,
    facets: Option<Vec<String>>,
}

pub fn complex_to_value(cx: &Complex) -> Value {
    let cells: Vec<Value> = cx
        .cells()
        .map(|(id, c)| {
            json!({
                "id": id.to_string(),
                "vertices": labels(c.vertices()),
                "facets": c.facets().iter().map(CellId::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "vertices": cx.vertex_labels().map(VertexLabel::as_str).collect::<Vec<_>>(),
        "cells": cells,
    })
}

pub fn complex_to_string(cx: &Complex) -> String {
    to_canonical_string(&complex_to_value(cx))
}

pub fn complex_from_str(text: &str) -> Result<Complex, Error> {
    complex_from_value(&parse_json(text)?)
}

/// Loads a complex document, validating every cell. Vertices without an
/// explicit 0-cell receive ids after the largest explicit id, in label order;
/// facets may be omitted when each is the unique cell on its vertex set.
pub fn complex_from_value(v: &Value) -> Result<Complex, Error> {
    let raw: RawComplex = typed(v)?;
    match (raw.cells, raw.maximal_simplices) {
        (Some(_), Some(_)) => Err(malformed("both `cells` and `maximal_simplices` given")),
        (None, Some(ms)) => {
            if ms.iter().any(Vec::is_empty) {
                return Err(malformed("empty maximal simplex"));
            }
            let mut cx = Complex::from_maximal_simplices(ms);
            for label in raw.vertices {
                if !cx.has_vertex(&label.as_str().into()) {
                    cx.add_vertex(label)?;
                }
            }
            Ok(cx)
        }
        (cells, None) => load_cells(raw.vertices, cells.unwrap_or_default()),
    }
}

fn load_cells(vertices: Vec<String>, cells: Vec<RawCell>) -> Result<Complex, Error> {
    let known: BTreeSet<&str> = vertices.iter().map(String::as_str).collect();
    if known.len() != vertices.len() {
        let mut seen = BTreeSet::new();
        let dup = vertices.iter().find(|v| !seen.insert(v.as_str())).unwrap();
        return Err(ComplexError::DuplicateLabel(dup.as_str().into()).into());
    }
    let mut parsed: Vec<(usize, CellId, RawCell)> = Vec::with_capacity(cells.len());
    for c in cells {
        parsed.push((c.vertices.len(), parse_id(&c.id)?, c));
    }
    parsed.sort_by_key(|&(n, id, _)| (n, id));

    let mut cx = Complex::new();
    let mut explicit: BTreeSet<&str> = BTreeSet::new();
    for (n, id, c) in &parsed {
        if *n == 0 {
            return Err(ComplexError::UnsortedVertices.into());
        }
        if *n == 1 {
            let label = c.vertices[0].as_str();
            if !known.contains(label) {
                return Err(ComplexError::UnknownVertex(label.into()).into());
            }
            if c.facets.as_ref().is_some_and(|f| !f.is_empty()) {
                return Err(ComplexError::FacetCountMismatch {
                    expected: 0,
                    found: c.facets.as_ref().unwrap().len(),
                }
                .into());
            }
            cx.attach_cell_with_id(*id, vec![label.into()], Vec::new())?;
            explicit.insert(label);
        }
    }
    let mut next = parsed.iter().map(|(_, id, _)| id.get() + 1).max().unwrap_or(0);
    for label in &known {
        if !explicit.contains(label) {
            cx.attach_cell_with_id(CellId::new(next), vec![(*label).into()], Vec::new())?;
            next += 1;
        }
    }
    for (_, id, c) in parsed.iter().filter(|(n, _, _)| *n > 1) {
        let mut verts: Vec<VertexLabel> = c.vertices.iter().map(|s| s.as_str().into()).collect();
        let facets = match &c.facets {
            Some(f) => f.iter().map(|s| parse_id(s)).collect::<Result<Vec<_>, _>>()?,
            None => {
                verts.sort();
                (0..verts.len())
                    .map(|i| {
                        let mut sub = verts.clone();
                        sub.remove(i);
                        match cx.cells_with_vertices(&sub).as_slice() {
                            [only] => Ok(*only),
                            _ => Err(DocumentError::UnresolvedFacet {
                                cell: id.to_string(),
                                vertices: sub.iter().map(|v| v.as_str().to_owned()).collect(),
                            }
                            .into()),
                        }
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            }
        };
        cx.attach_cell_with_id(*id, verts, facets)?;
    }
    Ok(cx)
}

/// Resolves an id string or an array of vertex labels to a cell of `cx`.
pub fn resolve_cell_ref(cx: &Complex, v: &Value) -> Result<CellId, Error> {
    match v {
        Value::String(s) => {
            let id = parse_id(s)?;
            if cx.contains(id) {
                Ok(id)
            } else {
                Err(DocumentError::UnknownCellRef(s.clone()).into())
            }
        }
        Value::Array(items) => {
            let mut verts = Vec::with_capacity(items.len());
            for item in items {
                let s = item
                    .as_str()
                    .ok_or_else(|| malformed("vertex labels must be strings"))?;
                verts.push(VertexLabel::from(s));
            }
            verts.sort();
            by_vertices(cx, &verts, &v.to_string())
        }
        _ => Err(malformed(format!("`{v}` is not a cell reference"))),
    }
}

fn by_vertices(cx: &Complex, verts: &[VertexLabel], shown: &str) -> Result<CellId, Error> {
    match cx.cells_with_vertices(verts).as_slice() {
        [only] => Ok(*only),
        [] => Err(DocumentError::UnknownCellRef(shown.to_owned()).into()),
        _ => Err(DocumentError::AmbiguousCellRef(shown.to_owned()).into()),
    }
}

/// Command-line form of a cell reference: a decimal id, or comma-separated
/// vertex labels.
pub fn parse_cell_arg(cx: &Complex, arg: &str) -> Result<CellId, Error> {
    if !arg.is_empty() && arg.bytes().all(|b| b.is_ascii_digit()) {
        return resolve_cell_ref(cx, &Value::String(arg.to_owned()));
    }
    let mut verts: Vec<VertexLabel> = arg.split(',').map(|s| s.trim().into()).collect();
    verts.sort();
    by_vertices(cx, &verts, arg)
}

/// Cells of `cx` matching the cells of the target document: same id and
/// vertices if such a cell exists, otherwise the unique cell on the vertex set.
pub fn target_cells(cx: &Complex, target: &Complex) -> Result<BTreeSet<CellId>, Error> {
    target
        .cells()
        .map(|(id, c)| match cx.cell(id) {
            Some(own) if own.vertices() == c.vertices() => Ok(id),
            _ => by_vertices(cx, c.vertices(), &format!("{:?}", labels(c.vertices()))),
        })
        .collect()
}

// ---- strata ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStrata {
    #[allow(dead_code)]
    format_version: u64,
    divisors: Vec<String>,
    strata: Vec<RawStratum>,
    parents: Option<Vec<RawParent>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    id: String,
    #[serde(rename = "J")]
    j: Vec<String>,
    #[serde(default)]
    tag: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParent {
    stratum: String,
    drop: String,
    parent: String,
}

/// Without a `parents` array, every parent is inferred from the index sets and
/// must be unique.
pub fn strata_from_value(v: &Value) -> Result<StrataDescriptor, Error> {
    let raw: RawStrata = typed(v)?;
    let mut d = StrataDescriptor {
        divisors: raw.divisors.into_iter().map(DivisorId).collect(),
        strata: raw
            .strata
            .into_iter()
            .map(|s| Stratum {
                id: StratumId(s.id),
                divisors: s.j.into_iter().map(DivisorId).collect(),
                tag: s.tag,
            })
            .collect(),
        parents: BTreeMap::new(),
    };
    match raw.parents {
        Some(ps) => {
            for p in ps {
                d.parents
                    .insert((StratumId(p.stratum), DivisorId(p.drop)), StratumId(p.parent));
            }
        }
        None => {
            d.infer_unique_parents();
        }
    }
    Ok(d)
}

pub fn strata_to_value(d: &StrataDescriptor) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "divisors": d.divisors.iter().map(|x| x.0.as_str()).collect::<Vec<_>>(),
        "strata": d.strata.iter().map(|s| json!({
            "id": s.id.0,
            "J": s.divisors.iter().map(|x| x.0.as_str()).collect::<Vec<_>>(),
            "tag": s.tag,
        })).collect::<Vec<_>>(),
        "parents": d.parents.iter().map(|((s, j), p)| json!({
            "stratum": s.0, "drop": j.0, "parent": p.0,
        })).collect::<Vec<_>>(),
    })
}

// ---- collapse sequences, instructions, actions ----

fn pairs_value(seq: &CollapseSequence) -> Value {
    seq.iter()
        .map(|p| json!([p.coface.to_string(), p.face.to_string()]))
        .collect()
}

pub fn sequence_to_value(seq: &CollapseSequence, verdict: Option<&str>) -> Value {
    let mut v = json!({ "format_version": FORMAT_VERSION, "pairs": pairs_value(seq) });
    if let Some(verdict) = verdict {
        v["verdict"] = json!(verdict);
    }
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSequence {
    #[allow(dead_code)]
    format_version: u64,
    pairs: Vec<(String, String)>,
    #[allow(dead_code)]
    verdict: Option<String>,
}

pub fn sequence_from_value(v: &Value) -> Result<CollapseSequence, Error> {
    let raw: RawSequence = typed(v)?;
    raw.pairs
        .iter()
        .map(|(a, b)| Ok(FreePair::new(parse_id(a)?, parse_id(b)?)))
        .collect()
}

/// A complex document carrying the sequence that produced it.
pub fn annotated_complex(cx: &Complex, seq: &CollapseSequence, verdict: Option<&str>) -> Value {
    let mut v = complex_to_value(cx);
    let mut note = json!({ "pairs": pairs_value(seq) });
    if let Some(verdict) = verdict {
        note["verdict"] = json!(verdict);
    }
    v["collapse"] = note;
    v
}

fn instruction_from(cx: &Complex, v: &Value) -> Result<MmpInstruction, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| malformed("instruction must be an object"))?;
    if let Some(k) = obj
        .keys()
        .find(|k| !["format_version", "v0", "contracted"].contains(&k.as_str()))
    {
        return Err(malformed(format!("unknown field `{k}` in instruction")));
    }
    let v0 = obj
        .get("v0")
        .and_then(Value::as_str)
        .ok_or_else(|| malformed("instruction needs a string `v0`"))?;
    let contracted = match obj.get("contracted") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|c| resolve_cell_ref(cx, c))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
        Some(_) => return Err(malformed("`contracted` must be an array")),
    };
    Ok(MmpInstruction::new(v0, contracted))
}

/// Either a single instruction `{v0, contracted}` or `{instructions: [...]}`.
pub fn instructions_from_value(cx: &Complex, v: &Value) -> Result<Vec<MmpInstruction>, Error> {
    check_version(v)?;
    match v.get("instructions") {
        Some(Value::Array(items)) => items.iter().map(|i| instruction_from(cx, i)).collect(),
        Some(_) => Err(malformed("`instructions` must be an array")),
        None => Ok(vec![instruction_from(cx, v)?]),
    }
}

pub fn instruction_to_value(instr: &MmpInstruction) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "v0": instr.v0.as_str(),
        "contracted": instr.contracted.iter().map(CellId::to_string).collect::<Vec<_>>(),
    })
}

fn string_map(v: &Value, what: &str) -> Result<BTreeMap<String, String>, Error> {
    serde_json::from_value(v.clone()).map_err(|e| malformed(format!("{what}: {e}")))
}

/// `{generators: [...], max_order?}`. A generator is a vertex map
/// `{"a": "b", ...}`, or `{"vertices": {...}, "cells": {...}}` to fix the
/// image of every cell explicitly.
pub fn action_from_value(cx: &Complex, v: &Value) -> Result<GroupAction, Error> {
    check_version(v)?;
    let obj = v.as_object().unwrap();
    if let Some(k) = obj
        .keys()
        .find(|k| !["format_version", "generators", "max_order"].contains(&k.as_str()))
    {
        return Err(malformed(format!("unknown field `{k}` in action")));
    }
    let max_order = match obj.get("max_order") {
        Some(m) => m.as_u64().ok_or_else(|| malformed("`max_order` must be an integer"))? as usize,
        None => DEFAULT_MAX_ORDER,
    };
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("action needs a `generators` array"))?;
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let explicit = g.get("vertices").is_some_and(Value::is_object);
        let auto = if explicit {
            let cells = string_map(g.get("cells").unwrap_or(&json!({})), "generator cells")?;
            if cells.is_empty() {
                let vm = string_map(&g["vertices"], "generator vertices")?;
                Automorphism::from_vertex_map(cx, vm.into_iter().map(|(a, b)| (a.into(), b.into())).collect())?
            } else {
                let mut map = BTreeMap::new();
                for (a, b) in cells {
                    map.insert(parse_id(&a)?, parse_id(&b)?);
                }
                Automorphism::from_cell_map(cx, map)?
            }
        } else {
            let vm = string_map(g, "generator")?;
            Automorphism::from_vertex_map(cx, vm.into_iter().map(|(a, b)| (a.into(), b.into())).collect())?
        };
        out.push(auto);
    }
    Ok(GroupAction::generate(cx, out, max_order)?)
}

// ---- cone attachment ----

/// Parsed `blowup --cone` input.
pub struct AttachmentSpec {
    pub center: CellId,
    pub link: Complex,
    pub tau: VertexMap,
    pub apex: VertexLabel,
}

/// `{center, link, tau, tau_cells?, apex?}`; `link` is an embedded complex
/// document, `tau` maps its vertices into `cx`, `tau_cells` names the image of
/// `center * l` for cells `l` of the link where that is ambiguous.
pub fn attachment_from_value(cx: &Complex, v: &Value) -> Result<AttachmentSpec, Error> {
    check_version(v)?;
    let obj = v.as_object().unwrap();
    let allowed = ["format_version", "center", "link", "tau", "tau_cells", "apex"];
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(malformed(format!("unknown field `{k}` in attachment")));
    }
    let center = resolve_cell_ref(
        cx,
        obj.get("center")
            .ok_or_else(|| malformed("attachment needs `center`"))?,
    )?;
    let link = match obj.get("link") {
        Some(l) => complex_from_value(l)?,
        None => Complex::new(),
    };
    let tau_v = string_map(obj.get("tau").unwrap_or(&json!({})), "tau")?;
    let mut tau = VertexMap::new(tau_v);
    if let Some(tc) = obj.get("tau_cells") {
        let tc = tc
            .as_object()
            .ok_or_else(|| malformed("`tau_cells` must be an object"))?;
        for (l, image) in tc {
            let lid = parse_id(l)?;
            if !link.contains(lid) {
                return Err(DocumentError::UnknownCellRef(l.clone()).into());
            }
            tau = tau.with_cell(lid, resolve_cell_ref(cx, image)?);
        }
    }
    let apex = obj.get("apex").and_then(Value::as_str).unwrap_or("e0").into();
    Ok(AttachmentSpec {
        center,
        link,
        tau,
        apex,
    })
}

pub fn record_to_value(rec: &AttachmentRecord) -> Value {
    let cone: Map<String, Value> = rec
        .cone_cells
        .iter()
        .map(|(y, c)| (y.to_string(), json!(c.to_string())))
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "apex": rec.apex.as_str(),
        "apex_cell": rec.apex_cell.to_string(),
        "center": rec.center.to_string(),
        "designated": rec.designated.as_str(),
        "cone_cells": cone,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    #[allow(dead_code)]
    format_version: u64,
    apex: String,
    apex_cell: String,
    center: String,
    designated: String,
    cone_cells: BTreeMap<String, String>,
}

pub fn record_from_value(v: &Value) -> Result<AttachmentRecord, Error> {
    let raw: RawRecord = typed(v)?;
    let mut cone_cells = BTreeMap::new();
    for (a, b) in &raw.cone_cells {
        cone_cells.insert(parse_id(a)?, parse_id(b)?);
    }
    Ok(AttachmentRecord {
        apex: raw.apex.into(),
        apex_cell: parse_id(&raw.apex_cell)?,
        center: parse_id(&raw.center)?,
        designated: raw.designated.into(),
        cone_cells,
    })
}

// ---- reports ----

pub fn homology_z_to_value(cx: &Complex, h: &HomologyResult) -> Value {
    let torsion: Vec<Vec<Value>> = h
        .degrees
        .iter()
        .map(|d| {
            d.torsion
                .iter()
                .map(|t| match u64::try_from(t) {
                    Ok(n) => json!(n),
                    Err(_) => json!(t.to_string()),
                })
                .collect()
        })
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "over": "z",
        "reduced": h.reduced,
        "betti": h.betti(),
        "torsion": torsion,
        "euler_characteristic": cx.euler_characteristic(),
    })
}

pub fn homology_q_to_value(cx: &Complex, betti: &[usize], reduced: bool, q_acyclic: bool) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "over": "q",
        "reduced": reduced,
        "betti": betti,
        "q_acyclic": q_acyclic,
        "euler_characteristic": cx.euler_characteristic(),
    })
}

pub fn verify_report(cx: &Complex) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "valid": true,
        "dim": cx.dim(),
        "f_vector": cx.f_vector(),
        "euler_characteristic": cx.euler_characteristic(),
        "simplicial": cx.is_simplicial(),
        "components": cx.connected_components().len(),
    })
}

pub fn verify_failure(err: &Error) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "valid": false,
        "error": err.name(),
        "message": err.to_string(),
    })
}

pub fn iso_to_value(bij: Option<&VertexBijection>) -> Value {
    match bij {
        Some(b) => json!({
            "format_version": FORMAT_VERSION,
            "isomorphic": true,
            "bijection": b.iter().map(|(k, v)| (k.as_str().to_owned(), json!(v.as_str()))).collect::<Map<_, _>>(),
        }),
        None => json!({ "format_version": FORMAT_VERSION, "isomorphic": false }),
    }
}

pub fn error_to_value(err: &Error) -> Value {
    json!({ "error": err.name(), "message": err.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{catalog, dual_complex, fig3_descriptor, CATALOG_NAMES};

    fn doc(v: Value) -> String {
        v.to_string()
    }

    #[test]
    fn canonical_round_trip() {
        for name in CATALOG_NAMES {
            let name = name.replace("(n)", "(3)");
            let cx = catalog(&name).unwrap();
            let text = complex_to_string(&cx);
            let back = complex_from_str(&text).unwrap();
            assert_eq!(back, cx, "{name}");
            assert_eq!(complex_to_string(&back), text, "{name}");
        }
    }

    #[test]
    fn canonical_layout() {
        let cx = Complex::from_maximal_simplices([["a", "b"]]);
        let text = complex_to_string(&cx);
        assert!(text.ends_with("}\n"));
        assert!(text.starts_with("{\n  \"cells\": ["));
        let order: Vec<usize> = ["\n  \"cells\"", "\n  \"format_version\"", "\n  \"vertices\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn elided_vertices_and_facets() {
        let text = doc(json!({
            "format_version": 1,
            "vertices": ["v1", "v2"],
            "cells": [
                {"id": "0", "vertices": ["v1", "v2"], "facets": ["11", "10"]},
                {"id": "1", "vertices": ["v1", "v2"], "facets": ["11", "10"]},
                {"id": "10", "vertices": ["v1"]},
            ],
        }));
        let cx = complex_from_str(&text).unwrap();
        assert_eq!(cx.f_vector(), vec![2, 2]);
        assert_eq!(cx.vertex_cell(&"v2".into()), Some(CellId::new(11)));

        // two parallel edges make the facet of a triangle ambiguous
        let text = doc(json!({
            "format_version": 1,
            "vertices": ["a", "b"],
            "cells": [
                {"id": "5", "vertices": ["a", "b"]},
                {"id": "6", "vertices": ["a", "b"]},
            ],
        }));
        assert_eq!(complex_from_str(&text).unwrap().f_vector(), vec![2, 2]);
        let text = doc(json!({
            "format_version": 1,
            "vertices": ["a", "b", "c"],
            "cells": [
                {"id": "5", "vertices": ["a", "b"]},
                {"id": "6", "vertices": ["a", "b"]},
                {"id": "7", "vertices": ["a", "c"]},
                {"id": "8", "vertices": ["b", "c"]},
                {"id": "9", "vertices": ["a", "b", "c"]},
            ],
        }));
        let err = complex_from_str(&text).unwrap_err();
        assert_eq!(err.name(), "UnresolvedFacet");
    }

    #[test]
    fn shorthand_and_rejections() {
        let text = doc(json!({"format_version": 1, "maximal_simplices": [["b", "a", "c"]], "vertices": ["z"]}));
        let cx = complex_from_str(&text).unwrap();
        assert_eq!(cx.f_vector(), vec![4, 3, 1]);

        let err = complex_from_str(&doc(json!({"format_version": 2, "vertices": []}))).unwrap_err();
        assert_eq!(err.name(), "UnsupportedVersion");
        let err = complex_from_str(&doc(json!({"vertices": []}))).unwrap_err();
        assert_eq!(err.name(), "MalformedDocument");
        let err = complex_from_str(&doc(json!({"format_version": 1, "vertex": []}))).unwrap_err();
        assert_eq!(err.name(), "MalformedDocument");
        let err = complex_from_str("{").unwrap_err();
        assert_eq!(err.name(), "MalformedDocument");

        let bad_facet = doc(json!({
            "format_version": 1,
            "vertices": ["a", "b"],
            "cells": [
                {"id": "0", "vertices": ["a"]},
                {"id": "1", "vertices": ["b"]},
                {"id": "2", "vertices": ["a", "b"], "facets": ["0", "1"]},
            ],
        }));
        assert_eq!(complex_from_str(&bad_facet).unwrap_err().name(), "FacetMismatch");
        let unknown = doc(json!({
            "format_version": 1,
            "vertices": ["a"],
            "cells": [{"id": "0", "vertices": ["a", "q"]}],
        }));
        assert!(complex_from_str(&unknown).is_err());
        let dup = doc(json!({"format_version": 1, "vertices": ["a", "a"]}));
        assert_eq!(complex_from_str(&dup).unwrap_err().name(), "DuplicateLabel");
    }

    #[test]
    fn cell_references() {
        let cx = catalog("fig2_left").unwrap();
        let e = cx.cells_with_vertices(&["A1".into(), "A2".into()])[0];
        assert_eq!(parse_cell_arg(&cx, "A2,A1").unwrap(), e);
        assert_eq!(parse_cell_arg(&cx, &e.to_string()).unwrap(), e);
        assert_eq!(resolve_cell_ref(&cx, &json!(["A1", "A2"])).unwrap(), e);
        assert_eq!(parse_cell_arg(&cx, "999").unwrap_err().name(), "UnknownCell");
        let circle = catalog("two_edge_circle").unwrap();
        assert_eq!(parse_cell_arg(&circle, "v1,v2").unwrap_err().name(), "AmbiguousCellRef");
    }

    #[test]
    fn strata_round_trip() {
        let d = fig3_descriptor();
        let v = strata_to_value(&d);
        let back = strata_from_value(&v).unwrap();
        assert_eq!(back.parents, d.parents);
        assert_eq!(dual_complex(&back).unwrap(), dual_complex(&d).unwrap());
        // parents may be left out when they are forced
        let mut v2 = v.clone();
        v2.as_object_mut().unwrap().remove("parents");
        assert_eq!(strata_from_value(&v2).unwrap().parents, d.parents);
    }

    #[test]
    fn sequences_and_records() {
        let seq: CollapseSequence = vec![FreePair::new(CellId::new(6), CellId::new(3))].into();
        let v = sequence_to_value(&seq, Some("Collapsible"));
        assert_eq!(sequence_from_value(&v).unwrap(), seq);
        assert_eq!(v["pairs"], json!([["6", "3"]]));

        let rec = AttachmentRecord {
            apex: "e0".into(),
            apex_cell: CellId::new(9),
            center: CellId::new(2),
            designated: "a".into(),
            cone_cells: [(CellId::new(0), CellId::new(10))].into(),
        };
        assert_eq!(record_from_value(&record_to_value(&rec)).unwrap(), rec);
    }

    #[test]
    fn instruction_documents() {
        let cx = catalog("fig2_left").unwrap();
        let one = json!({"format_version": 1, "v0": "B1", "contracted": [["A1", "A2"]]});
        let instrs = instructions_from_value(&cx, &one).unwrap();
        assert_eq!(instrs.len(), 1);
        let again = instructions_from_value(&cx, &instruction_to_value(&instrs[0])).unwrap();
        assert_eq!(again, instrs);
        let many = json!({"format_version": 1, "instructions": [
            {"v0": "B1", "contracted": []}, {"v0": "A1", "contracted": []}
        ]});
        assert_eq!(instructions_from_value(&cx, &many).unwrap().len(), 2);
    }

    #[test]
    fn action_documents() {
        let cx = catalog("fig2_left").unwrap();
        let v = json!({"format_version": 1, "generators": [{"A1": "A2", "A2": "A1", "B1": "B1"}]});
        assert_eq!(action_from_value(&cx, &v).unwrap().order(), 2);
        let explicit = json!({"format_version": 1, "generators": [{"vertices": {"A1": "A2", "A2": "A1", "B1": "B1"}}]});
        assert_eq!(action_from_value(&cx, &explicit).unwrap().order(), 2);
        let bad = json!({"format_version": 1, "generators": [{"A1": "B1", "B1": "A1"}]});
        assert_eq!(action_from_value(&cx, &bad).unwrap_err().name(), "NotAnAutomorphism");
    }
}
