//! Stellar and barycentric subdivision, and the blow-up moves built on them.
//!
//! Stellar subdivision at a cell `c` puts a new vertex `p` in the interior of
//! `c`: every cell `u` having `c` as a face is removed, and for each face `w`
//! of such a `u` that does not contain `c` but together with `c` spans `u`, a
//! cell `<p, w>` is added. In a simplicial complex `u` is determined by `w`;
//! in a simplicial poset two parallel cells may share `w`, and then each gets
//! its own cone cell.

mod attach;

pub use attach::{attach_cone_over_join, collapse_coned_join, AttachmentRecord, VertexMap};

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::collapse::CollapseError;
use crate::complex::{CellId, Complex, ComplexError, VertexLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("unknown cell {0}")]
    UnknownCell(CellId),
    #[error("vertex label `{0}` is already present")]
    LabelClash(VertexLabel),
    #[error("cannot subdivide at the vertex cell {0}")]
    DimZeroCenter(CellId),
    #[error("vertex map is not injective on cell {0}")]
    NonInjectiveOnCell(CellId),
    #[error("image of cell {0} does not resolve to a unique cell")]
    UnresolvedImageCell(CellId),
    #[error(transparent)]
    Collapse(#[from] CollapseError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl SubdivisionError {
    pub fn name(&self) -> &'static str {
        match self {
            SubdivisionError::UnknownCell(_) => "UnknownCell",
            SubdivisionError::LabelClash(_) => "LabelClash",
            SubdivisionError::DimZeroCenter(_) => "DimZeroCenter",
            SubdivisionError::NonInjectiveOnCell(_) => "NonInjectiveOnCell",
            SubdivisionError::UnresolvedImageCell(_) => "UnresolvedImageCell",
            SubdivisionError::Collapse(e) => e.name(),
            SubdivisionError::Complex(e) => e.name(),
        }
    }
}

fn union(a: &[VertexLabel], b: &[VertexLabel]) -> Vec<VertexLabel> {
    let set: BTreeSet<&VertexLabel> = a.iter().chain(b).collect();
    set.into_iter().cloned().collect()
}

/// Stellar subdivision of `cx` at `c` with new vertex `p`. Cells outside the
/// open star of `c` keep their ids; new cells get fresh ids in order of
/// (dimension of `w`, id of `w`, id of `u`).
pub fn stellar_subdivide(cx: &Complex, c: CellId, p: impl Into<VertexLabel>) -> Result<Complex, SubdivisionError> {
    let p = p.into();
    let center = cx.cell(c).ok_or(SubdivisionError::UnknownCell(c))?;
    if center.dim() == 0 {
        return Err(SubdivisionError::DimZeroCenter(c));
    }
    if cx.has_vertex(&p) {
        return Err(SubdivisionError::LabelClash(p));
    }
    let star = cx.star(c)?;

    // (w, u) with u in the star, w a face of u off c, and c, w spanning u
    let mut pieces: Vec<(usize, CellId, CellId)> = Vec::new();
    for &u in &star {
        for w in cx.closure(&BTreeSet::from([u]))? {
            if star.contains(&w) {
                continue;
            }
            let (cu, cw) = (cx.cell(u).unwrap(), cx.cell(w).unwrap());
            if union(center.vertices(), cw.vertices()) == cu.vertices() {
                pieces.push((cw.dim(), w, u));
            }
        }
    }
    pieces.sort();

    let mut out = cx.clone();
    let mut doomed: Vec<CellId> = star.iter().copied().collect();
    doomed.sort_by_key(|&id| (Reverse(cx.cell(id).unwrap().dim()), id));
    for id in doomed {
        out.remove_maximal(id)?;
    }
    let p_cell = out.add_vertex(p.clone())?;

    let mut made: BTreeMap<(CellId, CellId), CellId> = BTreeMap::new();
    for (_, w, u) in pieces {
        let cw = cx.cell(w).unwrap();
        let vertices = union(cw.vertices(), std::slice::from_ref(&p));
        let facets = vertices
            .iter()
            .map(|x| {
                if *x == p {
                    return w;
                }
                if cw.dim() == 0 {
                    return p_cell;
                }
                let w2 = cw.facet_omitting(x).unwrap();
                let span = union(center.vertices(), cx.cell(w2).unwrap().vertices());
                let u2 = cx.face_with_vertices(u, &span).expect("face of a simplex cell");
                made[&(w2, u2)]
            })
            .collect();
        let id = out.attach_cell(vertices, facets)?;
        made.insert((w, u), id);
    }
    Ok(out)
}

/// Alias of [`stellar_subdivide`]: blowing up a stratum subdivides its cell.
pub fn blowup_stratum(cx: &Complex, c: CellId, p: impl Into<VertexLabel>) -> Result<Complex, SubdivisionError> {
    stellar_subdivide(cx, c, p)
}

/// Blowing up a center that is not a stratum leaves the dual complex as it is.
pub fn blowup_trivial(cx: &Complex) -> Complex {
    cx.clone()
}

/// Label for the barycenter of `id`: `<a,b,c>` from its vertices, with `#id`
/// appended when parallel cells share the vertex set, and primes appended until
/// the label is fresh.
pub(crate) fn barycenter_label(cx: &Complex, id: CellId, taken: &BTreeSet<VertexLabel>) -> VertexLabel {
    let cell = cx.cell(id).unwrap();
    let names: Vec<&str> = cell.vertices().iter().map(VertexLabel::as_str).collect();
    let mut label = format!("<{}>", names.join(","));
    if cx.cells_with_vertices(cell.vertices()).len() > 1 {
        label = format!("{label}#{id}");
    }
    while taken.contains(&VertexLabel::new(label.as_str())) {
        label.push('\'');
    }
    VertexLabel::new(label)
}

/// Stellar subdivision at every cell of positive dimension, highest dimension
/// first and then by id. The result is simplicial.
pub fn barycentric_subdivide(cx: &Complex) -> Complex {
    let mut order: Vec<CellId> = cx.cells().filter(|(_, c)| c.dim() > 0).map(|(id, _)| id).collect();
    order.sort_by_key(|&id| (Reverse(cx.cell(id).unwrap().dim()), id));
    let mut taken: BTreeSet<VertexLabel> = cx.vertex_labels().cloned().collect();
    let mut out = cx.clone();
    for id in order {
        let label = barycenter_label(cx, id, &taken);
        taken.insert(label.clone());
        out = stellar_subdivide(&out, id, label).expect("original cells survive subdivision of higher cells");
    }
    out
}
