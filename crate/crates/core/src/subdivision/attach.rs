//! Gluing a cone over `closure(c) * L` onto a complex, and collapsing it back.
//!
//! `L` is an abstract complex mapped into the complex by a vertex map `tau`.
//! A join cell `s * l` (with `s` a face of `c`) is identified with the cell of
//! the closed star of `c` spanned by `s` and `tau(l)`. The image of the join is
//! then a subcomplex `S`, and the attachment adds an apex `e0` and one cell
//! `e0 * y` for every `y` in `S`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use super::{union, SubdivisionError};
use crate::collapse::{CollapseError, CollapseSequence, FreePair};
use crate::complex::{CellId, Complex, VertexLabel};

/// A map from the vertices of `L` to vertices of the target complex. Where
/// parallel cells make the image of `c * l` ambiguous, `cells` names it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    pub vertices: BTreeMap<VertexLabel, VertexLabel>,
    pub cells: BTreeMap<CellId, CellId>,
}

impl VertexMap {
    pub fn new<A: Into<VertexLabel>, B: Into<VertexLabel>>(pairs: impl IntoIterator<Item = (A, B)>) -> Self {
        VertexMap {
            vertices: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
            cells: BTreeMap::new(),
        }
    }

    /// Names the target cell for `c * l`.
    pub fn with_cell(mut self, l: CellId, image: CellId) -> Self {
        self.cells.insert(l, image);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentRecord {
    pub apex: VertexLabel,
    pub apex_cell: CellId,
    pub center: CellId,
    /// Smallest vertex of the center; the coned join is a cone from it.
    pub designated: VertexLabel,
    /// Cell `y` of the image of the join to the glued cell `e0 * y`.
    pub cone_cells: BTreeMap<CellId, CellId>,
}

/// Image in `cx` of every cell of `l`, as the cell spanned with `c`.
fn resolve_images(
    cx: &Complex,
    c: CellId,
    l: &Complex,
    tau: &VertexMap,
) -> Result<BTreeMap<CellId, CellId>, SubdivisionError> {
    let center = cx.cell(c).unwrap();
    let mut spans: BTreeMap<CellId, CellId> = BTreeMap::new();
    for id in l.cells_by_dim() {
        let cell = l.cell(id).unwrap();
        let mut image = Vec::with_capacity(cell.vertices().len());
        for v in cell.vertices() {
            let t = tau.vertices.get(v).ok_or(SubdivisionError::UnresolvedImageCell(id))?;
            if !cx.has_vertex(t) {
                return Err(SubdivisionError::UnresolvedImageCell(id));
            }
            image.push(t.clone());
        }
        let distinct: BTreeSet<&VertexLabel> = image.iter().collect();
        if distinct.len() != image.len() || image.iter().any(|t| center.has_vertex(t)) {
            return Err(SubdivisionError::NonInjectiveOnCell(id));
        }
        let span = union(center.vertices(), &image);
        let candidates: Vec<CellId> = cx
            .cells_with_vertices(&span)
            .into_iter()
            .filter(|&u| cx.is_face_of(c, u))
            .collect();
        let u = match tau.cells.get(&id) {
            Some(u) if candidates.contains(u) => *u,
            Some(_) => return Err(SubdivisionError::UnresolvedImageCell(id)),
            None if candidates.len() == 1 => candidates[0],
            None => return Err(SubdivisionError::UnresolvedImageCell(id)),
        };
        // the spans of the facets of l must be the corresponding faces of u
        for f in cell.facets() {
            let fv = cx.cell(spans[f]).unwrap().vertices().to_vec();
            if cx.face_with_vertices(u, &fv) != Some(spans[f]) {
                return Err(SubdivisionError::UnresolvedImageCell(id));
            }
        }
        spans.insert(id, u);
    }
    Ok(spans)
}

/// Glues the cone with apex `apex` over the image of `closure(c) * l` onto
/// `cx`. The image must be a faithful copy of the join: `tau` is injective on
/// each cell of `l`, avoids the vertices of `c`, and distinct join cells land
/// on distinct cells.
pub fn attach_cone_over_join(
    cx: &Complex,
    c: CellId,
    l: &Complex,
    tau: &VertexMap,
    apex: impl Into<VertexLabel>,
) -> Result<(Complex, AttachmentRecord), SubdivisionError> {
    let apex = apex.into();
    let center = cx.cell(c).ok_or(SubdivisionError::UnknownCell(c))?;
    if let Some(v) = l.vertex_labels().find(|v| cx.has_vertex(v)) {
        return Err(SubdivisionError::LabelClash(v.clone()));
    }
    if cx.has_vertex(&apex) || l.has_vertex(&apex) {
        return Err(SubdivisionError::LabelClash(apex));
    }
    let spans = resolve_images(cx, c, l, tau)?;

    // image of the join, remembering which join cell produced each image cell
    let mut image: BTreeMap<CellId, Option<CellId>> = BTreeMap::new();
    for f in cx.closure(&BTreeSet::from([c]))? {
        image.insert(f, None);
    }
    for (&lid, &u) in &spans {
        let lv = l.cell(lid).unwrap().vertices();
        let tl: Vec<VertexLabel> = lv.iter().map(|v| tau.vertices[v].clone()).collect();
        for s in cx.closure(&BTreeSet::from([c]))?.into_iter().map(Some).chain([None]) {
            let sv = s.map_or(Vec::new(), |s| cx.cell(s).unwrap().vertices().to_vec());
            let y = cx
                .face_with_vertices(u, &union(&sv, &tl))
                .expect("face of a simplex cell");
            if image.insert(y, Some(lid)).is_some() {
                return Err(SubdivisionError::NonInjectiveOnCell(lid));
            }
        }
    }

    let mut out = cx.clone();
    let apex_cell = out.add_vertex(apex.clone())?;
    let mut order: Vec<CellId> = image.keys().copied().collect();
    order.sort_by_key(|&y| (cx.cell(y).unwrap().dim(), y));
    let mut cone_cells: BTreeMap<CellId, CellId> = BTreeMap::new();
    for y in order {
        let cy = cx.cell(y).unwrap();
        let vertices = union(cy.vertices(), std::slice::from_ref(&apex));
        let facets = vertices
            .iter()
            .map(|x| match cy.facet_omitting(x) {
                _ if *x == apex => y,
                Some(f) => cone_cells[&f],
                None => apex_cell,
            })
            .collect();
        cone_cells.insert(y, out.attach_cell(vertices, facets)?);
    }
    let record = AttachmentRecord {
        apex,
        apex_cell,
        center: c,
        designated: center.vertices()[0].clone(),
        cone_cells,
    };
    Ok((out, record))
}

/// The pairing schedule `(e0*a*s, e0*s)` over image cells `s` not containing
/// the designated vertex `a`, by decreasing dimension of `s`, then
/// `(e0*a, e0)`.
fn schedule(cx: &Complex, rec: &AttachmentRecord) -> Result<Vec<FreePair>, CollapseError> {
    let a = &rec.designated;
    let mut pairs: Vec<(usize, CellId, FreePair)> = Vec::new();
    for (&y, &cone_y) in &rec.cone_cells {
        let Some(cy) = cx.cell(y) else {
            return Err(CollapseError::NotASubcomplex(y));
        };
        if cy.has_vertex(a) {
            continue;
        }
        let with_a = union(cy.vertices(), std::slice::from_ref(a));
        let up = cx
            .cofaces(y)
            .find(|u| rec.cone_cells.contains_key(u) && cx.cell(*u).unwrap().vertices() == with_a.as_slice())
            .ok_or(CollapseError::NotASubcomplex(y))?;
        pairs.push((cy.dim(), y, FreePair::new(rec.cone_cells[&up], cone_y)));
    }
    pairs.sort_by_key(|&(d, y, _)| (Reverse(d), y));
    let a_cell = cx
        .vertex_cell(a)
        .ok_or_else(|| CollapseError::UnknownVertex(a.clone()))?;
    let last = rec
        .cone_cells
        .get(&a_cell)
        .ok_or(CollapseError::NotASubcomplex(a_cell))?;
    let mut out: Vec<FreePair> = pairs.into_iter().map(|(_, _, p)| p).collect();
    out.push(FreePair::new(*last, rec.apex_cell));
    Ok(out)
}

/// Removes every glued cell by the explicit schedule, checking each pair is
/// free at its turn.
pub fn collapse_coned_join(
    cx: &Complex,
    rec: &AttachmentRecord,
) -> Result<(Complex, CollapseSequence), SubdivisionError> {
    let pairs = schedule(cx, rec)?;
    let seq: CollapseSequence = pairs.into();
    let out = crate::collapse::replay(cx, &seq)?;
    Ok((out, seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog;

    fn cell(cx: &Complex, verts: &[&str]) -> CellId {
        let v: Vec<VertexLabel> = verts.iter().map(|&s| s.into()).collect();
        cx.cells_with_vertices(&v)[0]
    }

    #[test]
    fn empty_l_adds_one_edge() {
        let cx = Complex::from_maximal_simplices([["v", "w"]]);
        let v = cell(&cx, &["v"]);
        let (big, rec) = attach_cone_over_join(&cx, v, &Complex::new(), &VertexMap::default(), "e0").unwrap();
        assert_eq!(big.f_vector(), vec![3, 2]);
        assert!(!big.cells_with_vertices(&["e0".into(), "v".into()]).is_empty());
        let (back, seq) = collapse_coned_join(&big, &rec).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(back, cx);
    }

    #[test]
    fn edge_join_point() {
        let cx = Complex::from_maximal_simplices([["a", "v", "w"]]);
        let c = cell(&cx, &["a", "v"]);
        let l = Complex::from_maximal_simplices([["z"]]);
        let (big, rec) = attach_cone_over_join(&cx, c, &l, &VertexMap::new([("z", "w")]), "e0").unwrap();
        // the whole triangle is the image; its cone is a tetrahedron
        assert_eq!(big.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(rec.designated, VertexLabel::from("a"));
        assert_eq!(rec.cone_cells.len(), 7);
        let (back, seq) = collapse_coned_join(&big, &rec).unwrap();
        assert_eq!(seq.len(), 4);
        assert_eq!(back, cx);
    }

    #[test]
    fn attachment_errors() {
        let cx = Complex::from_maximal_simplices([["a", "v", "w"], ["a", "v", "x"]]);
        let c = cell(&cx, &["a", "v"]);
        let seg = Complex::from_maximal_simplices([["y", "z"]]);
        let err = attach_cone_over_join(&cx, c, &seg, &VertexMap::new([("y", "w"), ("z", "w")]), "e0");
        assert!(matches!(err, Err(SubdivisionError::NonInjectiveOnCell(_))));
        // w and x are not joined by an edge, so there is no cell spanned by a, v, w, x
        let err = attach_cone_over_join(&cx, c, &seg, &VertexMap::new([("y", "w"), ("z", "x")]), "e0");
        assert!(matches!(err, Err(SubdivisionError::UnresolvedImageCell(_))));
        let pt = Complex::from_maximal_simplices([["w"]]);
        assert_eq!(
            attach_cone_over_join(&cx, c, &pt, &VertexMap::new([("w", "x")]), "e0").unwrap_err(),
            SubdivisionError::LabelClash("w".into())
        );
        let pt = Complex::from_maximal_simplices([["z"]]);
        assert_eq!(
            attach_cone_over_join(&cx, c, &pt, &VertexMap::new([("z", "x")]), "a").unwrap_err(),
            SubdivisionError::LabelClash("a".into())
        );
        // two points of L landing on the same vertex give the same image cell
        let two = Complex::from_maximal_simplices([["y"], ["z"]]);
        let err = attach_cone_over_join(&cx, c, &two, &VertexMap::new([("y", "w"), ("z", "w")]), "e0");
        assert!(matches!(err, Err(SubdivisionError::NonInjectiveOnCell(_))));
    }

    #[test]
    fn parallel_image_needs_a_name() {
        let mut cx = catalog("two_edge_circle").unwrap();
        let v1 = cx.vertex_cell(&"v1".into()).unwrap();
        let edges: Vec<CellId> = cx.cells_of_dim(1).collect();
        let pt = Complex::from_maximal_simplices([["z"]]);
        let z = pt.vertex_cell(&"z".into()).unwrap();
        let tau = VertexMap::new([("z", "v2")]);
        assert_eq!(
            attach_cone_over_join(&cx, v1, &pt, &tau, "e0").unwrap_err(),
            SubdivisionError::UnresolvedImageCell(z)
        );
        let (big, rec) = attach_cone_over_join(&cx, v1, &pt, &tau.with_cell(z, edges[1]), "e0").unwrap();
        assert!(rec.cone_cells.contains_key(&edges[1]));
        assert!(!rec.cone_cells.contains_key(&edges[0]));
        let (back, _) = collapse_coned_join(&big, &rec).unwrap();
        assert_eq!(back, cx);
        cx.add_vertex("e0").unwrap();
        assert!(attach_cone_over_join(&cx, v1, &pt, &VertexMap::new([("z", "v2")]), "e0").is_err());
    }

    #[test]
    fn tampered_complex_fails_at_a_step() {
        let cx = Complex::from_maximal_simplices([["a", "v", "w"]]);
        let c = cell(&cx, &["a", "v"]);
        let l = Complex::from_maximal_simplices([["z"]]);
        let (mut big, rec) = attach_cone_over_join(&cx, c, &l, &VertexMap::new([("z", "w")]), "e0").unwrap();
        // glue an extra triangle onto e0 * v so that pair is no longer free
        let e0v = rec.cone_cells[&cell(&cx, &["v"])];
        let q = big.add_vertex("q").unwrap();
        let e0 = rec.apex_cell;
        let e0q = big.attach_cell(vec!["e0".into(), "q".into()], vec![q, e0]).unwrap();
        let qv = big
            .attach_cell(vec!["q".into(), "v".into()], vec![cell(&cx, &["v"]), q])
            .unwrap();
        big.attach_cell(vec!["e0".into(), "q".into(), "v".into()], vec![qv, e0v, e0q])
            .unwrap();
        assert!(matches!(
            collapse_coned_join(&big, &rec),
            Err(SubdivisionError::Collapse(CollapseError::NotFreeAtStep { .. }))
        ));
    }
}
