//! Isomorphism testing by backtracking. Exponential in the worst case and
//! intended for small complexes (tests, figure reproduction, group actions).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::{CellId, Complex, VertexLabel};

pub type VertexBijection = BTreeMap<VertexLabel, VertexLabel>;

/// Searches for a vertex bijection `a -> b` that extends to a cell bijection
/// commuting with facet maps.
pub fn is_isomorphic(a: &Complex, b: &Complex) -> Option<VertexBijection> {
    Matcher::new(a, b, None)?.run().map(|(v, _)| v)
}

/// Extends a fixed vertex bijection to a cell bijection, if possible.
pub fn extend_isomorphism(a: &Complex, b: &Complex, vertices: &VertexBijection) -> Option<BTreeMap<CellId, CellId>> {
    Matcher::new(a, b, Some(vertices))?.run().map(|(_, c)| c)
}

/// True when `a` and `b` have the same cells up to renumbering, with labels kept.
pub fn same_up_to_ids(a: &Complex, b: &Complex) -> bool {
    let ident: VertexBijection = a.vertex_labels().map(|v| (v.clone(), v.clone())).collect();
    extend_isomorphism(a, b, &ident).is_some()
}

struct Matcher<'a> {
    a: &'a Complex,
    b: &'a Complex,
    order: Vec<CellId>,
    signature_b: BTreeMap<VertexLabel, Vec<usize>>,
    signature_a: BTreeMap<VertexLabel, Vec<usize>>,
    fixed: Option<&'a VertexBijection>,
    cells: BTreeMap<CellId, CellId>,
    used: BTreeSet<CellId>,
    vmap: VertexBijection,
}

/// Star f-vector of a vertex.
fn vertex_signature(cx: &Complex, v: CellId) -> Vec<usize> {
    let mut sig = Vec::new();
    for c in cx.star(v).expect("vertex exists") {
        let d = cx.cell(c).unwrap().dim();
        if sig.len() <= d {
            sig.resize(d + 1, 0);
        }
        sig[d] += 1;
    }
    sig
}

impl<'a> Matcher<'a> {
    fn new(a: &'a Complex, b: &'a Complex, fixed: Option<&'a VertexBijection>) -> Option<Self> {
        if a.f_vector() != b.f_vector() {
            return None;
        }
        let sig = |cx: &Complex| -> BTreeMap<VertexLabel, Vec<usize>> {
            cx.vertex_labels()
                .map(|v| (v.clone(), vertex_signature(cx, cx.vertex_cell(v).unwrap())))
                .collect()
        };
        let signature_a = sig(a);
        let signature_b = sig(b);
        let mut ms_a: Vec<_> = signature_a.values().cloned().collect();
        let mut ms_b: Vec<_> = signature_b.values().cloned().collect();
        ms_a.sort();
        ms_b.sort();
        if ms_a != ms_b {
            return None;
        }
        Some(Matcher {
            a,
            b,
            order: Self::search_order(a),
            signature_a,
            signature_b,
            fixed,
            cells: BTreeMap::new(),
            used: BTreeSet::new(),
            vmap: BTreeMap::new(),
        })
    }

    /// Vertices in breadth-first order along edges; every other cell is placed
    /// right after its last facet, so mismatches surface early.
    fn search_order(a: &Complex) -> Vec<CellId> {
        let mut order = Vec::with_capacity(a.len());
        let mut placed: BTreeSet<CellId> = BTreeSet::new();
        let mut pending: Vec<CellId> = a
            .cells_by_dim()
            .into_iter()
            .filter(|&c| a.cell(c).unwrap().dim() > 0)
            .collect();
        let mut seen_vertex: BTreeSet<CellId> = BTreeSet::new();
        for start in a.cells_of_dim(0).collect::<Vec<_>>() {
            if !seen_vertex.insert(start) {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                placed.insert(v);
                loop {
                    let before = pending.len();
                    pending.retain(|&c| {
                        let ready = a.cell(c).unwrap().facets().iter().all(|f| placed.contains(f));
                        if ready {
                            order.push(c);
                            placed.insert(c);
                        }
                        !ready
                    });
                    if pending.len() == before {
                        break;
                    }
                }
                for e in a.cofaces(v) {
                    for &w in a.cell(e).unwrap().facets() {
                        if seen_vertex.insert(w) {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        order
    }

    fn run(mut self) -> Option<(VertexBijection, BTreeMap<CellId, CellId>)> {
        if self.search(0) {
            Some((self.vmap, self.cells))
        } else {
            None
        }
    }

    fn candidates(&self, ca: CellId) -> Vec<CellId> {
        let cell = self.a.cell(ca).unwrap();
        if cell.dim() == 0 {
            let v = &cell.vertices()[0];
            let targets: Vec<VertexLabel> = match self.fixed {
                Some(map) => map.get(v).cloned().into_iter().collect(),
                None => {
                    let sig = &self.signature_a[v];
                    self.signature_b
                        .iter()
                        .filter(|(_, s)| *s == sig)
                        .map(|(l, _)| l.clone())
                        .collect()
                }
            };
            return targets
                .iter()
                .filter_map(|t| self.b.vertex_cell(t))
                .filter(|c| !self.used.contains(c))
                .collect();
        }
        let mut image: Vec<VertexLabel> = cell.vertices().iter().map(|v| self.vmap[v].clone()).collect();
        image.sort();
        self.b
            .cells_with_vertices(&image)
            .into_iter()
            .filter(|cb| !self.used.contains(cb))
            .filter(|&cb| {
                let target = self.b.cell(cb).unwrap();
                cell.vertices()
                    .iter()
                    .zip(cell.facets())
                    .all(|(v, f)| target.facet_omitting(&self.vmap[v]) == Some(self.cells[f]))
            })
            .collect()
    }

    fn search(&mut self, idx: usize) -> bool {
        let Some(&ca) = self.order.get(idx) else {
            return true;
        };
        let cell = self.a.cell(ca).unwrap();
        let is_vertex = cell.dim() == 0;
        for cb in self.candidates(ca) {
            self.cells.insert(ca, cb);
            self.used.insert(cb);
            if is_vertex {
                let target = self.b.cell(cb).unwrap().vertices()[0].clone();
                self.vmap.insert(cell.vertices()[0].clone(), target);
            }
            if self.search(idx + 1) {
                return true;
            }
            self.cells.remove(&ca);
            self.used.remove(&cb);
            if is_vertex {
                self.vmap.remove(&cell.vertices()[0]);
            }
        }
        false
    }
}
