//! Collapses that commute with a finite group of automorphisms.
//!
//! Free pairs are removed a whole orbit at a time. An orbit step is only legal
//! when the pairs of the orbit are pairwise disjoint, so that performing them
//! simultaneously is the same as performing them in any order.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::mmp::{mmp_schedule, MmpInstruction};
use super::{collapse_in_place, free_pairs, is_free, CollapseError, CollapseSequence, FreePair};
use crate::complex::{CellId, Complex, VertexLabel};
use crate::isomorphism::extend_isomorphism;

pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// A cell bijection of a complex commuting with facet maps, with the vertex
/// permutation it induces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism {
    vertices: BTreeMap<VertexLabel, VertexLabel>,
    cells: BTreeMap<CellId, CellId>,
}

impl Automorphism {
    pub fn identity(cx: &Complex) -> Self {
        Automorphism {
            vertices: cx.vertex_labels().map(|v| (v.clone(), v.clone())).collect(),
            cells: cx.cells().map(|(id, _)| (id, id)).collect(),
        }
    }

    /// Extends a vertex permutation to cells. Where parallel cells make the
    /// extension non-unique, the first extension found is used; pass an explicit
    /// cell map to pick another.
    pub fn from_vertex_map(cx: &Complex, vertices: BTreeMap<VertexLabel, VertexLabel>) -> Result<Self, CollapseError> {
        let domain: BTreeSet<&VertexLabel> = vertices.keys().collect();
        let image: BTreeSet<&VertexLabel> = vertices.values().collect();
        let labels: BTreeSet<&VertexLabel> = cx.vertex_labels().collect();
        if domain != labels || image != labels {
            return Err(CollapseError::NotAnAutomorphism);
        }
        let cells = extend_isomorphism(cx, cx, &vertices).ok_or(CollapseError::NotAnAutomorphism)?;
        Ok(Automorphism { vertices, cells })
    }

    pub fn from_cell_map(cx: &Complex, cells: BTreeMap<CellId, CellId>) -> Result<Self, CollapseError> {
        let ids = cx.cell_ids();
        let domain: BTreeSet<CellId> = cells.keys().copied().collect();
        let image: BTreeSet<CellId> = cells.values().copied().collect();
        if domain != ids || image != ids {
            return Err(CollapseError::NotAnAutomorphism);
        }
        let mut vertices = BTreeMap::new();
        for (&a, &b) in &cells {
            let (ca, cb) = (cx.cell(a).unwrap(), cx.cell(b).unwrap());
            if ca.dim() != cb.dim() {
                return Err(CollapseError::NotAnAutomorphism);
            }
            if ca.dim() == 0 {
                vertices.insert(ca.vertices()[0].clone(), cb.vertices()[0].clone());
            }
        }
        for (&a, &b) in &cells {
            let (ca, cb) = (cx.cell(a).unwrap(), cx.cell(b).unwrap());
            for (v, f) in ca.vertices().iter().zip(ca.facets()) {
                if cb.facet_omitting(&vertices[v]) != Some(cells[f]) {
                    return Err(CollapseError::NotAnAutomorphism);
                }
            }
        }
        Ok(Automorphism { vertices, cells })
    }

    pub fn vertex(&self, v: &VertexLabel) -> Option<&VertexLabel> {
        self.vertices.get(v)
    }

    pub fn cell(&self, c: CellId) -> Option<CellId> {
        self.cells.get(&c).copied()
    }

    pub fn apply_pair(&self, p: FreePair) -> FreePair {
        FreePair::new(self.cells[&p.coface], self.cells[&p.face])
    }

    /// `self` after `other`.
    fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            vertices: other
                .vertices
                .iter()
                .map(|(k, v)| (k.clone(), self.vertices[v].clone()))
                .collect(),
            cells: other.cells.iter().map(|(&k, v)| (k, self.cells[v])).collect(),
        }
    }
}

/// A finite group of automorphisms given by generators, closed eagerly.
#[derive(Clone, Debug)]
pub struct GroupAction {
    generators: Vec<Automorphism>,
    elements: Vec<Automorphism>,
}

impl GroupAction {
    pub fn trivial(cx: &Complex) -> Self {
        GroupAction {
            generators: Vec::new(),
            elements: vec![Automorphism::identity(cx)],
        }
    }

    pub fn generate(cx: &Complex, generators: Vec<Automorphism>, max_order: usize) -> Result<Self, CollapseError> {
        let id = Automorphism::identity(cx);
        let mut seen: BTreeSet<Automorphism> = BTreeSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&e);
                if seen.insert(next.clone()) {
                    if seen.len() > max_order {
                        return Err(CollapseError::OrderCapExceeded(max_order));
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(GroupAction { generators, elements })
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Distinct images of `pair`, sorted.
    pub fn orbit(&self, pair: FreePair) -> Vec<FreePair> {
        let set: BTreeSet<FreePair> = self.elements.iter().map(|g| g.apply_pair(pair)).collect();
        set.into_iter().collect()
    }

    pub fn fixes_setwise(&self, cells: &BTreeSet<CellId>) -> bool {
        self.elements
            .iter()
            .all(|g| cells.iter().all(|&c| g.cell(c).is_some_and(|d| cells.contains(&d))))
    }

    fn maps_instruction(&self, g: &Automorphism, instr: &MmpInstruction) -> MmpInstruction {
        MmpInstruction {
            v0: g.vertex(&instr.v0).cloned().unwrap_or_else(|| instr.v0.clone()),
            contracted: instr.contracted.iter().map(|&c| g.cell(c).unwrap_or(c)).collect(),
        }
    }
}

fn first_overlap(orbit: &[FreePair]) -> Option<FreePair> {
    let mut used = BTreeSet::new();
    for p in orbit {
        if !used.insert(p.coface) || !used.insert(p.face) {
            return Some(*p);
        }
    }
    None
}

/// Collapses the whole orbit of `pair` at once.
pub fn orbit_step(
    cx: &Complex,
    action: &GroupAction,
    pair: FreePair,
) -> Result<(Complex, Vec<FreePair>), CollapseError> {
    if !cx.contains(pair.coface) || !cx.contains(pair.face) {
        return Err(CollapseError::NotFree(pair));
    }
    let orbit = action.orbit(pair);
    if first_overlap(&orbit).is_some() {
        return Err(CollapseError::OverlappingOrbit(pair));
    }
    let mut out = cx.clone();
    for &p in &orbit {
        if !is_free(cx, p) {
            return Err(CollapseError::NotFree(p));
        }
        collapse_in_place(&mut out, p)?;
    }
    Ok((out, orbit))
}

#[derive(Clone, Debug)]
pub enum EquivariantMode {
    /// Collapse the orbit of the first free pair whose orbit is disjoint, until
    /// no free pair is left.
    Greedy,
    /// Execute an action-invariant family of contraction instructions, one
    /// orbit of (star, link) pairs at a time.
    Instructed(Vec<MmpInstruction>),
}

pub fn equivariant_collapse(
    cx: &Complex,
    action: &GroupAction,
    mode: &EquivariantMode,
) -> Result<(Complex, CollapseSequence), CollapseError> {
    match mode {
        EquivariantMode::Greedy => greedy(cx, action),
        EquivariantMode::Instructed(instrs) => instructed(cx, action, instrs),
    }
}

fn greedy(cx: &Complex, action: &GroupAction) -> Result<(Complex, CollapseSequence), CollapseError> {
    let mut cur = cx.clone();
    let mut seq = CollapseSequence::new();
    loop {
        let pairs = free_pairs(&cur);
        let Some(&first) = pairs.first() else {
            return Ok((cur, seq));
        };
        let step = pairs
            .iter()
            .map(|&p| action.orbit(p))
            .find(|orbit| first_overlap(orbit).is_none());
        let Some(orbit) = step else {
            return Err(CollapseError::OverlappingOrbit(first));
        };
        for p in orbit {
            collapse_in_place(&mut cur, p).map_err(|_| CollapseError::NotFreeAtStep {
                step: seq.len(),
                pair: p,
            })?;
            seq.push(p);
        }
    }
}

fn instructed(
    cx: &Complex,
    action: &GroupAction,
    instrs: &[MmpInstruction],
) -> Result<(Complex, CollapseSequence), CollapseError> {
    for g in action.elements() {
        for instr in instrs {
            if !instrs.contains(&action.maps_instruction(g, instr)) {
                return Err(CollapseError::NotInvariantInstruction);
            }
        }
    }
    let mut all: BTreeSet<FreePair> = BTreeSet::new();
    for instr in instrs {
        all.extend(mmp_schedule(cx, instr)?);
    }
    let mut owner: BTreeMap<CellId, FreePair> = BTreeMap::new();
    for &p in &all {
        for c in [p.coface, p.face] {
            if owner.insert(c, p).is_some() {
                return Err(CollapseError::OverlappingOrbit(p));
            }
        }
    }
    let mut ordered: Vec<FreePair> = all.iter().copied().collect();
    ordered.sort_by_key(|p| (Reverse(cx.cell(p.coface).unwrap().dim()), p.coface));

    let mut cur = cx.clone();
    let mut seq = CollapseSequence::new();
    let mut done: BTreeSet<FreePair> = BTreeSet::new();
    for p in ordered {
        if done.contains(&p) {
            continue;
        }
        let orbit = action.orbit(p);
        if orbit.iter().any(|q| !all.contains(q)) {
            return Err(CollapseError::NotInvariantInstruction);
        }
        if first_overlap(&orbit).is_some() {
            return Err(CollapseError::OverlappingOrbit(p));
        }
        if let Some(&bad) = orbit.iter().find(|&&q| !is_free(&cur, q)) {
            return Err(CollapseError::NotFreeAtStep {
                step: seq.len(),
                pair: bad,
            });
        }
        for q in orbit {
            collapse_in_place(&mut cur, q)?;
            seq.push(q);
            done.insert(q);
        }
    }
    Ok((cur, seq))
}
