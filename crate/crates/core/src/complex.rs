//! Regular cell complexes whose cells are simplices (simplicial posets).
//!
//! A [`Complex`] stores each cell with its sorted vertex tuple and one facet
//! per vertex: position `i` of `facets` is the face obtained by dropping the
//! `i`-th vertex. Distinct cells may share a vertex set, so the two-edge
//! circle (two edges on the same pair of vertices) is representable, while a
//! loop on a single vertex is not.
//!
//! Cell ids are allocated from a monotone counter and are never handed out
//! twice by the same complex, so ids recorded in a collapse sequence stay
//! meaningful after cells are removed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Name of a vertex. Ordered lexicographically by its string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(name: impl Into<String>) -> Self {
        VertexLabel(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexLabel {
    fn from(s: &str) -> Self {
        VertexLabel(s.to_owned())
    }
}

impl From<String> for VertexLabel {
    fn from(s: String) -> Self {
        VertexLabel(s)
    }
}

/// Opaque cell identifier, unique within one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(u64);

impl CellId {
    pub const fn new(raw: u64) -> Self {
        CellId(raw)
    }

    pub const fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for CellId {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(CellId)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex label `{0}` is already present")]
    DuplicateLabel(VertexLabel),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexLabel),
    #[error("unknown cell {0}")]
    UnknownCell(CellId),
    #[error("cell id {0} is already in use")]
    DuplicateCellId(CellId),
    #[error("cell {0} is not a vertex")]
    NotAVertex(CellId),
    #[error("vertex tuple must be non-empty, strictly increasing and duplicate-free")]
    UnsortedVertices,
    #[error("expected {expected} facets, got {found}")]
    FacetCountMismatch { expected: usize, found: usize },
    #[error("facet {facet} at position {position} does not match the vertex tuple")]
    FacetMismatch { position: usize, facet: CellId },
    #[error("facet {facet} occurs twice; attaching map would not be an embedding")]
    NonRegular { facet: CellId },
    #[error("facet maps at positions {first} and {second} do not commute")]
    IncoherentBoundary { first: usize, second: usize },
    #[error("cell {0} has cofaces")]
    HasCofaces(CellId),
    #[error("vertex label `{0}` clashes with an existing label")]
    LabelClash(VertexLabel),
    #[error("cell {0} is a face of a cell outside the given set")]
    NotClosed(CellId),
}

impl ComplexError {
    /// Stable machine-readable name of the error.
    pub fn name(&self) -> &'static str {
        match self {
            ComplexError::DuplicateLabel(_) => "DuplicateLabel",
            ComplexError::UnknownVertex(_) => "UnknownVertex",
            ComplexError::UnknownCell(_) => "UnknownCell",
            ComplexError::DuplicateCellId(_) => "DuplicateCellId",
            ComplexError::NotAVertex(_) => "NotAVertex",
            ComplexError::UnsortedVertices => "UnsortedVertices",
            ComplexError::FacetCountMismatch { .. } => "FacetMismatch",
            ComplexError::FacetMismatch { .. } => "FacetMismatch",
            ComplexError::NonRegular { .. } => "NonRegular",
            ComplexError::IncoherentBoundary { .. } => "IncoherentBoundary",
            ComplexError::HasCofaces(_) => "HasCofaces",
            ComplexError::LabelClash(_) => "LabelClash",
            ComplexError::NotClosed(_) => "NotClosed",
        }
    }
}

/// A simplex cell: `d + 1` sorted vertices and `d + 1` position-aligned facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    vertices: Vec<VertexLabel>,
    facets: Vec<CellId>,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Facet `i` omits vertex `i`. Empty for 0-cells.
    pub fn facets(&self) -> &[CellId] {
        &self.facets
    }

    pub fn has_vertex(&self, v: &VertexLabel) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn position_of(&self, v: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// The facet dropping `v`; `None` for 0-cells or if `v` is not a vertex.
    pub fn facet_omitting(&self, v: &VertexLabel) -> Option<CellId> {
        self.position_of(v).and_then(|i| self.facets.get(i).copied())
    }
}

/// Link of a vertex together with whether the ambient complex was simplicial.
#[derive(Clone, Debug)]
pub struct Link {
    pub complex: Complex,
    /// The classical link is only defined for simplicial complexes; when this is
    /// `false` the result is the simplicial-poset analogue.
    pub ambient_simplicial: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Complex {
    cells: BTreeMap<CellId, Cell>,
    cofaces: BTreeMap<CellId, BTreeSet<CellId>>,
    vertices: BTreeMap<VertexLabel, CellId>,
    by_vertex_set: BTreeMap<Vec<VertexLabel>, BTreeSet<CellId>>,
    next_id: u64,
}

/// Two complexes are equal when they have the same cells under the same ids.
impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Complex {}

impl Complex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.cells.contains_key(&id)
    }

    pub fn cell(&self, id: CellId) -> Option<&Cell> {
        self.cells.get(&id)
    }

    pub(crate) fn get(&self, id: CellId) -> Result<&Cell, ComplexError> {
        self.cells.get(&id).ok_or(ComplexError::UnknownCell(id))
    }

    /// Cells in ascending id order.
    pub fn cells(&self) -> impl Iterator<Item = (CellId, &Cell)> + '_ {
        self.cells.iter().map(|(&id, c)| (id, c))
    }

    pub fn cell_ids(&self) -> BTreeSet<CellId> {
        self.cells.keys().copied().collect()
    }

    /// Cells ordered by dimension, then id. Facets always precede their cofaces.
    pub fn cells_by_dim(&self) -> Vec<CellId> {
        let mut ids: Vec<_> = self.cells.keys().copied().collect();
        ids.sort_by_key(|id| (self.cells[id].dim(), *id));
        ids
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = CellId> + '_ {
        self.cells.iter().filter(move |(_, c)| c.dim() == d).map(|(&id, _)| id)
    }

    pub fn vertex_labels(&self) -> impl Iterator<Item = &VertexLabel> + '_ {
        self.vertices.keys()
    }

    pub fn vertex_cell(&self, v: &VertexLabel) -> Option<CellId> {
        self.vertices.get(v).copied()
    }

    pub fn has_vertex(&self, v: &VertexLabel) -> bool {
        self.vertices.contains_key(v)
    }

    /// Immediate cofaces (cells having `id` as a facet).
    pub fn cofaces(&self, id: CellId) -> impl Iterator<Item = CellId> + '_ {
        self.cofaces.get(&id).into_iter().flatten().copied()
    }

    pub fn coface_count(&self, id: CellId) -> usize {
        self.cofaces.get(&id).map_or(0, BTreeSet::len)
    }

    /// All cells whose sorted vertex tuple equals `vertices`.
    pub fn cells_with_vertices(&self, vertices: &[VertexLabel]) -> Vec<CellId> {
        self.by_vertex_set
            .get(vertices)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default()
    }

    /// The unique face of `id` spanned by `subset` (sorted, non-empty, contained in
    /// the cell's vertices), reached by iterated facet maps.
    pub fn face_with_vertices(&self, id: CellId, subset: &[VertexLabel]) -> Option<CellId> {
        let mut cur = id;
        loop {
            let cell = self.cells.get(&cur)?;
            if cell.vertices.as_slice() == subset {
                return Some(cur);
            }
            let drop = cell.vertices.iter().position(|v| subset.binary_search(v).is_err())?;
            cur = *cell.facets.get(drop)?;
        }
    }

    pub fn is_face_of(&self, face: CellId, cell: CellId) -> bool {
        match (self.cells.get(&face), self.cells.get(&cell)) {
            (Some(f), Some(_)) => self.face_with_vertices(cell, &f.vertices) == Some(face),
            _ => false,
        }
    }

    /// Largest cell dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.values().map(Cell::dim).max()
    }

    /// Number of cells in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in self.cells.values() {
            f[c.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Whether every cell is determined by its vertex set.
    pub fn is_simplicial(&self) -> bool {
        self.by_vertex_set.values().all(|s| s.len() == 1)
    }

    /// Vertex sets of the connected components, in order of their least label.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexLabel>> {
        let labels: Vec<&VertexLabel> = self.vertices.keys().collect();
        let index: BTreeMap<&VertexLabel, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for cell in self.cells.values().filter(|c| c.dim() == 1) {
            let a = find(&mut parent, index[&cell.vertices[0]]);
            let b = find(&mut parent, index[&cell.vertices[1]]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: BTreeMap<usize, BTreeSet<VertexLabel>> = BTreeMap::new();
        for (i, v) in labels.iter().enumerate() {
            let r = find(&mut parent, i);
            comps.entry(r).or_default().insert((*v).clone());
        }
        comps.into_values().collect()
    }

    fn fresh_id(&mut self) -> CellId {
        let id = CellId(self.next_id);
        self.next_id += 1;
        id
    }

    pub fn add_vertex(&mut self, label: impl Into<VertexLabel>) -> Result<CellId, ComplexError> {
        let label = label.into();
        if self.vertices.contains_key(&label) {
            return Err(ComplexError::DuplicateLabel(label));
        }
        let id = self.fresh_id();
        self.insert_unchecked(id, vec![label], Vec::new());
        Ok(id)
    }

    /// Attach a cell of dimension `vertices.len() - 1` along the given facets.
    ///
    /// `vertices` must be strictly increasing; facet `i` must span `vertices`
    /// without its `i`-th entry, the facets must be pairwise distinct, and the
    /// facets' own facet maps must agree on every codimension-two face.
    pub fn attach_cell(&mut self, vertices: Vec<VertexLabel>, facets: Vec<CellId>) -> Result<CellId, ComplexError> {
        if vertices.len() == 1 && facets.is_empty() {
            return self.add_vertex(vertices.into_iter().next().unwrap());
        }
        self.check_attachable(&vertices, &facets)?;
        let id = self.fresh_id();
        self.insert_unchecked(id, vertices, facets);
        Ok(id)
    }

    /// Like [`attach_cell`](Self::attach_cell) but with a caller-chosen id.
    pub(crate) fn attach_cell_with_id(
        &mut self,
        id: CellId,
        vertices: Vec<VertexLabel>,
        facets: Vec<CellId>,
    ) -> Result<(), ComplexError> {
        if self.cells.contains_key(&id) {
            return Err(ComplexError::DuplicateCellId(id));
        }
        if vertices.len() == 1 {
            if !facets.is_empty() {
                return Err(ComplexError::FacetCountMismatch {
                    expected: 0,
                    found: facets.len(),
                });
            }
            if self.vertices.contains_key(&vertices[0]) {
                return Err(ComplexError::DuplicateLabel(vertices[0].clone()));
            }
        } else {
            self.check_attachable(&vertices, &facets)?;
        }
        self.next_id = self.next_id.max(id.0 + 1);
        self.insert_unchecked(id, vertices, facets);
        Ok(())
    }

    fn check_attachable(&self, vertices: &[VertexLabel], facets: &[CellId]) -> Result<(), ComplexError> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ComplexError::UnsortedVertices);
        }
        for v in vertices {
            if !self.vertices.contains_key(v) {
                return Err(ComplexError::UnknownVertex(v.clone()));
            }
        }
        if facets.len() != vertices.len() {
            return Err(ComplexError::FacetCountMismatch {
                expected: vertices.len(),
                found: facets.len(),
            });
        }
        for &f in facets {
            self.get(f)?;
        }
        let distinct: BTreeSet<_> = facets.iter().collect();
        if distinct.len() != facets.len() {
            let dup = facets
                .iter()
                .enumerate()
                .find(|(i, f)| facets[..*i].contains(f))
                .map(|(_, f)| *f)
                .unwrap();
            return Err(ComplexError::NonRegular { facet: dup });
        }
        for (i, &f) in facets.iter().enumerate() {
            let fc = &self.cells[&f];
            let expected = vertices.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v);
            if !fc.vertices.iter().eq(expected) {
                return Err(ComplexError::FacetMismatch { position: i, facet: f });
            }
        }
        // Dropping i then j (at position j - 1 in facet i) must equal dropping j then i.
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let via_i = self.cells[&facets[i]].facets.get(j - 1);
                let via_j = self.cells[&facets[j]].facets.get(i);
                if via_i != via_j {
                    return Err(ComplexError::IncoherentBoundary { first: i, second: j });
                }
            }
        }
        Ok(())
    }

    fn insert_unchecked(&mut self, id: CellId, vertices: Vec<VertexLabel>, facets: Vec<CellId>) {
        for &f in &facets {
            self.cofaces.entry(f).or_default().insert(id);
        }
        if vertices.len() == 1 {
            self.vertices.insert(vertices[0].clone(), id);
        }
        self.by_vertex_set.entry(vertices.clone()).or_default().insert(id);
        self.cells.insert(id, Cell { vertices, facets });
    }

    /// Remove a cell without cofaces, in place.
    pub(crate) fn remove_maximal(&mut self, id: CellId) -> Result<Cell, ComplexError> {
        self.get(id)?;
        if self.coface_count(id) > 0 {
            return Err(ComplexError::HasCofaces(id));
        }
        let cell = self.cells.remove(&id).unwrap();
        self.cofaces.remove(&id);
        for f in &cell.facets {
            if let Some(s) = self.cofaces.get_mut(f) {
                s.remove(&id);
                if s.is_empty() {
                    self.cofaces.remove(f);
                }
            }
        }
        if cell.dim() == 0 {
            self.vertices.remove(&cell.vertices[0]);
        }
        if let Some(s) = self.by_vertex_set.get_mut(&cell.vertices) {
            s.remove(&id);
            if s.is_empty() {
                self.by_vertex_set.remove(&cell.vertices);
            }
        }
        Ok(cell)
    }

    /// Remove the interior of a maximal cell; its faces stay.
    pub fn delete_open_cell(&self, id: CellId) -> Result<Complex, ComplexError> {
        let mut out = self.clone();
        out.remove_maximal(id)?;
        Ok(out)
    }

    /// Builds the simplicial complex whose cells are all non-empty subsets of the
    /// given vertex sets. Ids are assigned by dimension, then vertex tuple.
    pub fn from_maximal_simplices<I, S, L>(sets: I) -> Complex
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = L>,
        L: Into<VertexLabel>,
    {
        let mut faces: BTreeSet<(usize, Vec<VertexLabel>)> = BTreeSet::new();
        for set in sets {
            let mut verts: Vec<VertexLabel> = set.into_iter().map(Into::into).collect();
            verts.sort();
            verts.dedup();
            let n = verts.len();
            assert!(n > 0 && n < 64, "maximal simplices must be non-empty");
            for mask in 1u64..(1u64 << n) {
                let face: Vec<_> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| verts[i].clone())
                    .collect();
                faces.insert((face.len(), face));
            }
        }
        let mut cx = Complex::new();
        let mut ids: BTreeMap<Vec<VertexLabel>, CellId> = BTreeMap::new();
        for (_, face) in faces {
            let facets = if face.len() == 1 {
                Vec::new()
            } else {
                (0..face.len())
                    .map(|i| {
                        let mut sub = face.clone();
                        sub.remove(i);
                        ids[&sub]
                    })
                    .collect()
            };
            let id = cx.fresh_id();
            cx.insert_unchecked(id, face.clone(), facets);
            ids.insert(face, id);
        }
        cx
    }

    /// Cells having `id` as a face, `id` included.
    pub fn star(&self, id: CellId) -> Result<BTreeSet<CellId>, ComplexError> {
        self.get(id)?;
        let mut star = BTreeSet::from([id]);
        let mut stack = vec![id];
        while let Some(c) = stack.pop() {
            for up in self.cofaces(c) {
                if star.insert(up) {
                    stack.push(up);
                }
            }
        }
        Ok(star)
    }

    /// Downward closure of a set of cells.
    pub fn closure(&self, ids: &BTreeSet<CellId>) -> Result<BTreeSet<CellId>, ComplexError> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<CellId> = ids.iter().copied().collect();
        while let Some(c) = stack.pop() {
            let cell = self.get(c)?;
            if out.insert(c) {
                stack.extend(cell.facets.iter().copied());
            }
        }
        Ok(out)
    }

    pub fn is_closed(&self, ids: &BTreeSet<CellId>) -> bool {
        ids.iter().all(|id| {
            self.cells
                .get(id)
                .is_some_and(|c| c.facets.iter().all(|f| ids.contains(f)))
        })
    }

    /// The subcomplex on a face-closed set of cells, keeping ids.
    pub fn subcomplex(&self, ids: &BTreeSet<CellId>) -> Result<Complex, ComplexError> {
        let mut out = Complex::new();
        for id in self.cells_by_dim() {
            if !ids.contains(&id) {
                continue;
            }
            let c = &self.cells[&id];
            if let Some(&f) = c.facets.iter().find(|f| !ids.contains(f)) {
                return Err(ComplexError::NotClosed(f));
            }
            out.insert_unchecked(id, c.vertices.clone(), c.facets.clone());
        }
        for id in ids {
            self.get(*id)?;
        }
        out.next_id = self.next_id;
        Ok(out)
    }

    pub fn closed_star(&self, id: CellId) -> Result<Complex, ComplexError> {
        let star = self.star(id)?;
        let closed = self.closure(&star)?;
        self.subcomplex(&closed)
    }

    /// Cells of the closed star of vertex cell `v` that do not contain `v`.
    pub fn link(&self, v: CellId) -> Result<Link, ComplexError> {
        let cell = self.get(v)?;
        if cell.dim() != 0 {
            return Err(ComplexError::NotAVertex(v));
        }
        let label = cell.vertices[0].clone();
        let star = self.star(v)?;
        let closed = self.closure(&star)?;
        let link_cells: BTreeSet<CellId> = closed
            .into_iter()
            .filter(|c| !self.cells[c].has_vertex(&label))
            .collect();
        Ok(Link {
            complex: self.subcomplex(&link_cells)?,
            ambient_simplicial: self.is_simplicial(),
        })
    }

    /// Checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<(), ComplexError> {
        let mut rebuilt = Complex::new();
        for id in self.cells_by_dim() {
            let c = &self.cells[&id];
            rebuilt.attach_cell_with_id(id, c.vertices.clone(), c.facets.clone())?;
        }
        for (id, c) in &self.cells {
            if c.dim() == 0 && self.vertices.get(&c.vertices[0]) != Some(id) {
                return Err(ComplexError::DuplicateLabel(c.vertices[0].clone()));
            }
            if self.cofaces.get(id) != rebuilt.cofaces.get(id) {
                return Err(ComplexError::UnknownCell(*id));
            }
        }
        if self.vertices.len() != rebuilt.vertices.len() {
            return Err(ComplexError::UnknownCell(CellId(u64::MAX)));
        }
        if let Some(max) = self.cells.keys().next_back() {
            if max.0 >= self.next_id {
                return Err(ComplexError::DuplicateCellId(*max));
            }
        }
        Ok(())
    }
}

/// Join of two vertex-disjoint complexes.
///
/// Cells of `a` and `b` are copied first (by dimension, then id), followed by one
/// cell `x * y` for every pair, ordered by total dimension.
pub fn join(a: &Complex, b: &Complex) -> Result<Complex, ComplexError> {
    if let Some(v) = a.vertex_labels().find(|v| b.has_vertex(v)) {
        return Err(ComplexError::LabelClash(v.clone()));
    }
    let mut out = Complex::new();
    let mut from_a = BTreeMap::new();
    let mut from_b = BTreeMap::new();
    for (src, map) in [(a, &mut from_a), (b, &mut from_b)] {
        for id in src.cells_by_dim() {
            let c = &src.cells[&id];
            let facets = c.facets.iter().map(|f| map[f]).collect();
            let new = out.fresh_id();
            out.insert_unchecked(new, c.vertices.clone(), facets);
            map.insert(id, new);
        }
    }
    let mut pairs: Vec<(usize, CellId, CellId)> = Vec::new();
    for (ia, ca) in a.cells() {
        for (ib, cb) in b.cells() {
            pairs.push((ca.dim() + cb.dim(), ia, ib));
        }
    }
    pairs.sort_by_key(|&(d, ia, ib)| (d, a.cells[&ia].dim(), ia, ib));
    let mut joined: BTreeMap<(CellId, CellId), CellId> = BTreeMap::new();
    for (_, ia, ib) in pairs {
        let (ca, cb) = (&a.cells[&ia], &b.cells[&ib]);
        let mut vertices: Vec<VertexLabel> = ca.vertices.iter().chain(&cb.vertices).cloned().collect();
        vertices.sort();
        let facets = vertices
            .iter()
            .map(|v| match ca.facet_omitting(v) {
                Some(fa) => joined[&(fa, ib)],
                None if ca.has_vertex(v) => from_b[&ib],
                None => match cb.facet_omitting(v) {
                    Some(fb) => joined[&(ia, fb)],
                    None => from_a[&ia],
                },
            })
            .collect();
        let new = out.fresh_id();
        out.insert_unchecked(new, vertices, facets);
        joined.insert((ia, ib), new);
    }
    Ok(out)
}

pub fn cone(a: &Complex, apex: impl Into<VertexLabel>) -> Result<Complex, ComplexError> {
    let apex = apex.into();
    if a.has_vertex(&apex) {
        return Err(ComplexError::LabelClash(apex));
    }
    let mut point = Complex::new();
    point.add_vertex(apex)?;
    join(a, &point)
}
