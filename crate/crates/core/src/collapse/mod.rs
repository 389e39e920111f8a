//! Free pairs, elementary collapses and collapse sequences.
//!
//! Every collapsing operation returns the [`CollapseSequence`] it executed.
//! Replaying that sequence on the input with [`replay`] reproduces the output,
//! which is how results are certified.

mod equivariant;
mod mmp;
mod search;

pub use equivariant::{
    equivariant_collapse, orbit_step, Automorphism, EquivariantMode, GroupAction, DEFAULT_MAX_ORDER,
};
pub use mmp::{mmp_collapse, mmp_schedule, MmpInstruction};
pub use search::{collapses_to, collapsible_search, Verdict, DEFAULT_BUDGET};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::complex::{CellId, Complex, ComplexError, VertexLabel};

/// `face` is a facet of `coface` and of no other cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreePair {
    pub coface: CellId,
    pub face: CellId,
}

impl FreePair {
    pub fn new(coface: CellId, face: CellId) -> Self {
        FreePair { coface, face }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseSequence {
    pairs: Vec<FreePair>,
}

impl CollapseSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, pair: FreePair) {
        self.pairs.push(pair);
    }

    pub fn pairs(&self) -> &[FreePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FreePair> {
        self.pairs.iter()
    }

    /// All cells removed by the sequence.
    pub fn removed_cells(&self) -> BTreeSet<CellId> {
        self.pairs.iter().flat_map(|p| [p.coface, p.face]).collect()
    }
}

impl From<Vec<FreePair>> for CollapseSequence {
    fn from(pairs: Vec<FreePair>) -> Self {
        CollapseSequence { pairs }
    }
}

impl FromIterator<FreePair> for CollapseSequence {
    fn from_iter<T: IntoIterator<Item = FreePair>>(iter: T) -> Self {
        CollapseSequence {
            pairs: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error("({}, {}) is not a free pair", .0.coface, .0.face)]
    NotFree(FreePair),
    #[error("pair ({}, {}) at step {step} is not free", .pair.coface, .pair.face)]
    NotFreeAtStep { step: usize, pair: FreePair },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexLabel),
    #[error("cell {0} does not lie in the link of the distinguished vertex")]
    NotInLink(CellId),
    #[error("cell {0} has more than one coface through the distinguished vertex")]
    Ambiguous(CellId),
    #[error("coface {coface} of contracted cell {cell} lies in the link but is not contracted")]
    NotUpwardClosed { cell: CellId, coface: CellId },
    #[error("target is not closed under faces (cell {0})")]
    NotASubcomplex(CellId),
    #[error("orbit of ({}, {}) has overlapping pairs", .0.coface, .0.face)]
    OverlappingOrbit(FreePair),
    #[error("instruction set is not invariant under the action")]
    NotInvariantInstruction,
    #[error("map is not an automorphism of the complex")]
    NotAnAutomorphism,
    #[error("group closure exceeds the order cap {0}")]
    OrderCapExceeded(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl CollapseError {
    pub fn name(&self) -> &'static str {
        match self {
            CollapseError::NotFree(_) => "NotFree",
            CollapseError::NotFreeAtStep { .. } => "NotFreeAtStep",
            CollapseError::UnknownVertex(_) => "UnknownVertex",
            CollapseError::NotInLink(_) => "NotInLink",
            CollapseError::Ambiguous(_) => "Ambiguous",
            CollapseError::NotUpwardClosed { .. } => "NotUpwardClosed",
            CollapseError::NotASubcomplex(_) => "NotASubcomplex",
            CollapseError::OverlappingOrbit(_) => "OverlappingOrbit",
            CollapseError::NotInvariantInstruction => "NotInvariantInstruction",
            CollapseError::NotAnAutomorphism => "NotAnAutomorphism",
            CollapseError::OrderCapExceeded(_) => "OrderCapExceeded",
            CollapseError::Complex(e) => e.name(),
        }
    }
}

pub fn is_free(cx: &Complex, pair: FreePair) -> bool {
    let (Some(v), Some(w)) = (cx.cell(pair.coface), cx.cell(pair.face)) else {
        return false;
    };
    v.facets().contains(&pair.face)
        && cx.coface_count(pair.face) == 1
        && cx.coface_count(pair.coface) == 0
        && w.dim() + 1 == v.dim()
}

/// All free pairs, ordered by coface dimension (descending), then coface id,
/// then face id.
pub fn free_pairs(cx: &Complex) -> Vec<FreePair> {
    let mut pairs: Vec<FreePair> = cx
        .cells()
        .filter(|&(id, _)| cx.coface_count(id) == 1)
        .map(|(id, _)| FreePair::new(cx.cofaces(id).next().unwrap(), id))
        .collect();
    pairs.sort_by_key(|p| (std::cmp::Reverse(cx.cell(p.coface).unwrap().dim()), p.coface, p.face));
    pairs
}

pub(crate) fn collapse_in_place(cx: &mut Complex, pair: FreePair) -> Result<(), CollapseError> {
    if !is_free(cx, pair) {
        return Err(CollapseError::NotFree(pair));
    }
    cx.remove_maximal(pair.coface)?;
    cx.remove_maximal(pair.face)?;
    Ok(())
}

pub fn elementary_collapse(cx: &Complex, pair: FreePair) -> Result<Complex, CollapseError> {
    let mut out = cx.clone();
    collapse_in_place(&mut out, pair)?;
    Ok(out)
}

pub(crate) fn replay_in_place<'a>(
    cx: &mut Complex,
    pairs: impl IntoIterator<Item = &'a FreePair>,
    offset: usize,
) -> Result<(), CollapseError> {
    for (k, &pair) in pairs.into_iter().enumerate() {
        collapse_in_place(cx, pair).map_err(|_| CollapseError::NotFreeAtStep { step: k + offset, pair })?;
    }
    Ok(())
}

/// Executes the pairs in order; fails with the index of the first non-free pair.
pub fn replay(cx: &Complex, seq: &CollapseSequence) -> Result<Complex, CollapseError> {
    let mut out = cx.clone();
    replay_in_place(&mut out, seq.pairs(), 0)?;
    Ok(out)
}

/// Repeatedly collapses the first free pair until none is left.
pub fn greedy_collapse(cx: &Complex) -> (Complex, CollapseSequence) {
    let mut out = cx.clone();
    let mut seq = CollapseSequence::new();
    while let Some(&pair) = free_pairs(&out).first() {
        collapse_in_place(&mut out, pair).expect("listed pair is free");
        seq.push(pair);
    }
    (out, seq)
}
