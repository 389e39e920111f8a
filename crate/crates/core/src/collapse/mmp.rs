//! Collapse driven by a contraction instruction.
//!
//! The instruction names a distinguished vertex `v0` and a set of cells `w` in
//! its link. Each such `w` is paired with the unique cell `<v0, w>` spanned by
//! `v0` and `w`, and the pairs are collapsed from the highest dimension down.
//! Whenever the instruction is upward closed, every pair is free at its turn:
//! a surviving coface of `w` would have to be contracted and of higher
//! dimension, so it was already removed.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::{replay_in_place, CollapseError, CollapseSequence, FreePair};
use crate::complex::{CellId, Complex, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmpInstruction {
    pub v0: VertexLabel,
    pub contracted: BTreeSet<CellId>,
}

impl MmpInstruction {
    pub fn new(v0: impl Into<VertexLabel>, contracted: impl IntoIterator<Item = CellId>) -> Self {
        MmpInstruction {
            v0: v0.into(),
            contracted: contracted.into_iter().collect(),
        }
    }
}

/// Validates the instruction and returns its (star cell, link cell) pairs in
/// execution order: star-cell dimension descending, then star-cell id.
pub fn mmp_schedule(cx: &Complex, instr: &MmpInstruction) -> Result<Vec<FreePair>, CollapseError> {
    let v0 = cx
        .vertex_cell(&instr.v0)
        .ok_or_else(|| CollapseError::UnknownVertex(instr.v0.clone()))?;
    let link = cx.link(v0)?.complex;
    let mut pairs = Vec::with_capacity(instr.contracted.len());
    for &w in &instr.contracted {
        if !link.contains(w) {
            return Err(CollapseError::NotInLink(w));
        }
        let through_v0: Vec<CellId> = cx
            .cofaces(w)
            .filter(|&u| cx.cell(u).unwrap().has_vertex(&instr.v0))
            .collect();
        match through_v0.as_slice() {
            [star] => pairs.push(FreePair::new(*star, w)),
            [] => return Err(CollapseError::NotInLink(w)),
            _ => return Err(CollapseError::Ambiguous(w)),
        }
        if let Some(u) = cx
            .cofaces(w)
            .find(|&u| link.contains(u) && !instr.contracted.contains(&u))
        {
            return Err(CollapseError::NotUpwardClosed { cell: w, coface: u });
        }
    }
    pairs.sort_by_key(|p| (Reverse(cx.cell(p.coface).unwrap().dim()), p.coface));
    Ok(pairs)
}

/// Removes every contracted cell together with its star partner. The result is
/// the subcomplex left after deleting both families.
pub fn mmp_collapse(cx: &Complex, instr: &MmpInstruction) -> Result<(Complex, CollapseSequence), CollapseError> {
    let pairs = mmp_schedule(cx, instr)?;
    let mut out = cx.clone();
    replay_in_place(&mut out, &pairs, 0)?;
    Ok((out, pairs.into()))
}
