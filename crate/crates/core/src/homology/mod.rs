//! Simplicial homology of simplicial posets.
//!
//! Each cell carries its sorted vertex tuple, which orients it; the boundary of
//! a `k`-cell is the signed sum of its facets with sign `(-1)^i` for the facet
//! omitting vertex `i`. Integer homology comes from invariant factors
//! ([`snf`]), rational Betti numbers from ranks over `Q` ([`rank`]).
//! Reduced homology augments `∂_0` with a row of ones.

mod rank;
mod snf;

pub use rank::rational_rank;
pub use snf::invariant_factors;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::complex::{CellId, Complex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("degree {degree} is outside 0..={max}")]
    DegreeOutOfRange { degree: usize, max: i64 },
    #[error("boundary of boundary is non-zero in degree {0}")]
    ChainCondition(usize),
}

impl HomologyError {
    pub fn name(&self) -> &'static str {
        match self {
            HomologyError::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            HomologyError::ChainCondition(_) => "ChainCondition",
        }
    }
}

/// `∂_k`, rows indexed by `(k-1)`-cells and columns by `k`-cells, both in id
/// order. `∂_0` has no rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub rows: Vec<CellId>,
    pub cols: Vec<CellId>,
    /// Non-zero entries per column as (row index, value).
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols.len()]; self.rows.len()];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
    }

    /// `∂_0` with a single row of ones, for reduced homology.
    fn augmented(&self) -> BoundaryMatrix {
        BoundaryMatrix {
            degree: 0,
            rows: vec![CellId::new(u64::MAX)],
            cols: self.cols.clone(),
            columns: vec![vec![(0, 1)]; self.cols.len()],
        }
    }

    /// Whether `lower ∘ self` vanishes, where `lower` is the next boundary down.
    pub fn composes_to_zero(&self, lower: &BoundaryMatrix) -> bool {
        self.columns.iter().all(|col| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(mid, v) in col {
                for &(r, w) in &lower.columns[mid] {
                    *acc.entry(r).or_default() += v * w;
                }
            }
            acc.values().all(|&x| x == 0)
        })
    }
}

pub fn boundary_matrix(cx: &Complex, k: usize) -> Result<BoundaryMatrix, HomologyError> {
    let dim = cx.dim().ok_or(HomologyError::DegreeOutOfRange { degree: k, max: -1 })?;
    if k > dim {
        return Err(HomologyError::DegreeOutOfRange {
            degree: k,
            max: dim as i64,
        });
    }
    let cols: Vec<CellId> = cx.cells_of_dim(k).collect();
    let rows: Vec<CellId> = if k == 0 {
        Vec::new()
    } else {
        cx.cells_of_dim(k - 1).collect()
    };
    let index: BTreeMap<CellId, usize> = rows.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let columns = cols
        .iter()
        .map(|&id| {
            if k == 0 {
                return Vec::new();
            }
            let mut col: BTreeMap<usize, i64> = BTreeMap::new();
            for (i, f) in cx.cell(id).unwrap().facets().iter().enumerate() {
                *col.entry(index[f]).or_default() += if i % 2 == 0 { 1 } else { -1 };
            }
            col.into_iter().filter(|&(_, v)| v != 0).collect()
        })
        .collect();
    Ok(BoundaryMatrix {
        degree: k,
        rows,
        cols,
        columns,
    })
}

fn boundaries(cx: &Complex, reduced: bool) -> Vec<BoundaryMatrix> {
    let Some(dim) = cx.dim() else {
        return Vec::new();
    };
    (0..=dim)
        .map(|k| {
            let m = boundary_matrix(cx, k).unwrap();
            if reduced && k == 0 {
                m.augmented()
            } else {
                m
            }
        })
        .collect()
}

/// Checks `∂_{k-1} ∘ ∂_k = 0` in every degree.
pub fn check_chain_condition(cx: &Complex) -> Result<(), HomologyError> {
    let ds = boundaries(cx, true);
    for k in 1..ds.len() {
        if !ds[k].composes_to_zero(&ds[k - 1]) {
            return Err(HomologyError::ChainCondition(k));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeHomology {
    pub betti: usize,
    /// Invariant factors greater than one, ascending.
    pub torsion: Vec<BigUint>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyResult {
    pub reduced: bool,
    /// Degrees `0..=dim`; empty for the empty complex.
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.degrees.iter().all(|d| d.betti == 0 && d.torsion.is_empty())
    }
}

/// Integer homology through invariant factors of each boundary matrix.
pub fn homology_z(cx: &Complex, reduced: bool) -> HomologyResult {
    let ds = boundaries(cx, reduced);
    let factors: Vec<Vec<BigUint>> = ds
        .iter()
        .map(|d| invariant_factors(d.rows.len(), d.cols.len(), d.entries()))
        .collect();
    let degrees = (0..ds.len())
        .map(|k| {
            let rank_out = factors[k].len();
            let (rank_in, torsion) = match factors.get(k + 1) {
                Some(f) => (f.len(), f.iter().filter(|d| !d.is_one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            DegreeHomology {
                betti: ds[k].cols.len() - rank_out - rank_in,
                torsion,
            }
        })
        .collect();
    HomologyResult { reduced, degrees }
}

/// Rational Betti numbers through ranks over `Q`.
pub fn betti_q(cx: &Complex, reduced: bool) -> Vec<usize> {
    let ds = boundaries(cx, reduced);
    let ranks: Vec<usize> = ds.iter().map(|d| rational_rank(d.columns.iter().cloned())).collect();
    (0..ds.len())
        .map(|k| ds[k].cols.len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// All reduced rational Betti numbers vanish. The empty complex is not
/// Q-acyclic.
pub fn is_q_acyclic(cx: &Complex) -> bool {
    !cx.is_empty() && betti_q(cx, true).iter().all(|&b| b == 0)
}
