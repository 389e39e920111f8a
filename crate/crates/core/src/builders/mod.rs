//! Dual complexes from stratification data, and a catalog of named complexes.

mod catalog;
mod strata;

pub use catalog::{catalog, fig3_descriptor, CATALOG_NAMES};
pub use strata::{
    dual_complex, dual_complex_indexed, strata_of, DivisorId, DualComplex, StrataDescriptor, Stratum, StratumId,
};

use thiserror::Error;

use crate::complex::ComplexError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("divisor `{0}` is listed twice")]
    DuplicateDivisor(DivisorId),
    #[error("stratum `{0}` duplicates an id or an (index set, tag) pair")]
    DuplicateStratum(StratumId),
    #[error("stratum `{0}` has an empty index set")]
    EmptyStratum(StratumId),
    #[error("stratum `{stratum}` refers to unknown divisor `{divisor}`")]
    UnknownDivisor { stratum: StratumId, divisor: DivisorId },
    #[error("divisor `{divisor}` has a second component `{stratum}`")]
    ReducibleDivisor { stratum: StratumId, divisor: DivisorId },
    #[error("divisor `{0}` occurs in no stratum")]
    DanglingDivisor(DivisorId),
    #[error("stratum `{stratum}` has no parent for dropping `{drop}`")]
    MissingParent { stratum: StratumId, drop: DivisorId },
    #[error("stratum `{stratum}`: parent `{parent}` for dropping `{drop}` has the wrong index set")]
    BadParent {
        stratum: StratumId,
        drop: DivisorId,
        parent: StratumId,
    },
    #[error("parent maps of stratum `{0}` do not commute")]
    NonCommutingParents(StratumId),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl BuildError {
    pub fn name(&self) -> &'static str {
        match self {
            BuildError::DuplicateDivisor(_) => "DuplicateDivisor",
            BuildError::DuplicateStratum(_) => "DuplicateStratum",
            BuildError::EmptyStratum(_) => "EmptyStratum",
            BuildError::UnknownDivisor { .. } => "UnknownDivisor",
            BuildError::ReducibleDivisor { .. } => "ReducibleDivisor",
            BuildError::DanglingDivisor(_) => "DanglingDivisor",
            BuildError::MissingParent { .. } => "MissingParent",
            BuildError::BadParent { .. } => "BadParent",
            BuildError::NonCommutingParents(_) => "NonCommutingParents",
            BuildError::UnknownName(_) => "UnknownName",
            BuildError::Complex(e) => e.name(),
        }
    }
}
