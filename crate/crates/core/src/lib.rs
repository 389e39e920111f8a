//! Dual complexes of stratified divisor data, as simplicial posets, with the
//! combinatorial moves used to compare them: stellar and barycentric
//! subdivision, blow-up attachments, elementary, contraction-driven and
//! equivariant collapses, and exact homology over `Z` and `Q` as an invariance
//! check.
//!
//! The crate is organized by capability:
//!
//! - [`complex`]: cells, complexes, stars, links, joins and cones
//! - [`builders`]: dual complexes from stratification data, and a catalog
//! - [`subdivision`]: stellar and barycentric subdivision, cone attachment
//! - [`collapse`]: free pairs, collapse sequences and collapse strategies
//! - [`homology`]: boundary matrices, integer and rational homology
//! - [`io`] and [`cli`]: the JSON documents and the `dualcx` command

pub mod builders;
pub mod cli;
pub mod collapse;
pub mod complex;
pub mod homology;
pub mod io;
pub mod isomorphism;
pub mod subdivision;

use thiserror::Error;

pub use builders::{catalog, dual_complex, BuildError, StrataDescriptor};
pub use collapse::{CollapseError, CollapseSequence, FreePair};
pub use complex::{CellId, Complex, ComplexError, VertexLabel};
pub use homology::HomologyError;
pub use io::DocumentError;
pub use subdivision::SubdivisionError;

/// Any error raised by the library, tagged with a stable name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error(transparent)]
    Collapse(#[from] CollapseError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Document(e) => e.name(),
            Error::Complex(e) => e.name(),
            Error::Build(e) => e.name(),
            Error::Subdivision(e) => e.name(),
            Error::Collapse(e) => e.name(),
            Error::Homology(e) => e.name(),
        }
    }
}
