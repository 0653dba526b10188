//! spectrajoin: exact spectral graph theory for splitting joins.
//!
//! The crate constructs the NS (neighbors-splitting) and NNS
//! (non-neighbors-splitting) joins of simple graphs, computes exact
//! characteristic polynomials and spectra of the adjacency, Laplacian,
//! signless Laplacian and normalized Laplacian matrices, checks the
//! closed-form spectrum and characteristic-polynomial identities for these
//! joins by independent computation, and manufactures verified non-regular
//! cospectral non-isomorphic graph pairs.
//!
//! Everything is immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod join;
pub mod lab;
pub mod spectra;

pub use algebra::{ExactMatrix, Poly, Rat, RatFunc};
pub use error::{Error, Result};
pub use graph::{build_matrix, make_family, Family, Graph, MatrixKind};
pub use join::{join, nns_join, ns_join, plain_join, JoinKind};
pub use spectra::{numeric_spectrum, EigenValue, Spectrum};
