//! Cospectrality predicates, identity verifiers, NICS pair factories and
//! the exhaustive small-regular-graph search.

pub mod nics;
pub mod regression;
pub mod search;
pub mod theorems;

use crate::error::Result;
use crate::graph::{build_matrix, Graph, MatrixKind};

/// Exact cospectrality with respect to one matrix kind: equal
/// characteristic polynomials (and hence equal vertex counts).
pub fn are_cospectral_exact(g: &Graph, h: &Graph, kind: MatrixKind) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    Ok(build_matrix(g, kind).charpoly()? == build_matrix(h, kind).charpoly()?)
}
