//! Generalized Cartan matrices, linkable Dynkin diagrams and their components.

mod cartan;
mod classify;
mod edge;
mod linkable;

use thiserror::Error;

pub use cartan::CartanMatrix;
pub use classify::{classify_components, classify_matrix, standard_matrix, ComponentType, Series};
pub use edge::{Arrow, EdgeKind};
pub use linkable::{
    link_connected_components, pairwise_linking_consistency, LinkMode, LinkableDynkinDiagram,
    LinkingViolation, SubDiagram,
};

/// Invariant violations; all indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("empty matrix")]
    Empty,
    #[error("row {row} has the wrong length")]
    NotSquare { row: usize },
    #[error("a_{i},{i} = {value}, expected 2")]
    DiagonalNotTwo { i: usize, value: i64 },
    #[error("a_{i},{j} = {value} is positive")]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("a_{i},{j} and a_{j},{i} must vanish together")]
    ZeroAsymmetry { i: usize, j: usize },
    #[error("edge ({a_ij}, {a_ji}) between {i} and {j} is not of finite or affine shape")]
    UnsupportedEdge {
        i: usize,
        j: usize,
        a_ij: i64,
        a_ji: i64,
    },
    #[error("vertex {vertex} out of range 1..={size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("vertex {vertex} cannot be linkable to itself")]
    SelfPair { vertex: usize },
    #[error("vertex {vertex} lies on two dotted edges")]
    SharedVertex { vertex: usize },
    #[error("{i} and {j} are linked but not linkable")]
    LinkedNotLinkable { i: usize, j: usize },
    #[error("linkable vertices {i} and {j} lie in the same component")]
    SameComponent { i: usize, j: usize },
}

/// Builds the Cartan matrix of the given 0-based edge list `(i, j, a_ij, a_ji)`.
pub fn cartan_from_edges(
    size: usize,
    edges: &[(usize, usize, i64, i64)],
) -> Result<CartanMatrix, DiagramError> {
    let mut rows = CartanMatrix::diagonal(size).rows();
    for &(i, j, a, b) in edges {
        if i >= size || j >= size {
            return Err(DiagramError::VertexOutOfRange {
                vertex: i.max(j) + 1,
                size,
            });
        }
        rows[i][j] = a;
        rows[j][i] = b;
    }
    CartanMatrix::new(rows)
}
