//! Braiding matrices over roots of unity: construction, verification, search and direct sums.

mod construct;
mod matrix;
mod oracle;
mod root;

use thiserror::Error;

pub use construct::{construct, diagonal_exponents};
pub use matrix::{ord_diagonal, verify, BraidingMatrix, Failure, VerificationReport, VerifyMode};
pub use oracle::{brute_force_exists, OracleOutcome, ORACLE_MAX_VERTICES};
pub use root::RootExpr;

use crate::diagram::{LinkMode, LinkableDynkinDiagram};
use crate::existence::ExistenceError;
use crate::families::ExcludedShape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error("inadmissible root order {d}: {reason}")]
    InadmissibleD { d: u64, reason: String },
    #[error("diagonal values disagree across the edge {u}-{v}")]
    PathInconsistency { u: usize, v: usize },
    #[error("vertex {vertex} is not reachable from the start vertex")]
    NotLinkConnected { vertex: usize },
    #[error("no labelling of the linkable pairs through {i} and {j} avoids neighbours")]
    NoClassFourLabelling { i: usize, j: usize },
    #[error("no braiding matrix under the theorem's conditions:\n{0}")]
    NotConstructible(String),
    #[error("{0} is an excluded shape; use its explicit matrix")]
    Excluded(ExcludedShape),
    #[error("self-linked diagrams are not supported here")]
    SelfLinkMode,
    #[error("vertex {vertex} out of range 1..={size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error(transparent)]
    Existence(#[from] ExistenceError),
    #[error("diagram has {size} vertices; the search handles at most {limit}")]
    ScaleExceeded { size: usize, limit: usize },
    #[error("root orders {left} and {right} do not match")]
    OrderMismatch { left: u64, right: u64 },
    #[error("row of length {found}, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("parts and diagrams differ in number or size")]
    PartMismatch,
    #[error("cannot start thread pool: {0}")]
    ThreadPool(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Block sum of braiding matrices for the disjoint union of their diagrams.
///
/// Cross-block entries follow the off-diagonal classes of the construction with
/// fresh parameters, after renumbering each part's own parameters apart. Root
/// orders are lifted to their lcm; with `homogeneous` they must agree.
pub fn direct_sum(
    parts: &[(BraidingMatrix, LinkableDynkinDiagram)],
    homogeneous: bool,
) -> Result<(BraidingMatrix, LinkableDynkinDiagram), BraidingError> {
    use num_integer::Integer;
    let first = parts.first().ok_or(BraidingError::PartMismatch)?;
    if parts
        .iter()
        .any(|(b, d)| b.size() != d.size() || d.mode() == LinkMode::SelfLink)
    {
        return Err(BraidingError::PartMismatch);
    }
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    let d0 = first.0.root_order();
    if homogeneous {
        if let Some((b, _)) = parts.iter().find(|(b, _)| b.root_order() != d0) {
            return Err(BraidingError::OrderMismatch {
                left: d0,
                right: b.root_order(),
            });
        }
    }
    let q_order = parts
        .iter()
        .fold(1u64, |acc, (b, _)| acc.lcm(&b.root_order()));
    let diagrams: Vec<&LinkableDynkinDiagram> = parts.iter().map(|(_, d)| d).collect();
    let union = LinkableDynkinDiagram::disjoint_union(&diagrams);
    let s = union.size();
    let mut entries: Vec<Vec<Option<RootExpr>>> = vec![vec![None; s]; s];
    let (mut base, mut z_offset) = (0usize, 0u32);
    for (b, _) in parts {
        let lifted = b.lift(q_order)?.map(|e| e.shift_parameters(z_offset));
        for i in 0..b.size() {
            for j in 0..b.size() {
                entries[base + i][base + j] = Some(lifted.get(i, j).clone());
            }
        }
        z_offset += b.max_parameter();
        base += b.size();
    }
    construct::fill_off_diagonal(&union, &mut entries, z_offset + 1)?;
    let rows = entries
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("all set")).collect())
        .collect();
    Ok((BraidingMatrix::new(q_order, rows)?, union))
}
