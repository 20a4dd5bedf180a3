//! Crate-wide error type.

use crate::graph::EdgeId;
use thiserror::Error;

/// Why a graph admits no transitive orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationFailure {
    /// Forcing assigned both directions to this edge.
    Contradiction { edge: (usize, usize) },
    /// The forced orientation violates transitivity at this triple:
    /// a < b and b < c were forced but ac is a non-edge.
    NotTransitive { a: usize, b: usize, c: usize },
}

/// Errors returned by fallible operations.
///
/// Mathematical refusals that certify a negative answer (non-comparability,
/// odd conflict cycles, unsatisfiable formulas) are ordinary variants; the
/// pipeline converts them into refusal outcomes with witnesses. Violations
/// of internal invariants that theorems rule out are not errors; they
/// panic, loudly, as implementation bugs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The relation handed to `linear_extension` contains a directed cycle.
    #[error("relation contains a cycle through {cycle:?}")]
    CyclicRelation { cycle: Vec<usize> },

    /// A relation failed strict-order validation.
    #[error("not a strict order: {0}")]
    InvalidOrder(String),

    /// Operands have different carrier sizes.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An `EdgeId` does not belong to the host split graph.
    #[error("{0:?} is not an edge of the host")]
    UnknownEdge(EdgeId),

    /// The input graph has no transitive orientation.
    #[error("graph is not a comparability graph ({0:?})")]
    NotComparability(OrientationFailure),

    /// The conflict graph is not bipartite; carries an odd cycle.
    #[error("conflict graph contains an odd cycle of {} edges", cycle.len())]
    OddCycle { cycle: Vec<EdgeId> },

    /// The formula is unsatisfiable; `variable` has x ⇔ ¬x.
    #[error("formula unsatisfiable (variable {variable})")]
    Unsatisfiable { variable: usize },

    /// No threshold completion exists (the subset has an alternating cycle
    /// within the reduced host).
    #[error("no threshold completion exists")]
    NoCompletion,

    /// The order is not an interval order: a < x and c < y but neither
    /// a < y nor c < x, so the down-sets of x and y are incomparable (a 2+2).
    #[error("not an interval order: 2+2 witnessed by ({a},{x}),({c},{y})")]
    NotIntervalOrder { x: usize, y: usize, a: usize, c: usize },

    /// An exhaustive oracle was asked to exceed its enumeration bound.
    #[error("instance too large for exhaustive oracle (bound {bound}, got {requested})")]
    TooLarge { bound: usize, requested: usize },

    /// Malformed text input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
