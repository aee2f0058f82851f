//! Error type shared by all operations.

use crate::{Element, SigmaSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A collection contains both an element and its antielement; by the
    /// axiom of exclusion no σ-set may hold such a pair.
    #[error("exclusion violation: {element} and {antielement} cannot be co-members")]
    ExclusionViolation {
        element: Element,
        antielement: Element,
    },

    #[error("{set} is not an ordered-pair encoding: {reason}")]
    NotAPair { set: SigmaSet, reason: String },

    #[error("pair ({x}, {y}) lies outside the carriers")]
    PairOutOfCarrier { x: Element, y: Element },

    #[error("relation is not total: no value for {0}")]
    NotTotal(Element),

    #[error("relation is not single-valued at {0}")]
    NotSingleValued(Element),

    /// No antiset exists; `blocker` is the first member (or value) without
    /// an antielement.
    #[error("no antiset: {blocker} has no antielement")]
    NoAntiset { blocker: Element },

    #[error("function is not bijective")]
    NotBijective,

    #[error("empty composition: ran(g) does not meet dom(f)")]
    EmptyComposition,

    /// A table entry left the space it was computed over.
    #[error("operation is not closed: {x} and {y} map outside the space")]
    NotClosed { x: SigmaSet, y: SigmaSet },
}
