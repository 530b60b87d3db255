use thiserror::Error;

/// Errors reported by graph construction, the metric oracles, and exact
/// arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("vertex label {label} is outside 1..={order}")]
    LabelOutOfRange { label: usize, order: usize },
    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("link ({0}, {1}) is already present")]
    DuplicateEdge(usize, usize),
    #[error("link ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("graph of order {order} is too small here (need at least {needed} vertices)")]
    GraphTooSmall { order: usize, needed: usize },
    #[error("graph has no links")]
    NoLinks,
    #[error("graph is complete: there is no link left to add")]
    CompleteGraph,
    #[error("parameter {name}={value} is outside {min}..={max}")]
    ParamRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("exact arithmetic overflowed the 128-bit mantissa budget")]
    Overflow,
}
