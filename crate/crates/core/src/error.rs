use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("edge ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),

    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("expected an assignment for {expected} vertices, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("vertex {0} has no color")]
    MissingColor(usize),

    #[error("vertex {0} has color 0; colors are positive integers")]
    NonPositiveColor(usize),

    #[error("vertex {0} has an empty color set")]
    EmptyColorSet(usize),

    #[error("vertex {0} has capacity 0; capacities are positive")]
    ZeroCapacity(usize),

    #[error("vertex {v} uses {size} colors but its capacity is {capacity}")]
    CapacityExceeded {
        v: usize,
        size: usize,
        capacity: usize,
    },

    #[error("{what}: {n} vertices exceeds the guard of {limit} (use force to override)")]
    InstanceTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("input is not a valid {variant} coloring ({violations} violations)")]
    InvalidColoring {
        variant: &'static str,
        violations: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
