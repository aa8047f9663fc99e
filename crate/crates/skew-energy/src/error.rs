use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,

    #[error("not bicyclic")]
    NotBicyclic,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{0} not in graph")]
    MissingItem(String),

    #[error("evenly linear subgraphs need an even vertex count, got {0}")]
    OddSubgraphOrder(usize),

    #[error("orders differ: {left} vs {right}")]
    OrdersDiffer { left: usize, right: usize },

    #[error("oriented graphs have different underlying graphs")]
    DifferentBase,

    #[error("{0} is not a cycle of the graph")]
    NotACycle(String),

    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),

    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    QuadratureNoConvergence { requested: f64, achieved: f64 },

    #[error("orientation not realizable: {0}")]
    OrientationNotRealizable(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("graph order {n} exceeds the canonical-form cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
