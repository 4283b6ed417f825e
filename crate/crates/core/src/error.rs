use std::path::PathBuf;

use thiserror::Error;

use crate::grid::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{path}:{line}: {source}")]
    Dataset {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("cell {0} is not part of the collection")]
    CellOutsideCollection(Cell),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("collection is not convex")]
    NotConvex,

    #[error("collection is not connected")]
    NotConnected,

    #[error("collection is empty")]
    Empty,

    #[error("no symmetric image satisfies the quadratic Gröbner basis condition")]
    ConditionFails,

    #[error("collection of rank {0} exceeds the supported maximum of 64 cells")]
    TooLarge(usize),

    #[error("computation exceeded its time limit")]
    Timeout,

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
