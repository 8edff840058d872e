//! Error type shared by every module in the crate.

use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error enum. Variants are grouped by origin: data ingestion,
/// shape/precondition violations, configuration, and numerics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed csv in {path}: {message}")]
    Csv { path: PathBuf, message: String },
    #[error("row {row}, column '{column}': {message}")]
    Cell {
        row: usize,
        column: String,
        message: String,
    },
    #[error("duplicate column name '{0}' in header")]
    DuplicateColumn(String),
    #[error("label column '{0}' not found in header")]
    LabelColumnMissing(String),
    #[error("labels are required for this operation")]
    LabelsMissing,
    #[error("class '{class}' has {count} samples, need at least {required}")]
    ClassTooSmall {
        class: String,
        count: usize,
        required: usize,
    },
    #[error("split leaves an empty {part} set")]
    EmptySplit { part: &'static str },
    #[error("feature count mismatch: expected {expected}, found {found}")]
    FeatureCountMismatch { expected: usize, found: usize },
    #[error("feature '{0}' has zero variance; prune constant features first")]
    ZeroVariance(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("need at least {required} features, found {found}")]
    TooFewFeatures { required: usize, found: usize },
    #[error("similarity matrix must be symmetric")]
    AsymmetricMatrix,
    #[error("similarity matrix contains non-finite entries")]
    NonFiniteMatrix,
    #[error("cardinality {k} exceeds available feature count {n}")]
    CardinalityTooLarge { k: usize, n: usize },
    #[error("linear system is singular despite regularization")]
    SingularSystem,
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    /// True when the error stems from how the caller configured the run
    /// rather than from the environment (IO, parsing, numerics).
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::Io { .. }
                | Error::Write { .. }
                | Error::Csv { .. }
                | Error::Cell { .. }
                | Error::DuplicateColumn(_)
                | Error::LabelColumnMissing(_)
                | Error::SingularSystem
                | Error::Numeric(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
