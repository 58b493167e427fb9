use std::io;
use std::process::ExitCode;

use embedgraph::tokens::EmbedError;
use embedgraph::{DimensionMismatch, EmbeddingError, GraphError, MetricError, StorageError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Open { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Storage(#[from] StorageError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Dimension(#[from] DimensionMismatch),
}

impl From<EmbedError> for CliError {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::Embedding(e) => e.into(),
            EmbedError::Graph(e) => e.into(),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Embedding(EmbeddingError::UnknownToken(_)) => 2,
            CliError::Metric(MetricError::NoPath { .. } | MetricError::MissingEdge { .. }) => 3,
            CliError::Metric(MetricError::NoCorrespondingEdges) => 4,
            _ => 1,
        }
    }
}
