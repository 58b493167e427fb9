//! Embedded graphs: directed graphs whose edges carry dense embedding vectors
//! (typically word vectors naming the relation).
//!
//! An [`EmbeddedGraph`] can be translated down to a [`WeightedGraph`] by
//! scoring each edge vector against a target vector, and from there to an
//! [`EdgeGraph`] by thresholding. Distances between vertices and similarity
//! between graphs are measured with the cosine of edge vectors.
//!
//! ```
//! use embedgraph::{translate_and_threshold, EmbeddedGraph, EmbeddingVector, TranslationSpec};
//!
//! let g = EmbeddedGraph::build(
//!     ["me", "mom", "car"],
//!     vec![
//!         ("me".into(), "mom".into(), vec![0.9, 0.1]),
//!         ("me".into(), "car".into(), vec![0.1, 0.9]),
//!     ],
//!     None,
//! )?;
//! let family = EmbeddingVector::new(vec![1.0, 0.0])?;
//! let kept = translate_and_threshold(&g, &TranslationSpec::cosine(family), 0.5)?;
//! assert_eq!(kept.edge_count(), 1);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod embeddings;
pub mod fixtures;
pub mod graph;
pub mod metrics;
pub mod storage;
pub mod tokens;
pub mod translate;
pub mod vector;

pub use embeddings::{load_word_vectors, EmbeddingError, EmbeddingStore, WordVectorFormat};
pub use graph::{
    EdgeGraph, EdgeKey, EmbeddedGraph, GraphError, GraphStats, VertexId, WeightedGraph,
};
pub use metrics::{
    edge_correspondence, edge_distance, graph_similarity, path_distance, route_distance,
    CorrespondenceReport, Direction, MetricError, PathResult,
};
pub use storage::{
    from_representation, to_representation, GraphRepresentation, RepresentationKind, StorageError,
};
pub use tokens::TokenGraph;
pub use translate::{threshold, translate, translate_and_threshold, Metric, TranslationSpec};
pub use vector::{cosine, dot, DimensionMismatch, EmbeddingVector};
