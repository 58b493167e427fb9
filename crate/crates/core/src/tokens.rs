//! Graphs whose edges are labeled by vocabulary tokens, before the tokens are
//! resolved to vectors through an [`EmbeddingStore`].
//!
//! The JSON form mirrors the graph documents, with `"token"` on each edge:
//! `{"vertices": [..], "edges": [{"source": s, "target": t, "token": w}]}`.

use std::collections::BTreeMap;
use std::io::Read;

use serde::Deserialize;
use thiserror::Error;

use crate::embeddings::{EmbeddingError, EmbeddingStore};
use crate::graph::{EdgeKey, EmbeddedGraph, GraphError};
use crate::storage::StorageError;

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TokenEdge {
    pub source: String,
    pub target: String,
    pub token: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TokenGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<TokenEdge>,
}

impl TokenGraph {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        Self {
            vertices: vertices.iter().map(|v| (*v).to_owned()).collect(),
            edges: edges
                .iter()
                .map(|&(s, t, w)| TokenEdge {
                    source: s.to_owned(),
                    target: t.to_owned(),
                    token: w.to_owned(),
                })
                .collect(),
        }
    }

    pub fn read_json<R: Read>(reader: R) -> Result<Self, StorageError> {
        Ok(serde_json::from_reader(reader)?)
    }

    /// Resolve every token through `store`. Fails on the first token the
    /// model does not know.
    pub fn embed(&self, store: &EmbeddingStore) -> Result<EmbeddedGraph, EmbedError> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let vector = store.lookup(&e.token)?;
            edges.push((
                e.source.clone(),
                e.target.clone(),
                vector.as_slice().to_vec(),
            ));
        }
        Ok(EmbeddedGraph::build(
            self.vertices.iter().cloned(),
            edges,
            Some(store.dim()),
        )?)
    }

    /// Edge to token map, as used for token-labeled DOT output.
    pub fn token_map(&self) -> BTreeMap<EdgeKey, String> {
        self.edges
            .iter()
            .map(|e| (EdgeKey::named(&e.source, &e.target), e.token.clone()))
            .collect()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.token.as_str())
    }
}
