//! The three graph kinds: embedded (vector per edge), weighted (scalar per
//! edge) and bare edge graphs.
//!
//! All three are directed and simple: at most one edge per ordered pair of
//! vertices, self-loops allowed. Vertices and edges iterate in sorted order
//! (vertices by name, edges by `(source, target)`), so anything derived from a
//! graph is deterministic. Values are immutable once built.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::vector::{EmbeddingVector, VectorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex names must be non-empty")]
    EmptyVertexName,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgeKey),
    #[error("edge {edge} refers to unknown vertex `{missing}`")]
    UnknownEndpoint { edge: EdgeKey, missing: String },
    #[error("edge {edge}: vector has dimension {found}, graph dimension is {expected}")]
    DimensionMismatch {
        edge: EdgeKey,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge}: zero vector")]
    ZeroVector { edge: EdgeKey },
    #[error("edge {edge}: component {index} is not finite")]
    NonFiniteComponent { edge: EdgeKey, index: usize },
    #[error("edge {edge}: invalid vector ({source})")]
    InvalidVector { edge: EdgeKey, source: VectorError },
    #[error("edge {edge}: weight is not finite")]
    NonFiniteWeight { edge: EdgeKey },
    #[error("graph dimension must be at least 1")]
    ZeroDimension,
    #[error("a graph without edges needs an explicit dimension")]
    MissingDimension,
}

/// Name of a vertex. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if name.is_empty() {
            return Err(GraphError::EmptyVertexName);
        }
        Ok(Self(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// An ordered `(source, target)` pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    pub source: VertexId,
    pub target: VertexId,
}

impl EdgeKey {
    pub fn new(source: VertexId, target: VertexId) -> Self {
        Self { source, target }
    }

    /// Convenience for tests and fixtures; panics on empty names.
    pub fn named(source: &str, target: &str) -> Self {
        Self::new(
            VertexId::new(source).expect("non-empty source"),
            VertexId::new(target).expect("non-empty target"),
        )
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.target.clone(), self.source.clone())
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

/// Vertex and edge counts plus the embedding dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub dim: usize,
}

fn vertex_set<I, S>(names: I) -> Result<BTreeSet<VertexId>, GraphError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut set = BTreeSet::new();
    for name in names {
        let id = VertexId::new(name)?;
        if set.contains(&id) {
            return Err(GraphError::DuplicateVertex(id.0));
        }
        set.insert(id);
    }
    Ok(set)
}

/// Resolve an edge's endpoints against the vertex set and reject repeats.
fn edge_key<V>(
    vertices: &BTreeSet<VertexId>,
    existing: &BTreeMap<EdgeKey, V>,
    source: String,
    target: String,
) -> Result<EdgeKey, GraphError> {
    let key = EdgeKey::new(VertexId::new(source)?, VertexId::new(target)?);
    for end in [&key.source, &key.target] {
        if !vertices.contains(end) {
            return Err(GraphError::UnknownEndpoint {
                missing: end.0.clone(),
                edge: key.clone(),
            });
        }
    }
    if existing.contains_key(&key) {
        return Err(GraphError::DuplicateEdge(key));
    }
    Ok(key)
}

fn edge_vector(
    edge: &EdgeKey,
    components: Vec<f64>,
    dim: usize,
) -> Result<EmbeddingVector, GraphError> {
    if components.len() != dim {
        return Err(GraphError::DimensionMismatch {
            edge: edge.clone(),
            expected: dim,
            found: components.len(),
        });
    }
    EmbeddingVector::new(components).map_err(|e| match e {
        VectorError::ZeroVector => GraphError::ZeroVector { edge: edge.clone() },
        VectorError::NonFiniteComponent { index } => GraphError::NonFiniteComponent {
            edge: edge.clone(),
            index,
        },
        other => GraphError::InvalidVector {
            edge: edge.clone(),
            source: other,
        },
    })
}

/// A directed graph with one embedding vector per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeKey, EmbeddingVector>,
    dim: usize,
}

impl EmbeddedGraph {
    /// Validate and assemble a graph.
    ///
    /// `dim` is inferred from the first edge when `None`; an edgeless graph
    /// must be given one explicitly.
    pub fn build<I, S>(
        vertices: I,
        edges: Vec<(String, String, Vec<f64>)>,
        dim: Option<usize>,
    ) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = vertex_set(vertices)?;
        let dim = match (dim, edges.first()) {
            (Some(d), _) => d,
            (None, Some((_, _, v))) => v.len(),
            (None, None) => return Err(GraphError::MissingDimension),
        };
        if dim == 0 {
            return Err(GraphError::ZeroDimension);
        }
        let mut map = BTreeMap::new();
        for (source, target, components) in edges {
            let key = edge_key(&vertices, &map, source, target)?;
            let vector = edge_vector(&key, components, dim)?;
            map.insert(key, vector);
        }
        Ok(Self {
            vertices,
            edges: map,
            dim,
        })
    }

    /// Assemble from already-validated vectors.
    pub fn from_vectors<I, S>(
        vertices: I,
        edges: Vec<(EdgeKey, EmbeddingVector)>,
        dim: usize,
    ) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if dim == 0 {
            return Err(GraphError::ZeroDimension);
        }
        let vertices = vertex_set(vertices)?;
        let mut map = BTreeMap::new();
        for (key, vector) in edges {
            let key = edge_key(&vertices, &map, key.source.0, key.target.0)?;
            if vector.dim() != dim {
                return Err(GraphError::DimensionMismatch {
                    edge: key,
                    expected: dim,
                    found: vector.dim(),
                });
            }
            map.insert(key, vector);
        }
        Ok(Self {
            vertices,
            edges: map,
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            dim: self.dim,
        }
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &VertexId> + Clone {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (&EdgeKey, &EmbeddingVector)> + Clone {
        self.edges.iter()
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.vertices.contains(name)
    }

    pub fn vector(&self, edge: &EdgeKey) -> Option<&EmbeddingVector> {
        self.edges.get(edge)
    }

    /// Vertices that appear in no edge.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let touched: BTreeSet<&VertexId> = self
            .edges
            .keys()
            .flat_map(|k| [&k.source, &k.target])
            .collect();
        self.vertices
            .iter()
            .filter(|v| !touched.contains(v))
            .cloned()
            .collect()
    }

    /// Add the reverse of every edge whose reverse is absent, carrying the
    /// same vector. Existing reverse edges keep their own vectors.
    pub fn symmetrized(&self) -> Self {
        let mut edges = self.edges.clone();
        for (key, vector) in &self.edges {
            edges
                .entry(key.reversed())
                .or_insert_with(|| vector.clone());
        }
        Self {
            vertices: self.vertices.clone(),
            edges,
            dim: self.dim,
        }
    }

    pub fn topology(&self) -> EdgeGraph {
        EdgeGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.keys().cloned().collect(),
        }
    }

    pub(crate) fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }
}

/// A directed graph with one finite scalar weight per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeKey, f64>,
}

impl WeightedGraph {
    pub fn build<I, S>(vertices: I, edges: Vec<(String, String, f64)>) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = vertex_set(vertices)?;
        let mut map = BTreeMap::new();
        for (source, target, weight) in edges {
            let key = edge_key(&vertices, &map, source, target)?;
            if !weight.is_finite() {
                return Err(GraphError::NonFiniteWeight { edge: key });
            }
            map.insert(key, weight);
        }
        Ok(Self {
            vertices,
            edges: map,
        })
    }

    /// Used by translation, which preserves an already-validated topology.
    pub(crate) fn from_parts(vertices: BTreeSet<VertexId>, edges: BTreeMap<EdgeKey, f64>) -> Self {
        debug_assert!(edges.values().all(|w| w.is_finite()));
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &VertexId> + Clone {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (&EdgeKey, f64)> + Clone {
        self.edges.iter().map(|(k, &w)| (k, w))
    }

    pub fn weight(&self, edge: &EdgeKey) -> Option<f64> {
        self.edges.get(edge).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }
}

/// Bare directed topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeKey>,
}

impl EdgeGraph {
    pub fn build<I, S>(vertices: I, edges: Vec<(String, String)>) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = vertex_set(vertices)?;
        let mut map: BTreeMap<EdgeKey, ()> = BTreeMap::new();
        for (source, target) in edges {
            let key = edge_key(&vertices, &map, source, target)?;
            map.insert(key, ());
        }
        Ok(Self {
            vertices,
            edges: map.into_keys().collect(),
        })
    }

    pub(crate) fn from_parts(vertices: BTreeSet<VertexId>, edges: BTreeSet<EdgeKey>) -> Self {
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &VertexId> + Clone {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &EdgeKey> + Clone {
        self.edges.iter()
    }

    pub fn contains_edge(&self, edge: &EdgeKey) -> bool {
        self.edges.contains(edge)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}
