//! Physical layouts for embedded graphs and their interchange formats.
//!
//! Three in-memory layouts are offered:
//!
//! * [`AdjacencyMatrixRep`]: `N_v x N_v` presence bits plus a dense
//!   `N_v x N_v x d` vector tensor. Edge presence is a single index lookup,
//!   storage is quadratic in the vertex count whatever the edge count.
//! * [`EdgeListRep`]: one `(source, target, vector)` row per edge. Storage
//!   is `O(N_e * d)`.
//! * [`VectorLabeledEdgeListRep`]: rows point into a table of distinct
//!   vectors, so edges that carry the same relation share one copy. This is
//!   purely an encoding; loading always materializes a vector per edge.
//!
//! All three convert back to an identical [`EmbeddedGraph`], isolated
//! vertices and dimension included.

pub mod dot;
pub mod json;
pub mod tsv;

use std::collections::HashMap;
use std::io;
use std::mem::size_of;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeKey, EmbeddedGraph, GraphError, VertexId};
use crate::vector::EmbeddingVector;

/// Default vertex cap for the dense layout.
pub const DEFAULT_DENSE_CAP: usize = 4096;

#[derive(Debug, Error)]
pub enum StorageError {
    #[error("{vertices} vertices exceed the dense-layout cap of {cap}")]
    TooLargeForDense { vertices: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("row {row}: vector id {id} is out of range (table has {len} vectors)")]
    VectorIdOutOfRange { row: usize, id: usize, len: usize },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("edge {edge} has no label")]
    MissingLabel { edge: EdgeKey },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<serde_json::Error> for StorageError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return StorageError::Io(e.into());
        }
        let (line, column) = (e.line(), e.column());
        let text = e.to_string();
        let suffix = format!(" at line {line} column {column}");
        let message = text.strip_suffix(&suffix).unwrap_or(&text).to_owned();
        StorageError::Json {
            line,
            column,
            message,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationKind {
    Adjacency,
    EdgeList,
    VectorLabeled,
}

impl FromStr for RepresentationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adjacency" | "matrix" => Ok(Self::Adjacency),
            "edge-list" | "edge_list" | "edges" => Ok(Self::EdgeList),
            "vle" | "vector-labeled" => Ok(Self::VectorLabeled),
            other => Err(format!(
                "unknown representation `{other}` (expected adjacency, edge-list or vle)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrixRep {
    pub dim: usize,
    pub vertex_order: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    /// Row-major, `presence[i * n + j]` for edge `i -> j`.
    presence: Vec<bool>,
    /// Row-major `n x n x dim`; zeros where there is no edge.
    vectors: Vec<f64>,
}

impl AdjacencyMatrixRep {
    pub fn vertex_count(&self) -> usize {
        self.vertex_order.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Constant-time presence check by vertex position.
    pub fn is_present(&self, source: usize, target: usize) -> bool {
        self.presence[source * self.vertex_count() + target]
    }

    pub fn has_edge(&self, source: &str, target: &str) -> bool {
        match (self.index_of(source), self.index_of(target)) {
            (Some(i), Some(j)) => self.is_present(i, j),
            _ => false,
        }
    }

    pub fn vector(&self, source: usize, target: usize) -> Option<&[f64]> {
        if !self.is_present(source, target) {
            return None;
        }
        let start = (source * self.vertex_count() + target) * self.dim;
        Some(&self.vectors[start..start + self.dim])
    }

    pub fn present_cells(&self) -> usize {
        self.presence.iter().filter(|&&p| p).count()
    }

    /// Assemble from explicit cells, e.g. when decoding a file.
    pub fn from_cells(
        dim: usize,
        vertex_order: Vec<VertexId>,
        cells: Vec<(usize, usize, EmbeddingVector)>,
    ) -> Result<Self, GraphError> {
        let n = vertex_order.len();
        let mut rep = Self::empty(dim, vertex_order)?;
        for (i, j, vector) in cells {
            assert!(i < n && j < n, "cell ({i}, {j}) outside a {n}x{n} matrix");
            let key = EdgeKey::new(rep.vertex_order[i].clone(), rep.vertex_order[j].clone());
            if vector.dim() != dim {
                return Err(GraphError::DimensionMismatch {
                    edge: key,
                    expected: dim,
                    found: vector.dim(),
                });
            }
            if rep.presence[i * n + j] {
                return Err(GraphError::DuplicateEdge(key));
            }
            rep.set(i, j, &vector);
        }
        Ok(rep)
    }

    fn empty(dim: usize, vertex_order: Vec<VertexId>) -> Result<Self, GraphError> {
        let n = vertex_order.len();
        let mut index = HashMap::with_capacity(n);
        for (i, v) in vertex_order.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.to_string()));
            }
        }
        Ok(Self {
            dim,
            vertex_order,
            index,
            presence: vec![false; n * n],
            vectors: vec![0.0; n * n * dim],
        })
    }

    fn set(&mut self, i: usize, j: usize, vector: &EmbeddingVector) {
        let n = self.vertex_count();
        self.presence[i * n + j] = true;
        let start = (i * n + j) * self.dim;
        self.vectors[start..start + self.dim].copy_from_slice(vector.as_slice());
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRow {
    pub source: VertexId,
    pub target: VertexId,
    pub vector: EmbeddingVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListRep {
    pub dim: usize,
    pub rows: Vec<EdgeRow>,
    pub isolated_vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledRow {
    pub source: VertexId,
    pub target: VertexId,
    pub vector_id: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorLabeledEdgeListRep {
    pub dim: usize,
    pub rows: Vec<LabeledRow>,
    /// Distinct vectors (bitwise), in order of first use.
    pub vector_table: Vec<EmbeddingVector>,
    pub isolated_vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphRepresentation {
    Adjacency(AdjacencyMatrixRep),
    EdgeList(EdgeListRep),
    VectorLabeled(VectorLabeledEdgeListRep),
}

impl GraphRepresentation {
    pub fn kind(&self) -> RepresentationKind {
        match self {
            Self::Adjacency(_) => RepresentationKind::Adjacency,
            Self::EdgeList(_) => RepresentationKind::EdgeList,
            Self::VectorLabeled(_) => RepresentationKind::VectorLabeled,
        }
    }

    /// Approximate payload size in bytes. Vertex names are counted once in a
    /// shared name table; rows refer to vertices by index.
    pub fn storage_bytes(&self) -> usize {
        const F: usize = size_of::<f64>();
        const IDX: usize = size_of::<usize>();
        let names = |vs: &mut dyn Iterator<Item = &VertexId>| -> usize {
            vs.map(|v| v.as_str().len() + IDX).sum()
        };
        match self {
            Self::Adjacency(rep) => {
                let n = rep.vertex_count();
                names(&mut rep.vertex_order.iter()) + n * n * (1 + rep.dim * F)
            }
            Self::EdgeList(rep) => {
                let mut vs: Vec<&VertexId> = rep
                    .rows
                    .iter()
                    .flat_map(|r| [&r.source, &r.target])
                    .chain(&rep.isolated_vertices)
                    .collect();
                vs.sort();
                vs.dedup();
                names(&mut vs.into_iter()) + rep.rows.len() * (2 * IDX + rep.dim * F)
            }
            Self::VectorLabeled(rep) => {
                let mut vs: Vec<&VertexId> = rep
                    .rows
                    .iter()
                    .flat_map(|r| [&r.source, &r.target])
                    .chain(&rep.isolated_vertices)
                    .collect();
                vs.sort();
                vs.dedup();
                names(&mut vs.into_iter())
                    + rep.rows.len() * 3 * IDX
                    + rep.vector_table.len() * rep.dim * F
            }
        }
    }
}

pub fn to_representation(
    graph: &EmbeddedGraph,
    kind: RepresentationKind,
) -> Result<GraphRepresentation, StorageError> {
    to_representation_capped(graph, kind, DEFAULT_DENSE_CAP)
}

/// As [`to_representation`], refusing the dense layout above `dense_cap`
/// vertices.
pub fn to_representation_capped(
    graph: &EmbeddedGraph,
    kind: RepresentationKind,
    dense_cap: usize,
) -> Result<GraphRepresentation, StorageError> {
    Ok(match kind {
        RepresentationKind::Adjacency => {
            GraphRepresentation::Adjacency(adjacency(graph, dense_cap)?)
        }
        RepresentationKind::EdgeList => GraphRepresentation::EdgeList(edge_list(graph)),
        RepresentationKind::VectorLabeled => {
            GraphRepresentation::VectorLabeled(vector_labeled(graph))
        }
    })
}

fn adjacency(graph: &EmbeddedGraph, cap: usize) -> Result<AdjacencyMatrixRep, StorageError> {
    let n = graph.stats().vertices;
    if n > cap {
        return Err(StorageError::TooLargeForDense { vertices: n, cap });
    }
    let mut rep = AdjacencyMatrixRep::empty(graph.dim(), graph.vertices().cloned().collect())?;
    for (key, vector) in graph.edges() {
        let i = rep.index[&key.source];
        let j = rep.index[&key.target];
        rep.set(i, j, vector);
    }
    Ok(rep)
}

pub fn edge_list(graph: &EmbeddedGraph) -> EdgeListRep {
    EdgeListRep {
        dim: graph.dim(),
        rows: graph
            .edges()
            .map(|(k, v)| EdgeRow {
                source: k.source.clone(),
                target: k.target.clone(),
                vector: v.clone(),
            })
            .collect(),
        isolated_vertices: graph.isolated_vertices(),
    }
}

pub fn vector_labeled(graph: &EmbeddedGraph) -> VectorLabeledEdgeListRep {
    let mut ids: HashMap<&EmbeddingVector, usize> = HashMap::new();
    let mut table = Vec::new();
    let mut rows = Vec::with_capacity(graph.stats().edges);
    for (key, vector) in graph.edges() {
        let id = *ids.entry(vector).or_insert_with(|| {
            table.push(vector.clone());
            table.len() - 1
        });
        rows.push(LabeledRow {
            source: key.source.clone(),
            target: key.target.clone(),
            vector_id: id,
        });
    }
    VectorLabeledEdgeListRep {
        dim: graph.dim(),
        rows,
        vector_table: table,
        isolated_vertices: graph.isolated_vertices(),
    }
}

fn list_vertices<'a>(
    rows: impl Iterator<Item = (&'a VertexId, &'a VertexId)>,
    isolated: &'a [VertexId],
) -> Vec<String> {
    let mut names: Vec<String> = rows
        .flat_map(|(s, t)| [s, t])
        .chain(isolated)
        .map(|v| v.as_str().to_owned())
        .collect();
    names.sort();
    names.dedup();
    names
}

pub fn from_representation(rep: &GraphRepresentation) -> Result<EmbeddedGraph, StorageError> {
    match rep {
        GraphRepresentation::Adjacency(m) => {
            let n = m.vertex_count();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if let Some(v) = m.vector(i, j) {
                        edges.push((
                            m.vertex_order[i].as_str().to_owned(),
                            m.vertex_order[j].as_str().to_owned(),
                            v.to_vec(),
                        ));
                    }
                }
            }
            let names = m.vertex_order.iter().map(|v| v.as_str().to_owned());
            Ok(EmbeddedGraph::build(names, edges, Some(m.dim))?)
        }
        GraphRepresentation::EdgeList(l) => {
            let names = list_vertices(
                l.rows.iter().map(|r| (&r.source, &r.target)),
                &l.isolated_vertices,
            );
            let edges = l
                .rows
                .iter()
                .map(|r| {
                    (
                        EdgeKey::new(r.source.clone(), r.target.clone()),
                        r.vector.clone(),
                    )
                })
                .collect();
            Ok(EmbeddedGraph::from_vectors(names, edges, l.dim)?)
        }
        GraphRepresentation::VectorLabeled(l) => {
            let names = list_vertices(
                l.rows.iter().map(|r| (&r.source, &r.target)),
                &l.isolated_vertices,
            );
            let mut edges = Vec::with_capacity(l.rows.len());
            for (row, r) in l.rows.iter().enumerate() {
                let vector =
                    l.vector_table
                        .get(r.vector_id)
                        .ok_or(StorageError::VectorIdOutOfRange {
                            row,
                            id: r.vector_id,
                            len: l.vector_table.len(),
                        })?;
                edges.push((
                    EdgeKey::new(r.source.clone(), r.target.clone()),
                    vector.clone(),
                ));
            }
            Ok(EmbeddedGraph::from_vectors(names, edges, l.dim)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str, t: &str, c: &[f64]) -> (String, String, Vec<f64>) {
        (s.into(), t.into(), c.to_vec())
    }

    fn sample() -> EmbeddedGraph {
        EmbeddedGraph::build(
            ["a", "b", "c", "lone"],
            vec![
                e("a", "b", &[1.0, 2.0]),
                e("b", "c", &[1.0, 2.0]),
                e("c", "a", &[-0.5, 0.25]),
                e("c", "c", &[0.0, 1.0]),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn edge_list_rows_and_isolated() {
        let g = EmbeddedGraph::build(["a", "b"], vec![e("a", "b", &[1.0])], None).unwrap();
        let rep = edge_list(&g);
        assert_eq!(rep.rows.len(), 1);
        assert!(rep.isolated_vertices.is_empty());
    }

    #[test]
    fn vle_shares_identical_vectors() {
        let rep = vector_labeled(&sample());
        assert_eq!(rep.rows.len(), 4);
        assert_eq!(rep.vector_table.len(), 3);
        assert_eq!(rep.rows[0].vector_id, rep.rows[1].vector_id);
    }

    #[test]
    fn adjacency_presence() {
        let g = sample();
        let GraphRepresentation::Adjacency(m) =
            to_representation(&g, RepresentationKind::Adjacency).unwrap()
        else {
            unreachable!()
        };
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.present_cells(), 4);
        assert!(m.has_edge("a", "b"));
        assert!(!m.has_edge("b", "a"));
        assert!(m.has_edge("c", "c"));
        assert!(!m.has_edge("nope", "a"));
    }

    #[test]
    fn every_kind_round_trips() {
        let g = sample();
        for kind in [
            RepresentationKind::Adjacency,
            RepresentationKind::EdgeList,
            RepresentationKind::VectorLabeled,
        ] {
            let rep = to_representation(&g, kind).unwrap();
            assert_eq!(from_representation(&rep).unwrap(), g, "{kind:?}");
        }
    }

    #[test]
    fn empty_graph_keeps_dim() {
        let empty: [&str; 0] = [];
        let g = EmbeddedGraph::build(empty, vec![], Some(5)).unwrap();
        for kind in [
            RepresentationKind::Adjacency,
            RepresentationKind::EdgeList,
            RepresentationKind::VectorLabeled,
        ] {
            let back = from_representation(&to_representation(&g, kind).unwrap()).unwrap();
            assert_eq!(back.dim(), 5);
        }
    }

    #[test]
    fn out_of_range_vector_id() {
        let mut rep = vector_labeled(&sample());
        rep.rows[2].vector_id = 99;
        let err = from_representation(&GraphRepresentation::VectorLabeled(rep)).unwrap_err();
        assert!(matches!(
            err,
            StorageError::VectorIdOutOfRange {
                row: 2,
                id: 99,
                len: 3
            }
        ));
    }

    #[test]
    fn dense_cap() {
        let names: Vec<String> = (0..10).map(|i| format!("v{i}")).collect();
        let g = EmbeddedGraph::build(names, vec![], Some(1)).unwrap();
        assert!(matches!(
            to_representation_capped(&g, RepresentationKind::Adjacency, 9),
            Err(StorageError::TooLargeForDense {
                vertices: 10,
                cap: 9
            })
        ));
        assert!(to_representation_capped(&g, RepresentationKind::Adjacency, 10).is_ok());
        assert!(to_representation_capped(&g, RepresentationKind::EdgeList, 0).is_ok());
    }

    #[test]
    fn dense_storage_grows_quadratically_with_vertices() {
        let build = |n: usize, edges: usize| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i:04}")).collect();
            let edges = (0..edges)
                .map(|k| e(&names[k], &names[k + 1], &[1.0; 4]))
                .collect();
            EmbeddedGraph::build(names.clone(), edges, Some(4)).unwrap()
        };
        let bytes = |g: &EmbeddedGraph, k| to_representation(g, k).unwrap().storage_bytes();

        // Fixed edge count, doubled vertex count: dense layout roughly quadruples.
        let ratio = bytes(&build(100, 10), RepresentationKind::Adjacency) as f64
            / bytes(&build(50, 10), RepresentationKind::Adjacency) as f64;
        assert!(ratio > 3.9 && ratio < 4.1, "{ratio}");

        // Fixed vertex count: edge-list bytes are affine in the edge count.
        let list = |edges| bytes(&build(60, edges), RepresentationKind::EdgeList);
        assert_eq!(list(40) - list(20), list(20) - list(0));
        assert_eq!(
            bytes(&build(60, 40), RepresentationKind::Adjacency),
            bytes(&build(60, 0), RepresentationKind::Adjacency)
        );
    }
}
