//! Graph JSON documents.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "vertices": ["a", "b"],
//!   "edges": [
//!     {"source": "a", "target": "b", "vector": [1.0, 0.0, 0.0]}
//!   ]
//! }
//! ```
//!
//! An embedded graph may instead put `"vector_id"` on each edge and list the
//! shared vectors under `"vectors"`, or use the dense `"matrix"` layout
//! (`N_v x N_v`, `null` where there is no edge). Weighted graphs carry
//! `"weight"` per edge and no `"dim"`; edge graphs carry neither.
//!
//! Output is deterministic: sorted vertices and edges, one edge per line,
//! shortest round-trip float formatting.

use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{
    from_representation, vector_labeled, AdjacencyMatrixRep, GraphRepresentation, StorageError,
};
use crate::graph::{EdgeGraph, EmbeddedGraph, VertexId, WeightedGraph};
use crate::vector::EmbeddingVector;

/// Layout for writing embedded graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JsonLayout {
    EdgeList,
    VectorLabeled,
    Adjacency,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    dim: Option<usize>,
    vertices: Vec<String>,
    edges: Option<Vec<EdgeDoc>>,
    vectors: Option<Vec<Vec<f64>>>,
    matrix: Option<Vec<Vec<Option<Vec<f64>>>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    source: String,
    target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    vector: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vector_id: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
}

/// Which kind of graph a document holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Embedded,
    Weighted,
    Edge,
}

/// A graph of whichever kind a document turned out to hold.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyGraph {
    Embedded(EmbeddedGraph),
    Weighted(WeightedGraph),
    Edge(EdgeGraph),
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> StorageError {
    StorageError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

fn parse<R: Read>(reader: R) -> Result<GraphDoc, StorageError> {
    serde_json::from_reader(reader).map_err(StorageError::from)
}

impl GraphDoc {
    fn kind(&self) -> DocumentKind {
        if self.dim.is_some() || self.vectors.is_some() || self.matrix.is_some() {
            return DocumentKind::Embedded;
        }
        let edges = self.edges.as_deref().unwrap_or_default();
        if edges
            .iter()
            .any(|e| e.vector.is_some() || e.vector_id.is_some())
        {
            DocumentKind::Embedded
        } else if edges.iter().any(|e| e.weight.is_some()) {
            DocumentKind::Weighted
        } else {
            DocumentKind::Edge
        }
    }

    fn edges(&self) -> Result<&[EdgeDoc], StorageError> {
        self.edges
            .as_deref()
            .ok_or_else(|| schema("edges", "missing field"))
    }

    fn expect_kind(&self, wanted: DocumentKind) -> Result<(), StorageError> {
        let found = self.kind();
        if found == wanted {
            return Ok(());
        }
        let name = |k| match k {
            DocumentKind::Embedded => "an embedded graph",
            DocumentKind::Weighted => "a weighted graph",
            DocumentKind::Edge => "an edge graph",
        };
        Err(schema(
            "",
            format!("expected {}, found {}", name(wanted), name(found)),
        ))
    }

    fn into_embedded(self) -> Result<EmbeddedGraph, StorageError> {
        let dim = self.dim.ok_or_else(|| schema("dim", "missing field"))?;
        if let Some(matrix) = &self.matrix {
            if self.edges.is_some() || self.vectors.is_some() {
                return Err(schema(
                    "matrix",
                    "the matrix layout excludes `edges` and `vectors`",
                ));
            }
            return self.matrix_graph(dim, matrix);
        }
        let edges = self.edges()?;
        let mut list = Vec::with_capacity(edges.len());
        for (i, edge) in edges.iter().enumerate() {
            let field = |name: &str| format!("edges[{i}].{name}");
            if edge.weight.is_some() {
                return Err(schema(
                    field("weight"),
                    "embedded edges carry vectors, not weights",
                ));
            }
            let vector = match (&self.vectors, &edge.vector, edge.vector_id) {
                (None, Some(v), None) => v.clone(),
                (Some(table), None, Some(id)) => table
                    .get(id)
                    .ok_or_else(|| {
                        schema(
                            field("vector_id"),
                            format!("{id} is out of range ({} vectors)", table.len()),
                        )
                    })?
                    .clone(),
                (None, _, _) => return Err(schema(field("vector"), "missing field")),
                (Some(_), _, _) => {
                    return Err(schema(
                        field("vector_id"),
                        "edges must reference `vectors` by id when a vector table is present",
                    ))
                }
            };
            list.push((edge.source.clone(), edge.target.clone(), vector));
        }
        if let Some(table) = &self.vectors {
            for (i, row) in table.iter().enumerate() {
                EmbeddingVector::new(row.clone())
                    .map_err(|e| schema(format!("vectors[{i}]"), e.to_string()))?;
                if row.len() != dim {
                    return Err(schema(
                        format!("vectors[{i}]"),
                        format!("length {} differs from dim {dim}", row.len()),
                    ));
                }
            }
        }
        Ok(EmbeddedGraph::build(self.vertices, list, Some(dim))?)
    }

    fn matrix_graph(
        &self,
        dim: usize,
        matrix: &[Vec<Option<Vec<f64>>>],
    ) -> Result<EmbeddedGraph, StorageError> {
        let n = self.vertices.len();
        if matrix.len() != n {
            return Err(schema(
                "matrix",
                format!("{} rows for {n} vertices", matrix.len()),
            ));
        }
        let order = self
            .vertices
            .iter()
            .map(|v| VertexId::new(v.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut cells = Vec::new();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(schema(
                    format!("matrix[{i}]"),
                    format!("{} columns for {n} vertices", row.len()),
                ));
            }
            for (j, cell) in row.iter().enumerate() {
                if let Some(components) = cell {
                    let vector = EmbeddingVector::new(components.clone())
                        .map_err(|e| schema(format!("matrix[{i}][{j}]"), e.to_string()))?;
                    cells.push((i, j, vector));
                }
            }
        }
        let rep = AdjacencyMatrixRep::from_cells(dim, order, cells)?;
        from_representation(&GraphRepresentation::Adjacency(rep))
    }

    fn into_weighted(self) -> Result<WeightedGraph, StorageError> {
        let mut list = Vec::new();
        for (i, edge) in self.edges()?.iter().enumerate() {
            let weight = edge
                .weight
                .ok_or_else(|| schema(format!("edges[{i}].weight"), "missing field"))?;
            list.push((edge.source.clone(), edge.target.clone(), weight));
        }
        Ok(WeightedGraph::build(self.vertices, list)?)
    }

    fn into_edge_graph(self) -> Result<EdgeGraph, StorageError> {
        let list = self
            .edges()?
            .iter()
            .map(|e| (e.source.clone(), e.target.clone()))
            .collect();
        Ok(EdgeGraph::build(self.vertices, list)?)
    }
}

pub fn read_graph_json<R: Read>(reader: R) -> Result<EmbeddedGraph, StorageError> {
    let doc = parse(reader)?;
    doc.expect_kind(DocumentKind::Embedded)?;
    doc.into_embedded()
}

pub fn read_weighted_json<R: Read>(reader: R) -> Result<WeightedGraph, StorageError> {
    let doc = parse(reader)?;
    // An edgeless weighted graph cannot be told apart from an edge graph.
    if doc.kind() == DocumentKind::Edge && doc.edges.as_ref().is_some_and(Vec::is_empty) {
        return doc.into_weighted();
    }
    doc.expect_kind(DocumentKind::Weighted)?;
    doc.into_weighted()
}

pub fn read_edge_graph_json<R: Read>(reader: R) -> Result<EdgeGraph, StorageError> {
    let doc = parse(reader)?;
    doc.expect_kind(DocumentKind::Edge)?;
    doc.into_edge_graph()
}

pub fn read_any_json<R: Read>(reader: R) -> Result<AnyGraph, StorageError> {
    let doc = parse(reader)?;
    Ok(match doc.kind() {
        DocumentKind::Embedded => AnyGraph::Embedded(doc.into_embedded()?),
        DocumentKind::Weighted => AnyGraph::Weighted(doc.into_weighted()?),
        DocumentKind::Edge => AnyGraph::Edge(doc.into_edge_graph()?),
    })
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("graph values serialize")
}

struct DocWriter {
    out: String,
    fields: usize,
}

impl DocWriter {
    fn new() -> Self {
        Self {
            out: String::from("{"),
            fields: 0,
        }
    }

    fn field(&mut self, name: &str, body: &str) {
        if self.fields > 0 {
            self.out.push(',');
        }
        self.fields += 1;
        let _ = write!(self.out, "\n  {}: {}", json(name), body);
    }

    fn list<I: IntoIterator<Item = String>>(&mut self, name: &str, items: I) {
        let items: Vec<String> = items.into_iter().collect();
        if items.is_empty() {
            self.field(name, "[]");
        } else {
            self.field(name, &format!("[\n    {}\n  ]", items.join(",\n    ")));
        }
    }

    fn finish<W: Write>(mut self, mut w: W) -> Result<(), StorageError> {
        self.out.push_str("\n}\n");
        w.write_all(self.out.as_bytes())?;
        w.flush()?;
        Ok(())
    }
}

fn vertex_names<'a>(vs: impl Iterator<Item = &'a VertexId>) -> String {
    json(&vs.map(VertexId::as_str).collect::<Vec<_>>())
}

pub fn write_graph_json<W: Write>(
    graph: &EmbeddedGraph,
    layout: JsonLayout,
    w: W,
) -> Result<(), StorageError> {
    let mut doc = DocWriter::new();
    doc.field("dim", &graph.dim().to_string());
    doc.field("vertices", &vertex_names(graph.vertices()));
    match layout {
        JsonLayout::EdgeList => {
            doc.list(
                "edges",
                graph.edges().map(|(k, v)| {
                    json(&EdgeDoc {
                        source: k.source.to_string(),
                        target: k.target.to_string(),
                        vector: Some(v.as_slice().to_vec()),
                        vector_id: None,
                        weight: None,
                    })
                }),
            );
        }
        JsonLayout::VectorLabeled => {
            let rep = vector_labeled(graph);
            doc.list(
                "edges",
                rep.rows.iter().map(|r| {
                    json(&EdgeDoc {
                        source: r.source.to_string(),
                        target: r.target.to_string(),
                        vector: None,
                        vector_id: Some(r.vector_id),
                        weight: None,
                    })
                }),
            );
            doc.list(
                "vectors",
                rep.vector_table.iter().map(|v| json(v.as_slice())),
            );
        }
        JsonLayout::Adjacency => {
            let rows = graph.vertices().map(|s| {
                let cells: Vec<Option<&[f64]>> = graph
                    .vertices()
                    .map(|t| {
                        graph
                            .vector(&crate::graph::EdgeKey::new(s.clone(), t.clone()))
                            .map(EmbeddingVector::as_slice)
                    })
                    .collect();
                json(&cells)
            });
            doc.list("matrix", rows);
        }
    }
    doc.finish(w)
}

pub fn write_weighted_json<W: Write>(graph: &WeightedGraph, w: W) -> Result<(), StorageError> {
    let mut doc = DocWriter::new();
    doc.field("vertices", &vertex_names(graph.vertices()));
    doc.list(
        "edges",
        graph.edges().map(|(k, weight)| {
            json(&EdgeDoc {
                source: k.source.to_string(),
                target: k.target.to_string(),
                vector: None,
                vector_id: None,
                weight: Some(weight),
            })
        }),
    );
    doc.finish(w)
}

pub fn write_edge_graph_json<W: Write>(graph: &EdgeGraph, w: W) -> Result<(), StorageError> {
    let mut doc = DocWriter::new();
    doc.field("vertices", &vertex_names(graph.vertices()));
    doc.list(
        "edges",
        graph.edges().map(|k| {
            json(&EdgeDoc {
                source: k.source.to_string(),
                target: k.target.to_string(),
                vector: None,
                vector_id: None,
                weight: None,
            })
        }),
    );
    doc.finish(w)
}

pub fn write_any_json<W: Write>(graph: &AnyGraph, w: W) -> Result<(), StorageError> {
    match graph {
        AnyGraph::Embedded(g) => write_graph_json(g, JsonLayout::EdgeList, w),
        AnyGraph::Weighted(g) => write_weighted_json(g, w),
        AnyGraph::Edge(g) => write_edge_graph_json(g, w),
    }
}

/// Read a bare vector, either `[..]` or `{"vector": [..]}`.
pub fn read_vector_json<R: Read>(reader: R) -> Result<EmbeddingVector, StorageError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum VectorDoc {
        Bare(Vec<f64>),
        Wrapped { vector: Vec<f64> },
    }
    let doc: VectorDoc = serde_json::from_reader(reader)?;
    let (VectorDoc::Bare(v) | VectorDoc::Wrapped { vector: v }) = doc;
    EmbeddingVector::new(v).map_err(|e| schema("vector", e.to_string()))
}

pub fn write_vector_json<W: Write>(vector: &EmbeddingVector, mut w: W) -> Result<(), StorageError> {
    writeln!(w, "{}", json(vector.as_slice()))?;
    Ok(())
}
