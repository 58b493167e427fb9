//! Browser bindings for three interactive views: the relation network under a
//! movable cutoff, the trust routes with adjustable edge distances, and the
//! similarity of two small graphs whose edge vectors are set by angle.
//!
//! The plain functions run natively; the `#[wasm_bindgen]` wrappers return
//! their results as JSON strings.

use embedgraph::fixtures;
use embedgraph::{
    edge_correspondence, graph_similarity, path_distance, route_distance, threshold, Direction,
    EdgeKey, EmbeddedGraph, EmbeddingVector, VertexId,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationView {
    pub probe: String,
    pub cutoff: f64,
    /// Every relation with its weight, in vertex order.
    pub weights: Vec<(String, f64)>,
    /// Relations whose weight exceeds the cutoff.
    pub kept: Vec<String>,
}

pub fn relation_view(probe: &str, cutoff: f64) -> Result<RelationView, String> {
    let weighted =
        fixtures::family_weights(probe).ok_or_else(|| format!("unknown probe `{probe}`"))?;
    let kept = threshold(&weighted, cutoff)
        .edges()
        .map(|k| k.target.to_string())
        .collect();
    let weights = weighted
        .edges()
        .map(|(k, w)| (k.target.to_string(), w))
        .collect();
    Ok(RelationView {
        probe: probe.to_owned(),
        cutoff,
        weights,
        kept,
    })
}

pub fn relation_probes() -> Vec<(String, f64)> {
    fixtures::RELATION_PROBES
        .iter()
        .zip(fixtures::RELATION_CUTOFFS)
        .map(|(p, c)| ((*p).to_owned(), c))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RouteView {
    pub shortest: Vec<String>,
    pub total: f64,
    pub via_b: f64,
    pub via_c: f64,
}

/// Trust routes with the four edge distances given in the order
/// rely, appreciate, respect, envy. Each must lie in `[0, 2]`.
pub fn route_view(distances: &[f64]) -> Result<RouteView, String> {
    if distances.len() != 4 {
        return Err(format!("expected 4 distances, got {}", distances.len()));
    }
    if let Some(d) = distances.iter().find(|d| !(0.0..=2.0).contains(*d)) {
        return Err(format!("distance {d} outside [0, 2]"));
    }
    let topology = fixtures::trust_routes();
    let edges = topology
        .edges
        .iter()
        .map(|e| {
            let i = fixtures::TRUST_DISTANCES
                .iter()
                .position(|(w, _)| *w == e.token)
                .expect("route token");
            let v = fixtures::vector_at_distance(distances[i]);
            (e.source.clone(), e.target.clone(), v.as_slice().to_vec())
        })
        .collect();
    let g = EmbeddedGraph::build(topology.vertices.clone(), edges, Some(2))
        .map_err(|e| e.to_string())?;
    let target = EmbeddingVector::new(vec![1.0, 0.0]).expect("unit vector");
    let best =
        path_distance(&g, "d", "a", &target, Direction::Directed).map_err(|e| e.to_string())?;
    let via = |mid: &str| {
        route_distance(&g, &["d", mid, "a"], &target, Direction::Directed)
            .map(|r| r.total_distance)
            .map_err(|e| e.to_string())
    };
    let start = VertexId::new("d").expect("vertex name");
    Ok(RouteView {
        shortest: best
            .vertices(&start)
            .iter()
            .map(|v| v.to_string())
            .collect(),
        total: best.total_distance,
        via_b: via("b")?,
        via_c: via("c")?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarityView {
    pub similarity: f64,
    /// Cosine per classroom edge, as `(source, target, cos)`.
    pub edges: Vec<(String, String, f64)>,
}

const CLASSROOM_EDGES: [(&str, &str); 5] = [
    ("teacher", "students"),
    ("teacher", "blackboard"),
    ("students", "teacher"),
    ("students", "text"),
    ("students", "pen"),
];

fn planar_classroom(degrees: &[f64]) -> Result<EmbeddedGraph, String> {
    if degrees.len() != CLASSROOM_EDGES.len() {
        return Err(format!(
            "expected {} angles, got {}",
            CLASSROOM_EDGES.len(),
            degrees.len()
        ));
    }
    let edges = CLASSROOM_EDGES
        .iter()
        .zip(degrees)
        .map(|(&(s, t), deg)| {
            let r = deg.to_radians();
            (s.to_owned(), t.to_owned(), vec![r.cos(), r.sin()])
        })
        .collect();
    EmbeddedGraph::build(
        ["teacher", "students", "blackboard", "text", "pen"],
        edges,
        Some(2),
    )
    .map_err(|e| e.to_string())
}

/// Two copies of the classroom graph with each edge vector placed at the
/// given angle in degrees.
pub fn similarity_view(first: &[f64], second: &[f64]) -> Result<SimilarityView, String> {
    let a = planar_classroom(first)?;
    let b = planar_classroom(second)?;
    let similarity = graph_similarity(&a, &b).map_err(|e| e.to_string())?;
    let edges = edge_correspondence(&a, &b)
        .matched
        .iter()
        .map(|k: &EdgeKey| {
            let cos = embedgraph::cosine(a.vector(k).unwrap(), b.vector(k).unwrap())
                .expect("same dimension");
            (k.source.to_string(), k.target.to_string(), cos)
        })
        .collect();
    Ok(SimilarityView { similarity, edges })
}

fn to_js<T: Serialize>(value: Result<T, String>) -> Result<String, JsError> {
    let value = value.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = relationProbes)]
pub fn relation_probes_js() -> Result<String, JsError> {
    to_js(Ok(relation_probes()))
}

#[wasm_bindgen(js_name = relationView)]
pub fn relation_view_js(probe: &str, cutoff: f64) -> Result<String, JsError> {
    to_js(relation_view(probe, cutoff))
}

#[wasm_bindgen(js_name = routeView)]
pub fn route_view_js(distances: &[f64]) -> Result<String, JsError> {
    to_js(route_view(distances))
}

#[wasm_bindgen(js_name = similarityView)]
pub fn similarity_view_js(first: &[f64], second: &[f64]) -> Result<String, JsError> {
    to_js(similarity_view(first, second))
}
