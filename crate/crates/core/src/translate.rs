//! Downward translation: embedded graph to weighted graph by scoring each
//! edge vector against a target vector, then weighted graph to edge graph by
//! a strict threshold.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::graph::{EdgeGraph, EmbeddedGraph, WeightedGraph};
use crate::vector::{cosine, dot, DimensionMismatch, EmbeddingVector};

/// How an edge vector is reduced to a scalar weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    /// `cos(X(e), X*)`
    #[default]
    Cosine,
    /// `X(e) · X*`
    InnerProduct,
}

impl Metric {
    pub fn score(
        self,
        edge: &EmbeddingVector,
        target: &EmbeddingVector,
    ) -> Result<f64, DimensionMismatch> {
        match self {
            Metric::Cosine => cosine(edge, target),
            Metric::InnerProduct => dot(edge, target),
        }
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cosine" | "cos" => Ok(Metric::Cosine),
            "dot" | "inner" | "inner-product" | "inner_product" => Ok(Metric::InnerProduct),
            other => Err(format!("unknown metric `{other}` (expected cosine or dot)")),
        }
    }
}

/// A target vector together with the scoring function.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslationSpec {
    pub target: EmbeddingVector,
    pub metric: Metric,
}

impl TranslationSpec {
    pub fn cosine(target: EmbeddingVector) -> Self {
        Self {
            target,
            metric: Metric::Cosine,
        }
    }

    pub fn inner_product(target: EmbeddingVector) -> Self {
        Self {
            target,
            metric: Metric::InnerProduct,
        }
    }
}

/// Score every edge against the target. Topology, including isolated
/// vertices, is carried over unchanged.
pub fn translate(
    graph: &EmbeddedGraph,
    spec: &TranslationSpec,
) -> Result<WeightedGraph, DimensionMismatch> {
    spec.target.check_dim(graph.dim())?;
    let mut weights = BTreeMap::new();
    for (key, vector) in graph.edges() {
        let w = spec.metric.score(vector, &spec.target)?;
        weights.insert(key.clone(), w);
    }
    Ok(WeightedGraph::from_parts(
        graph.vertex_set().clone(),
        weights,
    ))
}

/// Keep the edges whose weight is strictly greater than `cutoff`. Every
/// vertex survives, connected or not.
pub fn threshold(graph: &WeightedGraph, cutoff: f64) -> EdgeGraph {
    let kept = graph
        .edges()
        .filter(|&(_, w)| w > cutoff)
        .map(|(k, _)| k.clone())
        .collect();
    EdgeGraph::from_parts(graph.vertex_set().clone(), kept)
}

pub fn translate_and_threshold(
    graph: &EmbeddedGraph,
    spec: &TranslationSpec,
    cutoff: f64,
) -> Result<EdgeGraph, DimensionMismatch> {
    Ok(threshold(&translate(graph, spec)?, cutoff))
}
