//! Target-conditioned distances and edge-wise graph similarity.
//!
//! The length of an edge under a target vector is `1 - cos(X(e), X*)`, which
//! lies in `[0, 2]`. The distance between two vertices is the smallest sum of
//! edge lengths over any route joining them. Graph similarity is the mean
//! cosine between the vectors of edges that both graphs share by
//! `(source, target)` name.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeKey, EmbeddedGraph, VertexId};
use crate::vector::{cosine, DimensionMismatch, EmbeddingVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error(transparent)]
    DimensionMismatch(#[from] DimensionMismatch),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no path from `{from}` to `{to}`")]
    NoPath { from: String, to: String },
    #[error("no edge joins `{from}` and `{to}`")]
    MissingEdge { from: String, to: String },
    #[error("the graphs share no edges")]
    NoCorrespondingEdges,
}

/// `1 - cos(x, target)`.
pub fn edge_distance(
    x: &EmbeddingVector,
    target: &EmbeddingVector,
) -> Result<f64, DimensionMismatch> {
    Ok(1.0 - cosine(x, target)?)
}

/// Whether edges may be walked against their direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    Directed,
    Undirected,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "directed" => Ok(Direction::Directed),
            "undirected" => Ok(Direction::Undirected),
            other => Err(format!(
                "unknown direction `{other}` (expected directed or undirected)"
            )),
        }
    }
}

/// One traversed edge. `from`/`to` follow the walk; `edge` is the stored key,
/// which is reversed relative to the walk when an undirected search went
/// against the arrow.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathStep {
    pub edge: EdgeKey,
    pub from: VertexId,
    pub to: VertexId,
    pub distance: OrderedDistance,
}

/// Edge length wrapper with a total order, so steps can be compared.
#[derive(Debug, Clone, Copy)]
pub struct OrderedDistance(pub f64);

impl PartialEq for OrderedDistance {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for OrderedDistance {}

impl PartialOrd for OrderedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathResult {
    pub total_distance: f64,
    pub steps: Vec<PathStep>,
}

impl PathResult {
    /// Walked vertices, starting with `start` (which is all there is for an
    /// empty path).
    pub fn vertices(&self, start: &VertexId) -> Vec<VertexId> {
        let mut out = vec![start.clone()];
        out.extend(self.steps.iter().map(|s| s.to.clone()));
        out
    }

    /// Keys of the traversed edges as stored in the graph.
    pub fn edges(&self) -> impl Iterator<Item = &EdgeKey> {
        self.steps.iter().map(|s| &s.edge)
    }
}

/// Outgoing traversable steps per vertex, with precomputed lengths.
fn step_table<'g>(
    graph: &'g EmbeddedGraph,
    target: &EmbeddingVector,
    direction: Direction,
) -> Result<BTreeMap<&'g VertexId, Vec<PathStep>>, DimensionMismatch> {
    target.check_dim(graph.dim())?;
    let mut table: BTreeMap<&VertexId, Vec<PathStep>> = BTreeMap::new();
    for (key, vector) in graph.edges() {
        let distance = OrderedDistance(edge_distance(vector, target)?);
        table.entry(&key.source).or_default().push(PathStep {
            edge: key.clone(),
            from: key.source.clone(),
            to: key.target.clone(),
            distance,
        });
        if direction == Direction::Undirected && key.source != key.target {
            table.entry(&key.target).or_default().push(PathStep {
                edge: key.clone(),
                from: key.target.clone(),
                to: key.source.clone(),
                distance,
            });
        }
    }
    Ok(table)
}

fn resolve<'g>(graph: &'g EmbeddedGraph, name: &str) -> Result<&'g VertexId, MetricError> {
    graph
        .vertex_set()
        .get(name)
        .ok_or_else(|| MetricError::UnknownVertex(name.to_owned()))
}

/// Search label: ordered by total, then number of edges, then the step
/// sequence lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Label {
    total: OrderedDistance,
    steps: Vec<PathStep>,
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total
            .cmp(&other.total)
            .then(self.steps.len().cmp(&other.steps.len()))
            .then_with(|| self.steps.cmp(&other.steps))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Minimum-total route from `from` to `to` under edge lengths
/// `1 - cos(X(e), target)`.
///
/// Ties go to the route with fewer edges, then to the lexicographically
/// smaller sequence of edge keys.
pub fn path_distance(
    graph: &EmbeddedGraph,
    from: &str,
    to: &str,
    target: &EmbeddingVector,
    direction: Direction,
) -> Result<PathResult, MetricError> {
    let start = resolve(graph, from)?;
    let goal = resolve(graph, to)?;
    let table = step_table(graph, target, direction)?;

    let mut best: BTreeMap<VertexId, Label> = BTreeMap::new();
    let mut settled: BTreeSet<VertexId> = BTreeSet::new();
    let mut queue = BinaryHeap::new();
    let origin = Label {
        total: OrderedDistance(0.0),
        steps: Vec::new(),
    };
    best.insert(start.clone(), origin.clone());
    queue.push(Reverse((origin, start.clone())));

    while let Some(Reverse((label, vertex))) = queue.pop() {
        if settled.contains(&vertex) {
            continue;
        }
        if &vertex == goal {
            return Ok(PathResult {
                total_distance: label.total.0,
                steps: label.steps,
            });
        }
        for step in table.get(&vertex).into_iter().flatten() {
            if settled.contains(&step.to) {
                continue;
            }
            let mut path = label.steps.clone();
            path.push(step.clone());
            let candidate = Label {
                total: OrderedDistance(label.total.0 + step.distance.0),
                steps: path,
            };
            if best.get(&step.to).is_none_or(|known| candidate < *known) {
                best.insert(step.to.clone(), candidate.clone());
                queue.push(Reverse((candidate, step.to.clone())));
            }
        }
        settled.insert(vertex);
    }
    Err(MetricError::NoPath {
        from: from.to_owned(),
        to: to.to_owned(),
    })
}

/// Sum of edge lengths along an explicitly given vertex sequence.
///
/// In undirected mode a hop may use either orientation; when both exist the
/// shorter one is taken.
pub fn route_distance(
    graph: &EmbeddedGraph,
    route: &[&str],
    target: &EmbeddingVector,
    direction: Direction,
) -> Result<PathResult, MetricError> {
    for name in route {
        resolve(graph, name)?;
    }
    let table = step_table(graph, target, direction)?;
    let mut steps = Vec::new();
    let mut total = 0.0;
    for hop in route.windows(2) {
        let step = table
            .iter()
            .find(|(v, _)| v.as_str() == hop[0])
            .and_then(|(_, out)| {
                out.iter()
                    .filter(|s| s.to.as_str() == hop[1])
                    .min_by_key(|s| s.distance)
            })
            .ok_or_else(|| MetricError::MissingEdge {
                from: hop[0].to_owned(),
                to: hop[1].to_owned(),
            })?;
        total += step.distance.0;
        steps.push(step.clone());
    }
    Ok(PathResult {
        total_distance: total,
        steps,
    })
}

/// Edges matched by `(source, target)` name between two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorrespondenceReport {
    pub matched: BTreeSet<EdgeKey>,
    pub only_in_first: BTreeSet<EdgeKey>,
    pub only_in_second: BTreeSet<EdgeKey>,
}

pub fn edge_correspondence(first: &EmbeddedGraph, second: &EmbeddedGraph) -> CorrespondenceReport {
    let mut report = CorrespondenceReport::default();
    for (key, _) in first.edges() {
        if second.vector(key).is_some() {
            report.matched.insert(key.clone());
        } else {
            report.only_in_first.insert(key.clone());
        }
    }
    report.only_in_second = second
        .edges()
        .map(|(k, _)| k)
        .filter(|k| first.vector(k).is_none())
        .cloned()
        .collect();
    report
}

/// Mean cosine between corresponding edge vectors. Unmatched edges are
/// ignored; see [`edge_correspondence`] for what was left out.
pub fn graph_similarity(first: &EmbeddedGraph, second: &EmbeddedGraph) -> Result<f64, MetricError> {
    if first.dim() != second.dim() {
        return Err(DimensionMismatch {
            expected: first.dim(),
            found: second.dim(),
        }
        .into());
    }
    let report = edge_correspondence(first, second);
    if report.matched.is_empty() {
        return Err(MetricError::NoCorrespondingEdges);
    }
    let mut sum = 0.0;
    for key in &report.matched {
        let a = first.vector(key).expect("matched in first");
        let b = second.vector(key).expect("matched in second");
        sum += cosine(a, b)?;
    }
    Ok(sum / report.matched.len() as f64)
}
