//! Small worked examples: a person's relation network, a pair of competing
//! introduction routes, and three versions of a classroom scene.
//!
//! Token graphs need a word-vector model to become embedded graphs. For
//! model-free use, the relation weights and route distances observed with the
//! 300-dimensional GoogleNews model are recorded here, and
//! [`trust_routes_embedded`] builds two-dimensional vectors that reproduce
//! given edge distances exactly.

use crate::graph::{EmbeddedGraph, WeightedGraph};
use crate::tokens::TokenGraph;
use crate::vector::EmbeddingVector;

/// Probe words for the relation network, in column order of [`RELATION_WEIGHTS`].
pub const RELATION_PROBES: [&str; 4] = ["family", "friend", "work", "digital"];

/// Cosine of each relation word with each probe, two decimals.
pub const RELATION_WEIGHTS: [(&str, [f64; 4]); 13] = [
    ("mother", [0.61, 0.54, 0.09, 0.02]),
    ("father", [0.57, 0.56, 0.12, 0.00]),
    ("son", [0.54, 0.54, 0.04, 0.02]),
    ("daughter", [0.53, 0.53, 0.05, 0.05]),
    ("wife", [0.56, 0.55, 0.08, -0.03]),
    ("husband", [0.53, 0.54, 0.13, 0.00]),
    ("friend", [0.49, 1.00, 0.09, -0.07]),
    ("boss", [0.10, 0.29, 0.12, 0.02]),
    ("colleague", [0.20, 0.62, 0.11, -0.04]),
    ("computer", [0.08, 0.08, 0.19, 0.37]),
    ("smartphone", [0.05, 0.04, 0.02, 0.35]),
    ("car", [0.22, 0.23, 0.09, 0.04]),
    ("motorcycle", [0.17, 0.18, 0.04, 0.02]),
];

/// Cutoff used with each probe, same order as [`RELATION_PROBES`].
pub const RELATION_CUTOFFS: [f64; 4] = [0.5, 0.6, 0.1, 0.3];

/// The person at the center of the relation network.
pub const CENTER: &str = "me";

/// Star network: one edge from [`CENTER`] to a vertex per relation, the
/// edge labeled with the relation word and the vertex named after it.
pub fn family_network() -> TokenGraph {
    let mut vertices = vec![CENTER];
    vertices.extend(RELATION_WEIGHTS.iter().map(|(w, _)| *w));
    let edges: Vec<(&str, &str, &str)> = RELATION_WEIGHTS
        .iter()
        .map(|(w, _)| (CENTER, *w, *w))
        .collect();
    TokenGraph::new(&vertices, &edges)
}

/// The relation network with the recorded weights for `probe`.
pub fn family_weights(probe: &str) -> Option<WeightedGraph> {
    let column = RELATION_PROBES.iter().position(|p| *p == probe)?;
    let mut vertices = vec![CENTER.to_owned()];
    vertices.extend(RELATION_WEIGHTS.iter().map(|(w, _)| (*w).to_owned()));
    let edges = RELATION_WEIGHTS
        .iter()
        .map(|(w, row)| (CENTER.to_owned(), (*w).to_owned(), row[column]))
        .collect();
    Some(WeightedGraph::build(vertices, edges).expect("fixture is well formed"))
}

/// `1 - cos(X(e), trust)` recorded for each route edge.
pub const TRUST_DISTANCES: [(&str, f64); 4] = [
    ("rely", 0.77),
    ("appreciate", 0.76),
    ("respect", 0.58),
    ("envy", 0.82),
];

/// Four people: `d` relies on `b` and appreciates `c`; `b` respects `a`;
/// `c` envies `a`. `a` wants to reach `d` through `b` or `c`.
pub fn trust_routes() -> TokenGraph {
    TokenGraph::new(
        &["a", "b", "c", "d"],
        &[
            ("d", "b", "rely"),
            ("d", "c", "appreciate"),
            ("b", "a", "respect"),
            ("c", "a", "envy"),
        ],
    )
}

/// Unit vector in the plane whose distance to `[1, 0]` is `distance`.
///
/// # Panics
///
/// If `distance` is outside `[0, 2]`.
pub fn vector_at_distance(distance: f64) -> EmbeddingVector {
    assert!(
        (0.0..=2.0).contains(&distance),
        "distance {distance} outside [0, 2]"
    );
    let cos = 1.0 - distance;
    let sin = (1.0 - cos * cos).max(0.0).sqrt();
    EmbeddingVector::new(vec![cos, sin]).expect("unit vector")
}

/// [`trust_routes`] with planar vectors placed so each edge's distance to the
/// returned target is the recorded one.
pub fn trust_routes_embedded() -> (EmbeddedGraph, EmbeddingVector) {
    let topology = trust_routes();
    let edges = topology
        .edges
        .iter()
        .map(|e| {
            let d = TRUST_DISTANCES
                .iter()
                .find(|(w, _)| *w == e.token)
                .expect("every route token has a distance")
                .1;
            (
                e.source.clone(),
                e.target.clone(),
                vector_at_distance(d).as_slice().to_vec(),
            )
        })
        .collect();
    let graph = EmbeddedGraph::build(topology.vertices.clone(), edges, None)
        .expect("fixture is well formed");
    let target = EmbeddingVector::new(vec![1.0, 0.0]).expect("unit vector");
    (graph, target)
}

/// Classroom scenes. `A` is a calm lesson, `B` the same lesson in other
/// words, `C` a disrupted one.
pub fn classroom(variant: char) -> Option<TokenGraph> {
    let words: [&str; 5] = match variant {
        'A' => ["speak", "write", "listen", "read", "have"],
        'B' => ["talk", "draw", "hear", "study", "hold"],
        'C' => ["scold", "hit", "complain", "ignore", "throw"],
        _ => return None,
    };
    let pairs = [
        ("teacher", "students"),
        ("teacher", "blackboard"),
        ("students", "teacher"),
        ("students", "text"),
        ("students", "pen"),
    ];
    let edges: Vec<(&str, &str, &str)> = pairs
        .iter()
        .zip(words)
        .map(|(&(s, t), w)| (s, t, w))
        .collect();
    Some(TokenGraph::new(
        &["teacher", "students", "blackboard", "text", "pen"],
        &edges,
    ))
}

/// Recorded similarities between classroom scenes: `(A,B)`, `(A,C)`, `(B,C)`.
pub const CLASSROOM_SIMILARITIES: [(char, char, f64); 3] =
    [('A', 'B', 0.43), ('A', 'C', 0.25), ('B', 'C', 0.29)];
