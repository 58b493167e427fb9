#![allow(dead_code)]

use std::collections::BTreeSet;

use embedgraph::{edge_distance, Direction, EmbeddedGraph, EmbeddingVector};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random simple digraph. Roughly a third of the edges reuse a vector from a
/// small palette so that vector sharing shows up.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_dim: usize,
) -> EmbeddedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let dim = rng.gen_range(1..=max_dim);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    let palette: Vec<Vec<f64>> = (0..3).map(|_| random_vector(rng, dim)).collect();
    let edges = pairs[..m]
        .iter()
        .map(|&(i, j)| {
            let v = if rng.gen_bool(0.3) {
                palette[rng.gen_range(0..palette.len())].clone()
            } else {
                random_vector(rng, dim)
            };
            (names[i].clone(), names[j].clone(), v)
        })
        .collect();
    EmbeddedGraph::build(names, edges, Some(dim)).expect("generated graph is valid")
}

pub fn random_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if v.iter().map(|c| c * c).sum::<f64>() > 1e-6 {
            return v;
        }
    }
}

/// Minimum total over all simple paths, by depth-first enumeration. Lengths
/// come straight from `1 - cos`, independent of the search code.
pub fn brute_force(
    g: &EmbeddedGraph,
    from: &str,
    to: &str,
    target: &EmbeddingVector,
    direction: Direction,
) -> Option<f64> {
    let mut steps: Vec<(String, String, f64)> = Vec::new();
    for (k, v) in g.edges() {
        let d = edge_distance(v, target).unwrap();
        steps.push((k.source.to_string(), k.target.to_string(), d));
        if direction == Direction::Undirected {
            steps.push((k.target.to_string(), k.source.to_string(), d));
        }
    }
    fn walk(
        at: &str,
        to: &str,
        sum: f64,
        seen: &mut BTreeSet<String>,
        steps: &[(String, String, f64)],
        best: &mut Option<f64>,
    ) {
        if at == to {
            *best = Some(best.map_or(sum, |b: f64| b.min(sum)));
            return;
        }
        for (s, t, d) in steps {
            if s == at && !seen.contains(t) {
                seen.insert(t.clone());
                walk(t, to, sum + d, seen, steps, best);
                seen.remove(t);
            }
        }
    }
    let mut best = None;
    let mut seen = BTreeSet::from([from.to_owned()]);
    walk(from, to, 0.0, &mut seen, &steps, &mut best);
    best
}
