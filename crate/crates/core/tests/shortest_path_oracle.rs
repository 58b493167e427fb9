//! Shortest routes checked against exhaustive enumeration of simple paths.

mod common;

use common::brute_force;
use embedgraph::{path_distance, Direction, EmbeddedGraph, EmbeddingVector, MetricError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn agrees_with_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut compared = 0;
    for round in 0..300 {
        let g = common::random_graph(&mut rng, 8, 20, 8);
        let target = EmbeddingVector::new(common::random_vector(&mut rng, g.dim())).unwrap();
        let direction = if round % 2 == 0 {
            Direction::Directed
        } else {
            Direction::Undirected
        };
        let names: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        for from in &names {
            for to in &names {
                let expected = brute_force(&g, from, to, &target, direction);
                match (path_distance(&g, from, to, &target, direction), expected) {
                    (Ok(found), Some(want)) => {
                        assert!(
                            (found.total_distance - want).abs() <= 1e-9,
                            "{from}->{to}: {} vs {want}",
                            found.total_distance
                        );
                        // The reported total is the sum along the reported path.
                        let sum: f64 = found.steps.iter().map(|s| s.distance.0).sum();
                        assert!((sum - found.total_distance).abs() <= 1e-9);
                        // Contiguous walk from `from` to `to`.
                        let mut at = from.as_str();
                        for s in &found.steps {
                            assert_eq!(s.from.as_str(), at);
                            at = s.to.as_str();
                        }
                        assert_eq!(at, to.as_str());
                        // Every prefix is itself optimal.
                        for (i, s) in found.steps.iter().enumerate() {
                            let prefix: f64 = found.steps[..=i].iter().map(|s| s.distance.0).sum();
                            let best =
                                brute_force(&g, from, s.to.as_str(), &target, direction).unwrap();
                            assert!((prefix - best).abs() <= 1e-9);
                        }
                        compared += 1;
                    }
                    (Err(MetricError::NoPath { .. }), None) => {}
                    (got, want) => panic!("{from}->{to}: {got:?} vs {want:?}"),
                }
            }
        }
    }
    assert!(compared > 1000, "{compared}");
}

#[test]
fn returned_path_is_simple_and_minimal_in_edges_on_ties() {
    // Zero-length edges everywhere: every route ties on total, so the search
    // must fall back to the fewest edges.
    let names: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                edges.push((names[i].clone(), names[j].clone(), vec![1.0, 0.0]));
            }
        }
    }
    let g = EmbeddedGraph::build(names, edges, None).unwrap();
    let target = EmbeddingVector::new(vec![2.0, 0.0]).unwrap();
    let r = path_distance(&g, "v0", "v5", &target, Direction::Directed).unwrap();
    assert_eq!(r.steps.len(), 1);
    assert!(r.total_distance.abs() < 1e-15);
}
