//! The JSON files under `fixtures/` agree with the built-in fixtures.

use std::fs::File;
use std::path::PathBuf;

use embedgraph::fixtures::{self, RELATION_PROBES};
use embedgraph::storage::json::{read_graph_json, read_vector_json, read_weighted_json};
use embedgraph::{load_word_vectors, path_distance, Direction, TokenGraph, WordVectorFormat};

fn open(name: &str) -> File {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    File::open(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn weighted_networks_match() {
    for probe in RELATION_PROBES {
        let from_file = read_weighted_json(open(&format!("family_{probe}.json"))).unwrap();
        assert_eq!(
            from_file,
            fixtures::family_weights(probe).unwrap(),
            "{probe}"
        );
    }
}

#[test]
fn token_graphs_match() {
    let read = |name: &str| TokenGraph::read_json(open(name)).unwrap();
    assert_eq!(read("family_tokens.json"), fixtures::family_network());
    assert_eq!(read("trust_tokens.json"), fixtures::trust_routes());
    for (file, variant) in [("a", 'A'), ("b", 'B'), ("c", 'C')] {
        assert_eq!(
            read(&format!("classroom_{file}_tokens.json")),
            fixtures::classroom(variant).unwrap()
        );
    }
}

#[test]
fn trust_routes_match() {
    let g = read_graph_json(open("trust_routes.json")).unwrap();
    let target = read_vector_json(open("trust_target.json")).unwrap();
    let (built, built_target) = fixtures::trust_routes_embedded();
    assert_eq!(g, built);
    assert_eq!(target, built_target);
}

#[test]
fn toy_model_embeds_trust_routes() {
    let store = load_word_vectors(
        std::io::BufReader::new(open("trust_model.txt")),
        WordVectorFormat::Text,
    )
    .unwrap()
    .store;
    let g = fixtures::trust_routes().embed(&store).unwrap();
    let target = store.lookup("trust").unwrap();
    let r = path_distance(&g, "d", "a", &target, Direction::Directed).unwrap();
    assert!(
        (r.total_distance - 1.35).abs() < 1e-6,
        "{}",
        r.total_distance
    );
}
