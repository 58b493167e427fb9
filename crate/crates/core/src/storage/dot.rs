//! Graphviz output. Vertices and edges are emitted in sorted order, so the
//! same graph always renders to the same bytes.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use super::StorageError;
use crate::graph::{EdgeGraph, EdgeKey, EmbeddedGraph, VertexId, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelMode {
    #[default]
    None,
    Weight,
    Token,
}

impl FromStr for LabelMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Self::None),
            "weight" => Ok(Self::Weight),
            "token" => Ok(Self::Token),
            other => Err(format!(
                "unknown label mode `{other}` (expected none, weight or token)"
            )),
        }
    }
}

/// Any of the three graph kinds, borrowed for rendering.
#[derive(Debug, Clone, Copy)]
pub enum DotGraph<'a> {
    Edge(&'a EdgeGraph),
    Weighted(&'a WeightedGraph),
    Embedded(&'a EmbeddedGraph),
}

impl DotGraph<'_> {
    fn vertices(&self) -> Vec<&VertexId> {
        match self {
            DotGraph::Edge(g) => g.vertices().collect(),
            DotGraph::Weighted(g) => g.vertices().collect(),
            DotGraph::Embedded(g) => g.vertices().collect(),
        }
    }

    fn edges(&self) -> Vec<(&EdgeKey, Option<f64>)> {
        match self {
            DotGraph::Edge(g) => g.edges().map(|k| (k, None)).collect(),
            DotGraph::Weighted(g) => g.edges().map(|(k, w)| (k, Some(w))).collect(),
            DotGraph::Embedded(g) => g.edges().map(|(k, _)| (k, None)).collect(),
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Render `graph` as a DOT digraph. Weight labels use two decimals.
///
/// `tokens` supplies the edge labels for [`LabelMode::Token`].
pub fn export_dot<W: Write>(
    graph: DotGraph<'_>,
    mode: LabelMode,
    tokens: Option<&BTreeMap<EdgeKey, String>>,
    mut w: W,
) -> Result<(), StorageError> {
    let mut out = String::from("digraph G {\n");
    for v in graph.vertices() {
        out.push_str(&format!("  {};\n", quote(v.as_str())));
    }
    for (key, weight) in graph.edges() {
        let label = match mode {
            LabelMode::None => None,
            LabelMode::Weight => Some(format!(
                "{:.2}",
                weight.ok_or_else(|| StorageError::MissingLabel { edge: key.clone() })?
            )),
            LabelMode::Token => Some(
                tokens
                    .and_then(|t| t.get(key))
                    .ok_or_else(|| StorageError::MissingLabel { edge: key.clone() })?
                    .clone(),
            ),
        };
        out.push_str(&format!(
            "  {} -> {}",
            quote(key.source.as_str()),
            quote(key.target.as_str())
        ));
        if let Some(label) = label {
            out.push_str(&format!(" [label={}]", quote(&label)));
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    w.write_all(out.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(
        graph: DotGraph<'_>,
        mode: LabelMode,
        tokens: Option<&BTreeMap<EdgeKey, String>>,
    ) -> String {
        let mut out = Vec::new();
        export_dot(graph, mode, tokens, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn weighted_edge_label() {
        let w = WeightedGraph::build(["a", "b"], vec![("a".into(), "b".into(), 0.614)]).unwrap();
        assert_eq!(
            render(DotGraph::Weighted(&w), LabelMode::Weight, None),
            "digraph G {\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\" [label=\"0.61\"];\n}\n"
        );
    }

    #[test]
    fn token_labels_and_missing_label() {
        let g = EmbeddedGraph::build(
            ["me", "mom", "x\"y"],
            vec![
                ("me".into(), "mom".into(), vec![1.0]),
                ("me".into(), "x\"y".into(), vec![1.0]),
            ],
            None,
        )
        .unwrap();
        let mut tokens = BTreeMap::new();
        tokens.insert(EdgeKey::named("me", "mom"), "mother".to_owned());
        let mut out = Vec::new();
        let err = export_dot(
            DotGraph::Embedded(&g),
            LabelMode::Token,
            Some(&tokens),
            &mut out,
        );
        assert!(matches!(err, Err(StorageError::MissingLabel { .. })));

        tokens.insert(EdgeKey::named("me", "x\"y"), "odd".to_owned());
        let text = render(DotGraph::Embedded(&g), LabelMode::Token, Some(&tokens));
        assert!(text.contains("\"me\" -> \"mom\" [label=\"mother\"];"));
        assert!(text.contains("\"x\\\"y\""));

        let err = export_dot(DotGraph::Embedded(&g), LabelMode::Weight, None, Vec::new());
        assert!(matches!(err, Err(StorageError::MissingLabel { .. })));
    }

    #[test]
    fn output_is_deterministic() {
        let e = EdgeGraph::build(
            ["c", "a", "b"],
            vec![("c".into(), "a".into()), ("a".into(), "b".into())],
        )
        .unwrap();
        let first = render(DotGraph::Edge(&e), LabelMode::None, None);
        assert_eq!(first, render(DotGraph::Edge(&e), LabelMode::None, None));
        assert!(first.find("\"a\" -> \"b\"").unwrap() < first.find("\"c\" -> \"a\"").unwrap());
    }
}
