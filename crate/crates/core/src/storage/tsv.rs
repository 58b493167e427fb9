//! Tab-separated edge rows: `source`, `target`, then the weight or the vector
//! components. Edge graphs have just the two vertex columns.

use std::io::Write;

use super::json::AnyGraph;
use super::StorageError;

pub fn write_tsv<W: Write>(graph: &AnyGraph, mut w: W) -> Result<(), StorageError> {
    match graph {
        AnyGraph::Embedded(g) => {
            for (k, v) in g.edges() {
                write!(w, "{}\t{}", k.source, k.target)?;
                for c in v.as_slice() {
                    write!(w, "\t{c}")?;
                }
                writeln!(w)?;
            }
        }
        AnyGraph::Weighted(g) => {
            for (k, weight) in g.edges() {
                writeln!(w, "{}\t{}\t{weight}", k.source, k.target)?;
            }
        }
        AnyGraph::Edge(g) => {
            for k in g.edges() {
                writeln!(w, "{}\t{}", k.source, k.target)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
