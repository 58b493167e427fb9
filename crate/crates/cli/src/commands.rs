use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use embedgraph::metrics::PathResult;
use embedgraph::storage::dot::{export_dot, DotGraph, LabelMode};
use embedgraph::storage::json::{
    read_any_json, read_graph_json, read_vector_json, read_weighted_json, write_any_json,
    write_edge_graph_json, write_graph_json, write_weighted_json, AnyGraph, JsonLayout,
};
use embedgraph::storage::to_representation_capped;
use embedgraph::storage::tsv::write_tsv;
use embedgraph::{
    edge_correspondence, graph_similarity, load_word_vectors, path_distance, route_distance,
    threshold, translate, EmbeddedGraph, EmbeddingStore, EmbeddingVector, RepresentationKind,
    TokenGraph, TranslationSpec, VertexId, WordVectorFormat,
};

use crate::error::CliError;
use crate::{Cli, Command, ExportFormat, ModelFormat, TargetArgs};

struct Context {
    model: Option<std::path::PathBuf>,
    model_format: Option<ModelFormat>,
    symmetrize: bool,
    store: Option<EmbeddingStore>,
}

impl Context {
    fn store(&mut self) -> Result<&EmbeddingStore, CliError> {
        if self.store.is_none() {
            let path = self.model.as_deref().ok_or_else(|| {
                CliError::Usage("no model given; pass --model or set EMBEDGRAPH_MODEL".into())
            })?;
            let format = match self.model_format {
                Some(ModelFormat::Text) => WordVectorFormat::Text,
                Some(ModelFormat::Binary) => WordVectorFormat::Binary,
                None if path.extension().is_some_and(|e| e == "bin") => WordVectorFormat::Binary,
                None => WordVectorFormat::Text,
            };
            let loaded = load_word_vectors(open_path(path)?, format)?;
            if loaded.skipped_zero_rows > 0 {
                eprintln!(
                    "embedgraph: skipped {} all-zero rows in the model",
                    loaded.skipped_zero_rows
                );
            }
            self.store = Some(loaded.store);
        }
        Ok(self.store.as_ref().expect("loaded above"))
    }

    fn embedded(&self, path: &str) -> Result<EmbeddedGraph, CliError> {
        let g = read_graph_json(input(path)?)?;
        Ok(if self.symmetrize { g.symmetrized() } else { g })
    }

    fn any(&self, path: &str) -> Result<AnyGraph, CliError> {
        Ok(match read_any_json(input(path)?)? {
            AnyGraph::Embedded(g) if self.symmetrize => AnyGraph::Embedded(g.symmetrized()),
            other => other,
        })
    }

    fn target(&mut self, args: &TargetArgs) -> Result<EmbeddingVector, CliError> {
        match (&args.target, &args.target_file) {
            (Some(word), _) => Ok(self.store()?.lookup(word)?),
            (None, Some(path)) => Ok(read_vector_json(input(path)?)?),
            (None, None) => Err(CliError::Usage("a target is required".into())),
        }
    }
}

fn open_path(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| CliError::Open {
            path: path.display().to_string(),
            source,
        })
}

fn input(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin().lock())))
    } else {
        Ok(Box::new(open_path(Path::new(path))?))
    }
}

fn output(path: &str) -> Result<Box<dyn Write>, CliError> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        let file = File::create(path).map_err(|source| CliError::Open {
            path: path.to_owned(),
            source,
        })?;
        Ok(Box::new(BufWriter::new(file)))
    }
}

fn read_tokens(path: &str) -> Result<TokenGraph, CliError> {
    let mut text = String::new();
    input(path)?.read_to_string(&mut text)?;
    Ok(TokenGraph::read_json(text.as_bytes())?)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let mut ctx = Context {
        model: cli.model,
        model_format: cli.model_format,
        symmetrize: cli.symmetrize,
        store: None,
    };
    match cli.command {
        Command::Embed { tokens, out } => {
            let tg = read_tokens(&tokens)?;
            let g = tg.embed(ctx.store()?)?;
            let g = if ctx.symmetrize { g.symmetrized() } else { g };
            write_graph_json(&g, JsonLayout::EdgeList, output(&out)?)?;
        }
        Command::Translate {
            graph,
            target,
            metric,
            cutoff,
            out,
        } => {
            let g = ctx.embedded(&graph)?;
            let spec = TranslationSpec {
                target: ctx.target(&target)?,
                metric,
            };
            let weighted = translate(&g, &spec)?;
            match cutoff {
                Some(c) => write_edge_graph_json(&threshold(&weighted, c), output(&out)?)?,
                None => write_weighted_json(&weighted, output(&out)?)?,
            }
        }
        Command::Threshold { graph, cutoff, out } => {
            let weighted = read_weighted_json(input(&graph)?)?;
            write_edge_graph_json(&threshold(&weighted, cutoff), output(&out)?)?;
        }
        Command::Distance {
            graph,
            from,
            to,
            route,
            target,
            direction,
        } => {
            let g = ctx.embedded(&graph)?;
            let target = ctx.target(&target)?;
            let (start, result) = match (route, from, to) {
                (Some(route), _, _) => {
                    if route.len() < 2 {
                        return Err(CliError::Usage(
                            "a route needs at least two vertices".into(),
                        ));
                    }
                    let names: Vec<&str> = route.iter().map(String::as_str).collect();
                    let result = route_distance(&g, &names, &target, direction)?;
                    (route[0].clone(), result)
                }
                (None, Some(from), Some(to)) => {
                    let result = path_distance(&g, &from, &to, &target, direction)?;
                    (from, result)
                }
                _ => return Err(CliError::Usage("give --from and --to, or --route".into())),
            };
            print_path(&start, &result)?;
        }
        Command::Similarity { first, second } => {
            if first == "-" && second == "-" {
                return Err(CliError::Usage("only one graph can come from stdin".into()));
            }
            let a = ctx.embedded(&first)?;
            let b = ctx.embedded(&second)?;
            let report = edge_correspondence(&a, &b);
            let similarity = graph_similarity(&a, &b)?;
            let mut out = io::stdout().lock();
            writeln!(out, "{similarity:.2}")?;
            writeln!(
                out,
                "matched {}, only in first {}, only in second {}",
                report.matched.len(),
                report.only_in_first.len(),
                report.only_in_second.len()
            )?;
        }
        Command::Convert {
            graph,
            kind,
            max_dense,
            out,
        } => {
            let g = ctx.embedded(&graph)?;
            let rep = to_representation_capped(&g, kind, max_dense)?;
            let layout = match kind {
                RepresentationKind::Adjacency => JsonLayout::Adjacency,
                RepresentationKind::EdgeList => JsonLayout::EdgeList,
                RepresentationKind::VectorLabeled => JsonLayout::VectorLabeled,
            };
            eprintln!("embedgraph: {} bytes in memory", rep.storage_bytes());
            write_graph_json(&g, layout, output(&out)?)?;
        }
        Command::Export {
            graph,
            format,
            labels,
            tokens,
            out,
        } => {
            let g = ctx.any(&graph)?;
            match format {
                ExportFormat::Json => write_any_json(&g, output(&out)?)?,
                ExportFormat::Tsv => write_tsv(&g, output(&out)?)?,
                ExportFormat::Dot => {
                    let token_map = match (&tokens, labels) {
                        (Some(path), _) => Some(read_tokens(path)?.token_map()),
                        (None, LabelMode::Token) => {
                            return Err(CliError::Usage("--labels token needs --tokens".into()))
                        }
                        (None, _) => None,
                    };
                    let view = match &g {
                        AnyGraph::Embedded(g) => DotGraph::Embedded(g),
                        AnyGraph::Weighted(g) => DotGraph::Weighted(g),
                        AnyGraph::Edge(g) => DotGraph::Edge(g),
                    };
                    export_dot(view, labels, token_map.as_ref(), output(&out)?)?;
                }
            }
        }
        Command::Stats { graph } => {
            let g = ctx.any(&graph)?;
            let mut out = io::stdout().lock();
            let (kind, vertices, edges, dim) = match &g {
                AnyGraph::Embedded(g) => {
                    let s = g.stats();
                    ("embedded", s.vertices, s.edges, Some(s.dim))
                }
                AnyGraph::Weighted(g) => ("weighted", g.vertex_count(), g.edge_count(), None),
                AnyGraph::Edge(g) => ("edge", g.vertex_count(), g.edge_count(), None),
            };
            writeln!(out, "kind\t{kind}")?;
            writeln!(out, "vertices\t{vertices}")?;
            writeln!(out, "edges\t{edges}")?;
            if let Some(dim) = dim {
                writeln!(out, "dim\t{dim}")?;
            }
        }
    }
    Ok(())
}

fn print_path(start: &str, result: &PathResult) -> Result<(), CliError> {
    let start = VertexId::new(start)?;
    let names: Vec<String> = result
        .vertices(&start)
        .iter()
        .map(|v| v.as_str().to_owned())
        .collect();
    let mut out = io::stdout().lock();
    writeln!(out, "{:.4}", result.total_distance)?;
    writeln!(out, "{}", names.join(" -> "))?;
    Ok(())
}
