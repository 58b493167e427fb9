mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use embedgraph::storage::dot::LabelMode;
use embedgraph::{Direction, Metric, RepresentationKind};

/// Build, translate, measure and convert embedded graphs.
///
/// Graph files are JSON; `-` stands for stdin or stdout.
#[derive(Debug, Parser)]
#[command(name = "embedgraph", version)]
pub struct Cli {
    /// Word-vector model in word2vec text or binary format.
    #[arg(long, global = true, env = "EMBEDGRAPH_MODEL")]
    model: Option<PathBuf>,

    /// Model format; by default `.bin` files are binary, anything else text.
    #[arg(long, global = true, value_enum)]
    model_format: Option<ModelFormat>,

    /// Add the reverse of every edge to embedded graphs as they are read.
    #[arg(long, global = true)]
    symmetrize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelFormat {
    Text,
    Binary,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolve a token graph's edge tokens through the model.
    Embed {
        /// Token graph: vertices plus edges with a `token` each.
        #[arg(long)]
        tokens: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Score every edge against a target, giving a weighted graph.
    Translate {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value = "cosine", value_parser = parse_from_str::<Metric>)]
        metric: Metric,
        /// Threshold in the same step, giving an edge graph.
        #[arg(long, allow_negative_numbers = true)]
        cutoff: Option<f64>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Keep the edges of a weighted graph whose weight exceeds the cutoff.
    Threshold {
        #[arg(long)]
        graph: String,
        #[arg(long, allow_negative_numbers = true)]
        cutoff: f64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Shortest distance between two vertices, or the length of a given route.
    Distance {
        #[arg(long)]
        graph: String,
        #[arg(long, required_unless_present = "route", conflicts_with = "route")]
        from: Option<String>,
        #[arg(long, required_unless_present = "route", conflicts_with = "route")]
        to: Option<String>,
        /// Comma-separated vertex sequence to measure instead of searching.
        #[arg(long, value_delimiter = ',')]
        route: Option<Vec<String>>,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value = "directed", value_parser = parse_from_str::<Direction>)]
        direction: Direction,
    },
    /// Mean cosine over the edges two graphs share.
    Similarity { first: String, second: String },
    /// Rewrite an embedded graph in another storage layout.
    Convert {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_from_str::<RepresentationKind>)]
        kind: RepresentationKind,
        /// Largest vertex count accepted for the adjacency layout.
        #[arg(long, default_value_t = embedgraph::storage::DEFAULT_DENSE_CAP)]
        max_dense: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Write any graph as JSON, DOT or TSV.
    Export {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        /// DOT edge labels.
        #[arg(long, default_value = "none", value_parser = parse_from_str::<LabelMode>)]
        labels: LabelMode,
        /// Token graph supplying labels for `--labels token`.
        #[arg(long)]
        tokens: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Vertex, edge and dimension counts.
    Stats {
        #[arg(long)]
        graph: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TargetArgs {
    /// Target word, looked up in the model.
    #[arg(long)]
    target: Option<String>,
    /// Target vector as JSON, `[..]` or `{"vector": [..]}`.
    #[arg(long)]
    target_file: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Json,
    Dot,
    Tsv,
}

fn parse_from_str<T: std::str::FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("embedgraph: {e}");
            e.exit_code()
        }
    }
}
