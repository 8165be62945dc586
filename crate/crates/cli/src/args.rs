//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "shiftlab", version, about = "Sofic shifts, sliding block codes and factor maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Report,
    Tsv,
}

/// Search bounds and output format. Bounds left unset take the library
/// defaults.
#[derive(Debug, Clone, Args)]
pub struct Options {
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_len: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub anticipation: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub horizon: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub delay: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub word_bound: Option<u64>,
    /// Longest extension word enumerated for hyperbolicity.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub extension: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Report)]
    pub format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Language queries on a graph file.
    #[command(subcommand)]
    Lang(LangCmd),
    /// Covers of a presented shift.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Synchronizing and half-synchronizing blocks.
    #[command(subcommand)]
    Sync(SyncCmd),
    /// Sliding block codes.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Analyses of a factor map.
    #[command(subcommand)]
    Map(MapCmd),
    /// Fiber products.
    #[command(subcommand)]
    Fiber(FiberCmd),
    /// Theorem consistency checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// The bundled corpus.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Debug, Subcommand)]
pub enum LangCmd {
    /// List the admissible blocks of length n.
    Blocks { graph: String, n: usize },
    /// Count admissible blocks of each length 1..=n.
    Count { graph: String, n: usize },
}

#[derive(Debug, Subcommand)]
pub enum CoverCmd {
    Subset { graph: String },
    Fischer { graph: String },
    /// Report whether the presentation is right-resolving.
    Resolving { graph: String },
}

#[derive(Debug, Subcommand)]
pub enum SyncCmd {
    /// Least synchronizing word with |w| <= --max-len.
    Find { graph: String },
    /// Decide whether a block is synchronizing.
    Check { graph: String, block: String },
    /// Bounded half-synchronization check of a block, on a graph or oracle file.
    Half { source: String, block: String },
}

#[derive(Debug, Subcommand)]
pub enum CodeCmd {
    /// Apply a code to an eventually periodic point `L/C/R`.
    Apply { code: String, point: String },
    /// The composite `outer ∘ inner`.
    Compose { outer: String, inner: String },
    /// Recode to a 1-block code on the higher block presentation.
    Recode { code: String },
    /// Presentation of the image and the ontoness verdict.
    Image { code: String },
}

#[derive(Debug, Subcommand)]
pub enum MapCmd {
    Degree { code: String },
    Closing { code: String },
    Onetoone { code: String },
    Decoder { code: String },
    Hyperbolic { code: String },
}

#[derive(Debug, Subcommand)]
pub enum FiberCmd {
    Build { left: String, right: String },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    T33 { code: String },
    /// Maps V→X, V→Y, W→Y, W→Z.
    T34 { xv: String, yv: String, yw: String, zw: String },
    T42 { code: String },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    /// Run every acceptance check on the bundled corpus.
    RunAll,
}
