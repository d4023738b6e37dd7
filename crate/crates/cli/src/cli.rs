//! Command line surface of the `sentilex` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sentilex_core::aggregate::AggregateStrategy;
use sentilex_core::scorer::{DEFAULT_EPSILON, DEFAULT_NEGATION_WINDOW, DEFAULT_TAU_SUBJ};

use crate::corpus::CorpusFormat;
use crate::gold::GoldLevel;

#[derive(Debug, Parser)]
#[command(
    name = "sentilex",
    version,
    about = "Lexicon-based sentence-level sentiment classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify each feedback of a corpus, one JSON object per line
    Classify(ClassifyArgs),
    /// Score predictions against gold labels
    Evaluate(EvaluateArgs),
    /// Summarize a lexicon file
    LexiconInfo(LexiconInfoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum AggregateArg {
    #[default]
    Sum,
    Majority,
}

impl From<AggregateArg> for AggregateStrategy {
    fn from(arg: AggregateArg) -> Self {
        match arg {
            AggregateArg::Sum => AggregateStrategy::Sum,
            AggregateArg::Majority => AggregateStrategy::Majority,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Corpus file to classify
    #[arg(long)]
    pub corpus: PathBuf,

    /// Corpus layout
    #[arg(long, value_enum, default_value_t)]
    pub format: CorpusFormat,

    /// Lexicon file (tab-separated synset lines)
    #[arg(long)]
    pub lexicon: PathBuf,

    /// Intensifier dictionary, `word,multiplier` per line
    #[arg(long)]
    pub intensifiers: Option<PathBuf>,

    /// Negation dictionary, one word per line
    #[arg(long)]
    pub negations: Option<PathBuf>,

    /// Stopword list for gloss overlap, one word per line (defaults to a
    /// built-in function-word list)
    #[arg(long)]
    pub stopwords: Option<PathBuf>,

    /// Subjectivity cutoff: a sentence is subjective when any resolved
    /// synset has max(pos, neg) at or above this
    #[arg(long, default_value_t = DEFAULT_TAU_SUBJ)]
    pub tau_subj: f64,

    /// Neutral band: scores in [-epsilon, epsilon] classify as neutral
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,

    /// How many following tokens a negation can reach
    #[arg(long, default_value_t = DEFAULT_NEGATION_WINDOW)]
    pub neg_window: usize,

    /// How sentence verdicts combine into the feedback verdict
    #[arg(long, value_enum, default_value_t)]
    pub aggregate: AggregateArg,

    /// Include per-token detail in each sentence
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Classification output (JSONL, as written by `classify`)
    #[arg(long)]
    pub predictions: PathBuf,

    /// Gold labels (CSV: id,level,label)
    #[arg(long)]
    pub gold: PathBuf,

    /// Which granularity to evaluate
    #[arg(long, value_enum)]
    pub level: GoldLevel,
}

#[derive(Debug, Args)]
pub struct LexiconInfoArgs {
    /// Lexicon file to summarize
    #[arg(long)]
    pub lexicon: PathBuf,
}
