//! Implementations of the three subcommands, parameterized over output
//! sinks so they can be driven from tests.

use std::io::Write;
use std::path::Path;

use sentilex_core::aggregate::AggregateConfig;
use sentilex_core::eval::{join_labels, ConfusionMatrix};
use sentilex_core::kb::{load_knowledge_base, KnowledgeBase, LoadWarning, SourceFile};
use sentilex_core::scorer::{Polarity, ScoreConfig};
use sentilex_core::wsd::Stopwords;

use crate::cli::{ClassifyArgs, EvaluateArgs, LexiconInfoArgs};
use crate::corpus::read_corpus;
use crate::error::{read_to_string, CliError};
use crate::gold::{labels_for, read_gold, GoldLevel};
use crate::output::{evaluation_json, feedback_json, lexicon_info_json};
use crate::pipeline::Pipeline;

struct LoadedFiles {
    kb: KnowledgeBase,
    warnings: Vec<LoadWarning>,
}

fn load_kb(
    lexicon: &Path,
    intensifiers: Option<&Path>,
    negations: Option<&Path>,
) -> Result<LoadedFiles, CliError> {
    let lexicon_text = read_to_string(lexicon)?;
    let intensifier_text = match intensifiers {
        Some(path) => read_to_string(path)?,
        None => String::new(),
    };
    let negation_text = match negations {
        Some(path) => read_to_string(path)?,
        None => String::new(),
    };
    let loaded = load_knowledge_base(
        lexicon_text.lines(),
        intensifier_text.lines(),
        negation_text.lines(),
    )
    .map_err(|source| {
        let path = match source.file {
            SourceFile::Lexicon => lexicon,
            SourceFile::Intensifiers => intensifiers.unwrap_or(lexicon),
            SourceFile::Negations => negations.unwrap_or(lexicon),
        };
        CliError::Load { path: path.into(), source }
    })?;
    Ok(LoadedFiles { kb: loaded.kb, warnings: loaded.warnings })
}

fn load_stopwords(path: Option<&Path>) -> Result<Stopwords, CliError> {
    match path {
        None => Ok(Stopwords::default()),
        Some(path) => {
            let text = read_to_string(path)?;
            Ok(Stopwords::from_words(
                text.lines()
                    .map(str::trim)
                    .filter(|line| !line.is_empty() && !line.starts_with('#')),
            ))
        }
    }
}

pub fn run_classify(
    args: &ClassifyArgs,
    stdout: &mut impl Write,
    stderr: &mut impl Write,
) -> Result<(), CliError> {
    let corpus = read_corpus(&args.corpus, args.format)?;
    if corpus.is_empty() {
        return Err(CliError::EmptyCorpus { path: args.corpus.clone() });
    }
    let loaded = load_kb(
        &args.lexicon,
        args.intensifiers.as_deref(),
        args.negations.as_deref(),
    )?;
    for warning in &loaded.warnings {
        writeln!(stderr, "warning: {warning}")?;
    }
    let pipeline = Pipeline {
        kb: loaded.kb,
        score: ScoreConfig {
            tau_subj: args.tau_subj,
            epsilon: args.epsilon,
            negation_window: args.neg_window,
        },
        aggregate: AggregateConfig {
            epsilon: args.epsilon,
            strategy: args.aggregate.into(),
        },
        stopwords: load_stopwords(args.stopwords.as_deref())?,
    };
    for feedback in &corpus {
        let result = pipeline.analyze(feedback);
        writeln!(stdout, "{}", feedback_json(&result, args.verbose))?;
    }
    Ok(())
}

/// Pulls (id, polarity) pairs of the requested level out of classification
/// output. Sentence ids are `feedbackId#index`.
fn read_predictions(path: &Path, level: GoldLevel) -> Result<Vec<(String, Polarity)>, CliError> {
    let content = read_to_string(path)?;
    let prediction_error = |line: usize, message: String| CliError::Predictions {
        path: path.into(),
        line,
        message,
    };
    let mut labels = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| prediction_error(idx + 1, e.to_string()))?;
        let id = value["id"]
            .as_str()
            .ok_or_else(|| prediction_error(idx + 1, "missing \"id\"".to_string()))?
            .to_string();
        let polarity_of = |v: &serde_json::Value, what: &str| {
            v.as_str()
                .and_then(Polarity::from_str)
                .ok_or_else(|| prediction_error(idx + 1, format!("missing or invalid {what}")))
        };
        match level {
            GoldLevel::Feedback => {
                labels.push((id, polarity_of(&value["polarity"], "\"polarity\"")?));
            }
            GoldLevel::Sentence => {
                let sentences = value["sentences"].as_array().ok_or_else(|| {
                    prediction_error(idx + 1, "missing \"sentences\"".to_string())
                })?;
                for sentence in sentences {
                    let index = sentence["index"].as_u64().ok_or_else(|| {
                        prediction_error(idx + 1, "sentence missing \"index\"".to_string())
                    })?;
                    let label =
                        polarity_of(&sentence["polarity"], "sentence \"polarity\"")?;
                    labels.push((format!("{id}#{index}"), label));
                }
            }
        }
    }
    Ok(labels)
}

pub fn run_evaluate(
    args: &EvaluateArgs,
    stdout: &mut impl Write,
    stderr: &mut impl Write,
) -> Result<(), CliError> {
    let system = read_predictions(&args.predictions, args.level)?;
    let gold = labels_for(&read_gold(&args.gold)?, args.level);
    let (pairs, system_only, gold_only) = join_labels(&system, &gold);
    for id in &system_only {
        writeln!(stderr, "warning: prediction {id:?} has no gold label, skipped")?;
    }
    for id in &gold_only {
        writeln!(stderr, "warning: gold {id:?} has no prediction, skipped")?;
    }
    let matrix = ConfusionMatrix::from_pairs(&pairs).map_err(|_| CliError::NoMatchedIds)?;
    writeln!(
        stdout,
        "{}",
        evaluation_json(args.level, &matrix, system_only.len(), gold_only.len())
    )?;
    Ok(())
}

pub fn run_lexicon_info(
    args: &LexiconInfoArgs,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let loaded = load_kb(&args.lexicon, None, None)?;
    writeln!(stdout, "{}", lexicon_info_json(&loaded.kb))?;
    Ok(())
}
