//! Corpus readers: JSONL records or one feedback per line.

use std::collections::BTreeSet;
use std::path::Path;

use sentilex_core::preprocess::RawFeedback;
use serde::Deserialize;

use crate::error::{read_to_string, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum CorpusFormat {
    /// One JSON object per line with "id" and "text" fields.
    #[default]
    Jsonl,
    /// Plain text, one feedback per line; line numbers become ids.
    Lines,
}

#[derive(Deserialize)]
struct JsonlRecord {
    id: String,
    text: String,
}

/// Reads a corpus file. Blank lines are skipped in both formats; duplicate
/// or empty ids are errors.
pub fn read_corpus(path: &Path, format: CorpusFormat) -> Result<Vec<RawFeedback>, CliError> {
    let content = read_to_string(path)?;
    let corpus_error = |line: usize, message: String| CliError::Corpus {
        path: path.into(),
        line,
        message,
    };
    let mut feedbacks = Vec::new();
    let mut seen_ids = BTreeSet::new();
    for (idx, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let feedback = match format {
            CorpusFormat::Jsonl => {
                let record: JsonlRecord = serde_json::from_str(line)
                    .map_err(|e| corpus_error(idx + 1, e.to_string()))?;
                RawFeedback { id: record.id, text: record.text }
            }
            CorpusFormat::Lines => {
                RawFeedback { id: (idx + 1).to_string(), text: line.to_string() }
            }
        };
        if feedback.id.is_empty() {
            return Err(corpus_error(idx + 1, "feedback id is empty".to_string()));
        }
        if !seen_ids.insert(feedback.id.clone()) {
            return Err(corpus_error(
                idx + 1,
                format!("duplicate feedback id {:?}", feedback.id),
            ));
        }
        feedbacks.push(feedback);
    }
    Ok(feedbacks)
}
