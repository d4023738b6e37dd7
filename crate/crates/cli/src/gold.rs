//! Gold label files: CSV with `id,level,label` rows.
//!
//! Sentence-level rows use ids of the form `feedbackId#index`. Because
//! feedback ids may themselves contain commas, rows are split from the
//! right: the last field is the label, the one before it the level, and
//! everything else the id. `#` comments, blank lines, and one optional
//! `id,level,label` header row are skipped.

use std::collections::BTreeSet;
use std::path::Path;

use sentilex_core::scorer::Polarity;

use crate::error::{read_to_string, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum GoldLevel {
    Sentence,
    Feedback,
}

impl GoldLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            GoldLevel::Sentence => "sentence",
            GoldLevel::Feedback => "feedback",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRecord {
    pub id: String,
    pub level: GoldLevel,
    pub label: Polarity,
}

/// Reads and validates a gold label file. A duplicate id within one level
/// is an error.
pub fn read_gold(path: &Path) -> Result<Vec<GoldRecord>, CliError> {
    let content = read_to_string(path)?;
    let gold_error = |line: usize, message: String| CliError::Gold {
        path: path.into(),
        line,
        message,
    };
    let mut records = Vec::new();
    let mut seen: BTreeSet<(GoldLevel, String)> = BTreeSet::new();
    for (idx, line) in content.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if idx == 0 && trimmed.eq_ignore_ascii_case("id,level,label") {
            continue;
        }
        let mut fields = trimmed.rsplitn(3, ',');
        let label_field = fields.next().unwrap_or("");
        let level_field = fields.next().unwrap_or("");
        let id = fields.next().unwrap_or("").trim().to_string();
        if id.is_empty() {
            return Err(gold_error(idx + 1, format!("expected id,level,label, found {trimmed:?}")));
        }
        let level = match level_field.trim().to_lowercase().as_str() {
            "sentence" => GoldLevel::Sentence,
            "feedback" => GoldLevel::Feedback,
            other => {
                return Err(gold_error(idx + 1, format!("unknown level {other:?}")));
            }
        };
        let label = Polarity::from_str(label_field).ok_or_else(|| {
            gold_error(idx + 1, format!("unknown label {:?}", label_field.trim()))
        })?;
        if !seen.insert((level, id.clone())) {
            return Err(gold_error(idx + 1, format!("duplicate {} id {id:?}", level.as_str())));
        }
        records.push(GoldRecord { id, level, label });
    }
    Ok(records)
}

/// The (id, label) pairs of one level.
pub fn labels_for(records: &[GoldRecord], level: GoldLevel) -> Vec<(String, Polarity)> {
    records
        .iter()
        .filter(|r| r.level == level)
        .map(|r| (r.id.clone(), r.label))
        .collect()
}
