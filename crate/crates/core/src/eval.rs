//! Confusion matrices, accuracy, per-class metrics, and subjectivity stats.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::scorer::Polarity;

/// Class order used for matrix rows and columns.
pub const LABELS: [Polarity; 3] = [Polarity::Positive, Polarity::Negative, Polarity::Neutral];

fn class_index(polarity: Polarity) -> usize {
    match polarity {
        Polarity::Positive => 0,
        Polarity::Negative => 1,
        Polarity::Neutral => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    EmptyInput,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::EmptyInput => write!(f, "no labeled pairs to evaluate"),
        }
    }
}

impl core::error::Error for EvalError {}

/// A 3x3 confusion matrix: rows are system labels, columns are gold labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: [[u64; 3]; 3],
}

impl ConfusionMatrix {
    /// Tallies (system, gold) label pairs. At least one pair is required.
    pub fn from_pairs(pairs: &[(Polarity, Polarity)]) -> Result<ConfusionMatrix, EvalError> {
        if pairs.is_empty() {
            return Err(EvalError::EmptyInput);
        }
        let mut counts = [[0u64; 3]; 3];
        for &(system, gold) in pairs {
            counts[class_index(system)][class_index(gold)] += 1;
        }
        Ok(ConfusionMatrix { counts })
    }

    /// Wraps raw counts (rows = system, columns = gold). The total must be
    /// nonzero.
    pub fn from_counts(counts: [[u64; 3]; 3]) -> Result<ConfusionMatrix, EvalError> {
        let total: u64 = counts.iter().flatten().sum();
        if total == 0 {
            return Err(EvalError::EmptyInput);
        }
        Ok(ConfusionMatrix { counts })
    }

    pub fn count(&self, system: Polarity, gold: Polarity) -> u64 {
        self.counts[class_index(system)][class_index(gold)]
    }

    pub fn counts(&self) -> &[[u64; 3]; 3] {
        &self.counts
    }

    /// Total of one system row.
    pub fn system_total(&self, system: Polarity) -> u64 {
        self.counts[class_index(system)].iter().sum()
    }

    /// Total of one gold column.
    pub fn gold_total(&self, gold: Polarity) -> u64 {
        self.counts.iter().map(|row| row[class_index(gold)]).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    fn diagonal(&self) -> u64 {
        (0..3).map(|i| self.counts[i][i]).sum()
    }

    /// Fraction of pairs on the diagonal.
    pub fn accuracy(&self) -> f64 {
        self.diagonal() as f64 / self.total() as f64
    }

    pub fn class_metrics(&self, class: Polarity) -> ClassMetrics {
        let hit = self.count(class, class) as f64;
        let system_total = self.system_total(class);
        let gold_total = self.gold_total(class);
        let precision_defined = system_total > 0;
        let recall_defined = gold_total > 0;
        let precision = if precision_defined { hit / system_total as f64 } else { 0.0 };
        let recall = if recall_defined { hit / gold_total as f64 } else { 0.0 };
        let f1_defined = precision_defined && recall_defined && precision + recall > 0.0;
        let f1 = if f1_defined { 2.0 * precision * recall / (precision + recall) } else { 0.0 };
        ClassMetrics { precision, recall, f1, precision_defined, recall_defined, f1_defined }
    }

    /// Metrics for all classes in [`LABELS`] order.
    pub fn per_class_metrics(&self) -> [ClassMetrics; 3] {
        [
            self.class_metrics(Polarity::Positive),
            self.class_metrics(Polarity::Negative),
            self.class_metrics(Polarity::Neutral),
        ]
    }
}

impl fmt::Display for ConfusionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system\\gold\tpositive\tnegative\tneutral")?;
        for (i, label) in LABELS.iter().enumerate() {
            write!(f, "{label}")?;
            for j in 0..3 {
                write!(f, "\t{}", self.counts[i][j])?;
            }
            if i + 1 < LABELS.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Precision, recall, and F1 for one class. A metric whose denominator was
/// zero reports 0.0 with its `*_defined` flag cleared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub precision_defined: bool,
    pub recall_defined: bool,
    pub f1_defined: bool,
}

/// Counts of subjective vs objective sentences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubjectivityStats {
    pub subjective: u64,
    pub objective: u64,
}

impl SubjectivityStats {
    pub fn from_counts(subjective: u64, objective: u64) -> Result<SubjectivityStats, EvalError> {
        if subjective + objective == 0 {
            return Err(EvalError::EmptyInput);
        }
        Ok(SubjectivityStats { subjective, objective })
    }

    pub fn total(&self) -> u64 {
        self.subjective + self.objective
    }

    /// Subjective share in percent, rounded half-up to an integer.
    pub fn subjective_percent(&self) -> u64 {
        let s = self.subjective as u128;
        let t = self.total() as u128;
        ((200 * s + t) / (2 * t)) as u64
    }

    /// The split as `"S/O"` integer percentages, e.g. `"76/24"`. The two
    /// numbers always sum to 100.
    pub fn percent_string(&self) -> String {
        let subjective = self.subjective_percent();
        let mut out = String::new();
        let _ = write!(out, "{}/{}", subjective, 100 - subjective);
        out
    }
}

/// Rounds to two decimals, half away from zero (0.835 -> 0.84). Input must
/// be non-negative and at most 10^14.
pub fn round_half_up2(value: f64) -> f64 {
    (value * 100.0 + 0.5) as u64 as f64 / 100.0
}

/// Convenience for building the pair list the matrix wants: system first,
/// gold second, joined over ids both sides share. Returns the pairs plus the
/// ids that appeared on only one side.
pub fn join_labels(
    system: &[(String, Polarity)],
    gold: &[(String, Polarity)],
) -> (Vec<(Polarity, Polarity)>, Vec<String>, Vec<String>) {
    use alloc::collections::BTreeMap;
    let gold_map: BTreeMap<&str, Polarity> =
        gold.iter().map(|(id, p)| (id.as_str(), *p)).collect();
    let mut pairs = Vec::new();
    let mut system_only = Vec::new();
    let mut matched = alloc::collections::BTreeSet::new();
    for (id, system_label) in system {
        match gold_map.get(id.as_str()) {
            Some(gold_label) => {
                pairs.push((*system_label, *gold_label));
                matched.insert(id.as_str());
            }
            None => system_only.push(id.clone()),
        }
    }
    let gold_only: Vec<String> = gold
        .iter()
        .filter(|(id, _)| !matched.contains(id.as_str()))
        .map(|(id, _)| id.clone())
        .collect();
    (pairs, system_only, gold_only)
}
