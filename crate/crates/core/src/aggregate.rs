//! Feedback-level aggregation of sentence results.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scorer::{polarity_of, Polarity, SentenceAnalysis};

/// How sentence verdicts fold into a feedback verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AggregateStrategy {
    /// Sum raw scores of subjective sentences, then apply the epsilon band.
    #[default]
    Sum,
    /// Most common polarity among subjective sentences; ties are neutral.
    Majority,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregateConfig {
    pub epsilon: f64,
    pub strategy: AggregateStrategy,
}

impl Default for AggregateConfig {
    fn default() -> Self {
        AggregateConfig {
            epsilon: crate::scorer::DEFAULT_EPSILON,
            strategy: AggregateStrategy::Sum,
        }
    }
}

/// The verdict for one feedback with its per-sentence breakdown.
///
/// `feedback_score` is always the sum of subjective sentences' raw scores,
/// whatever strategy decided the polarity. Objective sentences contribute
/// nothing.
#[derive(Debug, Clone, PartialEq)]
pub struct FeedbackResult {
    pub feedback_id: String,
    pub sentences: Vec<SentenceAnalysis>,
    pub feedback_score: f64,
    pub polarity: Polarity,
    pub subjective_count: usize,
    pub objective_count: usize,
}

impl FeedbackResult {
    /// Result for a feedback that produced no sentences at all.
    pub fn empty(feedback_id: String) -> FeedbackResult {
        FeedbackResult {
            feedback_id,
            sentences: Vec::new(),
            feedback_score: 0.0,
            polarity: Polarity::Neutral,
            subjective_count: 0,
            objective_count: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AggregateError {
    /// No sentences were supplied.
    Empty,
    /// Sentences from different feedbacks were mixed in one call.
    MixedFeedbackIds { expected: String, found: String },
}

impl fmt::Display for AggregateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AggregateError::Empty => write!(f, "no sentences to aggregate"),
            AggregateError::MixedFeedbackIds { expected, found } => {
                write!(f, "sentences from feedback {found:?} mixed into feedback {expected:?}")
            }
        }
    }
}

impl core::error::Error for AggregateError {}

fn majority_polarity(analyses: &[SentenceAnalysis]) -> Polarity {
    let mut counts = [0usize; 3];
    for analysis in analyses.iter().filter(|a| a.subjective) {
        let slot = match analysis.polarity {
            Polarity::Positive => 0,
            Polarity::Negative => 1,
            Polarity::Neutral => 2,
        };
        counts[slot] += 1;
    }
    let top = counts.iter().copied().max().unwrap_or(0);
    if top == 0 || counts.iter().filter(|&&c| c == top).count() > 1 {
        return Polarity::Neutral;
    }
    if counts[0] == top {
        Polarity::Positive
    } else if counts[1] == top {
        Polarity::Negative
    } else {
        Polarity::Neutral
    }
}

/// Folds the sentence analyses of one feedback into a [`FeedbackResult`].
///
/// All analyses must carry the same feedback id and there must be at least
/// one; a feedback whose text produced no sentences is represented with
/// [`FeedbackResult::empty`] instead.
pub fn aggregate_feedback(
    analyses: Vec<SentenceAnalysis>,
    config: &AggregateConfig,
) -> Result<FeedbackResult, AggregateError> {
    let feedback_id = analyses
        .first()
        .ok_or(AggregateError::Empty)?
        .sentence
        .feedback_id
        .clone();
    for analysis in &analyses {
        if analysis.sentence.feedback_id != feedback_id {
            return Err(AggregateError::MixedFeedbackIds {
                expected: feedback_id,
                found: analysis.sentence.feedback_id.clone(),
            });
        }
    }
    let subjective_count = analyses.iter().filter(|a| a.subjective).count();
    let objective_count = analyses.len() - subjective_count;
    let feedback_score: f64 = analyses
        .iter()
        .filter(|a| a.subjective)
        .map(|a| a.raw_score)
        .sum();
    let polarity = match config.strategy {
        AggregateStrategy::Sum => polarity_of(feedback_score, config.epsilon),
        AggregateStrategy::Majority => majority_polarity(&analyses),
    };
    Ok(FeedbackResult {
        feedback_id,
        sentences: analyses,
        feedback_score,
        polarity,
        subjective_count,
        objective_count,
    })
}
