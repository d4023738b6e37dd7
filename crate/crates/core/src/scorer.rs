//! Sentence scoring and polarity rules.
//!
//! A token is *sentiment-bearing* when sense disambiguation resolved a
//! synset for it and that synset's signed score (`pos_score - neg_score`)
//! is nonzero. The scorer walks the sentence once, left to right, with two
//! pieces of state:
//!
//! * **Negation flag.** A negation token arms the flag and starts a window
//!   of `negation_window` following tokens (every token counts toward the
//!   distance). The first sentiment-bearing token inside the window has its
//!   signed score flipped and clears the flag; if none arrives in time the
//!   flag expires. A second negation inside the window re-arms it rather
//!   than cancelling it.
//! * **Pending multiplier.** Intensifier tokens multiply a pending factor
//!   (several in a row compound). The next sentiment-bearing token consumes
//!   the whole factor and resets it to 1. The factor does not expire.
//!
//! Each sentiment-bearing token contributes `multiplier * signed` (negated
//! when it consumes the flag) to the sentence's raw score. A sentence is
//! *subjective* when any resolved synset has `max(pos_score, neg_score) >=
//! tau_subj`. Objective sentences report a raw score of 0 and classify as
//! neutral; subjective sentences classify by comparing the raw sum against
//! the `epsilon` band.

use alloc::vec::Vec;
use core::fmt;

use crate::kb::{KnowledgeBase, Synset};
use crate::preprocess::Sentence;
use crate::tagger::{CoarsePos, TaggedToken};

/// Sentence or feedback verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
    Neutral,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
            Polarity::Neutral => "neutral",
        }
    }

    pub fn from_str(text: &str) -> Option<Polarity> {
        match text.trim().to_lowercase().as_str() {
            "positive" => Some(Polarity::Positive),
            "negative" => Some(Polarity::Negative),
            "neutral" => Some(Polarity::Neutral),
            _ => None,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub const DEFAULT_TAU_SUBJ: f64 = 0.1;
pub const DEFAULT_EPSILON: f64 = 0.05;
pub const DEFAULT_NEGATION_WINDOW: usize = 3;

/// Scoring thresholds. `tau_subj` is the subjectivity cutoff, `epsilon` the
/// neutral band half-width, `negation_window` the token distance a negation
/// reaches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreConfig {
    pub tau_subj: f64,
    pub epsilon: f64,
    pub negation_window: usize,
}

impl Default for ScoreConfig {
    fn default() -> Self {
        ScoreConfig {
            tau_subj: DEFAULT_TAU_SUBJ,
            epsilon: DEFAULT_EPSILON,
            negation_window: DEFAULT_NEGATION_WINDOW,
        }
    }
}

/// A scored sentence: the analyzed tokens plus the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SentenceAnalysis {
    pub sentence: Sentence,
    pub tagged: Vec<TaggedToken>,
    pub subjective: bool,
    pub raw_score: f64,
    pub polarity: Polarity,
}

/// Signed sentiment of one synset, in `[-1, 1]`.
pub fn token_signed_score(synset: &Synset) -> f64 {
    synset.pos_score - synset.neg_score
}

/// True when any resolved synset reaches the subjectivity cutoff.
pub fn classify_subjectivity(tagged: &[TaggedToken], tau_subj: f64) -> bool {
    tagged
        .iter()
        .filter_map(|t| t.synset.as_ref())
        .any(|s| s.pos_score.max(s.neg_score) >= tau_subj)
}

pub(crate) fn polarity_of(score: f64, epsilon: f64) -> Polarity {
    if score > epsilon {
        Polarity::Positive
    } else if score < -epsilon {
        Polarity::Negative
    } else {
        Polarity::Neutral
    }
}

fn is_sentiment_bearing(token: &TaggedToken) -> bool {
    token
        .synset
        .as_ref()
        .is_some_and(|s| token_signed_score(s) != 0.0)
}

/// Scores one disambiguated sentence and fills each token's signed score.
pub fn score_sentence(
    sentence: Sentence,
    mut tagged: Vec<TaggedToken>,
    kb: &KnowledgeBase,
    config: &ScoreConfig,
) -> SentenceAnalysis {
    let mut sum = 0.0;
    let mut negation_left = 0usize;
    let mut multiplier = 1.0f64;
    for token in tagged.iter_mut() {
        if token.pos == CoarsePos::Negation {
            negation_left = config.negation_window;
            continue;
        }
        if token.pos == CoarsePos::Intensifier {
            if let Some(factor) = kb.intensifier(&token.token.lemma) {
                multiplier *= factor;
            }
        } else if is_sentiment_bearing(token) {
            let signed = token_signed_score(token.synset.as_ref().unwrap());
            token.signed_score = signed;
            let flipped = if negation_left > 0 { -signed } else { signed };
            sum += multiplier * flipped;
            multiplier = 1.0;
            negation_left = 0;
        } else if let Some(synset) = &token.synset {
            token.signed_score = token_signed_score(synset);
        }
        negation_left = negation_left.saturating_sub(1);
    }

    let subjective = classify_subjectivity(&tagged, config.tau_subj);
    let raw_score = if subjective { sum } else { 0.0 };
    let polarity = if subjective {
        polarity_of(raw_score, config.epsilon)
    } else {
        Polarity::Neutral
    };
    SentenceAnalysis { sentence, tagged, subjective, raw_score, polarity }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::load_knowledge_base;
    use alloc::string::ToString;
    use crate::preprocess::{lemmatize, tokenize_text};
    use crate::tagger::tag_tokens;
    use crate::wsd::{disambiguate_sentence, Stopwords};

    fn kb() -> KnowledgeBase {
        let lexicon = "\
a\t1\t0.75\t0\tgood#1\tof high quality
a\t2\t0\t0.625\tbad#1\tof poor quality
a\t3\t0\t0\tdull#1\tlacking shine
n\t4\t0\t0\tgame#1\ta contest with rules
a\t5\t0.25\t0.25\tmixed#1\tboth welcome and unwelcome";
        let intensifiers = "very,1.5\nslightly,0.5";
        let negations = "not\nnever";
        load_knowledge_base(lexicon.lines(), intensifiers.lines(), negations.lines()).unwrap().kb
    }

    fn analyze(text: &str, kb: &KnowledgeBase, config: &ScoreConfig) -> SentenceAnalysis {
        let sentence = Sentence { feedback_id: "f".to_string(), index: 0, text: text.to_string() };
        let tokens = tokenize_text(text).into_iter().map(|t| lemmatize(t, kb)).collect();
        let tagged = disambiguate_sentence(tag_tokens(tokens, kb), kb, &Stopwords::default());
        score_sentence(sentence, tagged, kb, config)
    }

    fn score(text: &str) -> f64 {
        analyze(text, &kb(), &ScoreConfig::default()).raw_score
    }

    #[test]
    fn single_positive_word() {
        let analysis = analyze("good", &kb(), &ScoreConfig::default());
        assert_eq!(analysis.raw_score, 0.75);
        assert_eq!(analysis.polarity, Polarity::Positive);
        assert!(analysis.subjective);
    }

    #[test]
    fn negation_flips_within_the_window() {
        assert_eq!(score("not good"), -0.75);
        assert_eq!(score("not a dull good game"), -0.75);
        let far = score("not a dull game still good");
        assert_eq!(far, 0.75);
    }

    #[test]
    fn negation_window_counts_every_token() {
        // "good" is the fourth token after "not": out of a 3-token window
        assert_eq!(score("not in any way good"), 0.75);
        // third token after "not": still inside
        assert_eq!(score("not in a good game"), -0.75);
    }

    #[test]
    fn intensifiers_scale_and_compound() {
        assert_eq!(score("very good"), 1.125);
        assert_eq!(score("very very good"), 1.6875);
        assert_eq!(score("slightly bad"), -0.3125);
        assert_eq!(score("not very good"), -1.125);
    }

    #[test]
    fn multiplier_is_consumed_by_the_first_scored_token() {
        // after "very good" the multiplier resets, so "bad" is unscaled
        assert_eq!(score("very good but bad"), 1.125 - 0.625);
    }

    #[test]
    fn multiplier_skips_zero_score_tokens() {
        // "game" resolves to a synset with zero scores and must not eat
        // the pending modifiers
        assert_eq!(score("not a game good"), -0.75);
        assert_eq!(score("very game good"), 1.125);
    }

    #[test]
    fn renegation_rearms_the_window() {
        assert_eq!(score("not never good"), -0.75);
    }

    #[test]
    fn objective_sentences_are_neutral_with_zero_score() {
        let analysis = analyze("a dull game", &kb(), &ScoreConfig::default());
        assert!(!analysis.subjective);
        assert_eq!(analysis.raw_score, 0.0);
        assert_eq!(analysis.polarity, Polarity::Neutral);
    }

    #[test]
    fn epsilon_band_yields_neutral() {
        let config = ScoreConfig { epsilon: 1.0, ..ScoreConfig::default() };
        let analysis = analyze("good", &kb(), &config);
        assert!(analysis.subjective);
        assert_eq!(analysis.polarity, Polarity::Neutral);
        assert_eq!(analysis.raw_score, 0.75);
    }

    #[test]
    fn balanced_scores_can_be_subjective_but_neutral() {
        let analysis = analyze("mixed", &kb(), &ScoreConfig::default());
        assert!(analysis.subjective);
        assert_eq!(analysis.raw_score, 0.0);
        assert_eq!(analysis.polarity, Polarity::Neutral);
    }

    #[test]
    fn tau_controls_subjectivity() {
        let strict = ScoreConfig { tau_subj: 0.8, ..ScoreConfig::default() };
        let analysis = analyze("good", &kb(), &strict);
        assert!(!analysis.subjective);
        assert_eq!(analysis.raw_score, 0.0);
        assert_eq!(analysis.polarity, Polarity::Neutral);
    }

    #[test]
    fn empty_sentences_are_neutral() {
        let analysis = analyze("", &kb(), &ScoreConfig::default());
        assert!(!analysis.subjective);
        assert_eq!(analysis.raw_score, 0.0);
        assert_eq!(analysis.polarity, Polarity::Neutral);
    }

    #[test]
    fn signed_scores_are_recorded_on_tokens() {
        let analysis = analyze("not very good", &kb(), &ScoreConfig::default());
        let good = analysis.tagged.iter().find(|t| t.token.lemma == "good").unwrap();
        // the raw per-token score stays unflipped and unscaled
        assert_eq!(good.signed_score, 0.75);
    }
}
