//! End-to-end wiring: raw feedback in, feedback verdict out.

use sentilex_core::aggregate::{aggregate_feedback, AggregateConfig, FeedbackResult};
use sentilex_core::kb::KnowledgeBase;
use sentilex_core::preprocess::{clean_text, lemmatize, split_sentences, tokenize, RawFeedback};
use sentilex_core::scorer::{score_sentence, ScoreConfig};
use sentilex_core::tagger::tag_tokens;
use sentilex_core::wsd::{disambiguate_sentence, Stopwords};

pub struct Pipeline {
    pub kb: KnowledgeBase,
    pub score: ScoreConfig,
    pub aggregate: AggregateConfig,
    pub stopwords: Stopwords,
}

impl Pipeline {
    pub fn new(kb: KnowledgeBase) -> Pipeline {
        Pipeline {
            kb,
            score: ScoreConfig::default(),
            aggregate: AggregateConfig::default(),
            stopwords: Stopwords::default(),
        }
    }

    /// Cleans, splits, analyzes, and aggregates one feedback. Feedback whose
    /// text dissolves entirely (for example, a lone URL) comes back neutral
    /// with no sentences.
    pub fn analyze(&self, feedback: &RawFeedback) -> FeedbackResult {
        let cleaned = RawFeedback {
            id: feedback.id.clone(),
            text: clean_text(&feedback.text),
        };
        let analyses: Vec<_> = split_sentences(&cleaned)
            .into_iter()
            .map(|sentence| {
                let tokens = tokenize(&sentence)
                    .into_iter()
                    .map(|token| lemmatize(token, &self.kb))
                    .collect();
                let tagged = tag_tokens(tokens, &self.kb);
                let tagged = disambiguate_sentence(tagged, &self.kb, &self.stopwords);
                score_sentence(sentence, tagged, &self.kb, &self.score)
            })
            .collect();
        if analyses.is_empty() {
            return FeedbackResult::empty(cleaned.id);
        }
        aggregate_feedback(analyses, &self.aggregate)
            .expect("sentences of one feedback share its id")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sentilex_core::kb::load_knowledge_base;
    use sentilex_core::scorer::Polarity;

    fn pipeline() -> Pipeline {
        let lexicon = "\
a\t1\t0.75\t0\tgood#1\tof high quality
a\t2\t0\t0.625\tbad#1\tof poor quality
n\t3\t0\t0\tmatch#1\ta formal contest
v\t4\t0\t0\tplay#1\tengage in a game";
        let loaded = load_knowledge_base(
            lexicon.lines(),
            "very,1.5".lines(),
            "not\nnever".lines(),
        )
        .unwrap();
        Pipeline::new(loaded.kb)
    }

    #[test]
    fn classifies_a_two_sentence_feedback() {
        let pipeline = pipeline();
        let feedback = RawFeedback {
            id: "r1".into(),
            text: "The match was very good! They played it.".into(),
        };
        let result = pipeline.analyze(&feedback);
        assert_eq!(result.feedback_id, "r1");
        assert_eq!(result.sentences.len(), 2);
        assert_eq!(result.sentences[0].raw_score, 1.125);
        assert_eq!(result.sentences[0].polarity, Polarity::Positive);
        assert!(!result.sentences[1].subjective);
        assert_eq!(result.feedback_score, 1.125);
        assert_eq!(result.polarity, Polarity::Positive);
        assert_eq!(result.subjective_count, 1);
        assert_eq!(result.objective_count, 1);
    }

    #[test]
    fn noise_only_feedback_is_neutral_and_empty() {
        let pipeline = pipeline();
        let feedback = RawFeedback { id: "r2".into(), text: "http://spam.example <b></b>".into() };
        let result = pipeline.analyze(&feedback);
        assert!(result.sentences.is_empty());
        assert_eq!(result.polarity, Polarity::Neutral);
        assert_eq!(result.feedback_score, 0.0);
    }

    #[test]
    fn negative_feedback_sums_below_zero() {
        let pipeline = pipeline();
        let feedback = RawFeedback {
            id: "r3".into(),
            text: "Not a good match. Very bad play.".into(),
        };
        let result = pipeline.analyze(&feedback);
        assert_eq!(result.sentences[0].raw_score, -0.75);
        assert_eq!(result.sentences[1].raw_score, -0.9375);
        assert_eq!(result.feedback_score, -1.6875);
        assert_eq!(result.polarity, Polarity::Negative);
    }
}
