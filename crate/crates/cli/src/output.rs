//! JSON serialization with a fixed field order and fixed number formatting,
//! so identical inputs produce byte-identical output.

use sentilex_core::aggregate::FeedbackResult;
use sentilex_core::eval::{round_half_up2, ClassMetrics, ConfusionMatrix, LABELS};
use sentilex_core::kb::{KnowledgeBase, Pos};
use sentilex_core::scorer::SentenceAnalysis;
use sentilex_core::tagger::{CoarsePos, TaggedToken};

use crate::gold::GoldLevel;

/// Fixed four-decimal rendering; negative zero normalizes to `0.0000`.
pub fn fmt4(value: f64) -> String {
    let value = if value == 0.0 { 0.0 } else { value };
    format!("{value:.4}")
}

/// JSON string literal, quotes included.
pub fn json_string(text: &str) -> String {
    serde_json::to_string(text).expect("strings always serialize")
}

fn pos_name(pos: CoarsePos) -> &'static str {
    match pos {
        CoarsePos::Noun => "noun",
        CoarsePos::Verb => "verb",
        CoarsePos::Adjective => "adjective",
        CoarsePos::Adverb => "adverb",
        CoarsePos::Negation => "negation",
        CoarsePos::Intensifier => "intensifier",
        CoarsePos::Other => "other",
    }
}

fn token_json(token: &TaggedToken) -> String {
    let synset = match &token.synset {
        Some(s) => json_string(&s.key.to_string()),
        None => "null".to_string(),
    };
    format!(
        "{{\"surface\":{},\"lemma\":{},\"pos\":{},\"synset\":{},\"signed_score\":{}}}",
        json_string(&token.token.surface),
        json_string(&token.token.lemma),
        json_string(pos_name(token.pos)),
        synset,
        fmt4(token.signed_score),
    )
}

fn sentence_json(analysis: &SentenceAnalysis, verbose: bool) -> String {
    let mut fields = format!(
        "{{\"index\":{},\"text\":{},\"subjective\":{},\"raw_score\":{},\"polarity\":{}",
        analysis.sentence.index,
        json_string(&analysis.sentence.text),
        analysis.subjective,
        fmt4(analysis.raw_score),
        json_string(analysis.polarity.as_str()),
    );
    if verbose {
        let tokens: Vec<String> = analysis.tagged.iter().map(token_json).collect();
        fields.push_str(&format!(",\"tokens\":[{}]", tokens.join(",")));
    }
    fields.push('}');
    fields
}

/// One classification line: the feedback verdict with its sentences.
pub fn feedback_json(result: &FeedbackResult, verbose: bool) -> String {
    let sentences: Vec<String> =
        result.sentences.iter().map(|s| sentence_json(s, verbose)).collect();
    format!(
        "{{\"id\":{},\"polarity\":{},\"feedback_score\":{},\"subjective_sentences\":{},\"objective_sentences\":{},\"sentences\":[{}]}}",
        json_string(&result.feedback_id),
        json_string(result.polarity.as_str()),
        fmt4(result.feedback_score),
        result.subjective_count,
        result.objective_count,
        sentences.join(","),
    )
}

fn class_metrics_json(metrics: &ClassMetrics) -> String {
    format!(
        "{{\"precision\":{},\"precision_defined\":{},\"recall\":{},\"recall_defined\":{},\"f1\":{},\"f1_defined\":{}}}",
        fmt4(metrics.precision),
        metrics.precision_defined,
        fmt4(metrics.recall),
        metrics.recall_defined,
        fmt4(metrics.f1),
        metrics.f1_defined,
    )
}

/// The evaluation report: counts, matrix (rows = system, columns = gold),
/// accuracy, and per-class metrics.
pub fn evaluation_json(
    level: GoldLevel,
    matrix: &ConfusionMatrix,
    system_only: usize,
    gold_only: usize,
) -> String {
    let rows: Vec<String> = matrix
        .counts()
        .iter()
        .map(|row| format!("[{},{},{}]", row[0], row[1], row[2]))
        .collect();
    let per_class: Vec<String> = LABELS
        .iter()
        .map(|&label| {
            format!(
                "{}:{}",
                json_string(label.as_str()),
                class_metrics_json(&matrix.class_metrics(label))
            )
        })
        .collect();
    let accuracy = matrix.accuracy();
    format!(
        "{{\"level\":{},\"matched\":{},\"system_only\":{},\"gold_only\":{},\"labels\":[\"positive\",\"negative\",\"neutral\"],\"matrix\":[{}],\"accuracy\":{},\"accuracy_display\":{},\"per_class\":{{{}}}}}",
        json_string(level.as_str()),
        matrix.total(),
        system_only,
        gold_only,
        rows.join(","),
        fmt4(accuracy),
        json_string(&format!("{:.2}", round_half_up2(accuracy))),
        per_class.join(","),
    )
}

/// The lexicon summary: synset and lemma counts, per-POS counts, score
/// histograms (ten bins over [0, 1]), and the score identity check.
pub fn lexicon_info_json(kb: &KnowledgeBase) -> String {
    let mut positive_bins = [0u64; 10];
    let mut negative_bins = [0u64; 10];
    for synset in kb.synsets() {
        positive_bins[bin_of(synset.pos_score)] += 1;
        negative_bins[bin_of(synset.neg_score)] += 1;
    }
    let identity = match kb.validate_scores() {
        Ok(_) => "\"pass\"".to_string(),
        Err(violation) => format!("{{\"fail\":{}}}", json_string(&violation.to_string())),
    };
    format!(
        "{{\"synsets\":{},\"lemmas\":{},\"by_pos\":{{\"a\":{},\"n\":{},\"r\":{},\"v\":{}}},\"score_identity\":{},\"pos_score_histogram\":{},\"neg_score_histogram\":{}}}",
        kb.synset_count(),
        kb.lemma_count(),
        kb.synset_count_for(Pos::Adjective),
        kb.synset_count_for(Pos::Noun),
        kb.synset_count_for(Pos::Adverb),
        kb.synset_count_for(Pos::Verb),
        identity,
        render_bins(&positive_bins),
        render_bins(&negative_bins),
    )
}

fn bin_of(score: f64) -> usize {
    ((score * 10.0) as usize).min(9)
}

fn render_bins(bins: &[u64; 10]) -> String {
    let cells: Vec<String> = bins.iter().map(u64::to_string).collect();
    format!("[{}]", cells.join(","))
}
