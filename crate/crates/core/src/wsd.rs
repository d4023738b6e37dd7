//! Word sense disambiguation by gloss overlap.
//!
//! For each open-class token the candidate senses of its lemma (restricted
//! to the token's POS) are compared by how many distinct gloss lemmas also
//! occur among the other open-class lemmas of the sentence. The sense with
//! the most overlap wins; ties and empty contexts fall back to the lowest
//! sense rank, i.e. the most frequent sense.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::kb::KnowledgeBase;
use crate::kb::Synset;
use crate::preprocess::{lemmatize, tokenize_text};
use crate::tagger::TaggedToken;

/// Function words ignored when counting gloss overlap. Applied to lemmas,
/// after lemmatization.
pub const DEFAULT_STOPWORDS: [&str; 55] = [
    "a", "an", "and", "any", "are", "as", "at", "be", "been", "being", "but",
    "by", "can", "do", "does", "for", "from", "had", "has", "have", "he",
    "her", "his", "i", "if", "in", "into", "is", "it", "its", "no", "not",
    "of", "on", "or", "she", "so", "some", "such", "that", "the", "their",
    "them", "then", "there", "these", "they", "this", "those", "to", "was",
    "were", "which", "who", "with",
];

/// A stopword set for gloss filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stopwords(BTreeSet<String>);

impl Stopwords {
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Self {
        Stopwords(words.into_iter().map(|w| w.trim().to_lowercase()).filter(|w| !w.is_empty()).collect())
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.0.contains(lemma)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for Stopwords {
    fn default() -> Self {
        Stopwords::from_words(DEFAULT_STOPWORDS)
    }
}

/// Counts the distinct non-stopword gloss lemmas that appear in `context`.
/// The gloss runs through the same tokenizer and lemmatizer as review text.
pub fn gloss_overlap(
    gloss: &str,
    context: &BTreeSet<String>,
    kb: &KnowledgeBase,
    stopwords: &Stopwords,
) -> usize {
    let mut matched = BTreeSet::new();
    for token in tokenize_text(gloss) {
        let token = lemmatize(token, kb);
        if stopwords.contains(&token.lemma) || !context.contains(&token.lemma) {
            continue;
        }
        matched.insert(token.lemma);
    }
    matched.len()
}

/// The disambiguation context of a token: the lemmas of every other
/// open-class token in the sentence (all positions except `exclude`).
pub fn sentence_context(sentence: &[TaggedToken], exclude: usize) -> BTreeSet<String> {
    sentence
        .iter()
        .filter(|t| t.token.position != exclude && t.pos.lexicon_pos().is_some())
        .map(|t| t.token.lemma.to_string())
        .collect()
}

/// Picks the best sense of one token against its sentence, or `None` when
/// the token is closed-class or its lemma is not in the lexicon. Candidates
/// arrive ordered by sense rank, so keeping a strictly better overlap makes
/// the most frequent sense win all ties.
pub fn disambiguate(
    token: &TaggedToken,
    sentence: &[TaggedToken],
    kb: &KnowledgeBase,
    stopwords: &Stopwords,
) -> Option<Synset> {
    let pos = token.pos.lexicon_pos()?;
    let candidates = kb.lookup_senses(&token.token.lemma, Some(pos));
    let context = sentence_context(sentence, token.token.position);
    let mut best: Option<(&Synset, usize)> = None;
    for candidate in candidates {
        let overlap = gloss_overlap(&candidate.gloss, &context, kb, stopwords);
        if best.is_none_or(|(_, best_overlap)| overlap > best_overlap) {
            best = Some((candidate, overlap));
        }
    }
    best.map(|(synset, _)| synset.clone())
}

/// Resolves a synset for every open-class token of a tagged sentence.
pub fn disambiguate_sentence(
    mut tagged: Vec<TaggedToken>,
    kb: &KnowledgeBase,
    stopwords: &Stopwords,
) -> Vec<TaggedToken> {
    for i in 0..tagged.len() {
        if tagged[i].pos.lexicon_pos().is_some() {
            let synset = disambiguate(&tagged[i], &tagged, kb, stopwords);
            tagged[i].synset = synset;
        }
    }
    tagged
}
