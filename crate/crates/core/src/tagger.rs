//! Coarse part-of-speech tagging driven by the knowledge base.

use alloc::vec::Vec;

use crate::kb::{KnowledgeBase, Pos, Synset};
use crate::preprocess::Token;

/// Coarse tag of a token. Open-class tags mirror the lexicon POS codes;
/// `Negation` and `Intensifier` mark dictionary words consumed by the
/// scoring rules; everything else is `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoarsePos {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Negation,
    Intensifier,
    Other,
}

impl CoarsePos {
    /// The lexicon POS for open-class tags, `None` for the rest.
    pub fn lexicon_pos(self) -> Option<Pos> {
        match self {
            CoarsePos::Noun => Some(Pos::Noun),
            CoarsePos::Verb => Some(Pos::Verb),
            CoarsePos::Adjective => Some(Pos::Adjective),
            CoarsePos::Adverb => Some(Pos::Adverb),
            _ => None,
        }
    }
}

impl From<Pos> for CoarsePos {
    fn from(pos: Pos) -> Self {
        match pos {
            Pos::Noun => CoarsePos::Noun,
            Pos::Verb => CoarsePos::Verb,
            Pos::Adjective => CoarsePos::Adjective,
            Pos::Adverb => CoarsePos::Adverb,
        }
    }
}

/// A token with its tag, the synset chosen for it (filled in by sense
/// disambiguation), and its signed score (filled in by the scorer).
#[derive(Debug, Clone, PartialEq)]
pub struct TaggedToken {
    pub token: Token,
    pub pos: CoarsePos,
    pub synset: Option<Synset>,
    pub signed_score: f64,
}

/// The lexicon POS with the most senses for `lemma`; ties go to the
/// higher-priority tag in [`Pos::ALL`] order.
fn dominant_pos(lemma: &str, kb: &KnowledgeBase) -> Option<Pos> {
    let mut best: Option<(Pos, usize)> = None;
    for pos in Pos::ALL {
        let count = kb.sense_count(lemma, pos);
        if count > 0 && best.is_none_or(|(_, best_count)| count > best_count) {
            best = Some((pos, count));
        }
    }
    best.map(|(pos, _)| pos)
}

fn suffix_tag(lemma: &str) -> Option<CoarsePos> {
    if lemma.ends_with("ly") {
        return Some(CoarsePos::Adverb);
    }
    for suffix in ["ous", "ful", "ive", "able"] {
        if lemma.ends_with(suffix) {
            return Some(CoarsePos::Adjective);
        }
    }
    None
}

fn tag_one(token: &Token, kb: &KnowledgeBase) -> CoarsePos {
    let lemma = token.lemma.as_str();
    if kb.is_negation(lemma) {
        return CoarsePos::Negation;
    }
    if kb.intensifier(lemma).is_some() {
        return CoarsePos::Intensifier;
    }
    if let Some(pos) = dominant_pos(lemma, kb) {
        return pos.into();
    }
    suffix_tag(lemma).unwrap_or(CoarsePos::Other)
}

/// Tags every token, in order. Rules apply first match wins: negation
/// dictionary, intensifier dictionary, lexicon POS with the most senses
/// (ties broken a > r > v > n), suffix heuristics (`-ly` adverb; `-ous`,
/// `-ful`, `-ive`, `-able` adjective), else `Other`. Synsets and scores
/// start empty; later stages fill them.
pub fn tag_tokens(tokens: Vec<Token>, kb: &KnowledgeBase) -> Vec<TaggedToken> {
    tokens
        .into_iter()
        .map(|token| {
            let pos = tag_one(&token, kb);
            TaggedToken { token, pos, synset: None, signed_score: 0.0 }
        })
        .collect()
}
