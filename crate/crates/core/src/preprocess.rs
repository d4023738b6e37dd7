//! Text cleanup, sentence splitting, tokenization, and lemma normalization.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::kb::KnowledgeBase;

/// One unit of input: a review or blog comment with a caller-assigned id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFeedback {
    pub id: String,
    pub text: String,
}

/// A sentence of a feedback, with its 0-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub feedback_id: String,
    pub index: usize,
    pub text: String,
}

/// A token with its normalized lemma and 0-based position in the sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub position: usize,
}

fn has_prefix_ci(word: &str, prefix: &str) -> bool {
    word.get(..prefix.len())
        .is_some_and(|head| head.eq_ignore_ascii_case(prefix))
}

fn strip_urls(text: &str) -> String {
    fn is_url(word: &str) -> bool {
        has_prefix_ci(word, "http://") || has_prefix_ci(word, "https://") || has_prefix_ci(word, "www.")
    }
    let mut out = String::with_capacity(text.len());
    let mut word = String::new();
    for ch in text.chars() {
        if ch.is_whitespace() {
            if !is_url(&word) {
                out.push_str(&word);
            }
            word.clear();
            out.push(ch);
        } else {
            word.push(ch);
        }
    }
    if !is_url(&word) {
        out.push_str(&word);
    }
    out
}

fn strip_tags(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(open) = rest.find('<') {
        match rest[open..].find('>') {
            Some(close) => {
                out.push_str(&rest[..open]);
                rest = &rest[open + close + 1..];
            }
            None => break,
        }
    }
    out.push_str(rest);
    out
}

fn strip_control(text: &str) -> String {
    text.chars()
        .filter(|ch| !ch.is_control() || ch.is_whitespace())
        .collect()
}

fn collapse_runs(text: &str, collapses: impl Fn(char) -> bool, keep: usize) -> String {
    let mut out = String::with_capacity(text.len());
    let mut run_char = None;
    let mut run_len = 0usize;
    for ch in text.chars() {
        if Some(ch) == run_char {
            run_len += 1;
        } else {
            run_char = Some(ch);
            run_len = 1;
        }
        if collapses(ch) && run_len > keep {
            continue;
        }
        out.push(ch);
    }
    out
}

fn normalize_whitespace(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_space = false;
    for ch in text.chars() {
        if ch.is_whitespace() {
            pending_space = !out.is_empty();
        } else {
            if pending_space {
                out.push(' ');
                pending_space = false;
            }
            out.push(ch);
        }
    }
    out
}

fn clean_pass(text: &str) -> String {
    let text = strip_urls(text);
    let text = strip_tags(&text);
    let text = strip_control(&text);
    let text = collapse_runs(&text, char::is_alphabetic, 2);
    let text = collapse_runs(&text, |ch| ch.is_ascii_punctuation(), 1);
    normalize_whitespace(&text)
}

/// Removes web noise from raw feedback text.
///
/// In order: whitespace-delimited words starting with `http://`, `https://`,
/// or `www.` (case-insensitive) are dropped; `<...>` tag spans are dropped;
/// control characters other than whitespace are dropped; runs of 3+ identical
/// letters collapse to 2 (case-sensitive); runs of 2+ identical ASCII
/// punctuation characters collapse to 1; whitespace runs become a single
/// space and the ends are trimmed. One pass can uncover new noise (collapsing
/// `htttp://` yields a URL prefix), so the pass repeats until the text stops
/// changing; the result is a fixed point of the pipeline.
pub fn clean_text(raw: &str) -> String {
    let mut text = raw.to_string();
    loop {
        let next = clean_pass(&text);
        if next == text {
            return next;
        }
        text = next;
    }
}

/// Tokens that end in `.` without ending a sentence.
const ABBREVIATIONS: [&str; 9] = ["mr", "mrs", "dr", "st", "vs", "etc", "e.g", "i.e", "no"];

fn is_abbreviation_before(text: &str, dot: usize) -> bool {
    let token = text[..dot]
        .rsplit(char::is_whitespace)
        .next()
        .unwrap_or("")
        .trim_start_matches(|ch: char| !ch.is_alphanumeric());
    ABBREVIATIONS.contains(&token.to_lowercase().as_str())
}

/// Splits cleaned feedback text into sentences.
///
/// A sentence ends at `.`, `!`, or `?` followed by whitespace or end of
/// input, except that a `.` directly after an abbreviation from the guard
/// list (compared case-insensitively, leading punctuation ignored) does not
/// split. Terminators stay with their sentence; anything left after the last
/// terminator becomes the final sentence; empty fragments are dropped.
/// Indices are contiguous from 0.
pub fn split_sentences(feedback: &RawFeedback) -> Vec<Sentence> {
    let text = feedback.text.as_str();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut sentences = Vec::new();
    let push = |sentences: &mut Vec<Sentence>, fragment: &str| {
        let fragment = fragment.trim();
        if !fragment.is_empty() {
            sentences.push(Sentence {
                feedback_id: feedback.id.clone(),
                index: sentences.len(),
                text: fragment.to_string(),
            });
        }
    };
    let mut start = 0usize;
    for (i, &(byte, ch)) in chars.iter().enumerate() {
        if !matches!(ch, '.' | '!' | '?') {
            continue;
        }
        let followed_by_break = chars.get(i + 1).map_or(true, |&(_, next)| next.is_whitespace());
        if !followed_by_break {
            continue;
        }
        if ch == '.' && is_abbreviation_before(text, byte) {
            continue;
        }
        let end = byte + ch.len_utf8();
        push(&mut sentences, &text[start..end]);
        start = end;
    }
    if start < text.len() {
        push(&mut sentences, &text[start..]);
    }
    sentences
}

fn is_apostrophe(ch: char) -> bool {
    ch == '\'' || ch == '\u{2019}'
}

fn normalize_lemma(surface: &str) -> String {
    surface
        .chars()
        .flat_map(char::to_lowercase)
        .map(|ch| if ch == '\u{2019}' { '\'' } else { ch })
        .collect()
}

/// Tokenizes arbitrary text: maximal runs of alphanumeric characters, plus
/// apostrophes with an alphanumeric neighbor on both sides (`don't` is one
/// token). Everything else separates tokens. The lemma starts as the
/// lowercased surface with curly apostrophes straightened.
pub fn tokenize_text(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut current = String::new();
    let flush = |tokens: &mut Vec<Token>, current: &mut String| {
        if !current.is_empty() {
            tokens.push(Token {
                surface: current.clone(),
                lemma: normalize_lemma(current),
                position: tokens.len(),
            });
            current.clear();
        }
    };
    for (i, &ch) in chars.iter().enumerate() {
        let internal_apostrophe = is_apostrophe(ch)
            && current.chars().last().is_some_and(char::is_alphanumeric)
            && chars.get(i + 1).is_some_and(|next| next.is_alphanumeric());
        if ch.is_alphanumeric() || internal_apostrophe {
            current.push(ch);
        } else {
            flush(&mut tokens, &mut current);
        }
    }
    flush(&mut tokens, &mut current);
    tokens
}

/// Tokenizes one sentence. See [`tokenize_text`].
pub fn tokenize(sentence: &Sentence) -> Vec<Token> {
    tokenize_text(&sentence.text)
}

fn push_nonempty(candidates: &mut Vec<String>, stem: String) {
    if !stem.is_empty() {
        candidates.push(stem);
    }
}

fn suffix_candidates(lemma: &str) -> Vec<String> {
    let mut candidates = Vec::new();
    if let Some(stem) = lemma.strip_suffix("ies") {
        let mut stem = stem.to_string();
        stem.push('y');
        push_nonempty(&mut candidates, stem);
    }
    if let Some(stem) = lemma.strip_suffix("es") {
        push_nonempty(&mut candidates, stem.to_string());
    }
    if let Some(stem) = lemma.strip_suffix('s') {
        push_nonempty(&mut candidates, stem.to_string());
    }
    for suffix in ["ing", "ed"] {
        if let Some(stem) = lemma.strip_suffix(suffix) {
            push_nonempty(&mut candidates, stem.to_string());
            let mut with_e = stem.to_string();
            with_e.push('e');
            push_nonempty(&mut candidates, with_e);
        }
    }
    if let Some(stem) = lemma.strip_suffix("er") {
        push_nonempty(&mut candidates, stem.to_string());
    }
    if let Some(stem) = lemma.strip_suffix("est") {
        push_nonempty(&mut candidates, stem.to_string());
    }
    candidates
}

/// Maps a token to a lemma the lexicon knows.
///
/// If the lowercased surface is already indexed it stays. Otherwise suffix
/// rules are tried in a fixed order (`ies`->`y`, `es`->``, `s`->``,
/// `ing`->``/`e`, `ed`->``/`e`, `er`->``, `est`->``) and the first candidate
/// found in the lexicon wins. If nothing matches, the lemma is left as the
/// lowercased surface.
pub fn lemmatize(mut token: Token, kb: &KnowledgeBase) -> Token {
    if kb.has_lemma(&token.lemma) {
        return token;
    }
    for candidate in suffix_candidates(&token.lemma) {
        if kb.has_lemma(&candidate) {
            token.lemma = candidate;
            return token;
        }
    }
    token
}
