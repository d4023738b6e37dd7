//! Sentiment lexicon knowledge base.
//!
//! The lexicon file is UTF-8 text, one synset per line, with six
//! tab-separated fields:
//!
//! ```text
//! POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss
//! ```
//!
//! `POS` is one of `a` (adjective), `n` (noun), `v` (verb), `r` (adverb);
//! `ID` is a non-negative synset offset; the two scores are in `[0, 1]` and
//! sum to at most 1; `SynsetTerms` is a space-separated list of `lemma#rank`
//! entries with rank >= 1. Lines whose first non-blank character is `#` are
//! comments; blank lines are skipped. The objectivity score is not stored in
//! the file and is recovered as `1 - (PosScore + NegScore)`.
//!
//! Two user dictionaries ride along: intensifiers (`word,multiplier` CSV,
//! multiplier > 0) and negations (one word per line). Both accept the same
//! comment and blank-line conventions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// Absolute tolerance for the identity `pos + neg + obj = 1`.
///
/// Lexicon files store scores as short decimal strings; this absorbs the
/// decimal-to-binary rounding of those fields.
pub const SCORE_TOLERANCE: f64 = 1e-9;

/// Part of speech of a synset.
///
/// Variant order is the wildcard lookup priority: adjectives and adverbs
/// carry most of the sentiment signal, so they come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    Adjective,
    Adverb,
    Verb,
    Noun,
}

impl Pos {
    /// All tags in lookup priority order.
    pub const ALL: [Pos; 4] = [Pos::Adjective, Pos::Adverb, Pos::Verb, Pos::Noun];

    pub fn code(self) -> char {
        match self {
            Pos::Adjective => 'a',
            Pos::Adverb => 'r',
            Pos::Verb => 'v',
            Pos::Noun => 'n',
        }
    }

    pub fn from_code(code: &str) -> Option<Pos> {
        match code {
            "a" => Some(Pos::Adjective),
            "r" => Some(Pos::Adverb),
            "v" => Some(Pos::Verb),
            "n" => Some(Pos::Noun),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Unique synset identifier: part of speech plus file offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetKey {
    pub pos: Pos,
    pub offset: u32,
}

impl fmt::Display for SynsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:08}", self.pos, self.offset)
    }
}

/// One lemma of a synset with its sense rank (1 = most frequent sense).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub lemma: String,
    pub sense_rank: u32,
}

/// A scored synset. Lemmas are lowercased at parse time.
#[derive(Debug, Clone, PartialEq)]
pub struct Synset {
    pub key: SynsetKey,
    pub pos_score: f64,
    pub neg_score: f64,
    pub obj_score: f64,
    pub terms: Vec<Term>,
    pub gloss: String,
}

impl Synset {
    /// Serializes back to the six-field tab-separated line format.
    ///
    /// Offsets are zero-padded to eight digits and scores use the shortest
    /// exact decimal form, so `parse_lexicon_line` round-trips the result.
    pub fn to_lexicon_line(&self) -> String {
        let mut terms = String::new();
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                terms.push(' ');
            }
            let _ = write!(terms, "{}#{}", term.lemma, term.sense_rank);
        }
        let mut line = String::new();
        let _ = write!(
            line,
            "{}\t{:08}\t{}\t{}\t{}\t{}",
            self.key.pos, self.key.offset, self.pos_score, self.neg_score, terms, self.gloss
        );
        line
    }
}

/// Score constraint violations.
#[derive(Debug, Clone, PartialEq)]
pub enum ScoreError {
    OutOfRange { field: &'static str, value: f64 },
    SumExceedsOne { pos_score: f64, neg_score: f64 },
}

impl fmt::Display for ScoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoreError::OutOfRange { field, value } => {
                write!(f, "{field} {value} is outside [0, 1]")
            }
            ScoreError::SumExceedsOne { pos_score, neg_score } => {
                write!(f, "PosScore {pos_score} + NegScore {neg_score} exceeds 1")
            }
        }
    }
}

impl core::error::Error for ScoreError {}

/// Derives the objectivity score `1 - (pos + neg)`.
///
/// Rejects scores outside `[0, 1]` and sums above 1 (beyond
/// [`SCORE_TOLERANCE`]). The result is clamped to `[0, 1]` so a sum within
/// tolerance of 1 yields exactly 0.
pub fn compute_obj_score(pos_score: f64, neg_score: f64) -> Result<f64, ScoreError> {
    for (field, value) in [("PosScore", pos_score), ("NegScore", neg_score)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(ScoreError::OutOfRange { field, value });
        }
    }
    let sum = pos_score + neg_score;
    if sum > 1.0 + SCORE_TOLERANCE {
        return Err(ScoreError::SumExceedsOne { pos_score, neg_score });
    }
    Ok((1.0 - sum).clamp(0.0, 1.0))
}

/// Reasons a single lexicon line fails to parse.
#[derive(Debug, Clone, PartialEq)]
pub enum LineError {
    FieldCount { found: usize },
    UnknownPos(String),
    InvalidOffset(String),
    InvalidScore { field: &'static str, value: String },
    Score(ScoreError),
    NoTerms,
    MalformedTerm(String),
    InvalidRank(String),
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineError::FieldCount { found } => {
                write!(f, "expected 6 tab-separated fields, found {found}")
            }
            LineError::UnknownPos(code) => write!(f, "unknown POS code {code:?}"),
            LineError::InvalidOffset(text) => write!(f, "invalid synset ID {text:?}"),
            LineError::InvalidScore { field, value } => {
                write!(f, "{field} {value:?} is not a number")
            }
            LineError::Score(e) => write!(f, "{e}"),
            LineError::NoTerms => write!(f, "SynsetTerms field is empty"),
            LineError::MalformedTerm(term) => {
                write!(f, "term {term:?} is not of the form lemma#rank")
            }
            LineError::InvalidRank(term) => {
                write!(f, "term {term:?} has an invalid sense rank (must be >= 1)")
            }
        }
    }
}

impl core::error::Error for LineError {}

impl From<ScoreError> for LineError {
    fn from(e: ScoreError) -> Self {
        LineError::Score(e)
    }
}

fn parse_score(field: &'static str, text: &str) -> Result<f64, LineError> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| LineError::InvalidScore { field, value: text.trim().to_string() })?;
    if !(0.0..=1.0).contains(&value) {
        return Err(LineError::Score(ScoreError::OutOfRange { field, value }));
    }
    Ok(value)
}

fn parse_terms(field: &str) -> Result<Vec<Term>, LineError> {
    let mut terms = Vec::new();
    for entry in field.split_whitespace() {
        let (lemma, rank) = entry
            .rsplit_once('#')
            .ok_or_else(|| LineError::MalformedTerm(entry.to_string()))?;
        if lemma.is_empty() {
            return Err(LineError::MalformedTerm(entry.to_string()));
        }
        let sense_rank: u32 = rank
            .parse()
            .map_err(|_| LineError::InvalidRank(entry.to_string()))?;
        if sense_rank == 0 {
            return Err(LineError::InvalidRank(entry.to_string()));
        }
        terms.push(Term { lemma: lemma.to_lowercase(), sense_rank });
    }
    if terms.is_empty() {
        return Err(LineError::NoTerms);
    }
    Ok(terms)
}

/// Parses one lexicon line. Returns `Ok(None)` for comments and blank lines.
pub fn parse_lexicon_line(line: &str) -> Result<Option<Synset>, LineError> {
    let trimmed = line.trim_start();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 6 {
        return Err(LineError::FieldCount { found: fields.len() });
    }
    let pos = Pos::from_code(fields[0].trim())
        .ok_or_else(|| LineError::UnknownPos(fields[0].trim().to_string()))?;
    let offset: u32 = fields[1]
        .trim()
        .parse()
        .map_err(|_| LineError::InvalidOffset(fields[1].trim().to_string()))?;
    let pos_score = parse_score("PosScore", fields[2])?;
    let neg_score = parse_score("NegScore", fields[3])?;
    let obj_score = compute_obj_score(pos_score, neg_score)?;
    let terms = parse_terms(fields[4])?;
    let gloss = fields[5].trim().to_string();
    Ok(Some(Synset {
        key: SynsetKey { pos, offset },
        pos_score,
        neg_score,
        obj_score,
        terms,
        gloss,
    }))
}

/// Which of the three input files an error or warning refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFile {
    Lexicon,
    Intensifiers,
    Negations,
}

impl fmt::Display for SourceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SourceFile::Lexicon => "lexicon",
            SourceFile::Intensifiers => "intensifier dictionary",
            SourceFile::Negations => "negation dictionary",
        };
        write!(f, "{name}")
    }
}

/// A load failure, tagged with the offending file and 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadError {
    pub file: SourceFile,
    pub line: usize,
    pub kind: LoadErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LoadErrorKind {
    Line(LineError),
    DuplicateKey(SynsetKey),
    MalformedIntensifier(String),
    InvalidMultiplier(String),
    MalformedNegation(String),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} line {}: ", self.file, self.line)?;
        match &self.kind {
            LoadErrorKind::Line(e) => write!(f, "{e}"),
            LoadErrorKind::DuplicateKey(key) => write!(f, "duplicate synset ID {key}"),
            LoadErrorKind::MalformedIntensifier(text) => {
                write!(f, "expected word,multiplier, found {text:?}")
            }
            LoadErrorKind::InvalidMultiplier(text) => {
                write!(f, "multiplier {text:?} must be a number > 0")
            }
            LoadErrorKind::MalformedNegation(text) => {
                write!(f, "expected a single word, found {text:?}")
            }
        }
    }
}

impl core::error::Error for LoadError {}

/// Non-fatal conditions noticed while loading.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadWarning {
    /// The same intensifier word appeared more than once; the later entry won.
    DuplicateIntensifier { word: String, line: usize },
    /// The same negation word appeared more than once.
    DuplicateNegation { word: String, line: usize },
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadWarning::DuplicateIntensifier { word, line } => {
                write!(f, "intensifier dictionary line {line}: duplicate word {word:?}, last entry wins")
            }
            LoadWarning::DuplicateNegation { word, line } => {
                write!(f, "negation dictionary line {line}: duplicate word {word:?}")
            }
        }
    }
}

/// Per-lemma sense lists, one per POS, each sorted by (sense rank, key).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct SenseEntry {
    by_pos: [Vec<(SynsetKey, u32)>; 4],
}

/// Everything the pipeline needs to look up: synsets by key, senses by lemma,
/// and the two modifier dictionaries. Immutable once loaded.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KnowledgeBase {
    synsets: BTreeMap<SynsetKey, Synset>,
    sense_index: BTreeMap<String, SenseEntry>,
    intensifiers: BTreeMap<String, f64>,
    negations: BTreeSet<String>,
}

/// A loaded knowledge base plus any non-fatal warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct Loaded {
    pub kb: KnowledgeBase,
    pub warnings: Vec<LoadWarning>,
}

/// Builds a [`KnowledgeBase`] from the lines of the three input files.
///
/// Any malformed line aborts the load with its file and line number. A
/// duplicate synset key is an error; duplicate dictionary words are warnings
/// (for intensifiers the last entry wins).
pub fn load_knowledge_base<'a>(
    lexicon: impl IntoIterator<Item = &'a str>,
    intensifiers: impl IntoIterator<Item = &'a str>,
    negations: impl IntoIterator<Item = &'a str>,
) -> Result<Loaded, LoadError> {
    let mut synsets = BTreeMap::new();
    for (idx, line) in lexicon.into_iter().enumerate() {
        let parsed = parse_lexicon_line(line).map_err(|e| LoadError {
            file: SourceFile::Lexicon,
            line: idx + 1,
            kind: LoadErrorKind::Line(e),
        })?;
        if let Some(synset) = parsed {
            let key = synset.key;
            if synsets.insert(key, synset).is_some() {
                return Err(LoadError {
                    file: SourceFile::Lexicon,
                    line: idx + 1,
                    kind: LoadErrorKind::DuplicateKey(key),
                });
            }
        }
    }

    let mut warnings = Vec::new();
    let mut intensifier_map = BTreeMap::new();
    for (idx, line) in intensifiers.into_iter().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |kind| LoadError { file: SourceFile::Intensifiers, line: idx + 1, kind };
        let (word, multiplier) = trimmed
            .split_once(',')
            .ok_or_else(|| err(LoadErrorKind::MalformedIntensifier(trimmed.to_string())))?;
        let word = word.trim().to_lowercase();
        if word.is_empty() || word.chars().any(char::is_whitespace) {
            return Err(err(LoadErrorKind::MalformedIntensifier(trimmed.to_string())));
        }
        let multiplier: f64 = multiplier
            .trim()
            .parse()
            .map_err(|_| err(LoadErrorKind::InvalidMultiplier(multiplier.trim().to_string())))?;
        if !multiplier.is_finite() || multiplier <= 0.0 {
            return Err(err(LoadErrorKind::InvalidMultiplier(multiplier.to_string())));
        }
        if intensifier_map.insert(word.clone(), multiplier).is_some() {
            warnings.push(LoadWarning::DuplicateIntensifier { word, line: idx + 1 });
        }
    }

    let mut negation_set = BTreeSet::new();
    for (idx, line) in negations.into_iter().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.chars().any(char::is_whitespace) {
            return Err(LoadError {
                file: SourceFile::Negations,
                line: idx + 1,
                kind: LoadErrorKind::MalformedNegation(trimmed.to_string()),
            });
        }
        let word = trimmed.to_lowercase();
        if !negation_set.insert(word.clone()) {
            warnings.push(LoadWarning::DuplicateNegation { word, line: idx + 1 });
        }
    }

    let mut sense_index: BTreeMap<String, SenseEntry> = BTreeMap::new();
    for synset in synsets.values() {
        for term in &synset.terms {
            sense_index
                .entry(term.lemma.clone())
                .or_default()
                .by_pos[synset.key.pos.index()]
                .push((synset.key, term.sense_rank));
        }
    }
    for entry in sense_index.values_mut() {
        for senses in &mut entry.by_pos {
            senses.sort_by_key(|&(key, rank)| (rank, key));
        }
    }

    Ok(Loaded {
        kb: KnowledgeBase {
            synsets,
            sense_index,
            intensifiers: intensifier_map,
            negations: negation_set,
        },
        warnings,
    })
}

/// Violation of the `pos + neg + obj = 1` identity, reported by
/// [`KnowledgeBase::validate_scores`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreViolation {
    pub key: SynsetKey,
    pub pos_score: f64,
    pub neg_score: f64,
    pub obj_score: f64,
}

impl fmt::Display for ScoreViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "synset {}: scores {} + {} + {} do not sum to 1",
            self.key, self.pos_score, self.neg_score, self.obj_score
        )
    }
}

impl core::error::Error for ScoreViolation {}

impl KnowledgeBase {
    pub fn synset(&self, key: &SynsetKey) -> Option<&Synset> {
        self.synsets.get(key)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    pub fn synset_count_for(&self, pos: Pos) -> usize {
        self.synsets.keys().filter(|key| key.pos == pos).count()
    }

    /// True if `lemma` appears in at least one synset (any POS).
    pub fn has_lemma(&self, lemma: &str) -> bool {
        self.sense_index.contains_key(lemma)
    }

    /// Number of distinct lemmas across all synsets.
    pub fn lemma_count(&self) -> usize {
        self.sense_index.len()
    }

    /// Number of senses of `lemma` with the given POS.
    pub fn sense_count(&self, lemma: &str, pos: Pos) -> usize {
        self.sense_index
            .get(lemma)
            .map_or(0, |entry| entry.by_pos[pos.index()].len())
    }

    /// All senses of `lemma`, most frequent first.
    ///
    /// With a POS the list covers that POS only; without one it chains all
    /// four in [`Pos::ALL`] priority order (a, r, v, n), each sorted by sense
    /// rank. Unknown lemmas yield an empty list.
    pub fn lookup_senses(&self, lemma: &str, pos: Option<Pos>) -> Vec<&Synset> {
        let Some(entry) = self.sense_index.get(lemma) else {
            return Vec::new();
        };
        let mut senses = Vec::new();
        let tags = match pos {
            Some(p) => &[p][..],
            None => &Pos::ALL[..],
        };
        for p in tags {
            for (key, _) in &entry.by_pos[p.index()] {
                senses.push(&self.synsets[key]);
            }
        }
        senses
    }

    pub fn is_negation(&self, word: &str) -> bool {
        self.negations.contains(word)
    }

    pub fn intensifier(&self, word: &str) -> Option<f64> {
        self.intensifiers.get(word).copied()
    }

    pub fn intensifiers(&self) -> impl Iterator<Item = (&str, f64)> {
        self.intensifiers.iter().map(|(word, &m)| (word.as_str(), m))
    }

    pub fn negations(&self) -> impl Iterator<Item = &str> {
        self.negations.iter().map(String::as_str)
    }

    /// Checks `pos + neg + obj = 1` (within [`SCORE_TOLERANCE`]) for every
    /// synset and returns the number checked.
    pub fn validate_scores(&self) -> Result<usize, ScoreViolation> {
        for synset in self.synsets.values() {
            let drift = (synset.pos_score + synset.neg_score + synset.obj_score - 1.0).abs();
            let in_range = [synset.pos_score, synset.neg_score, synset.obj_score]
                .iter()
                .all(|score| (0.0..=1.0).contains(score));
            if drift > SCORE_TOLERANCE || !in_range {
                return Err(ScoreViolation {
                    key: synset.key,
                    pos_score: synset.pos_score,
                    neg_score: synset.neg_score,
                    obj_score: synset.obj_score,
                });
            }
        }
        Ok(self.synsets.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn load(lexicon: &str, intensifiers: &str, negations: &str) -> Result<Loaded, LoadError> {
        load_knowledge_base(lexicon.lines(), intensifiers.lines(), negations.lines())
    }

    #[test]
    fn parses_a_plain_line() {
        let line = "a\t00001740\t0.125\t0\tgood#1 unspoiled#2\tmorally admirable";
        let synset = parse_lexicon_line(line).unwrap().unwrap();
        assert_eq!(synset.key, SynsetKey { pos: Pos::Adjective, offset: 1740 });
        assert_eq!(synset.pos_score, 0.125);
        assert_eq!(synset.neg_score, 0.0);
        assert_eq!(synset.obj_score, 0.875);
        assert_eq!(
            synset.terms,
            vec![
                Term { lemma: "good".into(), sense_rank: 1 },
                Term { lemma: "unspoiled".into(), sense_rank: 2 },
            ]
        );
        assert_eq!(synset.gloss, "morally admirable");
    }

    #[test]
    fn lowercases_lemmas() {
        let line = "n\t42\t0\t0\tLondon#1\ta city";
        let synset = parse_lexicon_line(line).unwrap().unwrap();
        assert_eq!(synset.terms[0].lemma, "london");
    }

    #[test]
    fn skips_comments_and_blanks() {
        assert_eq!(parse_lexicon_line("# header").unwrap(), None);
        assert_eq!(parse_lexicon_line("   # indented").unwrap(), None);
        assert_eq!(parse_lexicon_line("").unwrap(), None);
        assert_eq!(parse_lexicon_line("   \t ").unwrap(), None);
    }

    #[test]
    fn rejects_malformed_lines() {
        let cases: &[(&str, LineError)] = &[
            ("a\t1\t0\t0\tgood#1", LineError::FieldCount { found: 5 }),
            (
                "x\t1\t0\t0\tgood#1\tg",
                LineError::UnknownPos("x".into()),
            ),
            (
                "a\t-1\t0\t0\tgood#1\tg",
                LineError::InvalidOffset("-1".into()),
            ),
            (
                "a\t1\tabc\t0\tgood#1\tg",
                LineError::InvalidScore { field: "PosScore", value: "abc".into() },
            ),
            (
                "a\t1\t1.5\t0\tgood#1\tg",
                LineError::Score(ScoreError::OutOfRange { field: "PosScore", value: 1.5 }),
            ),
            (
                "a\t1\t0.7\t0.6\tgood#1\tg",
                LineError::Score(ScoreError::SumExceedsOne { pos_score: 0.7, neg_score: 0.6 }),
            ),
            ("a\t1\t0\t0\t\tg", LineError::NoTerms),
            (
                "a\t1\t0\t0\tgood\tg",
                LineError::MalformedTerm("good".into()),
            ),
            (
                "a\t1\t0\t0\tgood#0\tg",
                LineError::InvalidRank("good#0".into()),
            ),
            (
                "a\t1\t0\t0\tgood#x\tg",
                LineError::InvalidRank("good#x".into()),
            ),
        ];
        for (line, expected) in cases {
            assert_eq!(parse_lexicon_line(line).unwrap_err(), *expected, "line: {line:?}");
        }
    }

    #[test]
    fn obj_score_completes_the_identity() {
        assert_eq!(compute_obj_score(0.5, 0.25).unwrap(), 0.25);
        assert_eq!(compute_obj_score(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(compute_obj_score(1.0, 0.0).unwrap(), 0.0);
        assert!(matches!(
            compute_obj_score(1.5, 0.0),
            Err(ScoreError::OutOfRange { field: "PosScore", .. })
        ));
        assert!(matches!(
            compute_obj_score(0.7, 0.6),
            Err(ScoreError::SumExceedsOne { .. })
        ));
        assert!(matches!(
            compute_obj_score(f64::NAN, 0.0),
            Err(ScoreError::OutOfRange { .. })
        ));
    }

    #[test]
    fn loads_synsets_and_dictionaries() {
        let lexicon = "# comment\n\
                       a\t1\t0.75\t0\tgood#1\tof high quality\n\
                       n\t2\t0\t0\tmatch#1 game#2\ta contest";
        let loaded = load(lexicon, "very,1.5\nquite,1.2", "not\nnever").unwrap();
        assert!(loaded.warnings.is_empty());
        let kb = loaded.kb;
        assert_eq!(kb.synset_count(), 2);
        assert_eq!(kb.intensifier("very"), Some(1.5));
        assert_eq!(kb.intensifier("good"), None);
        assert!(kb.is_negation("not"));
        assert!(!kb.is_negation("very"));
        assert_eq!(kb.validate_scores().unwrap(), 2);
    }

    #[test]
    fn duplicate_synset_key_is_an_error() {
        let lexicon = "a\t1\t0\t0\tgood#1\tg\na\t1\t0.5\t0\tfine#1\tg";
        let err = load(lexicon, "", "").unwrap_err();
        assert_eq!(err.file, SourceFile::Lexicon);
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, LoadErrorKind::DuplicateKey(_)));
    }

    #[test]
    fn duplicate_intensifier_warns_and_last_wins() {
        let loaded = load("", "very,1.5\nvery,2.0", "").unwrap();
        assert_eq!(loaded.kb.intensifier("very"), Some(2.0));
        assert_eq!(
            loaded.warnings,
            vec![LoadWarning::DuplicateIntensifier { word: "very".into(), line: 2 }]
        );
    }

    #[test]
    fn rejects_bad_dictionary_lines() {
        assert!(matches!(
            load("", "very", "").unwrap_err().kind,
            LoadErrorKind::MalformedIntensifier(_)
        ));
        assert!(matches!(
            load("", "very,0", "").unwrap_err().kind,
            LoadErrorKind::InvalidMultiplier(_)
        ));
        assert!(matches!(
            load("", "very,-1.5", "").unwrap_err().kind,
            LoadErrorKind::InvalidMultiplier(_)
        ));
        assert!(matches!(
            load("", "", "not really").unwrap_err().kind,
            LoadErrorKind::MalformedNegation(_)
        ));
    }

    #[test]
    fn lookup_orders_by_sense_rank() {
        let lexicon = "a\t10\t0\t0.25\tcheap#2\tof poor quality\n\
                       a\t11\t0.375\t0\tcheap#1\tlow in price";
        let kb = load(lexicon, "", "").unwrap().kb;
        let senses = kb.lookup_senses("cheap", Some(Pos::Adjective));
        assert_eq!(senses.len(), 2);
        assert_eq!(senses[0].key.offset, 11);
        assert_eq!(senses[1].key.offset, 10);
    }

    #[test]
    fn wildcard_lookup_chains_pos_by_priority() {
        let lexicon = "n\t1\t0\t0\tsound#1\tvibrations in air\n\
                       v\t2\t0\t0\tsound#1\tmake a noise\n\
                       a\t3\t0.25\t0\tsound#1\tin good condition\n\
                       r\t4\t0\t0\tsound#1\tdeeply, of sleep";
        let kb = load(lexicon, "", "").unwrap().kb;
        let senses = kb.lookup_senses("sound", None);
        let order: Vec<Pos> = senses.iter().map(|s| s.key.pos).collect();
        assert_eq!(order, vec![Pos::Adjective, Pos::Adverb, Pos::Verb, Pos::Noun]);
        assert!(kb.lookup_senses("missing", None).is_empty());
        assert!(kb.lookup_senses("sound", Some(Pos::Verb)).len() == 1);
    }

    #[test]
    fn serialized_lines_round_trip() {
        let lines = [
            "a\t00001740\t0.125\t0\tgood#1 unspoiled#2\tmorally admirable",
            "n\t00000042\t0\t0.625\tmess#1\ta disorderly situation",
            "v\t12345678\t0.875\t0.125\tdelight#1\tgive great pleasure",
        ];
        for line in lines {
            let synset = parse_lexicon_line(line).unwrap().unwrap();
            assert_eq!(synset.to_lexicon_line(), *line);
            let reparsed = parse_lexicon_line(&synset.to_lexicon_line()).unwrap().unwrap();
            assert_eq!(reparsed, synset);
        }
    }

    #[test]
    fn validate_scores_flags_drift() {
        let lexicon = "a\t1\t0.5\t0.25\tgood#1\tg";
        let mut kb = load(lexicon, "", "").unwrap().kb;
        assert_eq!(kb.validate_scores().unwrap(), 1);
        let key = SynsetKey { pos: Pos::Adjective, offset: 1 };
        kb.synsets.get_mut(&key).unwrap().obj_score = 0.5;
        let violation = kb.validate_scores().unwrap_err();
        assert_eq!(violation.key, key);
    }
}
