//! Lexicon-based sentiment analysis for short review and blog texts.
//!
//! The pipeline classifies each sentence of a feedback as positive, negative,
//! or neutral, then folds sentence results into a feedback-level verdict:
//!
//! 1. [`kb`] loads a SentiWordNet-style lexicon plus intensifier and negation
//!    dictionaries into an in-memory [`kb::KnowledgeBase`].
//! 2. [`preprocess`] cleans noisy text, splits it into sentences, tokenizes,
//!    and normalizes tokens to lexicon lemmas.
//! 3. [`tagger`] assigns coarse part-of-speech tags driven by the lexicon.
//! 4. [`wsd`] picks one synset per open-class token by gloss overlap.
//! 5. [`scorer`] applies negation and intensifier rules and classifies each
//!    sentence by signed score sum.
//! 6. [`aggregate`] folds sentence results into a feedback verdict.
//! 7. [`eval`] computes confusion matrices and derived metrics against gold
//!    labels.
//!
//! The crate is `no_std` with `alloc`; all I/O lives in the companion CLI
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod aggregate;
pub mod eval;
pub mod kb;
pub mod preprocess;
pub mod scorer;
pub mod tagger;
pub mod wsd;

pub use aggregate::{AggregateConfig, AggregateStrategy, FeedbackResult};
pub use eval::{ClassMetrics, ConfusionMatrix, SubjectivityStats};
pub use kb::{KnowledgeBase, Pos, Synset, SynsetKey};
pub use preprocess::{RawFeedback, Sentence, Token};
pub use scorer::{Polarity, ScoreConfig, SentenceAnalysis};
pub use tagger::{CoarsePos, TaggedToken};
pub use wsd::Stopwords;
