//! Normalization and grapheme segmentation.
//!
//! Suffix rules are written in terms of whole Tamil letters. A letter such as
//! `டி` is two code points (consonant + vowel sign) and `ம்` is consonant +
//! pulli, so every comparison in this crate runs over extended grapheme
//! clusters of NFC text, never over code points.

use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};
use thiserror::Error;
use unicode_normalization::{is_nfc, UnicodeNormalization};
use unicode_segmentation::UnicodeSegmentation;

pub const PULLI: char = '\u{0BCD}';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid UTF-8 at byte offset {offset}")]
pub struct DecodeError {
    pub offset: usize,
}

/// Returns the NFC form of `text`.
pub fn normalize(text: &str) -> String {
    if is_nfc(text) {
        text.to_owned()
    } else {
        text.nfc().collect()
    }
}

/// Decodes raw bytes and normalizes them.
pub fn normalize_bytes(bytes: &[u8]) -> Result<String, DecodeError> {
    std::str::from_utf8(bytes)
        .map(normalize)
        .map_err(|e| DecodeError {
            offset: e.valid_up_to(),
        })
}

/// Segments already-normalized text into grapheme clusters.
pub fn segment(text: &str) -> GraphemeWord {
    let bounds = text
        .grapheme_indices(true)
        .map(|(start, g)| start + g.len())
        .collect();
    GraphemeWord {
        text: text.to_owned(),
        bounds,
    }
}

/// A word held as a sequence of grapheme clusters.
///
/// `bounds[i]` is the byte offset one past the end of cluster `i`, so the
/// clusters always tile `text` exactly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GraphemeWord {
    text: String,
    bounds: Vec<usize>,
}

impl GraphemeWord {
    /// Normalizes and segments `text`.
    pub fn new(text: &str) -> Self {
        segment(&normalize(text))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }

    /// Number of grapheme clusters.
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    fn span(&self, i: usize) -> Range<usize> {
        let start = if i == 0 { 0 } else { self.bounds[i - 1] };
        start..self.bounds[i]
    }

    /// Byte offset where cluster `i` starts; `i == len()` gives the text length.
    fn offset(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.bounds[i - 1]
        }
    }

    pub fn grapheme(&self, i: usize) -> Option<&str> {
        (i < self.len()).then(|| &self.text[self.span(i)])
    }

    pub fn graphemes(&self) -> impl DoubleEndedIterator<Item = &str> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| &self.text[self.span(i)])
    }

    pub fn last(&self) -> Option<&str> {
        self.len().checked_sub(1).and_then(|i| self.grapheme(i))
    }

    /// True iff the last `suffix.len()` clusters equal `suffix` cluster by cluster.
    pub fn ends_with(&self, suffix: &GraphemeWord) -> bool {
        if suffix.len() > self.len() {
            return false;
        }
        self.graphemes()
            .rev()
            .zip(suffix.graphemes().rev())
            .all(|(a, b)| a == b)
    }

    /// The first `n` clusters.
    pub fn prefix(&self, n: usize) -> GraphemeWord {
        let n = n.min(self.len());
        GraphemeWord {
            text: self.text[..self.offset(n)].to_owned(),
            bounds: self.bounds[..n].to_vec(),
        }
    }

    /// Drops the last `n` clusters and appends `replacement`.
    pub fn replace_suffix(&self, n: usize, replacement: &GraphemeWord) -> GraphemeWord {
        let head = self.prefix(self.len().saturating_sub(n));
        if replacement.is_empty() {
            return head;
        }
        // The joint may compose or re-cluster, so re-derive both.
        let mut text = head.text;
        text.push_str(&replacement.text);
        GraphemeWord::new(&text)
    }

    /// Concatenation, re-normalized and re-segmented.
    pub fn concat(&self, other: &GraphemeWord) -> GraphemeWord {
        self.replace_suffix(0, other)
    }
}

/// Free-function form of [`GraphemeWord::ends_with`].
pub fn ends_with(word: &GraphemeWord, suffix: &GraphemeWord) -> bool {
    word.ends_with(suffix)
}

impl fmt::Display for GraphemeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Debug for GraphemeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.graphemes()).finish()
    }
}

impl From<&str> for GraphemeWord {
    fn from(s: &str) -> Self {
        GraphemeWord::new(s)
    }
}

impl Serialize for GraphemeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.text)
    }
}
